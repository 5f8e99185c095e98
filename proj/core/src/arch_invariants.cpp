#include "g2adm/arch_invariants.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace g2adm {

QuadratureEstimate log_h(const SiegelMatrix& tau, const QuadratureConfig& q,
                         const ThetaOptions& opts) {
  const double eps = std::numeric_limits<double>::epsilon();
  auto integrand = [&](const TorusPoint& x) {
    const CVec2 z{tau(0, 0) * x[0] + tau(0, 1) * x[1] + x[2],
                  tau(1, 0) * x[0] + tau(1, 1) * x[1] + x[3]};
    const double norm = theta_norm(z, tau, opts);
    return norm < eps ? std::numeric_limits<double>::quiet_NaN() : std::log(norm);
  };
  return torus_average(integrand, q);
}

ArchReport arch_invariants(const SiegelMatrix& tau, const ArchOptions& opts) {
  const double log2pi = std::log(2 * std::numbers::pi);

  ArchReport r;
  r.log_delta2 = log_delta2(tau, opts.delta2);
  r.delta2_route_gap = std::abs(log_delta2_direct(tau, opts.delta2) - r.log_delta2);

  const QuadratureEstimate h = log_h(tau, opts.quadrature, opts.delta2.theta);
  r.log_h = h.mean;
  r.log_h_stderr = h.std_error;
  r.samples = h.used + h.rejected;
  r.rejected = h.rejected;

  r.delta_faltings = -16 * log2pi - r.log_delta2 - 4 * r.log_h;
  r.log_s = -16 * log2pi - 1.25 * r.log_delta2 - r.delta_faltings;
  r.phi = -0.5 * r.log_delta2 + 10 * r.log_h;
  r.phi_stderr = 10 * r.log_h_stderr;
  r.lambda = (-20 * log2pi - r.log_delta2) / 10;
  r.lambda_recombined = r.phi / 30 + r.delta_faltings / 12 - (2.0 / 3.0) * log2pi;
  r.residual = std::abs(10 * r.lambda_recombined - (-20 * log2pi - r.log_delta2));
  r.s_residual = std::abs(r.phi - (2 * r.log_s + 2 * r.log_h));
  r.delta = r.delta_faltings - 8 * log2pi;
  r.epsilon = 0;

  r.seed = opts.quadrature.seed;
  r.method = opts.quadrature.method;
  r.theta_tol = opts.delta2.theta.tol;
  r.target_stderr = opts.quadrature.target_stderr;
  return r;
}

}  // namespace g2adm
