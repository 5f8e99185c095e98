#pragma once

// Archimedean invariants of a genus-2 Riemann surface from its period
// matrix: ||Delta_2||, ||H||, the Faltings delta, S, phi and lambda.

#include <cstdint>

#include "g2adm/quadrature.hpp"
#include "g2adm/siegel.hpp"
#include "g2adm/theta.hpp"

namespace g2adm {

/// log ||H|| = (1/2) integral over Pic^1 of log ||theta|| nu^2. With nu
/// translation invariant of total mass 2 this is the mean of
/// log ||theta||(tau u + v) over (u, v) uniform on [0,1)^4. Samples with
/// ||theta|| below machine epsilon are rejected and counted.
QuadratureEstimate log_h(const SiegelMatrix& tau, const QuadratureConfig& q,
                         const ThetaOptions& opts = {});

struct ArchReport {
  double log_delta2 = 0;
  double log_h = 0;
  double log_h_stderr = 0;
  double delta_faltings = 0;
  double log_s = 0;
  double phi = 0;
  double phi_stderr = 0;
  double lambda = 0;             // (-20 log 2pi - log ||Delta_2||)/10
  double lambda_recombined = 0;  // phi/30 + delta_F/12 - (2/3) log 2pi
  /// |10 lambda_recombined - (-20 log 2pi - log ||Delta_2||)|
  double residual = 0;
  /// |phi - (2 log S + 2 log ||H||)|
  double s_residual = 0;
  /// Gap between the two evaluation routes of log ||Delta_2||.
  double delta2_route_gap = 0;
  /// delta(X) = delta_F - 8 log 2pi; epsilon(X) is zero at infinite places.
  double delta = 0;
  double epsilon = 0;

  std::uint64_t samples = 0;
  std::uint64_t rejected = 0;
  std::uint64_t seed = 0;
  QuadratureMethod method = QuadratureMethod::MonteCarlo;
  double theta_tol = 0;
  double target_stderr = 0;

  friend bool operator==(const ArchReport&, const ArchReport&) = default;
};

struct ArchOptions {
  Delta2Options delta2;
  QuadratureConfig quadrature;
};

/// Throws DegenerateThetaNull or QuadratureUnstable.
ArchReport arch_invariants(const SiegelMatrix& tau, const ArchOptions& opts = {});

}  // namespace g2adm
