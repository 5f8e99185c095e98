#include "g2adm/theta.hpp"

#include <cmath>
#include <numbers>

#include "g2adm/errors.hpp"

namespace g2adm {

DegenerateThetaNull::DegenerateThetaNull(std::string characteristic, double modulus)
    : Error("even theta-null " + characteristic + " vanishes (|theta| = " +
            std::to_string(modulus) + "); tau lies on the product locus"),
      characteristic_(std::move(characteristic)),
      modulus_(modulus) {}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

std::string half(int twice) { return twice == 0 ? "0" : "1/2"; }

// Upper bound for sum over shifted lattice points w with |w| > r of
// exp(-pi lambda |w|^2): each point owns a unit square lying outside the
// disc of radius r - sqrt(2)/2, on which the Gaussian is compared radially.
double gaussian_tail(double lambda, double r) {
  const double s0 = r - std::numbers::sqrt2;
  if (s0 <= 0) return INFINITY;
  return std::exp(-kPi * lambda * s0 * s0) / lambda +
         kPi * (std::numbers::sqrt2 / 2) * std::erfc(std::sqrt(kPi * lambda) * s0) /
             std::sqrt(lambda);
}

}  // namespace

std::string ThetaChar::to_string() const {
  return "[" + half(a2[0]) + " " + half(a2[1]) + "; " + half(b2[0]) + " " + half(b2[1]) + "]";
}

std::vector<ThetaChar> all_characteristics() {
  std::vector<ThetaChar> out;
  for (int i = 0; i < 16; ++i) {
    out.push_back(ThetaChar{{(i >> 3) & 1, (i >> 2) & 1}, {(i >> 1) & 1, i & 1}});
  }
  return out;
}

std::vector<ThetaChar> even_characteristics() {
  std::vector<ThetaChar> out;
  for (const auto& c : all_characteristics()) {
    if (c.is_even()) out.push_back(c);
  }
  return out;
}

double truncation_radius(const SiegelMatrix& tau, const ThetaOptions& opts) {
  const double lambda = tau.imag_min_eigenvalue();
  for (double r = 2.0; r <= opts.max_radius; r += 0.25) {
    if (gaussian_tail(lambda, r) < opts.tol) return r;
  }
  throw TruncationOverflow("theta truncation radius exceeds " + std::to_string(opts.max_radius) +
                           " (Im tau nearly degenerate)");
}

Complex theta_scaled(const ThetaChar& c, const CVec2& z, const SiegelMatrix& tau,
                     const ThetaOptions& opts) {
  const double radius = truncation_radius(tau, opts);
  const RVec2 a = c.a();
  const RVec2 b = c.b();
  const RVec2 y{z[0].imag(), z[1].imag()};
  const RMat2& yinv = tau.imag_inverse();
  const RVec2 u{yinv[0][0] * y[0] + yinv[0][1] * y[1], yinv[1][0] * y[0] + yinv[1][1] * y[1]};
  const RVec2 center{-a[0] - u[0], -a[1] - u[1]};
  const double envelope = y[0] * u[0] + y[1] * u[1];
  const CVec2 zeta{z[0] + b[0], z[1] + b[1]};
  const Complex t00 = tau(0, 0), t01 = tau(0, 1), t11 = tau(1, 1);
  const Complex step = std::exp(2.0 * kPi * kI * t11);

  // Row by row over the disc |n - center| <= radius. Along a row the
  // exponent is quadratic in n2, so consecutive terms differ by a ratio
  // that itself changes by the constant factor exp(2 pi i tau11).
  Complex sum = 0;
  const long first = static_cast<long>(std::ceil(center[0] - radius));
  const long last = static_cast<long>(std::floor(center[0] + radius));
  for (long n1 = first; n1 <= last; ++n1) {
    const double d1 = static_cast<double>(n1) - center[0];
    const double rem = radius * radius - d1 * d1;
    if (rem < 0) continue;
    const double h = std::sqrt(rem);
    const long lo = static_cast<long>(std::ceil(center[1] - h));
    const long hi = static_cast<long>(std::floor(center[1] + h));
    if (lo > hi) continue;
    const double w1 = static_cast<double>(n1) + a[0];
    const double w2 = static_cast<double>(lo) + a[1];
    const Complex exponent = kPi * kI * (t00 * w1 * w1 + 2.0 * t01 * w1 * w2 + t11 * w2 * w2) +
                             2.0 * kPi * kI * (w1 * zeta[0] + w2 * zeta[1]) - kPi * envelope;
    Complex term = std::exp(exponent);
    Complex ratio =
        std::exp(kPi * kI * (2.0 * t01 * w1 + t11 * (2.0 * w2 + 1.0)) + 2.0 * kPi * kI * zeta[1]);
    for (long n2 = lo; n2 <= hi; ++n2) {
      sum += term;
      term *= ratio;
      ratio *= step;
    }
  }
  return sum;
}

Complex theta(const ThetaChar& c, const CVec2& z, const SiegelMatrix& tau,
              const ThetaOptions& opts) {
  const RVec2 y{z[0].imag(), z[1].imag()};
  const RMat2& yinv = tau.imag_inverse();
  const double envelope = y[0] * (yinv[0][0] * y[0] + yinv[0][1] * y[1]) +
                          y[1] * (yinv[1][0] * y[0] + yinv[1][1] * y[1]);
  return theta_scaled(c, z, tau, opts) * std::exp(kPi * envelope);
}

double theta_norm(const CVec2& z, const SiegelMatrix& tau, const ThetaOptions& opts) {
  return std::pow(tau.imag_det(), 0.25) * std::abs(theta_scaled(ThetaChar{}, z, tau, opts));
}

std::vector<double> even_theta_null_moduli(const SiegelMatrix& tau, const ThetaOptions& opts) {
  std::vector<double> out;
  for (const auto& c : even_characteristics()) {
    out.push_back(std::abs(theta(c, CVec2{0.0, 0.0}, tau, opts)));
  }
  return out;
}

double log_delta2(const SiegelMatrix& tau, const Delta2Options& opts) {
  const auto chars = even_characteristics();
  const auto moduli = even_theta_null_moduli(tau, opts.theta);
  double sum = -12.0 * std::log(2.0) + 5.0 * std::log(tau.imag_det());
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (moduli[i] < opts.null_floor) throw DegenerateThetaNull(chars[i].to_string(), moduli[i]);
    sum += 2.0 * std::log(moduli[i]);
  }
  return sum;
}

double log_delta2_direct(const SiegelMatrix& tau, const Delta2Options& opts) {
  const double scale = std::pow(tau.imag_det(), 0.25);
  double sum = -12.0 * std::log(2.0);
  for (const auto& c : even_characteristics()) {
    const RVec2 a = c.a();
    const RVec2 b = c.b();
    const CVec2 point{tau(0, 0) * a[0] + tau(0, 1) * a[1] + b[0],
                      tau(1, 0) * a[0] + tau(1, 1) * a[1] + b[1]};
    const double norm = theta_norm(point, tau, opts.theta);
    if (norm < opts.null_floor * scale) throw DegenerateThetaNull(c.to_string(), norm / scale);
    sum += 2.0 * std::log(norm);
  }
  return sum;
}

}  // namespace g2adm
