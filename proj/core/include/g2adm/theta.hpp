#pragma once

// Genus-2 Riemann theta functions with half-integer characteristics, the
// invariant norm ||theta|| and the normalized modular discriminant.

#include <array>
#include <string>
#include <vector>

#include "g2adm/siegel.hpp"

namespace g2adm {

/// Characteristic [a, b] with a, b in {0, 1/2}^2, stored as the doubled
/// (integer) vectors 2a and 2b.
struct ThetaChar {
  std::array<int, 2> a2{0, 0};
  std::array<int, 2> b2{0, 0};

  RVec2 a() const { return {0.5 * a2[0], 0.5 * a2[1]}; }
  RVec2 b() const { return {0.5 * b2[0], 0.5 * b2[1]}; }
  /// exp(4 pi i a.b) as +1 / -1.
  int parity() const { return ((a2[0] * b2[0] + a2[1] * b2[1]) % 2 == 0) ? 1 : -1; }
  bool is_even() const { return parity() == 1; }
  /// E.g. "[1/2 0; 1/2 1/2]".
  std::string to_string() const;

  friend bool operator==(const ThetaChar&, const ThetaChar&) = default;
};

/// All 16 characteristics.
std::vector<ThetaChar> all_characteristics();
/// The 10 even ones.
std::vector<ThetaChar> even_characteristics();

struct ThetaOptions {
  /// Bound on the absolute error of the lattice sum after the Gaussian
  /// envelope exp(pi Im(z)^T Y^{-1} Im(z)) is divided out (for real z this
  /// is the plain absolute error).
  double tol = 1e-12;
  /// Largest admissible truncation radius.
  double max_radius = 64.0;
};

/// Truncation radius for which the tail of the lattice sum is below tol,
/// from a Gaussian tail bound with the smallest eigenvalue of Im tau.
/// Throws TruncationOverflow if the radius would exceed opts.max_radius.
double truncation_radius(const SiegelMatrix& tau, const ThetaOptions& opts = {});

/// theta[a,b](z; tau) = sum_n exp(pi i (n+a)^T tau (n+a) + 2 pi i (n+a)^T (z+b)).
Complex theta(const ThetaChar& c, const CVec2& z, const SiegelMatrix& tau,
              const ThetaOptions& opts = {});

/// theta multiplied by exp(-pi Im(z)^T Y^{-1} Im(z)); bounded in z, so safe
/// for large imaginary parts.
Complex theta_scaled(const ThetaChar& c, const CVec2& z, const SiegelMatrix& tau,
                     const ThetaOptions& opts = {});

/// ||theta||(z) = (det Y)^{1/4} exp(-pi y^T Y^{-1} y) |theta(z)|, y = Im z,
/// zero characteristic. Invariant under z -> z + tau m + n.
double theta_norm(const CVec2& z, const SiegelMatrix& tau, const ThetaOptions& opts = {});

/// Theta-null moduli of the 10 even characteristics, in the order of
/// even_characteristics().
std::vector<double> even_theta_null_moduli(const SiegelMatrix& tau, const ThetaOptions& opts = {});

struct Delta2Options {
  ThetaOptions theta;
  /// An even theta-null below this modulus is treated as vanishing.
  double null_floor = 1e-10;
};

/// log ||Delta_2|| = log(2^-12 (det Y)^5 prod_even |theta[c](0)|^2).
/// Throws DegenerateThetaNull naming the first vanishing characteristic.
double log_delta2(const SiegelMatrix& tau, const Delta2Options& opts = {});

/// The same quantity evaluated as log(2^-12 prod ||theta||^2(tau a + b)) over
/// the even characteristics, i.e. through the norm at the ten points.
double log_delta2_direct(const SiegelMatrix& tau, const Delta2Options& opts = {});

}  // namespace g2adm
