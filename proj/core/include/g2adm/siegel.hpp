#pragma once

#include <array>
#include <complex>

namespace g2adm {

using Complex = std::complex<double>;
using CVec2 = std::array<Complex, 2>;
using RVec2 = std::array<double, 2>;
using RMat2 = std::array<std::array<double, 2>, 2>;
using IMat2 = std::array<std::array<long, 2>, 2>;

/// Point of the genus-2 Siegel upper half-space: a symmetric 2x2 complex
/// matrix whose imaginary part is positive definite.
class SiegelMatrix {
 public:
  /// Entries row-major. The off-diagonal pair must agree to within
  /// `symmetry_tol` and is then replaced by its mean. Throws InvalidParams
  /// for an asymmetric matrix and NotPositiveDefinite for a bad Im part.
  SiegelMatrix(Complex t00, Complex t01, Complex t10, Complex t11, double symmetry_tol = 1e-12);

  const Complex& operator()(int i, int j) const { return tau_[i][j]; }

  const RMat2& imag() const { return y_; }
  const RMat2& imag_inverse() const { return y_inv_; }
  double imag_det() const { return y_det_; }
  double imag_min_eigenvalue() const { return y_min_eig_; }

  /// tau + B for an integer symmetric B.
  SiegelMatrix translated(const IMat2& b) const;
  /// -tau^{-1}.
  SiegelMatrix inverted() const;

 private:
  std::array<std::array<Complex, 2>, 2> tau_;
  RMat2 y_{};
  RMat2 y_inv_{};
  double y_det_ = 0;
  double y_min_eig_ = 0;
};

}  // namespace g2adm
