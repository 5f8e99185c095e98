#include "g2adm/siegel.hpp"

#include <cmath>

#include "g2adm/errors.hpp"

namespace g2adm {

SiegelMatrix::SiegelMatrix(Complex t00, Complex t01, Complex t10, Complex t11,
                           double symmetry_tol) {
  if (std::abs(t01 - t10) > symmetry_tol) {
    throw InvalidParams("period matrix is not symmetric");
  }
  const Complex off = 0.5 * (t01 + t10);
  tau_ = {{{t00, off}, {off, t11}}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) y_[i][j] = tau_[i][j].imag();
  }
  y_det_ = y_[0][0] * y_[1][1] - y_[0][1] * y_[1][0];
  const double trace = y_[0][0] + y_[1][1];
  const double disc = std::sqrt(std::max(0.0, 0.25 * trace * trace - y_det_));
  y_min_eig_ = 0.5 * trace - disc;
  if (!(y_[0][0] > 0) || !(y_det_ > 0) || !(y_min_eig_ > 0)) {
    throw NotPositiveDefinite("imaginary part of the period matrix is not positive definite");
  }
  y_inv_ = {{{y_[1][1] / y_det_, -y_[0][1] / y_det_}, {-y_[1][0] / y_det_, y_[0][0] / y_det_}}};
}

SiegelMatrix SiegelMatrix::translated(const IMat2& b) const {
  if (b[0][1] != b[1][0]) throw InvalidParams("translation matrix must be symmetric");
  return SiegelMatrix(tau_[0][0] + static_cast<double>(b[0][0]),
                      tau_[0][1] + static_cast<double>(b[0][1]),
                      tau_[1][0] + static_cast<double>(b[1][0]),
                      tau_[1][1] + static_cast<double>(b[1][1]));
}

SiegelMatrix SiegelMatrix::inverted() const {
  const Complex det = tau_[0][0] * tau_[1][1] - tau_[0][1] * tau_[1][0];
  // -tau^{-1} = -(1/det) [[t11, -t01], [-t10, t00]]
  return SiegelMatrix(-tau_[1][1] / det, tau_[0][1] / det, tau_[1][0] / det, -tau_[0][0] / det);
}

}  // namespace g2adm
