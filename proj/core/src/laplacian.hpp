#pragma once

#include <cstddef>
#include <vector>

#include "g2adm/metric_graph.hpp"

namespace g2adm::detail {

/// Weighted graph Laplacian (conductance 1/length, loops ignored) with the
/// row and column of `base` removed, factored once by exact Gaussian
/// elimination. The reduced matrix is nonsingular for a connected graph.
class GroundedLaplacian {
 public:
  GroundedLaplacian(const PMGraph& g, std::size_t base);

  /// Solves L f = b with f(base) = 0. `b` is indexed by vertex; its entry
  /// at `base` is ignored (it is fixed by the zero-sum condition).
  std::vector<Rational> solve(const std::vector<Rational>& b) const;

  std::size_t base() const { return base_; }

 private:
  std::size_t n_ = 0;  // full vertex count
  std::size_t base_ = 0;
  std::vector<std::size_t> reduced_;  // vertex -> reduced row, n_ for base
  std::vector<std::size_t> perm_;     // row permutation from pivoting
  std::vector<Rational> lu_;          // packed LU, row-major (n_-1)^2
};

}  // namespace g2adm::detail
