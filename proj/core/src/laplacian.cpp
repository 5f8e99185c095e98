#include "laplacian.hpp"

#include <cassert>
#include <numeric>
#include <utility>

#include "g2adm/errors.hpp"

namespace g2adm::detail {

GroundedLaplacian::GroundedLaplacian(const PMGraph& g, std::size_t base)
    : n_(g.vertex_count()), base_(base), reduced_(g.vertex_count(), g.vertex_count()) {
  if (base >= n_) throw InvalidParams("base vertex out of range");
  if (!g.is_connected()) throw Disconnected("metric graph is not connected");
  std::size_t next = 0;
  for (std::size_t v = 0; v < n_; ++v) {
    if (v != base_) reduced_[v] = next++;
  }
  const std::size_t m = n_ - 1;
  lu_.assign(m * m, Rational(0));
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return lu_[i * m + j]; };
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    const Rational c = 1 / e.length;
    const std::size_t a = reduced_[e.tail];
    const std::size_t b = reduced_[e.head];
    if (a != n_) at(a, a) += c;
    if (b != n_) at(b, b) += c;
    if (a != n_ && b != n_) {
      at(a, b) -= c;
      at(b, a) -= c;
    }
  }

  perm_.resize(m);
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t pivot = k;
    while (pivot < m && at(pivot, k) == 0) ++pivot;
    // The reduced Laplacian of a connected graph is positive definite.
    assert(pivot < m && "singular grounded Laplacian");
    if (pivot != k) {
      for (std::size_t j = 0; j < m; ++j) std::swap(at(k, j), at(pivot, j));
      std::swap(perm_[k], perm_[pivot]);
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      if (at(i, k) == 0) continue;
      at(i, k) /= at(k, k);
      for (std::size_t j = k + 1; j < m; ++j) at(i, j) -= at(i, k) * at(k, j);
    }
  }
}

std::vector<Rational> GroundedLaplacian::solve(const std::vector<Rational>& b) const {
  const std::size_t m = n_ - 1;
  auto at = [&](std::size_t i, std::size_t j) -> const Rational& { return lu_[i * m + j]; };
  std::vector<Rational> rhs(m);
  for (std::size_t v = 0; v < n_; ++v) {
    if (v != base_) rhs[reduced_[v]] = b.at(v);
  }
  std::vector<Rational> y(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational s = rhs[perm_[i]];
    for (std::size_t j = 0; j < i; ++j) s -= at(i, j) * y[j];
    y[i] = s;
  }
  std::vector<Rational> x(m);
  for (std::size_t i = m; i-- > 0;) {
    Rational s = y[i];
    for (std::size_t j = i + 1; j < m; ++j) s -= at(i, j) * x[j];
    x[i] = s / at(i, i);
  }
  std::vector<Rational> f(n_, Rational(0));
  for (std::size_t v = 0; v < n_; ++v) {
    if (v != base_) f[v] = x[reduced_[v]];
  }
  return f;
}

}  // namespace g2adm::detail
