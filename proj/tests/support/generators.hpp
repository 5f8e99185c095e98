#pragma once

// Random inputs for property tests. Everything is driven by an explicit
// std::mt19937_64 so failures reproduce from the printed seed.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "g2adm/g2adm.hpp"

namespace g2adm::testing {

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// p/q with 1 <= p, q <= max.
inline Rational positive_rational(Rng& rng, long max = 1000) {
  return rational(uniform_int(rng, 1, max), uniform_int(rng, 1, max));
}

/// Strictly inside (0, 1).
inline Rational unit_fraction(Rng& rng, long max_den = 50) {
  const long den = uniform_int(rng, 2, max_den);
  return rational(uniform_int(rng, 1, den - 1), den);
}

inline std::vector<Rational> random_params(Rng& rng, FiberTag tag, long max = 1000) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < arity(tag); ++i) out.push_back(positive_rational(rng, max));
  return out;
}

inline FiberType random_type(Rng& rng, FiberTag tag, long max = 1000) {
  return FiberType(tag, random_params(rng, tag, max));
}

inline FiberTag random_tag(Rng& rng) { return static_cast<FiberTag>(uniform_int(rng, 0, 6)); }

/// Connected pm-graph of the given total genus with up to `max_vertices`
/// vertices: a random spanning tree, then extra edges (possibly loops or
/// parallel edges) for part of the genus, the rest spread over vertex genera.
inline PMGraph random_pm_graph(Rng& rng, int genus, std::size_t max_vertices = 4,
                               long max_len = 20) {
  const auto n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(max_vertices)));
  const int cycles = static_cast<int>(uniform_int(rng, 0, genus));
  std::vector<Vertex> vertices;
  for (std::size_t v = 0; v < n; ++v) vertices.push_back(Vertex{static_cast<std::int64_t>(v), 0});
  for (int k = 0; k < genus - cycles; ++k) {
    vertices[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 1))].genus += 1;
  }
  std::vector<EdgeSpec> edges;
  std::int64_t next_id = 0;
  auto length = [&] { return positive_rational(rng, max_len); };
  for (std::size_t v = 1; v < n; ++v) {
    const auto parent = static_cast<std::int64_t>(uniform_int(rng, 0, static_cast<long>(v) - 1));
    edges.push_back(EdgeSpec{next_id++, parent, static_cast<std::int64_t>(v), length()});
  }
  for (int k = 0; k < cycles; ++k) {
    const auto a = uniform_int(rng, 0, static_cast<long>(n) - 1);
    const auto b = uniform_int(rng, 0, static_cast<long>(n) - 1);
    edges.push_back(EdgeSpec{next_id++, a, b, length()});
  }
  return PMGraph(std::move(vertices), edges);
}

/// The same graph with vertex and edge ids permuted and listed in a
/// different order.
inline PMGraph relabel(Rng& rng, const PMGraph& g) {
  std::vector<std::int64_t> vid(g.vertex_count());
  std::iota(vid.begin(), vid.end(), 100);
  std::shuffle(vid.begin(), vid.end(), rng);
  std::vector<Vertex> vertices;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    vertices.push_back(Vertex{vid[v], g.vertex(v).genus});
  }
  std::shuffle(vertices.begin(), vertices.end(), rng);
  std::vector<EdgeSpec> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    // Reversing the orientation must not matter either.
    const bool flip = uniform_int(rng, 0, 1) == 1;
    edges.push_back(EdgeSpec{static_cast<std::int64_t>(500 + e), vid[flip ? edge.head : edge.tail],
                             vid[flip ? edge.tail : edge.head], edge.length});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return PMGraph(std::move(vertices), edges);
}

/// Subdivides every edge at up to `max_cuts` random interior points.
inline Subdivision random_subdivision(Rng& rng, const PMGraph& g, int max_cuts = 2) {
  std::vector<std::vector<Rational>> cuts(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const long k = uniform_int(rng, 0, max_cuts);
    for (long i = 0; i < k; ++i) cuts[e].push_back(unit_fraction(rng) * g.edge(e).length);
  }
  return subdivide(g, cuts);
}

/// A vertex or a point at a random rational offset on a random edge.
inline GraphPoint random_point(Rng& rng, const PMGraph& g) {
  if (g.edge_count() == 0 || uniform_int(rng, 0, 2) == 0) {
    return GraphPoint::at_vertex(
        static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(g.vertex_count()) - 1)));
  }
  const auto e = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(g.edge_count()) - 1));
  return GraphPoint::on_edge(g, e, unit_fraction(rng) * g.edge(e).length);
}

/// Random probability measure with both vertex masses and edge densities.
inline GraphMeasure random_measure(Rng& rng, const PMGraph& g) {
  GraphMeasure mu = GraphMeasure::zero(g);
  for (auto& m : mu.vertex_mass) m = rational(uniform_int(rng, 0, 5));
  for (auto& d : mu.edge_density) d = rational(uniform_int(rng, 0, 5));
  if (mu.total_mass(g) == 0) mu.vertex_mass[0] = 1;
  mu *= Rational(1 / mu.total_mass(g));
  return mu;
}

/// Period matrix with Im tau = A A^T + c I for a random A (well inside the
/// half-space) and real part uniform in [-1/2, 1/2].
inline SiegelMatrix random_tau(Rng& rng, double min_eig = 0.6) {
  const double a = uniform_real(rng, -0.5, 0.5), b = uniform_real(rng, -0.3, 0.3);
  const double c = uniform_real(rng, -0.3, 0.3), d = uniform_real(rng, -0.5, 0.5);
  const double y00 = a * a + b * b + min_eig, y01 = a * c + b * d, y11 = c * c + d * d + min_eig;
  const double x00 = uniform_real(rng, -0.5, 0.5), x01 = uniform_real(rng, -0.5, 0.5);
  const double x11 = uniform_real(rng, -0.5, 0.5);
  return SiegelMatrix(Complex(x00, y00), Complex(x01, y01), Complex(x01, y01), Complex(x11, y11));
}

inline IMat2 random_symmetric_integer(Rng& rng, long bound = 2) {
  const long off = uniform_int(rng, -bound, bound);
  return IMat2{{{uniform_int(rng, -bound, bound), off}, {off, uniform_int(rng, -bound, bound)}}};
}

}  // namespace g2adm::testing
