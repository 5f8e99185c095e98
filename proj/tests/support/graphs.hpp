#pragma once

// Small named graphs used across the tests.

#include "g2adm/g2adm.hpp"

namespace g2adm::testing {

inline PMGraph point_graph(int genus) { return PMGraph({Vertex{0, genus}}, {}); }

inline PMGraph segment(const Rational& a, int q0 = 0, int q1 = 0) {
  return PMGraph({Vertex{0, q0}, Vertex{1, q1}}, {EdgeSpec{0, 0, 1, a}});
}

inline PMGraph circle(const Rational& a, int q = 0) {
  return PMGraph({Vertex{0, q}}, {EdgeSpec{0, 0, 0, a}});
}

/// Two genus-0 vertices joined by three edges.
inline PMGraph theta_graph(const Rational& a, const Rational& b, const Rational& c) {
  return PMGraph({Vertex{0, 0}, Vertex{1, 0}},
                 {EdgeSpec{0, 0, 1, a}, EdgeSpec{1, 0, 1, b}, EdgeSpec{2, 0, 1, c}});
}

inline GraphPoint vertex_point(const PMGraph& g, std::int64_t id) {
  return GraphPoint::at_vertex(*g.find_vertex(id));
}

inline PiecewisePoly single_edge_poly(const PMGraph& g, const Quadratic& q) {
  const Rational len = g.edge(0).length;
  std::vector<Rational> values(g.vertex_count());
  values[g.edge(0).tail] = q(0);
  values[g.edge(0).head] = q(len);
  return PiecewisePoly(values, {{PiecewisePoly::Piece{Rational(0), len, q}}});
}

}  // namespace g2adm::testing
