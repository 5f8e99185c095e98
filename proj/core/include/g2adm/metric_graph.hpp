#pragma once

// Polarized metric graphs with exact rational edge lengths, and the
// potential theory on them: Laplacian solves, effective resistance,
// Green's functions for arbitrary probability measures and integration.
//
// Laplacian convention (fixed throughout the library):
//
//   Delta f = -f'' dx - sum_p (sum of outgoing slopes of f at p) delta_p
//
// so that a wire of length L carrying unit current from u to w has
// Delta f = delta_u - delta_w and f(u) - f(w) = L.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "g2adm/rational.hpp"

namespace g2adm {

struct Vertex {
  std::int64_t id = 0;
  int genus = 0;
};

/// Edge between vertex indices `tail` and `head` (equal for a loop). The
/// offset coordinate t runs from 0 at `tail` to `length` at `head`.
struct Edge {
  std::int64_t id = 0;
  std::size_t tail = 0;
  std::size_t head = 0;
  Rational length;

  bool is_loop() const { return tail == head; }
};

/// Edge as written in a graph file: endpoints named by vertex id.
struct EdgeSpec {
  std::int64_t id = 0;
  std::int64_t from = 0;
  std::int64_t to = 0;
  Rational length;
};

class PMGraph {
 public:
  PMGraph() = default;

  /// Validates ids (unique), endpoints (existing), lengths (> 0) and
  /// genera (>= 0). Connectivity is not required here; operations that
  /// need it throw Disconnected.
  PMGraph(std::vector<Vertex> vertices, const std::vector<EdgeSpec>& edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(std::size_t v) const { return vertices_.at(v); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  std::optional<std::size_t> find_vertex(std::int64_t id) const;
  std::optional<std::size_t> find_edge(std::int64_t id) const;

  /// Half-edges at v; a loop counts twice.
  int degree(std::size_t v) const;
  /// Edge indices incident to v; a loop appears twice.
  std::vector<std::size_t> incident_edges(std::size_t v) const;

  bool is_connected() const;
  /// Connectivity with edge `skip` removed.
  bool is_connected_without(std::size_t skip) const;
  /// |E| - |V| + 1 for a connected graph.
  long betti_number() const;
  Rational total_length() const;

  std::vector<EdgeSpec> edge_specs() const;

  friend bool operator==(const PMGraph& a, const PMGraph& b);

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// A point of the metric graph: either a vertex or an interior point of an
/// edge. Offsets 0 and length() canonicalize to the endpoint vertex.
class GraphPoint {
 public:
  static GraphPoint at_vertex(std::size_t v);
  static GraphPoint on_edge(const PMGraph& g, std::size_t e, const Rational& offset);

  bool is_vertex() const { return !offset_.has_value(); }
  std::size_t vertex() const;
  std::size_t edge() const;
  const Rational& offset() const;

  friend bool operator==(const GraphPoint& a, const GraphPoint& b);
  friend bool operator<(const GraphPoint& a, const GraphPoint& b);

 private:
  GraphPoint(std::size_t index, std::optional<Rational> offset)
      : index_(index), offset_(std::move(offset)) {}

  std::size_t index_ = 0;
  std::optional<Rational> offset_;
};

/// Finitely supported divisor with rational coefficients. Terms are merged
/// by point and zero coefficients are dropped.
class GraphDivisor {
 public:
  using Term = std::pair<GraphPoint, Rational>;

  GraphDivisor() = default;

  GraphDivisor& add(const GraphPoint& p, const Rational& coefficient);
  const std::vector<Term>& terms() const { return terms_; }
  Rational degree() const;
  bool empty() const { return terms_.empty(); }

  GraphDivisor operator-() const;
  friend GraphDivisor operator+(GraphDivisor a, const GraphDivisor& b);
  friend GraphDivisor operator-(GraphDivisor a, const GraphDivisor& b) { return a + (-b); }
  friend bool operator==(const GraphDivisor& a, const GraphDivisor& b);

 private:
  std::vector<Term> terms_;
};

GraphDivisor point_divisor(const GraphPoint& p, const Rational& coefficient = 1);

/// Vertex point masses plus a constant density on each edge.
struct GraphMeasure {
  std::vector<Rational> vertex_mass;
  std::vector<Rational> edge_density;

  static GraphMeasure zero(const PMGraph& g);
  static GraphMeasure dirac(const PMGraph& g, std::size_t v);
  /// Uniform probability measure on edge e.
  static GraphMeasure uniform_on_edge(const PMGraph& g, std::size_t e);

  Rational total_mass(const PMGraph& g) const;
  bool is_probability(const PMGraph& g) const;

  GraphMeasure& operator+=(const GraphMeasure& other);
  GraphMeasure& operator*=(const Rational& s);
  friend bool operator==(const GraphMeasure&, const GraphMeasure&) = default;
};

/// Signed measure: atoms at arbitrary points plus an edge-density part.
struct Charge {
  GraphDivisor atoms;
  GraphMeasure density;

  Rational total_mass(const PMGraph& g) const;
};

/// c2 t^2 + c1 t + c0.
struct Quadratic {
  Rational c2, c1, c0;

  Rational operator()(const Rational& t) const { return (c2 * t + c1) * t + c0; }
  Rational derivative(const Rational& t) const { return 2 * c2 * t + c1; }
  /// Integral over [from, to].
  Rational integral(const Rational& from, const Rational& to) const;
  /// Re-expresses q(s) with s = t - origin as a polynomial in t.
  Quadratic recentered(const Rational& origin) const;

  Quadratic& operator+=(const Quadratic& o);
  Quadratic& operator*=(const Rational& s);
  friend bool operator==(const Quadratic&, const Quadratic&) = default;
};

/// Continuous function, quadratic on each piece of each edge. Pieces of an
/// edge cover [0, length] in order and are written in the edge's own offset
/// coordinate. Vertex values are stored explicitly so that edgeless graphs
/// are represented too.
class PiecewisePoly {
 public:
  struct Piece {
    Rational from;
    Rational to;
    Quadratic poly;
  };

  PiecewisePoly() = default;
  PiecewisePoly(std::vector<Rational> vertex_values, std::vector<std::vector<Piece>> edge_pieces);

  static PiecewisePoly constant(const PMGraph& g, const Rational& c);

  const std::vector<Rational>& vertex_values() const { return vertex_values_; }
  const std::vector<std::vector<Piece>>& edge_pieces() const { return edge_pieces_; }
  const std::vector<Piece>& pieces(std::size_t e) const { return edge_pieces_.at(e); }

  Rational operator()(const GraphPoint& p) const;
  /// Value on edge e at the given offset (need not be canonical).
  Rational at(std::size_t e, const Rational& offset) const;

  /// True when every edge is a single piece (an honest per-edge quadratic).
  bool is_single_piece() const;
  /// True when every piece has zero quadratic and linear coefficients.
  bool is_constant() const;

  PiecewisePoly& operator+=(const PiecewisePoly& o);
  PiecewisePoly& operator*=(const Rational& s);
  PiecewisePoly& operator+=(const Rational& c);
  friend PiecewisePoly operator+(PiecewisePoly a, const PiecewisePoly& b) { return a += b; }
  friend PiecewisePoly operator-(PiecewisePoly a, const Rational& c) { return a += -c; }
  friend bool operator==(const PiecewisePoly&, const PiecewisePoly&);

 private:
  std::vector<Rational> vertex_values_;
  std::vector<std::vector<Piece>> edge_pieces_;
};

/// Returns f with Delta f = sigma and f(base) = 0.
/// Throws NonZeroMass if sigma has nonzero total mass and Disconnected if the
/// graph is not connected.
PiecewisePoly solve_poisson(const PMGraph& g, const Charge& sigma, std::size_t base);

/// Effective resistance with edge lengths as resistances.
Rational effective_resistance(const PMGraph& g, const GraphPoint& x, const GraphPoint& y);

/// Bilinear extension of r: sum_{i,j} d_i e_j r(x_i, y_j).
Rational resistance_pairing(const PMGraph& g, const GraphDivisor& d, const GraphDivisor& e);

/// g_mu(., y): solves Delta g = delta_y - mu with integral of g against mu
/// equal to zero. Throws NonProbabilityMeasure unless mu has total mass 1.
PiecewisePoly green_function(const PMGraph& g, const GraphMeasure& mu, const GraphPoint& y);

/// x -> g_mu(x, x) as a per-edge quadratic. Interpolates through both
/// endpoints and the midpoint of each edge and checks the value at a third
/// of the edge; throws InterpolationMismatch if that check fails.
PiecewisePoly diagonal_green(const PMGraph& g, const GraphMeasure& mu);

/// Exact integral of f against atoms plus densities.
Rational integrate(const PMGraph& g, const PiecewisePoly& f, const Charge& sigma);
Rational integrate(const PMGraph& g, const PiecewisePoly& f, const GraphMeasure& mu);
Rational integrate(const PMGraph& g, const PiecewisePoly& f, const GraphDivisor& d);

/// Measure Delta f recovered from f: per-piece -f'' densities and, at every
/// vertex and interior breakpoint, minus the sum of outgoing slopes. Used to
/// check Poisson solutions.
Charge laplacian_of(const PMGraph& g, const PiecewisePoly& f);

/// Same graph with every edge split at the given offsets (each strictly
/// between 0 and the edge length). New vertices have genus 0.
struct Subdivision {
  PMGraph graph;
  /// For each original edge, the chain of new edge indices in offset order,
  /// with the starting offset of each piece in the original coordinate.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> chains;

  /// Image of a point of the original graph.
  GraphPoint map_point(const GraphPoint& p) const;
};

Subdivision subdivide(const PMGraph& g, const std::vector<std::vector<Rational>>& cuts);

}  // namespace g2adm
