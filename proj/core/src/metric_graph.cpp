#include "g2adm/metric_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "g2adm/errors.hpp"

namespace g2adm {

// ---------------------------------------------------------------- PMGraph

PMGraph::PMGraph(std::vector<Vertex> vertices, const std::vector<EdgeSpec>& edges)
    : vertices_(std::move(vertices)) {
  std::unordered_map<std::int64_t, std::size_t> index;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].genus < 0) {
      throw InvalidGraph("vertex " + std::to_string(vertices_[i].id) + " has negative genus");
    }
    if (!index.emplace(vertices_[i].id, i).second) {
      throw InvalidGraph("duplicate vertex id " + std::to_string(vertices_[i].id));
    }
  }
  std::unordered_map<std::int64_t, std::size_t> edge_ids;
  edges_.reserve(edges.size());
  for (const auto& spec : edges) {
    if (!edge_ids.emplace(spec.id, edges_.size()).second) {
      throw InvalidGraph("duplicate edge id " + std::to_string(spec.id));
    }
    const auto from = index.find(spec.from);
    const auto to = index.find(spec.to);
    if (from == index.end() || to == index.end()) {
      throw InvalidGraph("edge " + std::to_string(spec.id) + " references an unknown vertex");
    }
    if (spec.length <= 0) {
      throw InvalidGraph("edge " + std::to_string(spec.id) + " has nonpositive length");
    }
    edges_.push_back(Edge{spec.id, from->second, to->second, spec.length});
  }
}

std::optional<std::size_t> PMGraph::find_vertex(std::int64_t id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> PMGraph::find_edge(std::int64_t id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].id == id) return i;
  }
  return std::nullopt;
}

int PMGraph::degree(std::size_t v) const {
  int d = 0;
  for (const auto& e : edges_) d += (e.tail == v) + (e.head == v);
  return d;
}

std::vector<std::size_t> PMGraph::incident_edges(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].tail == v) out.push_back(i);
    if (edges_[i].head == v) out.push_back(i);
  }
  return out;
}

bool PMGraph::is_connected() const { return is_connected_without(edges_.size()); }

bool PMGraph::is_connected_without(std::size_t skip) const {
  if (vertices_.empty()) return false;
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertices_.size();
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i == skip) continue;
    const auto a = find(edges_[i].tail);
    const auto b = find(edges_[i].head);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

long PMGraph::betti_number() const {
  return static_cast<long>(edges_.size()) - static_cast<long>(vertices_.size()) + 1;
}

Rational PMGraph::total_length() const {
  Rational sum = 0;
  for (const auto& e : edges_) sum += e.length;
  return sum;
}

std::vector<EdgeSpec> PMGraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) {
    out.push_back(EdgeSpec{e.id, vertices_[e.tail].id, vertices_[e.head].id, e.length});
  }
  return out;
}

bool operator==(const PMGraph& a, const PMGraph& b) {
  if (a.vertices_.size() != b.vertices_.size() || a.edges_.size() != b.edges_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
    if (a.vertices_[i].id != b.vertices_[i].id || a.vertices_[i].genus != b.vertices_[i].genus) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& x = a.edges_[i];
    const auto& y = b.edges_[i];
    if (x.id != y.id || x.tail != y.tail || x.head != y.head || x.length != y.length) return false;
  }
  return true;
}

// ------------------------------------------------------------- GraphPoint

GraphPoint GraphPoint::at_vertex(std::size_t v) { return GraphPoint(v, std::nullopt); }

GraphPoint GraphPoint::on_edge(const PMGraph& g, std::size_t e, const Rational& offset) {
  const Edge& edge = g.edge(e);
  if (offset < 0 || offset > edge.length) {
    throw InvalidParams("offset " + to_string(offset) + " outside edge " + std::to_string(edge.id));
  }
  if (offset == 0) return at_vertex(edge.tail);
  if (offset == edge.length) return at_vertex(edge.head);
  return GraphPoint(e, offset);
}

std::size_t GraphPoint::vertex() const {
  if (!is_vertex()) throw std::logic_error("GraphPoint::vertex on an edge point");
  return index_;
}

std::size_t GraphPoint::edge() const {
  if (is_vertex()) throw std::logic_error("GraphPoint::edge on a vertex point");
  return index_;
}

const Rational& GraphPoint::offset() const {
  if (is_vertex()) throw std::logic_error("GraphPoint::offset on a vertex point");
  return *offset_;
}

bool operator==(const GraphPoint& a, const GraphPoint& b) {
  return a.index_ == b.index_ && a.offset_ == b.offset_;
}

bool operator<(const GraphPoint& a, const GraphPoint& b) {
  if (a.is_vertex() != b.is_vertex()) return a.is_vertex();
  if (a.index_ != b.index_) return a.index_ < b.index_;
  return !a.is_vertex() && *a.offset_ < *b.offset_;
}

// ----------------------------------------------------------- GraphDivisor

GraphDivisor& GraphDivisor::add(const GraphPoint& p, const Rational& coefficient) {
  auto it = std::find_if(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first == p; });
  if (it == terms_.end()) {
    if (coefficient != 0) terms_.emplace_back(p, coefficient);
    return *this;
  }
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
  return *this;
}

Rational GraphDivisor::degree() const {
  Rational sum = 0;
  for (const auto& [p, c] : terms_) sum += c;
  return sum;
}

GraphDivisor GraphDivisor::operator-() const {
  GraphDivisor out = *this;
  for (auto& [p, c] : out.terms_) c = -c;
  return out;
}

GraphDivisor operator+(GraphDivisor a, const GraphDivisor& b) {
  for (const auto& [p, c] : b.terms_) a.add(p, c);
  return a;
}

bool operator==(const GraphDivisor& a, const GraphDivisor& b) {
  auto x = a.terms_;
  auto y = b.terms_;
  auto by_point = [](const GraphDivisor::Term& s, const GraphDivisor::Term& t) {
    return s.first < t.first;
  };
  std::sort(x.begin(), x.end(), by_point);
  std::sort(y.begin(), y.end(), by_point);
  return x == y;
}

GraphDivisor point_divisor(const GraphPoint& p, const Rational& coefficient) {
  GraphDivisor d;
  d.add(p, coefficient);
  return d;
}

// ----------------------------------------------------------- GraphMeasure

GraphMeasure GraphMeasure::zero(const PMGraph& g) {
  return GraphMeasure{std::vector<Rational>(g.vertex_count(), Rational(0)),
                      std::vector<Rational>(g.edge_count(), Rational(0))};
}

GraphMeasure GraphMeasure::dirac(const PMGraph& g, std::size_t v) {
  auto m = zero(g);
  m.vertex_mass.at(v) = 1;
  return m;
}

GraphMeasure GraphMeasure::uniform_on_edge(const PMGraph& g, std::size_t e) {
  auto m = zero(g);
  m.edge_density.at(e) = 1 / g.edge(e).length;
  return m;
}

Rational GraphMeasure::total_mass(const PMGraph& g) const {
  if (vertex_mass.size() != g.vertex_count() || edge_density.size() != g.edge_count()) {
    throw InvalidParams("measure does not match the graph");
  }
  Rational sum = 0;
  for (const auto& m : vertex_mass) sum += m;
  for (std::size_t e = 0; e < edge_density.size(); ++e) sum += edge_density[e] * g.edge(e).length;
  return sum;
}

bool GraphMeasure::is_probability(const PMGraph& g) const {
  if (total_mass(g) != 1) return false;
  auto negative = [](const Rational& r) { return r < 0; };
  return std::none_of(vertex_mass.begin(), vertex_mass.end(), negative) &&
         std::none_of(edge_density.begin(), edge_density.end(), negative);
}

GraphMeasure& GraphMeasure::operator+=(const GraphMeasure& other) {
  for (std::size_t i = 0; i < vertex_mass.size(); ++i) vertex_mass[i] += other.vertex_mass.at(i);
  for (std::size_t i = 0; i < edge_density.size(); ++i) {
    edge_density[i] += other.edge_density.at(i);
  }
  return *this;
}

GraphMeasure& GraphMeasure::operator*=(const Rational& s) {
  for (auto& m : vertex_mass) m *= s;
  for (auto& r : edge_density) r *= s;
  return *this;
}

Rational Charge::total_mass(const PMGraph& g) const {
  return atoms.degree() + density.total_mass(g);
}

// -------------------------------------------------------------- Quadratic

Rational Quadratic::integral(const Rational& from, const Rational& to) const {
  auto antiderivative = [this](const Rational& t) -> Rational {
    return ((c2 / 3 * t + c1 / 2) * t + c0) * t;
  };
  return antiderivative(to) - antiderivative(from);
}

Quadratic Quadratic::recentered(const Rational& origin) const {
  return Quadratic{c2, c1 - 2 * c2 * origin, (c2 * origin - c1) * origin + c0};
}

Quadratic& Quadratic::operator+=(const Quadratic& o) {
  c2 += o.c2;
  c1 += o.c1;
  c0 += o.c0;
  return *this;
}

Quadratic& Quadratic::operator*=(const Rational& s) {
  c2 *= s;
  c1 *= s;
  c0 *= s;
  return *this;
}

// ---------------------------------------------------------- PiecewisePoly

PiecewisePoly::PiecewisePoly(std::vector<Rational> vertex_values,
                             std::vector<std::vector<Piece>> edge_pieces)
    : vertex_values_(std::move(vertex_values)), edge_pieces_(std::move(edge_pieces)) {}

PiecewisePoly PiecewisePoly::constant(const PMGraph& g, const Rational& c) {
  std::vector<std::vector<Piece>> pieces;
  pieces.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    pieces.push_back({Piece{Rational(0), e.length, Quadratic{0, 0, c}}});
  }
  return PiecewisePoly(std::vector<Rational>(g.vertex_count(), c), std::move(pieces));
}

Rational PiecewisePoly::operator()(const GraphPoint& p) const {
  if (p.is_vertex()) return vertex_values_.at(p.vertex());
  return at(p.edge(), p.offset());
}

Rational PiecewisePoly::at(std::size_t e, const Rational& offset) const {
  const auto& ps = edge_pieces_.at(e);
  for (const auto& piece : ps) {
    if (offset <= piece.to) return piece.poly(offset);
  }
  return ps.back().poly(offset);
}

bool PiecewisePoly::is_single_piece() const {
  return std::all_of(edge_pieces_.begin(), edge_pieces_.end(),
                     [](const auto& ps) { return ps.size() == 1; });
}

bool PiecewisePoly::is_constant() const {
  for (const auto& ps : edge_pieces_) {
    for (const auto& p : ps) {
      if (p.poly.c2 != 0 || p.poly.c1 != 0) return false;
    }
  }
  return true;
}

PiecewisePoly& PiecewisePoly::operator+=(const PiecewisePoly& o) {
  if (vertex_values_.size() != o.vertex_values_.size() ||
      edge_pieces_.size() != o.edge_pieces_.size()) {
    throw InvalidParams("adding functions on different graphs");
  }
  for (std::size_t v = 0; v < vertex_values_.size(); ++v) vertex_values_[v] += o.vertex_values_[v];
  for (std::size_t e = 0; e < edge_pieces_.size(); ++e) {
    const auto& a = edge_pieces_[e];
    const auto& b = o.edge_pieces_[e];
    std::vector<Rational> cuts;
    for (const auto& p : a) cuts.push_back(p.to);
    for (const auto& p : b) cuts.push_back(p.to);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Piece> merged;
    Rational from = 0;
    std::size_t i = 0, j = 0;
    for (const auto& to : cuts) {
      while (a[i].to < to) ++i;
      while (b[j].to < to) ++j;
      Quadratic q = a[i].poly;
      q += b[j].poly;
      merged.push_back(Piece{from, to, q});
      from = to;
    }
    edge_pieces_[e] = std::move(merged);
  }
  return *this;
}

PiecewisePoly& PiecewisePoly::operator*=(const Rational& s) {
  for (auto& v : vertex_values_) v *= s;
  for (auto& ps : edge_pieces_) {
    for (auto& p : ps) p.poly *= s;
  }
  return *this;
}

PiecewisePoly& PiecewisePoly::operator+=(const Rational& c) {
  for (auto& v : vertex_values_) v += c;
  for (auto& ps : edge_pieces_) {
    for (auto& p : ps) p.poly.c0 += c;
  }
  return *this;
}

bool operator==(const PiecewisePoly& a, const PiecewisePoly& b) {
  if (a.vertex_values_ != b.vertex_values_ || a.edge_pieces_.size() != b.edge_pieces_.size()) {
    return false;
  }
  for (std::size_t e = 0; e < a.edge_pieces_.size(); ++e) {
    const auto& x = a.edge_pieces_[e];
    const auto& y = b.edge_pieces_[e];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].from != y[i].from || x[i].to != y[i].to || !(x[i].poly == y[i].poly)) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------ Subdivision

Subdivision subdivide(const PMGraph& g, const std::vector<std::vector<Rational>>& cuts) {
  if (cuts.size() != g.edge_count()) throw InvalidParams("subdivide: one cut list per edge");
  std::vector<Vertex> vertices = g.vertices();
  std::int64_t next_vertex_id = 0;
  for (const auto& v : vertices) next_vertex_id = std::max(next_vertex_id, v.id + 1);

  std::vector<EdgeSpec> specs;
  Subdivision out;
  out.chains.resize(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    std::vector<Rational> offsets = cuts[e];
    std::sort(offsets.begin(), offsets.end());
    offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
    for (const auto& t : offsets) {
      if (t <= 0 || t >= edge.length) throw InvalidParams("subdivide: cut outside edge interior");
    }
    std::int64_t from = vertices[edge.tail].id;
    Rational start = 0;
    for (const auto& t : offsets) {
      const std::int64_t mid = next_vertex_id++;
      vertices.push_back(Vertex{mid, 0});
      out.chains[e].emplace_back(specs.size(), start);
      specs.push_back(EdgeSpec{static_cast<std::int64_t>(specs.size()), from, mid, t - start});
      from = mid;
      start = t;
    }
    out.chains[e].emplace_back(specs.size(), start);
    specs.push_back(EdgeSpec{static_cast<std::int64_t>(specs.size()), from,
                             vertices[edge.head].id, edge.length - start});
  }
  out.graph = PMGraph(std::move(vertices), specs);
  return out;
}

GraphPoint Subdivision::map_point(const GraphPoint& p) const {
  if (p.is_vertex()) return p;
  const auto& chain = chains.at(p.edge());
  for (std::size_t i = chain.size(); i-- > 0;) {
    const auto& [sub, start] = chain[i];
    if (p.offset() >= start) return GraphPoint::on_edge(graph, sub, p.offset() - start);
  }
  throw std::logic_error("Subdivision::map_point: offset before chain start");
}

}  // namespace g2adm
