#include <algorithm>
#include <map>

#include "g2adm/errors.hpp"
#include "g2adm/metric_graph.hpp"
#include "laplacian.hpp"

namespace g2adm {

namespace {

void check_measure_shape(const PMGraph& g, const GraphMeasure& mu) {
  if (mu.vertex_mass.size() != g.vertex_count() || mu.edge_density.size() != g.edge_count()) {
    throw InvalidParams("measure does not match the graph");
  }
}

// Interior offsets of the given points, grouped per edge.
std::vector<std::vector<Rational>> cuts_for(const PMGraph& g,
                                            const std::vector<GraphPoint>& points) {
  std::vector<std::vector<Rational>> cuts(g.edge_count());
  for (const auto& p : points) {
    if (!p.is_vertex()) cuts.at(p.edge()).push_back(p.offset());
  }
  return cuts;
}

std::vector<GraphPoint> support(const GraphDivisor& d) {
  std::vector<GraphPoint> out;
  for (const auto& [p, c] : d.terms()) out.push_back(p);
  return out;
}

}  // namespace

PiecewisePoly solve_poisson(const PMGraph& g, const Charge& sigma, std::size_t base) {
  check_measure_shape(g, sigma.density);
  if (sigma.total_mass(g) != 0) {
    throw NonZeroMass("source has total mass " + to_string(sigma.total_mass(g)));
  }
  if (!g.is_connected()) throw Disconnected("metric graph is not connected");

  const Subdivision sub = subdivide(g, cuts_for(g, support(sigma.atoms)));
  const PMGraph& fine = sub.graph;

  std::vector<Rational> density(fine.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    for (const auto& [piece, start] : sub.chains[e]) density[piece] = sigma.density.edge_density[e];
  }

  // Current balance: sum_e (f(p) - f(other))/len = mass(p) + sum_half-edges rho*len/2.
  std::vector<Rational> rhs(fine.vertex_count(), Rational(0));
  for (std::size_t v = 0; v < g.vertex_count(); ++v) rhs[v] = sigma.density.vertex_mass[v];
  for (const auto& [p, c] : sigma.atoms.terms()) rhs[sub.map_point(p).vertex()] += c;
  for (std::size_t e = 0; e < fine.edge_count(); ++e) {
    const Edge& edge = fine.edge(e);
    const Rational half = density[e] * edge.length / 2;
    rhs[edge.tail] += half;
    rhs[edge.head] += half;
  }

  const std::vector<Rational> f = detail::GroundedLaplacian(fine, base).solve(rhs);

  std::vector<std::vector<PiecewisePoly::Piece>> pieces(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    for (const auto& [piece, start] : sub.chains[e]) {
      const Edge& edge = fine.edge(piece);
      const Rational& rho = density[piece];
      Quadratic local{-rho / 2, (f[edge.head] - f[edge.tail]) / edge.length + rho * edge.length / 2,
                      f[edge.tail]};
      pieces[e].push_back(
          PiecewisePoly::Piece{start, start + edge.length, local.recentered(start)});
    }
  }
  return PiecewisePoly(std::vector<Rational>(f.begin(), f.begin() + g.vertex_count()),
                       std::move(pieces));
}

Rational effective_resistance(const PMGraph& g, const GraphPoint& x, const GraphPoint& y) {
  if (x == y) return 0;
  Charge sigma{point_divisor(x, 1) + point_divisor(y, -1), GraphMeasure::zero(g)};
  const PiecewisePoly f = solve_poisson(g, sigma, 0);
  return f(x) - f(y);
}

Rational resistance_pairing(const PMGraph& g, const GraphDivisor& d, const GraphDivisor& e) {
  if (d.empty() || e.empty()) return 0;
  std::vector<GraphPoint> points = support(d);
  for (const auto& p : support(e)) {
    if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
  }
  const Subdivision sub = subdivide(g, cuts_for(g, points));
  const detail::GroundedLaplacian lap(sub.graph, 0);

  // Columns of the grounded inverse for every support vertex.
  std::map<std::size_t, std::vector<Rational>> columns;
  for (const auto& p : points) {
    const std::size_t v = sub.map_point(p).vertex();
    if (columns.count(v)) continue;
    std::vector<Rational> unit(sub.graph.vertex_count(), Rational(0));
    if (v != lap.base()) unit[v] = 1;
    columns.emplace(v, lap.solve(unit));
  }
  auto green = [&](std::size_t a, std::size_t b) { return columns.at(a)[b]; };

  Rational total = 0;
  for (const auto& [x, cx] : d.terms()) {
    const std::size_t a = sub.map_point(x).vertex();
    for (const auto& [y, cy] : e.terms()) {
      const std::size_t b = sub.map_point(y).vertex();
      total += cx * cy * (green(a, a) + green(b, b) - 2 * green(a, b));
    }
  }
  return total;
}

PiecewisePoly green_function(const PMGraph& g, const GraphMeasure& mu, const GraphPoint& y) {
  check_measure_shape(g, mu);
  if (mu.total_mass(g) != 1) {
    throw NonProbabilityMeasure("measure has total mass " + to_string(mu.total_mass(g)));
  }
  GraphMeasure negative = mu;
  negative *= -1;
  PiecewisePoly f = solve_poisson(g, Charge{point_divisor(y), negative}, 0);
  f += -integrate(g, f, mu);
  return f;
}

PiecewisePoly diagonal_green(const PMGraph& g, const GraphMeasure& mu) {
  auto diag = [&](const GraphPoint& p) { return green_function(g, mu, p)(p); };

  std::vector<Rational> vertex_values;
  vertex_values.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    vertex_values.push_back(diag(GraphPoint::at_vertex(v)));
  }

  std::vector<std::vector<PiecewisePoly::Piece>> pieces(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const Rational h = edge.length / 2;
    const Rational& a = vertex_values[edge.tail];
    const Rational b = diag(GraphPoint::on_edge(g, e, h));
    const Rational& c = vertex_values[edge.head];
    Quadratic q;
    q.c2 = (c - 2 * b + a) / (2 * h * h);
    q.c1 = (b - a) / h - q.c2 * h;
    q.c0 = a;

    const Rational check = edge.length / 3;
    if (q(check) != diag(GraphPoint::on_edge(g, e, check))) {
      throw InterpolationMismatch("g(x,x) is not quadratic on edge " + std::to_string(edge.id));
    }
    pieces[e].push_back(PiecewisePoly::Piece{Rational(0), edge.length, q});
  }
  return PiecewisePoly(std::move(vertex_values), std::move(pieces));
}

Rational integrate(const PMGraph& g, const PiecewisePoly& f, const GraphDivisor& d) {
  (void)g;
  Rational sum = 0;
  for (const auto& [p, c] : d.terms()) sum += c * f(p);
  return sum;
}

Rational integrate(const PMGraph& g, const PiecewisePoly& f, const GraphMeasure& mu) {
  check_measure_shape(g, mu);
  Rational sum = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (mu.vertex_mass[v] != 0) sum += mu.vertex_mass[v] * f.vertex_values().at(v);
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (mu.edge_density[e] == 0) continue;
    Rational edge_integral = 0;
    for (const auto& piece : f.pieces(e)) edge_integral += piece.poly.integral(piece.from, piece.to);
    sum += mu.edge_density[e] * edge_integral;
  }
  return sum;
}

Rational integrate(const PMGraph& g, const PiecewisePoly& f, const Charge& sigma) {
  return integrate(g, f, sigma.atoms) + integrate(g, f, sigma.density);
}

Charge laplacian_of(const PMGraph& g, const PiecewisePoly& f) {
  Charge out{GraphDivisor{}, GraphMeasure::zero(g)};
  std::vector<Rational> vertex_atoms(g.vertex_count(), Rational(0));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& ps = f.pieces(e);
    const Edge& edge = g.edge(e);
    out.density.edge_density[e] = -2 * ps.front().poly.c2;
    for (const auto& p : ps) {
      if (-2 * p.poly.c2 != out.density.edge_density[e]) {
        throw InvalidParams("laplacian_of: second derivative varies along an edge");
      }
    }
    vertex_atoms[edge.tail] -= ps.front().poly.derivative(0);
    vertex_atoms[edge.head] += ps.back().poly.derivative(edge.length);
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
      const Rational& t = ps[i].to;
      const Rational jump = ps[i].poly.derivative(t) - ps[i + 1].poly.derivative(t);
      out.atoms.add(GraphPoint::on_edge(g, e, t), jump);
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out.atoms.add(GraphPoint::at_vertex(v), vertex_atoms[v]);
  }
  return out;
}

}  // namespace g2adm
