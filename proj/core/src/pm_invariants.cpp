#include "g2adm/pm_invariants.hpp"

#include <string>

#include "g2adm/errors.hpp"

namespace g2adm {

int total_genus(const PMGraph& g) {
  if (!g.is_connected()) throw Disconnected("metric graph is not connected");
  long genus = g.betti_number();
  for (const auto& v : g.vertices()) genus += v.genus;
  return static_cast<int>(genus);
}

GraphDivisor canonical_divisor(const PMGraph& g) {
  GraphDivisor k;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    k.add(GraphPoint::at_vertex(v), 2 * g.vertex(v).genus - 2 + g.degree(v));
  }
  return k;
}

std::vector<bool> bridge_edges(const PMGraph& g) {
  std::vector<bool> bridge(g.edge_count(), false);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    bridge[e] = !g.edge(e).is_loop() && !g.is_connected_without(e);
  }
  return bridge;
}

NodeCounts node_counts(const PMGraph& g) {
  const auto bridge = bridge_edges(g);
  NodeCounts out{0, 0};
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    (bridge[e] ? out.delta1 : out.delta0) += g.edge(e).length;
  }
  return out;
}

namespace {

PMGraph without_edge(const PMGraph& g, std::size_t skip) {
  std::vector<EdgeSpec> specs = g.edge_specs();
  specs.erase(specs.begin() + static_cast<std::ptrdiff_t>(skip));
  return PMGraph(g.vertices(), specs);
}

// Exact row reduction of the augmented system [A | b]. Returns the unique
// solution, or nullopt if the system is inconsistent or has free variables.
std::optional<std::vector<Rational>> unique_solution(std::vector<std::vector<Rational>> rows,
                                                     std::size_t unknowns) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) return std::nullopt;
    std::swap(rows[rank], rows[pivot]);
    const Rational lead = rows[rank][col];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c <= unknowns; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  if (rank < unknowns) return std::nullopt;
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r][unknowns] != 0) return std::nullopt;
  }
  std::vector<Rational> x(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i) x[i] = rows[i][unknowns];
  return x;
}

}  // namespace

GraphMeasure candidate_admissible_measure(const PMGraph& g) {
  const int genus = total_genus(g);
  if (genus <= 0) throw GenusZero("admissible measure needs genus >= 1");
  GraphMeasure mu = GraphMeasure::zero(g);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) mu.vertex_mass[v] = g.vertex(v).genus;
  const auto bridge = bridge_edges(g);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (bridge[e]) continue;
    Rational rest = 0;
    if (!edge.is_loop()) {
      rest = effective_resistance(without_edge(g, e), GraphPoint::at_vertex(edge.tail),
                                  GraphPoint::at_vertex(edge.head));
    }
    mu.edge_density[e] = 1 / (edge.length + rest);
  }
  mu *= rational(1, genus);
  return mu;
}

PiecewisePoly admissibility_function(const PMGraph& g, const GraphMeasure& mu) {
  PiecewisePoly h = diagonal_green(g, mu);
  const GraphDivisor k = canonical_divisor(g);
  for (const auto& [p, c] : k.terms()) {
    PiecewisePoly term = green_function(g, mu, p);
    term *= c;
    h += term;
  }
  return h;
}

GraphMeasure solve_admissible_measure(const PMGraph& g) {
  if (total_genus(g) <= 0) throw GenusZero("admissible measure needs genus >= 1");
  const std::size_t nv = g.vertex_count();
  const std::size_t ne = g.edge_count();
  const std::size_t unknowns = nv + ne;

  // Weights w on the basis probability measures delta_v and dx/len(e). The
  // non-constant part of the admissibility function is affine in mu, so the
  // per-edge quadratic and linear coefficients of sum w_i h_i must vanish.
  std::vector<std::vector<Rational>> rows(2 * ne + 1, std::vector<Rational>(unknowns + 1));
  for (std::size_t i = 0; i < unknowns; ++i) {
    const GraphMeasure basis =
        i < nv ? GraphMeasure::dirac(g, i) : GraphMeasure::uniform_on_edge(g, i - nv);
    const PiecewisePoly h = admissibility_function(g, basis);
    for (std::size_t e = 0; e < ne; ++e) {
      const Quadratic& q = h.pieces(e).front().poly;
      rows[2 * e][i] = q.c2;
      rows[2 * e + 1][i] = q.c1;
    }
    rows[2 * ne][i] = 1;
  }
  rows[2 * ne][unknowns] = 1;

  const auto w = unique_solution(std::move(rows), unknowns);
  if (!w) throw AdmissibilityFailure("no unique admissible measure of vertex+edge-density shape");
  GraphMeasure mu = GraphMeasure::zero(g);
  for (std::size_t v = 0; v < nv; ++v) mu.vertex_mass[v] = (*w)[v];
  for (std::size_t e = 0; e < ne; ++e) mu.edge_density[e] = (*w)[nv + e] / g.edge(e).length;
  return mu;
}

AdmissibleMeasure admissible_measure(const PMGraph& g) {
  GraphMeasure candidate = candidate_admissible_measure(g);
  if (candidate.is_probability(g) && admissibility_function(g, candidate).is_constant()) {
    return AdmissibleMeasure{std::move(candidate), true};
  }
  GraphMeasure solved = solve_admissible_measure(g);
  if (!solved.is_probability(g) || !admissibility_function(g, solved).is_constant()) {
    throw AdmissibilityFailure("linear fallback did not produce an admissible measure");
  }
  return AdmissibleMeasure{std::move(solved), false};
}

// ---------------------------------------------------------- AdmissibleData

AdmissibleData::AdmissibleData(PMGraph g) : graph(std::move(g)) {
  genus = total_genus(graph);
  if (genus < 2) {
    throw UnsupportedGenus("epsilon and phi need genus >= 2, got " + std::to_string(genus));
  }
  canonical = canonical_divisor(graph);
  mu = admissible_measure(graph);
  diagonal = diagonal_green(graph, mu.measure);
  nodes = node_counts(graph);
}

Rational AdmissibleData::epsilon() const {
  return (2 * genus - 2) * integrate(graph, diagonal, mu.measure) +
         integrate(graph, diagonal, canonical);
}

Rational AdmissibleData::phi_by_integral() const {
  const Rational weighted = (10 * genus + 2) * integrate(graph, diagonal, mu.measure) -
                            integrate(graph, diagonal, canonical);
  return -nodes.delta() / 4 + weighted / 4;
}

Rational AdmissibleData::r_kk() const { return resistance_pairing(graph, canonical, canonical); }

Rational AdmissibleData::phi_by_resistance() const {
  if (genus != 2) throw UnsupportedGenus("the resistance formula for phi holds in genus 2 only");
  return -nodes.delta() / 4 - rational(3, 8) * r_kk() + 2 * epsilon();
}

Rational epsilon_invariant(const PMGraph& g) { return AdmissibleData(g).epsilon(); }

namespace {

Rational checked_phi(const AdmissibleData& data) {
  const Rational phi = data.phi_by_integral();
  if (data.genus == 2) {
    const Rational other = data.phi_by_resistance();
    if (phi != other) {
      throw FormulaMismatch("phi by integral = " + to_string(phi) +
                            ", phi by resistance = " + to_string(other));
    }
  }
  return phi;
}

Rational lambda_from(int genus, const Rational& phi, const Rational& epsilon,
                     const Rational& delta) {
  return rational(genus - 1, 6 * (2 * genus + 1)) * phi + (epsilon + delta) / 12;
}

}  // namespace

Rational phi_invariant(const PMGraph& g) { return checked_phi(AdmissibleData(g)); }

Rational lambda_invariant(const PMGraph& g) {
  const AdmissibleData data(g);
  return lambda_from(data.genus, checked_phi(data), data.epsilon(), data.nodes.delta());
}

NonArchReport nonarch_report(const PMGraph& g) {
  const AdmissibleData data(g);
  NonArchReport report;
  report.genus = data.genus;
  report.delta0 = data.nodes.delta0;
  report.delta1 = data.nodes.delta1;
  report.r_kk = data.r_kk();
  report.epsilon = data.epsilon();
  report.phi = checked_phi(data);
  report.lambda = lambda_from(data.genus, report.phi, report.epsilon, data.nodes.delta());
  report.candidate_measure_verified = data.mu.candidate_verified;
  return report;
}

}  // namespace g2adm
