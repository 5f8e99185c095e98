#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/graphs.hpp"

namespace g2adm {
namespace {

using testing::circle;
using testing::point_graph;
using testing::segment;
using testing::theta_graph;

PMGraph scaled(const PMGraph& g, const Rational& s) {
  std::vector<EdgeSpec> edges = g.edge_specs();
  for (auto& e : edges) e.length *= s;
  return PMGraph(g.vertices(), edges);
}

bool admissibility_is_constant(const PMGraph& g, const GraphMeasure& mu) {
  const PiecewisePoly h = admissibility_function(g, mu);
  if (!h.is_constant()) return false;
  for (const auto& v : h.vertex_values()) {
    if (v != h.vertex_values().front()) return false;
  }
  return true;
}

TEST(TotalGenus, Examples) {
  EXPECT_EQ(total_genus(point_graph(2)), 2);
  EXPECT_EQ(total_genus(theta_graph(1, 2, 3)), 2);
  EXPECT_EQ(total_genus(circle(1, 1)), 2);
  EXPECT_THROW(total_genus(PMGraph({Vertex{0, 1}, Vertex{1, 1}}, {})), Disconnected);
}

TEST(CanonicalDivisor, Examples) {
  const PMGraph p = point_graph(2);
  EXPECT_EQ(canonical_divisor(p), point_divisor(GraphPoint::at_vertex(0), 2));
  const GraphDivisor both =
      point_divisor(GraphPoint::at_vertex(0)) + point_divisor(GraphPoint::at_vertex(1));
  EXPECT_EQ(canonical_divisor(theta_graph(1, 1, 1)), both);
  EXPECT_EQ(canonical_divisor(segment(3, 1, 1)), both);
}

TEST(CanonicalDivisor, DegreeIsTwoGMinusTwo) {
  testing::Rng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const int genus = static_cast<int>(testing::uniform_int(rng, 0, 4));
    const PMGraph g = testing::random_pm_graph(rng, genus, 5);
    EXPECT_EQ(canonical_divisor(g).degree(), 2 * total_genus(g) - 2);
  }
}

TEST(NodeCounts, Examples) {
  const NodeCounts two = node_counts(graph_of_type(FiberType(FiberTag::II, {3})));
  EXPECT_EQ(two.delta0, 0);
  EXPECT_EQ(two.delta1, 3);
  const NodeCounts seven = node_counts(graph_of_type(FiberType(FiberTag::VII, {1, 2, 3})));
  EXPECT_EQ(seven.delta0, 6);
  EXPECT_EQ(seven.delta1, 0);
  const NodeCounts one = node_counts(point_graph(2));
  EXPECT_EQ(one.delta(), 0);
}

TEST(BridgeEdges, LoopsAreNeverBridges) {
  const PMGraph g = graph_of_type(FiberType(FiberTag::VI, {1, 2, 3}));
  const auto bridges = bridge_edges(g);
  int count = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (bridges[e]) {
      ++count;
      EXPECT_FALSE(g.edge(e).is_loop());
    }
  }
  EXPECT_EQ(count, 1);
}

TEST(AdmissibleMeasure, Examples) {
  const Rational a = 7;
  const PMGraph two = segment(a, 1, 1);
  const AdmissibleMeasure m2 = admissible_measure(two);
  EXPECT_TRUE(m2.candidate_verified);
  EXPECT_EQ(m2.measure.vertex_mass, (std::vector<Rational>{rational(1, 2), rational(1, 2)}));
  EXPECT_EQ(m2.measure.edge_density[0], 0);
  EXPECT_EQ(admissibility_function(two, m2.measure).vertex_values()[0], a / 4);

  const PMGraph three = circle(a, 1);
  const GraphMeasure m3 = admissible_measure(three).measure;
  EXPECT_EQ(m3.vertex_mass[0], rational(1, 2));
  EXPECT_EQ(m3.edge_density[0], 1 / (2 * a));

  const GraphMeasure m7 = admissible_measure(theta_graph(1, 1, 1)).measure;
  EXPECT_EQ(m7.vertex_mass, (std::vector<Rational>{0, 0}));
  for (const auto& rho : m7.edge_density) EXPECT_EQ(rho, rational(1, 3));

  EXPECT_THROW(admissible_measure(PMGraph({Vertex{0, 0}}, {})), GenusZero);
}

TEST(AdmissibleMeasure, ProbabilityAndConstancyOnRandomGraphs) {
  testing::Rng rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const int genus = static_cast<int>(testing::uniform_int(rng, 1, 3));
    const PMGraph g = testing::random_pm_graph(rng, genus, 4);
    const AdmissibleMeasure mu = admissible_measure(g);
    EXPECT_TRUE(mu.candidate_verified);
    EXPECT_TRUE(mu.measure.is_probability(g));
    EXPECT_TRUE(admissibility_is_constant(g, mu.measure));
  }
}

TEST(AdmissibleMeasure, LinearSolveAgreesWithClosedForm) {
  testing::Rng rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    const PMGraph g = testing::random_pm_graph(rng, static_cast<int>(testing::uniform_int(rng, 1, 3)));
    EXPECT_EQ(solve_admissible_measure(g), candidate_admissible_measure(g));
  }
}

TEST(AdmissibleMeasure, WrongMeasureIsNotConstant) {
  const PMGraph g = circle(3, 1);
  EXPECT_FALSE(admissibility_is_constant(g, GraphMeasure::dirac(g, 0)));
}

TEST(Epsilon, Examples) {
  EXPECT_EQ(epsilon_invariant(graph_of_type(FiberType(FiberTag::II, {3}))), 3);
  EXPECT_EQ(epsilon_invariant(graph_of_type(FiberType(FiberTag::III, {2}))), rational(1, 3));
  EXPECT_EQ(epsilon_invariant(graph_of_type(FiberType(FiberTag::VII, {1, 1, 1}))), rational(5, 9));
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi_invariant(graph_of_type(FiberType(FiberTag::VII, {1, 1, 1}))), rational(1, 9));
  EXPECT_EQ(phi_invariant(graph_of_type(FiberType(FiberTag::III, {12}))), 1);
  EXPECT_EQ(phi_invariant(point_graph(2)), 0);
}

TEST(Lambda, Examples) {
  EXPECT_EQ(lambda_invariant(graph_of_type(FiberType(FiberTag::II, {1}))), rational(1, 5));
  const PMGraph seven = graph_of_type(FiberType(FiberTag::VII, {1, 1, 1}));
  EXPECT_EQ(lambda_invariant(seven), rational(3, 10));
  EXPECT_EQ(lambda_invariant(seven),
            Rational(rational(1, 30) * rational(1, 9) + (rational(5, 9) + 3) / 12));
  EXPECT_EQ(lambda_invariant(point_graph(2)), 0);
}

TEST(Invariants, RequireGenusAtLeastTwo) {
  EXPECT_THROW(epsilon_invariant(circle(1)), UnsupportedGenus);
  EXPECT_THROW(phi_invariant(point_graph(1)), UnsupportedGenus);
  EXPECT_THROW(nonarch_report(segment(1)), UnsupportedGenus);
}

TEST(Invariants, PhiFormulasAgreeOnRandomGenusTwoGraphs) {
  testing::Rng rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    const PMGraph g = testing::random_pm_graph(rng, 2, 4);
    const AdmissibleData data(g);
    EXPECT_EQ(data.phi_by_integral(), data.phi_by_resistance());
  }
}

TEST(Invariants, ScaleLinearly) {
  testing::Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const PMGraph g = testing::random_pm_graph(rng, 2, 4);
    const Rational s = testing::positive_rational(rng, 50);
    const NonArchReport r = nonarch_report(g);
    const NonArchReport t = nonarch_report(scaled(g, s));
    EXPECT_EQ(t.delta0, s * r.delta0);
    EXPECT_EQ(t.delta1, s * r.delta1);
    EXPECT_EQ(t.r_kk, s * r.r_kk);
    EXPECT_EQ(t.epsilon, s * r.epsilon);
    EXPECT_EQ(t.phi, s * r.phi);
    EXPECT_EQ(t.lambda, s * r.lambda);
  }
}

TEST(Invariants, LambdaLawOnSubdividedRelabeledReductionGraphs) {
  testing::Rng rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    const FiberType t = testing::random_type(rng, testing::random_tag(rng), 100);
    const PMGraph g = testing::relabel(rng, testing::random_subdivision(rng, graph_of_type(t)).graph);
    const NonArchReport r = nonarch_report(g);
    EXPECT_EQ(10 * r.lambda, r.delta0 + 2 * r.delta1) << t.to_string();
  }
}

TEST(Invariants, LambdaLawNeedsStableGraph) {
  // A genus-0 leaf on a bridge adds to delta1 without changing lambda.
  const PMGraph leaf({Vertex{0, 2}, Vertex{1, 0}}, {EdgeSpec{0, 0, 1, 3}});
  const NonArchReport r = nonarch_report(leaf);
  EXPECT_EQ(r.delta1, 3);
  EXPECT_NE(10 * r.lambda, r.delta0 + 2 * r.delta1);
}

TEST(Invariants, HigherGenusUsesIntegralForm) {
  testing::Rng rng(71);
  const PMGraph g = testing::random_pm_graph(rng, 3, 4);
  const AdmissibleData data(g);
  EXPECT_EQ(phi_invariant(g), data.phi_by_integral());
  EXPECT_EQ(data.genus, 3);
}

}  // namespace
}  // namespace g2adm
