#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/graphs.hpp"

namespace g2adm {
namespace {

using testing::circle;
using testing::segment;
using testing::theta_graph;

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(parse_rational("6/4"), rational(3, 2));
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(parse_rational("-7"), rational(-7));
  EXPECT_EQ(parse_rational("+2/10"), rational(1, 5));
  EXPECT_EQ(to_string(parse_rational("4/2")), "2");
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "1.5", "a", "1/-2", "1//2", " 1"}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
}

TEST(PMGraph, ValidatesConstruction) {
  EXPECT_THROW(PMGraph({Vertex{0, -1}}, {}), InvalidGraph);
  EXPECT_THROW(PMGraph({Vertex{0, 0}, Vertex{0, 0}}, {}), InvalidGraph);
  EXPECT_THROW(PMGraph({Vertex{0, 0}}, {EdgeSpec{0, 0, 1, 1}}), InvalidGraph);
  EXPECT_THROW(PMGraph({Vertex{0, 0}}, {EdgeSpec{0, 0, 0, 0}}), InvalidGraph);
  EXPECT_THROW(PMGraph({Vertex{0, 0}}, {EdgeSpec{0, 0, 0, -1}}), InvalidGraph);
  EXPECT_THROW(PMGraph({Vertex{0, 0}}, {EdgeSpec{3, 0, 0, 1}, EdgeSpec{3, 0, 0, 1}}), InvalidGraph);
}

TEST(PMGraph, BasicQueries) {
  const PMGraph g = theta_graph(1, 2, 3);
  EXPECT_EQ(g.betti_number(), 2);
  EXPECT_EQ(g.degree(0), 3);
  EXPECT_EQ(g.total_length(), 6);
  EXPECT_TRUE(g.is_connected());
  EXPECT_TRUE(g.is_connected_without(0));

  const PMGraph c = circle(5);
  EXPECT_EQ(c.degree(0), 2);  // a loop counts twice
  EXPECT_EQ(c.betti_number(), 1);

  const PMGraph s = segment(2);
  EXPECT_FALSE(s.is_connected_without(0));

  const PMGraph split({Vertex{0, 0}, Vertex{1, 0}}, {});
  EXPECT_FALSE(split.is_connected());
}

TEST(GraphPoint, EndpointsCanonicalizeToVertices) {
  const PMGraph g = segment(3);
  EXPECT_EQ(GraphPoint::on_edge(g, 0, 0), GraphPoint::at_vertex(0));
  EXPECT_EQ(GraphPoint::on_edge(g, 0, 3), GraphPoint::at_vertex(1));
  const GraphPoint mid = GraphPoint::on_edge(g, 0, rational(3, 2));
  EXPECT_FALSE(mid.is_vertex());
  EXPECT_EQ(mid.offset(), rational(3, 2));
  EXPECT_THROW(GraphPoint::on_edge(g, 0, 4), InvalidParams);
  EXPECT_THROW(GraphPoint::on_edge(g, 0, -1), InvalidParams);
}

TEST(GraphDivisor, MergesAndCancels) {
  const PMGraph g = segment(3);
  GraphDivisor d;
  d.add(GraphPoint::at_vertex(0), 2);
  d.add(GraphPoint::on_edge(g, 0, 0), -2);
  EXPECT_TRUE(d.empty());
  d.add(GraphPoint::at_vertex(1), rational(1, 2));
  d.add(GraphPoint::at_vertex(1), rational(1, 2));
  EXPECT_EQ(d.terms().size(), 1u);
  EXPECT_EQ(d.degree(), 1);
  EXPECT_TRUE((d - d).empty());
  EXPECT_EQ(d + d, point_divisor(GraphPoint::at_vertex(1), 2));
}

TEST(GraphMeasure, MassAndProbability) {
  const PMGraph g = segment(4);
  GraphMeasure mu = GraphMeasure::uniform_on_edge(g, 0);
  EXPECT_EQ(mu.edge_density[0], rational(1, 4));
  EXPECT_TRUE(mu.is_probability(g));
  mu += GraphMeasure::dirac(g, 1);
  EXPECT_EQ(mu.total_mass(g), 2);
  EXPECT_FALSE(mu.is_probability(g));
  mu *= rational(1, 2);
  EXPECT_TRUE(mu.is_probability(g));
  GraphMeasure signed_mu = GraphMeasure::dirac(g, 0);
  signed_mu.vertex_mass[1] = -1;
  signed_mu.vertex_mass[0] = 2;
  EXPECT_FALSE(signed_mu.is_probability(g));
}

TEST(Quadratic, EvaluatesIntegratesAndRecenters) {
  const Quadratic q{rational(1, 2), -1, 3};
  EXPECT_EQ(q(2), 3);
  EXPECT_EQ(q.derivative(2), 1);
  EXPECT_EQ(q.integral(0, 3), 9);
  EXPECT_EQ(q.integral(1, 2), rational(8, 3));
  const Quadratic r = q.recentered(1);
  // r(t) = q(t - 1): the same curve expressed from a shifted origin.
  for (int t = -2; t <= 2; ++t) EXPECT_EQ(r(t), q(t - 1));
}

TEST(PiecewisePoly, AdditionMergesBreakpoints) {
  const PMGraph g = segment(4);
  PiecewisePoly a({0, 4}, {{{0, 1, Quadratic{0, 1, 0}}, {1, 4, Quadratic{0, 1, 0}}}});
  PiecewisePoly b({1, 1}, {{{0, 3, Quadratic{0, 0, 1}}, {3, 4, Quadratic{0, 0, 1}}}});
  const PiecewisePoly sum = a + b;
  EXPECT_EQ(sum.pieces(0).size(), 3u);
  for (int t = 0; t <= 4; ++t) EXPECT_EQ(sum.at(0, t), t + 1);
  EXPECT_FALSE(sum.is_constant());
  EXPECT_TRUE((PiecewisePoly::constant(g, 7) - 7).is_constant());
}

TEST(Subdivision, PreservesLengthsAndMapsPoints) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const PMGraph g = testing::random_pm_graph(rng, 2);
    const Subdivision s = testing::random_subdivision(rng, g);
    EXPECT_EQ(s.graph.total_length(), g.total_length());
    EXPECT_EQ(s.graph.betti_number(), g.betti_number());
    for (int k = 0; k < 5 && g.edge_count() > 0; ++k) {
      const GraphPoint p = testing::random_point(rng, g);
      const GraphPoint q = s.map_point(p);
      if (p.is_vertex()) {
        EXPECT_EQ(q, p);
      } else {
        // Offsets along the chain add back up to the parent offset.
        Rational start = 0;
        for (const auto& [sub, from] : s.chains[p.edge()]) {
          if (!q.is_vertex() && sub == q.edge()) start = from;
        }
        if (!q.is_vertex()) EXPECT_EQ(start + q.offset(), p.offset());
      }
    }
  }
  EXPECT_THROW(subdivide(segment(1), {{Rational(1)}}), InvalidParams);
  EXPECT_THROW(subdivide(segment(1), {}), InvalidParams);
}

}  // namespace
}  // namespace g2adm
