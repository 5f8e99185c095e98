#pragma once

// Invariants of a polarized metric graph (the reduction graph of a
// semistable curve): genus, canonical divisor, admissible measure, and the
// local invariants epsilon, phi, lambda together with the node counts.

#include <vector>

#include "g2adm/metric_graph.hpp"
#include "g2adm/rational.hpp"

namespace g2adm {

/// First Betti number plus the sum of vertex genera.
int total_genus(const PMGraph& g);

/// K = sum_v (2 q(v) - 2 + deg v) v, supported on vertices.
GraphDivisor canonical_divisor(const PMGraph& g);

/// Bridge flags per edge. Loops are never bridges.
std::vector<bool> bridge_edges(const PMGraph& g);

struct NodeCounts {
  Rational delta0;  // total length of non-bridge edges
  Rational delta1;  // total length of bridge edges

  Rational delta() const { return delta0 + delta1; }
};

NodeCounts node_counts(const PMGraph& g);

struct AdmissibleMeasure {
  GraphMeasure measure;
  /// False when the closed-form candidate failed verification and the
  /// measure came from the linear fallback.
  bool candidate_verified = true;
};

/// mu = (1/g)(sum_v q(v) delta_v + sum_e dx / (len(e) + R(e))), where R(e)
/// is the resistance between the ends of e in the graph with e removed
/// (bridges get density zero). Not verified.
GraphMeasure candidate_admissible_measure(const PMGraph& g);

/// Solves for vertex masses and edge densities directly from the defining
/// property (x -> g(x,x) + g(K,x) constant), using the Green's functions of
/// the basis measures delta_v and dx/len(e). Throws AdmissibilityFailure if
/// the system is inconsistent or underdetermined.
GraphMeasure solve_admissible_measure(const PMGraph& g);

/// x -> g_mu(x,x) + g_mu(K,x).
PiecewisePoly admissibility_function(const PMGraph& g, const GraphMeasure& mu);

/// Candidate measure if it passes exact verification, otherwise the linear
/// fallback. Throws GenusZero for g = 0.
AdmissibleMeasure admissible_measure(const PMGraph& g);

struct NonArchReport {
  int genus = 0;
  Rational delta0;
  Rational delta1;
  Rational r_kk;
  Rational epsilon;
  Rational phi;
  Rational lambda;
  bool candidate_measure_verified = true;

  friend bool operator==(const NonArchReport&, const NonArchReport&) = default;
};

/// Everything needed for epsilon and phi, computed once.
struct AdmissibleData {
  PMGraph graph;
  int genus = 0;
  GraphDivisor canonical;
  AdmissibleMeasure mu;
  PiecewisePoly diagonal;  // x -> g_mu(x, x)
  NodeCounts nodes;

  /// Requires genus >= 2 (throws UnsupportedGenus otherwise).
  explicit AdmissibleData(PMGraph g);

  Rational epsilon() const;
  /// -delta/4 + (1/4) int g(x,x) ((10g+2) mu - delta_K).
  Rational phi_by_integral() const;
  /// -delta/4 - (3/8) r(K,K) + 2 epsilon; valid in genus 2 only.
  Rational phi_by_resistance() const;
  Rational r_kk() const;
};

Rational epsilon_invariant(const PMGraph& g);

/// In genus 2 both phi formulas are evaluated and must agree exactly
/// (FormulaMismatch otherwise); in higher genus the integral form is used.
Rational phi_invariant(const PMGraph& g);

/// (g-1)/(6(2g+1)) phi + (epsilon + delta)/12.
Rational lambda_invariant(const PMGraph& g);

NonArchReport nonarch_report(const PMGraph& g);

}  // namespace g2adm
