#pragma once

// The seven semistable reduction types of genus-2 curves, I through
// VII(a,b,c): their reduction graphs, closed-form invariants and a
// classifier for arbitrary genus-2 pm-graphs.

#include <string>
#include <string_view>
#include <vector>

#include "g2adm/metric_graph.hpp"
#include "g2adm/pm_invariants.hpp"

namespace g2adm {

enum class FiberTag { I, II, III, IV, V, VI, VII };

std::string_view tag_name(FiberTag tag);
/// "I" .. "VII"; throws ParseError otherwise.
FiberTag parse_tag(std::string_view name);
/// Number of thickness parameters: 0, 1, 1, 2, 2, 3, 3.
std::size_t arity(FiberTag tag);

class FiberType {
 public:
  /// Throws InvalidParams on wrong arity or nonpositive parameters.
  FiberType(FiberTag tag, std::vector<Rational> params);

  FiberTag tag() const { return tag_; }
  const std::vector<Rational>& params() const { return params_; }

  /// V and VII sort all parameters; VI sorts the two loop lengths.
  FiberType canonical() const;
  /// E.g. "VII(1,2,3/4)".
  std::string to_string() const;

  friend bool operator==(const FiberType&, const FiberType&) = default;

 private:
  FiberTag tag_;
  std::vector<Rational> params_;
};

/// Reduction graph of the type. Parameter roles:
///   II(a)       two genus-1 vertices joined by a bridge a
///   III(a)      genus-1 vertex with a loop a
///   IV(a,b)     genus-1 vertex, bridge a, genus-0 vertex with loop b
///   V(a,b)      genus-0 vertex with loops a and b
///   VI(a,b,c)   loop b on a genus-0 vertex, bridge a, loop c on another
///   VII(a,b,c)  two genus-0 vertices joined by edges a, b, c
PMGraph graph_of_type(const FiberType& type);

/// The tabulated closed forms for delta0, delta1, r(K,K), epsilon, phi and
/// lambda = (delta0 + 2 delta1)/10.
NonArchReport closed_form(const FiberType& type);

/// Suppresses genus-0 vertices of valence 2 and matches the result against
/// the seven shapes. Throws Unclassifiable if the genus is not 2 or no
/// shape matches.
FiberType classify(const PMGraph& g);

/// Merges the two edges at every genus-0, valence-2 vertex (other than a
/// vertex whose only edge is a loop).
PMGraph suppress_smoothable_vertices(const PMGraph& g);

}  // namespace g2adm
