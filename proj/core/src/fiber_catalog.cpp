#include "g2adm/fiber_catalog.hpp"

#include <algorithm>
#include <array>

#include "g2adm/errors.hpp"

namespace g2adm {

namespace {

constexpr std::array<std::string_view, 7> kNames = {"I", "II", "III", "IV", "V", "VI", "VII"};
constexpr std::array<std::size_t, 7> kArity = {0, 1, 1, 2, 2, 3, 3};

}  // namespace

std::string_view tag_name(FiberTag tag) { return kNames[static_cast<std::size_t>(tag)]; }

FiberTag parse_tag(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<FiberTag>(i);
  }
  throw ParseError("unknown fiber type '" + std::string(name) + "'");
}

std::size_t arity(FiberTag tag) { return kArity[static_cast<std::size_t>(tag)]; }

FiberType::FiberType(FiberTag tag, std::vector<Rational> params)
    : tag_(tag), params_(std::move(params)) {
  if (params_.size() != arity(tag_)) {
    throw InvalidParams("type " + std::string(tag_name(tag_)) + " takes " +
                        std::to_string(arity(tag_)) + " parameters, got " +
                        std::to_string(params_.size()));
  }
  for (const auto& p : params_) {
    if (p <= 0) throw InvalidParams("thickness parameters must be positive");
  }
}

FiberType FiberType::canonical() const {
  std::vector<Rational> p = params_;
  if (tag_ == FiberTag::V || tag_ == FiberTag::VII) std::sort(p.begin(), p.end());
  if (tag_ == FiberTag::VI) std::sort(p.begin() + 1, p.end());
  return FiberType(tag_, std::move(p));
}

std::string FiberType::to_string() const {
  std::string out(tag_name(tag_));
  if (params_.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (i) out += ',';
    out += g2adm::to_string(params_[i]);
  }
  return out + ')';
}

PMGraph graph_of_type(const FiberType& type) {
  const auto& p = type.params();
  switch (type.tag()) {
    case FiberTag::I:
      return PMGraph({{0, 2}}, {});
    case FiberTag::II:
      return PMGraph({{0, 1}, {1, 1}}, {{0, 0, 1, p[0]}});
    case FiberTag::III:
      return PMGraph({{0, 1}}, {{0, 0, 0, p[0]}});
    case FiberTag::IV:
      return PMGraph({{0, 1}, {1, 0}}, {{0, 0, 1, p[0]}, {1, 1, 1, p[1]}});
    case FiberTag::V:
      return PMGraph({{0, 0}}, {{0, 0, 0, p[0]}, {1, 0, 0, p[1]}});
    case FiberTag::VI:
      return PMGraph({{0, 0}, {1, 0}}, {{0, 0, 1, p[0]}, {1, 0, 0, p[1]}, {2, 1, 1, p[2]}});
    case FiberTag::VII:
      return PMGraph({{0, 0}, {1, 0}}, {{0, 0, 1, p[0]}, {1, 0, 1, p[1]}, {2, 0, 1, p[2]}});
  }
  throw InvalidParams("unknown fiber tag");
}

NonArchReport closed_form(const FiberType& type) {
  const auto& p = type.params();
  NonArchReport r;
  r.genus = 2;
  r.delta0 = r.delta1 = r.r_kk = r.epsilon = r.phi = 0;
  switch (type.tag()) {
    case FiberTag::I:
      break;
    case FiberTag::II:
      r.delta1 = p[0];
      r.r_kk = 2 * p[0];
      r.epsilon = p[0];
      r.phi = p[0];
      break;
    case FiberTag::III:
      r.delta0 = p[0];
      r.epsilon = p[0] / 6;
      r.phi = p[0] / 12;
      break;
    case FiberTag::IV:
      r.delta0 = p[1];
      r.delta1 = p[0];
      r.r_kk = 2 * p[0];
      r.epsilon = p[0] + p[1] / 6;
      r.phi = p[0] + p[1] / 12;
      break;
    case FiberTag::V:
      r.delta0 = p[0] + p[1];
      r.epsilon = (p[0] + p[1]) / 6;
      r.phi = (p[0] + p[1]) / 12;
      break;
    case FiberTag::VI:
      r.delta0 = p[1] + p[2];
      r.delta1 = p[0];
      r.r_kk = 2 * p[0];
      r.epsilon = p[0] + (p[1] + p[2]) / 6;
      r.phi = p[0] + (p[1] + p[2]) / 12;
      break;
    case FiberTag::VII: {
      const Rational& a = p[0];
      const Rational& b = p[1];
      const Rational& c = p[2];
      const Rational parallel = a * b * c / (a * b + b * c + c * a);
      r.delta0 = a + b + c;
      r.r_kk = 2 * parallel;
      r.epsilon = (a + b + c) / 6 + parallel / 6;
      r.phi = (a + b + c) / 12 - 5 * parallel / 12;
      break;
    }
  }
  r.lambda = (r.delta0 + 2 * r.delta1) / 10;
  return r;
}

// -------------------------------------------------------------- classify

PMGraph suppress_smoothable_vertices(const PMGraph& g) {
  std::vector<Vertex> vertices = g.vertices();
  std::vector<EdgeSpec> edges = g.edge_specs();
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < vertices.size() && !changed; ++i) {
      const std::int64_t id = vertices[i].id;
      if (vertices[i].genus != 0) continue;
      std::vector<std::size_t> ends;  // edge indices, one per half-edge
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].from == id) ends.push_back(e);
        if (edges[e].to == id) ends.push_back(e);
      }
      if (ends.size() != 2 || ends[0] == ends[1]) continue;
      const EdgeSpec a = edges[ends[0]];
      const EdgeSpec b = edges[ends[1]];
      const std::int64_t left = a.from == id ? a.to : a.from;
      const std::int64_t right = b.from == id ? b.to : b.from;
      EdgeSpec merged{std::min(a.id, b.id), left, right, a.length + b.length};
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(std::max(ends[0], ends[1])));
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(std::min(ends[0], ends[1])));
      edges.push_back(merged);
      vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
    }
    if (!changed) break;
  }
  return PMGraph(std::move(vertices), edges);
}

FiberType classify(const PMGraph& input) {
  if (!input.is_connected() || total_genus(input) != 2) {
    throw Unclassifiable("classification needs a connected genus-2 pm-graph");
  }
  const PMGraph g = suppress_smoothable_vertices(input);
  const auto unclassifiable = [] {
    return Unclassifiable("genus-2 pm-graph matches none of the types I-VII");
  };

  std::vector<Rational> loops;
  std::vector<Rational> links;
  for (const auto& e : g.edges()) (e.is_loop() ? loops : links).push_back(e.length);
  std::sort(loops.begin(), loops.end());
  std::sort(links.begin(), links.end());

  if (g.vertex_count() == 1) {
    const int q = g.vertex(0).genus;
    if (q == 2 && loops.empty()) return FiberType(FiberTag::I, {});
    if (q == 1 && loops.size() == 1) return FiberType(FiberTag::III, loops);
    if (q == 0 && loops.size() == 2) return FiberType(FiberTag::V, loops);
    throw unclassifiable();
  }
  if (g.vertex_count() != 2) throw unclassifiable();

  // Loops per vertex, in vertex order.
  std::array<std::vector<Rational>, 2> loops_at;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) loops_at[e.tail].push_back(e.length);
  }
  const int q0 = g.vertex(0).genus;
  const int q1 = g.vertex(1).genus;

  if (links.size() == 1) {
    const Rational& bridge = links[0];
    if (q0 == 1 && q1 == 1 && loops.empty()) return FiberType(FiberTag::II, {bridge});
    if (q0 + q1 == 1 && loops.size() == 1) {
      const std::size_t zero = q0 == 0 ? 0 : 1;
      if (loops_at[zero].size() != 1) throw unclassifiable();
      return FiberType(FiberTag::IV, {bridge, loops[0]});
    }
    if (q0 == 0 && q1 == 0 && loops_at[0].size() == 1 && loops_at[1].size() == 1) {
      return FiberType(FiberTag::VI, {bridge, loops[0], loops[1]});
    }
  }
  if (links.size() == 3 && loops.empty() && q0 == 0 && q1 == 0) {
    return FiberType(FiberTag::VII, links);
  }
  throw unclassifiable();
}

}  // namespace g2adm
