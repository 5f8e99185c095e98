#include "g2adm/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "g2adm/errors.hpp"

namespace g2adm {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

Rational rational_field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  const json& v = obj.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return parse_rational(std::to_string(v.get<long long>()));
  throw ParseError(std::string("field '") + key + "' must be a rational string or integer");
}

double parse_double(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double out = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("malformed number '" + std::string(s) + "'");
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------------ graph

PMGraph parse_graph(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
      !doc["vertices"].is_array() || !doc["edges"].is_array()) {
    throw ParseError("graph document needs 'vertices' and 'edges' arrays");
  }
  std::vector<Vertex> vertices;
  for (const auto& v : doc["vertices"]) {
    vertices.push_back(Vertex{field<std::int64_t>(v, "id"), field<int>(v, "genus")});
  }
  std::vector<EdgeSpec> edges;
  for (const auto& e : doc["edges"]) {
    edges.push_back(EdgeSpec{field<std::int64_t>(e, "id"), field<std::int64_t>(e, "from"),
                             field<std::int64_t>(e, "to"), rational_field(e, "length")});
  }
  return PMGraph(std::move(vertices), edges);
}

std::string format_graph(const PMGraph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (const auto& v : g.vertices()) doc["vertices"].push_back({{"id", v.id}, {"genus", v.genus}});
  doc["edges"] = json::array();
  for (const auto& e : g.edge_specs()) {
    doc["edges"].push_back(
        {{"id", e.id}, {"from", e.from}, {"to", e.to}, {"length", to_string(e.length)}});
  }
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------- complex

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw ParseError("empty complex number");
  if (s.back() != 'i') return Complex(parse_double(s), 0.0);
  s.pop_back();
  // Split at the last sign that is not leading and not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_part = [](std::string_view t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t);
  };
  if (split == std::string::npos) return Complex(0.0, imag_part(s));
  return Complex(parse_double(std::string_view(s).substr(0, split)),
                 imag_part(std::string_view(s).substr(split)));
}

std::string format_complex(const Complex& z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

SiegelMatrix parse_tau(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("tau") || !doc["tau"].is_array() ||
      doc["tau"].size() != 4) {
    throw ParseError("period-matrix document needs a 'tau' array of four entries");
  }
  std::array<Complex, 4> t;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!doc["tau"][i].is_string()) throw ParseError("tau entries must be strings like \"a+bi\"");
    t[i] = parse_complex(doc["tau"][i].get<std::string>());
  }
  return SiegelMatrix(t[0], t[1], t[2], t[3]);
}

std::string format_tau(const SiegelMatrix& tau) {
  json doc;
  doc["tau"] = {format_complex(tau(0, 0)), format_complex(tau(0, 1)), format_complex(tau(1, 0)),
                format_complex(tau(1, 1))};
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------- reports

std::string format_nonarch_report(const NonArchReport& r, std::string_view label) {
  json doc;
  if (!label.empty()) doc["input"] = std::string(label);
  doc["genus"] = r.genus;
  doc["delta0"] = to_string(r.delta0);
  doc["delta1"] = to_string(r.delta1);
  doc["r_KK"] = to_string(r.r_kk);
  doc["epsilon"] = to_string(r.epsilon);
  doc["phi"] = to_string(r.phi);
  doc["lambda"] = to_string(r.lambda);
  doc["candidate_measure_verified"] = r.candidate_measure_verified;
  return doc.dump(2) + "\n";
}

NonArchReport parse_nonarch_report(std::string_view text) {
  const json doc = parse_json(text);
  NonArchReport r;
  r.genus = field<int>(doc, "genus");
  r.delta0 = rational_field(doc, "delta0");
  r.delta1 = rational_field(doc, "delta1");
  r.r_kk = rational_field(doc, "r_KK");
  r.epsilon = rational_field(doc, "epsilon");
  r.phi = rational_field(doc, "phi");
  r.lambda = rational_field(doc, "lambda");
  r.candidate_measure_verified = field<bool>(doc, "candidate_measure_verified");
  return r;
}

std::string format_arch_report(const ArchReport& r) {
  json doc;
  doc["log_delta2"] = r.log_delta2;
  doc["log_H"] = r.log_h;
  doc["log_H_stderr"] = r.log_h_stderr;
  doc["delta_F"] = r.delta_faltings;
  doc["log_S"] = r.log_s;
  doc["phi"] = r.phi;
  doc["phi_stderr"] = r.phi_stderr;
  doc["lambda"] = r.lambda;
  doc["lambda_recombined"] = r.lambda_recombined;
  doc["residual"] = r.residual;
  doc["S_residual"] = r.s_residual;
  doc["delta2_route_gap"] = r.delta2_route_gap;
  doc["delta"] = r.delta;
  doc["epsilon"] = r.epsilon;
  doc["samples"] = r.samples;
  doc["rejected"] = r.rejected;
  doc["seed"] = r.seed;
  doc["method"] = std::string(method_name(r.method));
  doc["theta_tol"] = r.theta_tol;
  doc["target_stderr"] = r.target_stderr;
  return doc.dump(2) + "\n";
}

ArchReport parse_arch_report(std::string_view text) {
  const json doc = parse_json(text);
  ArchReport r;
  r.log_delta2 = field<double>(doc, "log_delta2");
  r.log_h = field<double>(doc, "log_H");
  r.log_h_stderr = field<double>(doc, "log_H_stderr");
  r.delta_faltings = field<double>(doc, "delta_F");
  r.log_s = field<double>(doc, "log_S");
  r.phi = field<double>(doc, "phi");
  r.phi_stderr = field<double>(doc, "phi_stderr");
  r.lambda = field<double>(doc, "lambda");
  r.lambda_recombined = field<double>(doc, "lambda_recombined");
  r.residual = field<double>(doc, "residual");
  r.s_residual = field<double>(doc, "S_residual");
  r.delta2_route_gap = field<double>(doc, "delta2_route_gap");
  r.delta = field<double>(doc, "delta");
  r.epsilon = field<double>(doc, "epsilon");
  r.samples = field<std::uint64_t>(doc, "samples");
  r.rejected = field<std::uint64_t>(doc, "rejected");
  r.seed = field<std::uint64_t>(doc, "seed");
  r.method = parse_method(field<std::string>(doc, "method"));
  r.theta_tol = field<double>(doc, "theta_tol");
  r.target_stderr = field<double>(doc, "target_stderr");
  return r;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace g2adm
