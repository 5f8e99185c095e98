#pragma once

// Text formats.
//
// Graph file (JSON):
//   {"vertices": [{"id": 0, "genus": 1}, ...],
//    "edges":    [{"id": 0, "from": 0, "to": 1, "length": "3/2"}, ...]}
// Lengths are exact rationals written "p/q" or as integers (string or JSON
// integer on input; always a canonical string on output).
//
// Period-matrix file (JSON): {"tau": ["a+bi", "c+di", "c+di", "e+fi"]},
// entries row-major.
//
// Reports are JSON objects; rationals are canonical "p/q" strings and
// floating-point values are JSON numbers printed in shortest round-trip form.

#include <string>
#include <string_view>

#include "g2adm/arch_invariants.hpp"
#include "g2adm/metric_graph.hpp"
#include "g2adm/pm_invariants.hpp"
#include "g2adm/siegel.hpp"

namespace g2adm {

/// Throws ParseError on malformed documents and InvalidGraph on invalid data.
PMGraph parse_graph(std::string_view text);
std::string format_graph(const PMGraph& g);

/// "1.5-0.25i", "2i", "-3", "0.1 + 1.2 i".
Complex parse_complex(std::string_view text);
/// Real and imaginary parts with 17 significant digits.
std::string format_complex(const Complex& z);

SiegelMatrix parse_tau(std::string_view text);
std::string format_tau(const SiegelMatrix& tau);

std::string format_nonarch_report(const NonArchReport& r, std::string_view label = {});
NonArchReport parse_nonarch_report(std::string_view text);

std::string format_arch_report(const ArchReport& r);
ArchReport parse_arch_report(std::string_view text);

/// Whole file as a string; throws ParseError if it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace g2adm
