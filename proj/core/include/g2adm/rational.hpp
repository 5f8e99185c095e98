#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace g2adm {

/// Exact rational number. All non-archimedean quantities live here.
using Rational = mpq_class;

/// Parses "p/q" or an integer string ("-3", "12"). The result is canonical.
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is one.
std::string to_string(const Rational& value);

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace g2adm
