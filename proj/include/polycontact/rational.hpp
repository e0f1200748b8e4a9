#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polycontact {

// Exact scalar. mpq_class keeps values in lowest terms with a positive
// denominator after every arithmetic operation.
using Rational = mpq_class;

// Accepts `n`, `-n`, `p/q`, `-p/q` (q > 0 after sign handling). Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

Rational floor_div(const Rational& num, const Rational& den);

}  // namespace polycontact
