#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "abcalc/errors.hpp"

namespace abcalc {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar for every coefficient in the library. Kept reduced
// with a positive denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "-p", "p/q" with q > 0 after reduction. Throws SchemaError on
// anything else (callers parse expression text with their own lexer).
Rational parse_rational(std::string_view text);

std::string rational_str(const Rational& r);

Rational rational_pow(const Rational& base, unsigned exp);

bool is_integer(const Rational& r);

// r - floor(r), a representative of the class of r modulo 1 in [0, 1).
Rational fractional_part(const Rational& r);

}  // namespace abcalc
