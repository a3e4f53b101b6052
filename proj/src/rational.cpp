#include "abcalc/rational.hpp"

namespace abcalc {

Rational parse_rational(std::string_view text) {
  if (text.empty()) {
    throw SchemaError("empty string is not a rational");
  }
  try {
    return Rational(std::string(text));
  } catch (const std::exception&) {
    throw SchemaError("cannot parse \"" + std::string(text) +
                      "\" as a rational");
  }
}

std::string rational_str(const Rational& r) { return r.str(); }

Rational rational_pow(const Rational& base, unsigned exp) {
  Rational result = 1;
  Rational b = base;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Rational fractional_part(const Rational& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  Int q = num / den;
  Int rem = num - q * den;
  if (rem < 0) rem += den;
  return Rational(rem, den);
}

}  // namespace abcalc
