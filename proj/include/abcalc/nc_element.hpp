#pragma once

#include <map>
#include <string>
#include <vector>

#include "abcalc/rational.hpp"

namespace abcalc {

// Laurent b-exponents are confined to |b_exp| <= window; blowing past it is
// an error, never a silent truncation.
inline constexpr int kDefaultLaurentWindow = 64;

struct Monomial {
  int a_exp = 0;
  int b_exp = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Normal-ordered element of A = C<a,b>/(ab - ba - b^2), or of A[b^{-1}] when
// the Laurent flag is set. Canonical order is a-left: each term is
// c * a^i * b^j. Exact rational coefficients; zero coefficients never stored.
class NcElement {
 public:
  explicit NcElement(bool laurent = false) : laurent_(laurent) {}

  static NcElement zero(bool laurent = false) { return NcElement(laurent); }
  static NcElement one(bool laurent = false);
  static NcElement term(const Rational& c, int a_exp, int b_exp);

  bool laurent() const { return laurent_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Rational coeff(int a_exp, int b_exp) const;
  int max_a_exp() const;  // -1 when zero

  // True when every term has the same total degree a_exp + b_exp.
  bool is_homogeneous(int* degree = nullptr) const;

  NcElement as_laurent() const;

  // Adds c * a^i * b^j, merging and dropping zeros. Promotes to Laurent when
  // b_exp < 0.
  void add_term(const Rational& c, int a_exp, int b_exp);

  NcElement& operator+=(const NcElement& rhs);
  NcElement& operator-=(const NcElement& rhs);
  friend NcElement operator+(NcElement lhs, const NcElement& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend NcElement operator-(NcElement lhs, const NcElement& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend NcElement operator-(const NcElement& x);
  friend NcElement operator*(const Rational& c, const NcElement& x);
  friend bool operator==(const NcElement& lhs, const NcElement& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

 private:
  std::map<Monomial, Rational> terms_;
  bool laurent_;
};

// Product in normal order. Rewrites through b^q * a = a * b^q - q * b^{q+1}
// (valid for every integer q); throws LaurentWindowExceeded when a Laurent
// exponent leaves [-window, window].
NcElement multiply(const NcElement& x, const NcElement& y,
                   int laurent_window = kDefaultLaurentWindow);

NcElement power(const NcElement& x, unsigned n,
                int laurent_window = kDefaultLaurentWindow);

NcElement commutator(const NcElement& x, const NcElement& y,
                     int laurent_window = kDefaultLaurentWindow);

enum class Gen { A, B, BInv };

// A scalar multiple of a word in the generators.
struct Word {
  Rational scalar = 1;
  std::vector<Gen> gens;
};

// Normal form of a word. b^{-1} outside Laurent mode is LaurentNotAllowed.
NcElement normal_order(const Word& word, bool laurent_mode = false,
                       int laurent_window = kDefaultLaurentWindow);

// Canonical text form: terms by descending a_exp then ascending b_exp,
// rationals as "p/q", e.g. "a^2 - 3*a*b + 4*b^2". Re-parseable by the CLI
// expression grammar, bit-exact.
std::string render(const NcElement& x);

}  // namespace abcalc
