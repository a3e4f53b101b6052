#pragma once

#include <string>
#include <utility>
#include <vector>

#include "abcalc/rational.hpp"

namespace abcalc {

// Dense univariate polynomial over the rationals, coefficients ascending.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c);
  static Polynomial x();
  // Monic product of (x - r) over the given roots.
  static Polynomial from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Rational coeff(int k) const;
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational leading() const;

  Rational evaluate(const Rational& x) const;
  Polynomial derivative() const;
  // P(x + t), exact binomial expansion.
  Polynomial shifted_arg(const Rational& t) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Polynomial operator-(const Polynomial& p);
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs.c_ == rhs.c_;
  }

  // Euclidean division; divisor must be nonzero.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& num,
                                                  const Polynomial& den);

  // Expanded text form, e.g. "x^2 + 2*x + 1".
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// True when den divides num exactly.
bool divides(const Polynomial& den, const Polynomial& num);

// All rational roots with multiplicity (ascending), via divisor enumeration
// of the constant term after clearing denominators with the monic
// substitution y = D*x. remainder, when requested, receives the rational-root
// free cofactor (normalized monic when the input is monic).
std::vector<Rational> rational_roots(const Polynomial& p,
                                     Polynomial* remainder = nullptr);

// Factored rendering "(x + 1)^2*(x + 3/2)" when the polynomial is monic with
// all roots rational; falls back to the expanded form otherwise. Root 0
// prints as a bare "x".
std::string render_factored(const Polynomial& p,
                            const std::string& var = "x");

// Parses "+ - * ^ ( )" expressions over rationals and the variable "x";
// throws ParseError with offset and expected-token data.
Polynomial parse_polynomial(std::string_view text);

}  // namespace abcalc
