#pragma once

#include <limits>
#include <string>
#include <vector>

#include "abcalc/rational.hpp"

namespace abcalc {

// Sentinel precision for exactly known (polynomial) data. Finite precisions
// add without overflowing near it.
inline constexpr int kPrecInf = std::numeric_limits<int>::max() / 4;

inline int prec_add(int p, int d) { return p >= kPrecInf ? kPrecInf : p + d; }
inline int prec_min(int p, int q) { return p < q ? p : q; }

// Element of C[[b]] known modulo b^precision. precision == kPrecInf marks an
// exact polynomial. Zero series remember their precision, so "exactly 0" and
// "0 up to b^O" stay distinguishable downstream.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int precision = kPrecInf);
  TruncatedSeries(std::vector<Rational> coefficients, int precision = kPrecInf);

  static TruncatedSeries constant(const Rational& c);
  static TruncatedSeries one() { return constant(1); }
  static TruncatedSeries bpow(int k);  // b^k, k >= 0, exact

  int precision() const { return prec_; }
  bool exact() const { return prec_ >= kPrecInf; }
  const std::vector<Rational>& coefficients() const { return coeff_; }

  // Throws PrecisionExhausted when asked beyond the certified range.
  Rational coeff(int k) const;
  bool known(int k) const { return k < prec_; }

  // Index of the first known nonzero coefficient; precision() when the series
  // is zero as far as it is known (kPrecInf for the exact zero).
  int valuation() const;
  bool is_zero() const;
  bool is_exactly_zero() const { return is_zero() && exact(); }

  TruncatedSeries truncated(int precision) const;
  TruncatedSeries derivative() const;
  TruncatedSeries shifted(int k) const;  // multiply by b^k, k >= 0

  // Multiplicative inverse modulo b^precision; NotAUnit when coeff(0) == 0.
  TruncatedSeries inverse(int precision) const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  friend TruncatedSeries operator+(TruncatedSeries lhs,
                                   const TruncatedSeries& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend TruncatedSeries operator-(TruncatedSeries lhs,
                                   const TruncatedSeries& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& s);
  friend TruncatedSeries operator*(const TruncatedSeries& lhs,
                                   const TruncatedSeries& rhs);
  friend TruncatedSeries operator*(const Rational& c,
                                   const TruncatedSeries& s);
  friend bool operator==(const TruncatedSeries& lhs,
                         const TruncatedSeries& rhs);

  std::string str() const;

 private:
  void trim();

  std::vector<Rational> coeff_;  // coeff_[k] multiplies b^k
  int prec_;
};

// Finite-tail Laurent series in b with absolute precision: coefficients of
// b^k are certified for k < precision. Backbone of the saturation lattice
// arithmetic, where b^{-1} shifts are routine.
class LaurentSeries {
 public:
  LaurentSeries();  // exact zero
  LaurentSeries(const TruncatedSeries& s);
  LaurentSeries(int base, std::vector<Rational> coefficients, int precision);

  static LaurentSeries bpow(int k);  // b^k, any sign, exact

  int precision() const { return prec_; }
  bool exact() const { return prec_ >= kPrecInf; }
  int valuation() const;  // prec_ when zero-to-precision, kPrecInf when exact 0
  bool is_zero() const;

  Rational coeff(int k) const;  // PrecisionExhausted beyond certified range

  LaurentSeries shifted(int k) const;  // multiply by b^k, any sign
  LaurentSeries derivative() const;
  LaurentSeries truncated(int precision) const;
  TruncatedSeries to_truncated() const;  // requires valuation >= 0

  LaurentSeries& operator+=(const LaurentSeries& rhs);
  LaurentSeries& operator-=(const LaurentSeries& rhs);
  friend LaurentSeries operator+(LaurentSeries lhs, const LaurentSeries& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend LaurentSeries operator-(LaurentSeries lhs, const LaurentSeries& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend LaurentSeries operator-(const LaurentSeries& s);
  friend LaurentSeries operator*(const LaurentSeries& lhs,
                                 const LaurentSeries& rhs);
  friend LaurentSeries operator*(const Rational& c, const LaurentSeries& s);
  friend bool operator==(const LaurentSeries& lhs, const LaurentSeries& rhs);

  // Exact division u / v for val(u) >= val(v); throws Error otherwise.
  friend LaurentSeries divide(const LaurentSeries& u, const LaurentSeries& v);

  std::string str() const;

 private:
  void normalize();

  int base_ = 0;                 // exponent of coeff_[0]
  std::vector<Rational> coeff_;  // empty means zero
  int prec_ = kPrecInf;
};

}  // namespace abcalc
