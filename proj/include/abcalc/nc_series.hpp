#pragma once

#include <map>

#include "abcalc/nc_element.hpp"
#include "abcalc/series.hpp"

namespace abcalc {

// Element of the b-completion: sum over a_exp of a^j * T_j(b), all columns
// certified modulo b^precision uniformly.
class NcSeriesElement {
 public:
  explicit NcSeriesElement(int precision);

  // Lifts a polynomial element (not Laurent); the result is exact.
  static NcSeriesElement from_element(const NcElement& x);
  static NcSeriesElement from_columns(std::map<int, TruncatedSeries> columns,
                                      int precision);

  int precision() const { return prec_; }
  const std::map<int, TruncatedSeries>& columns() const { return cols_; }
  TruncatedSeries column(int a_exp) const;
  bool is_zero() const { return cols_.empty(); }
  int max_a_exp() const;  // -1 when zero

  NcSeriesElement truncated(int precision) const;

  NcSeriesElement& operator+=(const NcSeriesElement& rhs);
  NcSeriesElement& operator-=(const NcSeriesElement& rhs);
  friend NcSeriesElement operator+(NcSeriesElement lhs,
                                   const NcSeriesElement& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend NcSeriesElement operator-(NcSeriesElement lhs,
                                   const NcSeriesElement& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend bool operator==(const NcSeriesElement& lhs,
                         const NcSeriesElement& rhs) {
    return lhs.prec_ == rhs.prec_ && lhs.cols_ == rhs.cols_;
  }

 private:
  void set_column(int a_exp, TruncatedSeries s);
  void retruncate();

  std::map<int, TruncatedSeries> cols_;
  int prec_;
};

// S(b) * a^j in normal order, via a*S - S*a = b^2*S'. Returns the columns of
// sum_m a^m * U_m(b).
std::map<int, TruncatedSeries> push_series_through_apow(
    const TruncatedSeries& s, int j);

NcSeriesElement multiply(const NcSeriesElement& x, const NcSeriesElement& y);

struct InitialFormResult {
  NcElement element;
  int degree;
};

// Homogeneous component of minimal total degree a_exp + b_exp. ZeroElement
// when x vanishes up to its precision; PrecisionTooLow when unknown b-tail
// terms could reach the minimal degree.
InitialFormResult initial_form(const NcSeriesElement& x);

}  // namespace abcalc
