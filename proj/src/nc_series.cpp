#include "abcalc/nc_series.hpp"

#include <algorithm>

#include "abcalc/errors.hpp"

namespace abcalc {

NcSeriesElement::NcSeriesElement(int precision) : prec_(precision) {
  if (prec_ < 1) {
    throw Error(ErrorKind::Domain, "element precision must be >= 1");
  }
}

NcSeriesElement NcSeriesElement::from_element(const NcElement& x) {
  if (x.laurent()) {
    throw Error(ErrorKind::Domain,
                "Laurent elements do not embed into the b-completion");
  }
  std::map<int, std::vector<Rational>> cols;
  for (const auto& [mono, c] : x.terms()) {
    auto& v = cols[mono.a_exp];
    if (static_cast<int>(v.size()) <= mono.b_exp) {
      v.resize(static_cast<std::size_t>(mono.b_exp) + 1, Rational(0));
    }
    v[static_cast<std::size_t>(mono.b_exp)] = c;
  }
  NcSeriesElement out(kPrecInf);
  for (auto& [a_exp, v] : cols) {
    out.set_column(a_exp, TruncatedSeries(std::move(v)));
  }
  return out;
}

NcSeriesElement NcSeriesElement::from_columns(
    std::map<int, TruncatedSeries> columns, int precision) {
  // Uniform precision: the element is only as precise as its weakest column.
  int p = precision;
  for (const auto& [a_exp, s] : columns) p = prec_min(p, s.precision());
  if (p < 1) throw PrecisionExhausted("element has no certified coefficients");
  NcSeriesElement out(p);
  for (auto& [a_exp, s] : columns) {
    out.set_column(a_exp, s.truncated(p));
  }
  return out;
}

TruncatedSeries NcSeriesElement::column(int a_exp) const {
  auto it = cols_.find(a_exp);
  if (it != cols_.end()) return it->second;
  return TruncatedSeries(prec_);
}

int NcSeriesElement::max_a_exp() const {
  return cols_.empty() ? -1 : cols_.rbegin()->first;
}

void NcSeriesElement::set_column(int a_exp, TruncatedSeries s) {
  if (a_exp < 0) throw Error(ErrorKind::Domain, "negative a-exponent");
  if (s.is_zero() && s.precision() >= prec_) {
    cols_.erase(a_exp);
    return;
  }
  cols_.insert_or_assign(a_exp, std::move(s));
}

void NcSeriesElement::retruncate() {
  for (auto it = cols_.begin(); it != cols_.end();) {
    it->second = it->second.truncated(prec_);
    if (it->second.is_zero()) {
      it = cols_.erase(it);
    } else {
      ++it;
    }
  }
}

NcSeriesElement NcSeriesElement::truncated(int precision) const {
  NcSeriesElement out(prec_min(precision, prec_));
  for (const auto& [a_exp, s] : cols_) {
    out.set_column(a_exp, s.truncated(out.prec_));
  }
  return out;
}

NcSeriesElement& NcSeriesElement::operator+=(const NcSeriesElement& rhs) {
  prec_ = prec_min(prec_, rhs.prec_);
  for (const auto& [a_exp, s] : rhs.cols_) {
    auto it = cols_.find(a_exp);
    if (it == cols_.end()) {
      cols_.emplace(a_exp, s);
    } else {
      it->second += s;
    }
  }
  retruncate();
  return *this;
}

NcSeriesElement& NcSeriesElement::operator-=(const NcSeriesElement& rhs) {
  prec_ = prec_min(prec_, rhs.prec_);
  for (const auto& [a_exp, s] : rhs.cols_) {
    auto it = cols_.find(a_exp);
    if (it == cols_.end()) {
      cols_.emplace(a_exp, -s);
    } else {
      it->second -= s;
    }
  }
  retruncate();
  return *this;
}

std::map<int, TruncatedSeries> push_series_through_apow(
    const TruncatedSeries& s, int j) {
  // S * a = a * S - b^2 * S', applied j times.
  std::map<int, TruncatedSeries> cols;
  cols.emplace(0, s);
  for (int step = 0; step < j; ++step) {
    std::map<int, TruncatedSeries> next;
    for (const auto& [m, u] : cols) {
      auto [it, inserted] = next.try_emplace(m + 1, u);
      if (!inserted) it->second += u;
      TruncatedSeries corr = -(u.derivative().shifted(2));
      if (!corr.is_zero() || !corr.exact()) {
        auto [jt, ins2] = next.try_emplace(m, corr);
        if (!ins2) jt->second += corr;
      }
    }
    cols = std::move(next);
  }
  return cols;
}

NcSeriesElement multiply(const NcSeriesElement& x, const NcSeriesElement& y) {
  // Element valuations: min over columns of the series valuation.
  auto element_valuation = [](const NcSeriesElement& e) {
    int v = kPrecInf;
    for (const auto& [a_exp, s] : e.columns()) v = std::min(v, s.valuation());
    return v;
  };
  int p = prec_min(prec_add(x.precision(), element_valuation(y)),
                   prec_add(y.precision(), element_valuation(x)));
  std::map<int, TruncatedSeries> acc;
  for (const auto& [i, si] : x.columns()) {
    for (const auto& [j, tj] : y.columns()) {
      auto pushed = push_series_through_apow(si, j);
      for (const auto& [m, um] : pushed) {
        TruncatedSeries part = um * tj;
        auto [it, inserted] = acc.try_emplace(i + m, part);
        if (!inserted) it->second += part;
      }
    }
  }
  if (p < 1) throw PrecisionExhausted("product has no certified coefficients");
  return NcSeriesElement::from_columns(std::move(acc), p);
}

InitialFormResult initial_form(const NcSeriesElement& x) {
  int d_min = kPrecInf;
  for (const auto& [a_exp, s] : x.columns()) {
    if (s.is_zero()) continue;
    d_min = std::min(d_min, a_exp + s.valuation());
  }
  if (d_min >= kPrecInf) {
    throw ZeroElement("initial form of an element that vanishes to precision " +
                      std::to_string(x.precision()));
  }
  // Any column (present or absent) is only certified below b^precision, so an
  // unknown term of total degree a_exp + precision could undercut d_min as
  // soon as precision <= d_min (worst case a_exp = 0).
  if (x.precision() <= d_min) {
    throw PrecisionTooLow("initial form of degree " + std::to_string(d_min) +
                          " is not certified at precision " +
                          std::to_string(x.precision()));
  }
  NcElement out;
  for (const auto& [a_exp, s] : x.columns()) {
    int b_exp = d_min - a_exp;
    if (b_exp < 0) continue;
    if (s.known(b_exp)) out.add_term(s.coeff(b_exp), a_exp, b_exp);
  }
  return InitialFormResult{std::move(out), d_min};
}

}  // namespace abcalc
