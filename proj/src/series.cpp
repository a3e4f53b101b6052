#include "abcalc/series.hpp"

#include <algorithm>
#include <sstream>

#include "abcalc/errors.hpp"

namespace abcalc {

namespace {

std::string term_str(const Rational& c, int k, bool first) {
  std::ostringstream out;
  Rational mag = c < 0 ? Rational(-c) : c;
  if (first) {
    if (c < 0) out << "-";
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  if (k == 0) {
    out << mag.str();
  } else {
    if (mag != 1) out << mag.str() << "*";
    out << "b";
    if (k != 1) out << "^" << k;
  }
  return out.str();
}

}  // namespace

TruncatedSeries::TruncatedSeries(int precision) : prec_(precision) {
  if (prec_ < 1) throw Error(ErrorKind::Domain, "series precision must be >= 1");
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients,
                                 int precision)
    : coeff_(std::move(coefficients)), prec_(precision) {
  if (prec_ < 1) throw Error(ErrorKind::Domain, "series precision must be >= 1");
  if (static_cast<int>(coeff_.size()) > prec_ && prec_ < kPrecInf) {
    coeff_.resize(static_cast<std::size_t>(prec_));
  }
  trim();
}

TruncatedSeries TruncatedSeries::constant(const Rational& c) {
  return TruncatedSeries(std::vector<Rational>{c});
}

TruncatedSeries TruncatedSeries::bpow(int k) {
  if (k < 0) throw Error(ErrorKind::Domain, "TruncatedSeries::bpow needs k >= 0");
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
  c.back() = 1;
  return TruncatedSeries(std::move(c));
}

void TruncatedSeries::trim() {
  while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

Rational TruncatedSeries::coeff(int k) const {
  if (k < 0) return 0;
  if (k >= prec_) {
    throw PrecisionExhausted("series coefficient of b^" + std::to_string(k) +
                             " requested beyond precision " +
                             std::to_string(prec_));
  }
  if (k < static_cast<int>(coeff_.size())) return coeff_[static_cast<std::size_t>(k)];
  return 0;
}

int TruncatedSeries::valuation() const {
  for (std::size_t k = 0; k < coeff_.size(); ++k) {
    if (coeff_[k] != 0) return static_cast<int>(k);
  }
  return prec_;
}

bool TruncatedSeries::is_zero() const { return coeff_.empty(); }

TruncatedSeries TruncatedSeries::truncated(int precision) const {
  int p = prec_min(precision, prec_);
  std::vector<Rational> c = coeff_;
  if (p < kPrecInf && static_cast<int>(c.size()) > p) {
    c.resize(static_cast<std::size_t>(p));
  }
  return TruncatedSeries(std::move(c), p);
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (!exact() && prec_ < 2) {
    throw PrecisionExhausted("derivative of a series known only modulo b");
  }
  std::vector<Rational> c;
  for (std::size_t k = 1; k < coeff_.size(); ++k) {
    c.push_back(Rational(static_cast<int>(k)) * coeff_[k]);
  }
  return TruncatedSeries(std::move(c), exact() ? kPrecInf : prec_ - 1);
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
  if (k < 0) throw Error(ErrorKind::Domain, "TruncatedSeries::shifted needs k >= 0");
  if (coeff_.empty()) return TruncatedSeries(prec_add(prec_, k));
  std::vector<Rational> c(static_cast<std::size_t>(k), Rational(0));
  c.insert(c.end(), coeff_.begin(), coeff_.end());
  return TruncatedSeries(std::move(c), prec_add(prec_, k));
}

TruncatedSeries TruncatedSeries::inverse(int precision) const {
  Rational c0 = coeff_.empty() ? Rational(0) : coeff_.front();
  if (c0 == 0) {
    throw NotAUnit("cannot invert a series with zero constant term");
  }
  if (exact() && coeff_.size() == 1) {
    return TruncatedSeries::constant(Rational(1) / c0);
  }
  int p = prec_min(precision, prec_);
  if (p >= kPrecInf) {
    throw Error(ErrorKind::Domain,
                "series inverse requires a finite target precision");
  }
  std::vector<Rational> inv(static_cast<std::size_t>(p), Rational(0));
  inv[0] = Rational(1) / c0;
  for (int n = 1; n < p; ++n) {
    Rational acc = 0;
    int top = std::min<int>(n, static_cast<int>(coeff_.size()) - 1);
    for (int i = 1; i <= top; ++i) {
      acc += coeff_[static_cast<std::size_t>(i)] *
             inv[static_cast<std::size_t>(n - i)];
    }
    inv[static_cast<std::size_t>(n)] = -acc / c0;
  }
  return TruncatedSeries(std::move(inv), p);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  int p = prec_min(prec_, rhs.prec_);
  if (coeff_.size() < rhs.coeff_.size()) coeff_.resize(rhs.coeff_.size());
  for (std::size_t k = 0; k < rhs.coeff_.size(); ++k) coeff_[k] += rhs.coeff_[k];
  prec_ = p;
  if (p < kPrecInf && static_cast<int>(coeff_.size()) > p) {
    coeff_.resize(static_cast<std::size_t>(p));
  }
  trim();
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  return *this += -rhs;
}

TruncatedSeries operator-(const TruncatedSeries& s) {
  std::vector<Rational> c = s.coeff_;
  for (auto& x : c) x = -x;
  return TruncatedSeries(std::move(c), s.prec_);
}

TruncatedSeries operator*(const TruncatedSeries& lhs,
                          const TruncatedSeries& rhs) {
  // Truncation contract: precision min(p1 + v2, p2 + v1).
  int p = prec_min(prec_add(lhs.prec_, rhs.valuation()),
                   prec_add(rhs.prec_, lhs.valuation()));
  if (lhs.coeff_.empty() || rhs.coeff_.empty()) return TruncatedSeries(p);
  std::size_t n = lhs.coeff_.size() + rhs.coeff_.size() - 1;
  if (p < kPrecInf) n = std::min<std::size_t>(n, static_cast<std::size_t>(p));
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t i = 0; i < lhs.coeff_.size(); ++i) {
    if (lhs.coeff_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeff_.size() && i + j < n; ++j) {
      c[i + j] += lhs.coeff_[i] * rhs.coeff_[j];
    }
  }
  return TruncatedSeries(std::move(c), p);
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s) {
  std::vector<Rational> out = s.coeff_;
  for (auto& x : out) x *= c;
  return TruncatedSeries(std::move(out), s.prec_);
}

bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  return lhs.prec_ == rhs.prec_ && lhs.coeff_ == rhs.coeff_;
}

std::string TruncatedSeries::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeff_.size(); ++k) {
    if (coeff_[k] == 0) continue;
    out << term_str(coeff_[k], static_cast<int>(k), first);
    first = false;
  }
  if (first) out << "0";
  if (!exact()) out << " + O(b^" << prec_ << ")";
  return out.str();
}

// ---------------------------------------------------------------------------

LaurentSeries::LaurentSeries() = default;

LaurentSeries::LaurentSeries(const TruncatedSeries& s)
    : base_(0), coeff_(s.coefficients()), prec_(s.precision()) {
  normalize();
}

LaurentSeries::LaurentSeries(int base, std::vector<Rational> coefficients,
                             int precision)
    : base_(base), coeff_(std::move(coefficients)), prec_(precision) {
  if (prec_ < kPrecInf) {
    int top = prec_ - base_;
    if (top < 0) top = 0;
    if (static_cast<int>(coeff_.size()) > top) {
      coeff_.resize(static_cast<std::size_t>(top));
    }
  }
  normalize();
}

LaurentSeries LaurentSeries::bpow(int k) {
  return LaurentSeries(k, {Rational(1)}, kPrecInf);
}

void LaurentSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeff_.size() && coeff_[lead] == 0) ++lead;
  if (lead > 0) {
    coeff_.erase(coeff_.begin(), coeff_.begin() + static_cast<long>(lead));
    base_ += static_cast<int>(lead);
  }
  while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
  if (coeff_.empty()) base_ = 0;
}

int LaurentSeries::valuation() const {
  if (coeff_.empty()) return prec_;
  return base_;
}

bool LaurentSeries::is_zero() const { return coeff_.empty(); }

Rational LaurentSeries::coeff(int k) const {
  if (k >= prec_) {
    throw PrecisionExhausted("Laurent coefficient of b^" + std::to_string(k) +
                             " requested beyond precision " +
                             std::to_string(prec_));
  }
  if (coeff_.empty() || k < base_ ||
      k >= base_ + static_cast<int>(coeff_.size())) {
    return 0;
  }
  return coeff_[static_cast<std::size_t>(k - base_)];
}

LaurentSeries LaurentSeries::shifted(int k) const {
  return LaurentSeries(base_ + k, coeff_, prec_add(prec_, k));
}

LaurentSeries LaurentSeries::derivative() const {
  std::vector<Rational> c(coeff_.size(), Rational(0));
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    int e = base_ + static_cast<int>(i);
    c[i] = Rational(e) * coeff_[i];
  }
  // b^{e} differentiates to e*b^{e-1}; precision of b^{p-1} term needs b^p.
  return LaurentSeries(base_ - 1, std::move(c), prec_add(prec_, -1));
}

LaurentSeries LaurentSeries::truncated(int precision) const {
  return LaurentSeries(base_, coeff_, prec_min(precision, prec_));
}

TruncatedSeries LaurentSeries::to_truncated() const {
  if (coeff_.empty()) {
    if (prec_ < 1) {
      throw PrecisionExhausted(
          "Laurent series carries no certified C[[b]] coefficients");
    }
    return TruncatedSeries(prec_);
  }
  if (base_ < 0) {
    throw Error(ErrorKind::Domain,
                "Laurent series with negative valuation is not in C[[b]]");
  }
  std::vector<Rational> c(static_cast<std::size_t>(base_), Rational(0));
  c.insert(c.end(), coeff_.begin(), coeff_.end());
  return TruncatedSeries(std::move(c), prec_);
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& rhs) {
  int p = prec_min(prec_, rhs.prec_);
  if (rhs.coeff_.empty()) {
    prec_ = p;
    return *this = LaurentSeries(base_, coeff_, p);
  }
  if (coeff_.empty()) {
    return *this = LaurentSeries(rhs.base_, rhs.coeff_, p);
  }
  int lo = std::min(base_, rhs.base_);
  int hi = std::max(base_ + static_cast<int>(coeff_.size()),
                    rhs.base_ + static_cast<int>(rhs.coeff_.size()));
  std::vector<Rational> c(static_cast<std::size_t>(hi - lo), Rational(0));
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    c[static_cast<std::size_t>(base_ - lo) + i] += coeff_[i];
  }
  for (std::size_t i = 0; i < rhs.coeff_.size(); ++i) {
    c[static_cast<std::size_t>(rhs.base_ - lo) + i] += rhs.coeff_[i];
  }
  return *this = LaurentSeries(lo, std::move(c), p);
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& rhs) {
  return *this += -rhs;
}

LaurentSeries operator-(const LaurentSeries& s) {
  std::vector<Rational> c = s.coeff_;
  for (auto& x : c) x = -x;
  return LaurentSeries(s.base_, std::move(c), s.prec_);
}

LaurentSeries operator*(const LaurentSeries& lhs, const LaurentSeries& rhs) {
  int p = prec_min(prec_add(lhs.prec_, rhs.valuation()),
                   prec_add(rhs.prec_, lhs.valuation()));
  if (lhs.coeff_.empty() || rhs.coeff_.empty()) {
    return LaurentSeries(0, {}, p);
  }
  int base = lhs.base_ + rhs.base_;
  std::size_t n = lhs.coeff_.size() + rhs.coeff_.size() - 1;
  if (p < kPrecInf) {
    long top = static_cast<long>(p) - base;
    if (top < 0) top = 0;
    n = std::min<std::size_t>(n, static_cast<std::size_t>(top));
  }
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t i = 0; i < lhs.coeff_.size(); ++i) {
    if (lhs.coeff_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeff_.size() && i + j < n; ++j) {
      c[i + j] += lhs.coeff_[i] * rhs.coeff_[j];
    }
  }
  return LaurentSeries(base, std::move(c), p);
}

LaurentSeries operator*(const Rational& c, const LaurentSeries& s) {
  std::vector<Rational> out = s.coeff_;
  for (auto& x : out) x *= c;
  return LaurentSeries(s.base_, std::move(out), s.prec_);
}

bool operator==(const LaurentSeries& lhs, const LaurentSeries& rhs) {
  return lhs.prec_ == rhs.prec_ && lhs.base_ == rhs.base_ &&
         lhs.coeff_ == rhs.coeff_;
}

LaurentSeries divide(const LaurentSeries& u, const LaurentSeries& v) {
  if (v.is_zero()) {
    throw Error(ErrorKind::Domain, "division by a zero Laurent series");
  }
  if (u.is_zero()) {
    // 0 / (b^w * unit): still zero; precision shifts with the valuation.
    return LaurentSeries(0, {}, prec_add(u.precision(), -v.valuation()));
  }
  int w = v.valuation();
  if (u.valuation() < w) {
    throw Error(ErrorKind::Domain,
                "Laurent division would leave C[[b]]: val(u) < val(v)");
  }
  // v = b^w * unit; invert the unit part at its certified relative precision.
  TruncatedSeries unit = v.shifted(-w).to_truncated();
  LaurentSeries inv;
  if (unit.exact() && unit.coefficients().size() == 1) {
    inv = LaurentSeries(
        TruncatedSeries::constant(Rational(1) / unit.coefficients().front()));
  } else {
    int rel = unit.precision();
    if (rel >= kPrecInf) {
      if (u.precision() >= kPrecInf) {
        throw PrecisionExhausted(
            "exact division by a non-monomial unit requires truncated "
            "operands");
      }
      rel = prec_add(u.precision(), -u.valuation());
      if (rel < 1) rel = 1;
    }
    inv = LaurentSeries(unit.inverse(rel));
  }
  return u * inv.shifted(-w);
}

std::string LaurentSeries::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] == 0) continue;
    int k = base_ + static_cast<int>(i);
    Rational c = coeff_[i];
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << "*";
      out << "b";
      if (k != 1) out << "^" << k;
    }
    first = false;
  }
  if (first) out << "0";
  if (!exact()) out << " + O(b^" << prec_ << ")";
  return out.str();
}

}  // namespace abcalc
