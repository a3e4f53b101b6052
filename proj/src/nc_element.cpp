#include "abcalc/nc_element.hpp"

#include <algorithm>
#include <sstream>

#include "abcalc/errors.hpp"

namespace abcalc {

namespace {

void check_window(int b_exp, bool laurent, int window) {
  if (!laurent) return;
  if (b_exp > window || b_exp < -window) {
    throw LaurentWindowExceeded("b-exponent " + std::to_string(b_exp) +
                                " left the Laurent window [-" +
                                std::to_string(window) + ", " +
                                std::to_string(window) + "]");
  }
}

Int binomial(int n, int k) {
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

Int rising_factorial(int m, int t) {
  Int r = 1;
  for (int i = 0; i < t; ++i) r *= m + i;
  return r;
}

}  // namespace

NcElement NcElement::one(bool laurent) {
  NcElement x(laurent);
  x.add_term(1, 0, 0);
  return x;
}

NcElement NcElement::term(const Rational& c, int a_exp, int b_exp) {
  NcElement x(b_exp < 0);
  x.add_term(c, a_exp, b_exp);
  return x;
}

Rational NcElement::coeff(int a_exp, int b_exp) const {
  auto it = terms_.find(Monomial{a_exp, b_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

int NcElement::max_a_exp() const {
  int m = -1;
  for (const auto& [mono, c] : terms_) m = std::max(m, mono.a_exp);
  return m;
}

bool NcElement::is_homogeneous(int* degree) const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.a_exp + terms_.begin()->first.b_exp;
  for (const auto& [mono, c] : terms_) {
    if (mono.a_exp + mono.b_exp != d) return false;
  }
  if (degree) *degree = d;
  return true;
}

NcElement NcElement::as_laurent() const {
  NcElement x = *this;
  x.laurent_ = true;
  return x;
}

void NcElement::add_term(const Rational& c, int a_exp, int b_exp) {
  if (c == 0) return;
  if (a_exp < 0) throw Error(ErrorKind::Domain, "negative a-exponent");
  if (b_exp < 0) laurent_ = true;
  auto [it, inserted] = terms_.try_emplace(Monomial{a_exp, b_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NcElement& NcElement::operator+=(const NcElement& rhs) {
  laurent_ = laurent_ || rhs.laurent_;
  for (const auto& [mono, c] : rhs.terms_) add_term(c, mono.a_exp, mono.b_exp);
  return *this;
}

NcElement& NcElement::operator-=(const NcElement& rhs) {
  laurent_ = laurent_ || rhs.laurent_;
  for (const auto& [mono, c] : rhs.terms_) add_term(-c, mono.a_exp, mono.b_exp);
  return *this;
}

NcElement operator-(const NcElement& x) {
  NcElement out(x.laurent_);
  for (const auto& [mono, c] : x.terms_) out.terms_.emplace(mono, -c);
  return out;
}

NcElement operator*(const Rational& c, const NcElement& x) {
  NcElement out(x.laurent_);
  if (c == 0) return out;
  for (const auto& [mono, coeff] : x.terms_) out.terms_.emplace(mono, c * coeff);
  return out;
}

NcElement multiply(const NcElement& x, const NcElement& y, int laurent_window) {
  bool laurent = x.laurent() || y.laurent();
  NcElement out(laurent);
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      // a^i b^m * a^j b^l: push b^m through a^j with the closed form
      //   b^m a^j = sum_t (-1)^t C(j,t) m(m+1)...(m+t-1) a^{j-t} b^{m+t}.
      Rational c = cx * cy;
      for (int t = 0; t <= my.a_exp; ++t) {
        Int num = binomial(my.a_exp, t) * rising_factorial(mx.b_exp, t);
        if (num == 0) continue;
        Rational coeff = c * Rational(num);
        if (t % 2 == 1) coeff = -coeff;
        int b_exp = mx.b_exp + t + my.b_exp;
        check_window(b_exp, laurent, laurent_window);
        out.add_term(coeff, mx.a_exp + my.a_exp - t, b_exp);
      }
    }
  }
  return out;
}

NcElement power(const NcElement& x, unsigned n, int laurent_window) {
  NcElement acc = NcElement::one(x.laurent());
  for (unsigned i = 0; i < n; ++i) acc = multiply(acc, x, laurent_window);
  return acc;
}

NcElement commutator(const NcElement& x, const NcElement& y,
                     int laurent_window) {
  return multiply(x, y, laurent_window) - multiply(y, x, laurent_window);
}

NcElement normal_order(const Word& word, bool laurent_mode,
                       int laurent_window) {
  NcElement acc(laurent_mode);
  acc.add_term(word.scalar, 0, 0);
  for (Gen g : word.gens) {
    if (g == Gen::BInv && !laurent_mode) {
      throw LaurentNotAllowed("b^-1 in a word outside Laurent mode");
    }
    NcElement next(laurent_mode);
    for (const auto& [mono, c] : acc.terms()) {
      switch (g) {
        case Gen::A:
          // b^m * a = a * b^m - m * b^{m+1}
          next.add_term(c, mono.a_exp + 1, mono.b_exp);
          if (mono.b_exp != 0) {
            check_window(mono.b_exp + 1, laurent_mode, laurent_window);
            next.add_term(Rational(-mono.b_exp) * c, mono.a_exp,
                          mono.b_exp + 1);
          }
          break;
        case Gen::B:
          check_window(mono.b_exp + 1, laurent_mode, laurent_window);
          next.add_term(c, mono.a_exp, mono.b_exp + 1);
          break;
        case Gen::BInv:
          check_window(mono.b_exp - 1, laurent_mode, laurent_window);
          next.add_term(c, mono.a_exp, mono.b_exp - 1);
          break;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

std::string render(const NcElement& x) {
  if (x.is_zero()) return "0";
  // Descending a_exp, then ascending b_exp.
  std::vector<std::pair<Monomial, Rational>> terms(x.terms().begin(),
                                                   x.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    if (l.first.a_exp != r.first.a_exp) return l.first.a_exp > r.first.a_exp;
    return l.first.b_exp < r.first.b_exp;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> parts;
    if (mag != 1 || (mono.a_exp == 0 && mono.b_exp == 0)) {
      parts.push_back(mag.str());
    }
    if (mono.a_exp > 0) {
      parts.push_back(mono.a_exp == 1 ? "a"
                                      : "a^" + std::to_string(mono.a_exp));
    }
    if (mono.b_exp != 0) {
      parts.push_back(mono.b_exp == 1 ? "b"
                                      : "b^" + std::to_string(mono.b_exp));
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out << "*";
      out << parts[i];
    }
  }
  return out.str();
}

}  // namespace abcalc
