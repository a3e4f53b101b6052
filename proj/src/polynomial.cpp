#include "abcalc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "abcalc/errors.hpp"

namespace abcalc {

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : c_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
  Polynomial p = constant(1);
  for (const Rational& r : roots) {
    p = p * Polynomial({-r, Rational(1)});
  }
  return p;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Rational Polynomial::leading() const {
  return c_.empty() ? Rational(0) : c_.back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) {
    d.push_back(Rational(static_cast<int>(k)) * c_[k]);
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted_arg(const Rational& t) const {
  // Horner on P evaluated at (x + t).
  Polynomial acc;
  Polynomial lin({t, Rational(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * lin + Polynomial::constant(*it);
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
  trim();
  return *this;
}

Polynomial operator-(const Polynomial& p) {
  std::vector<Rational> c = p.c_;
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.c_.empty() || rhs.c_.empty()) return Polynomial();
  std::vector<Rational> c(lhs.c_.size() + rhs.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
    if (lhs.c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      c[i + j] += lhs.c_[i] * rhs.c_[j];
    }
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> out = p.c_;
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num,
                                         const Polynomial& den) {
  if (den.is_zero()) {
    throw Error(ErrorKind::Domain, "polynomial division by zero");
  }
  std::vector<Rational> rem = num.c_;
  std::vector<Rational> quo;
  int dd = den.degree();
  while (static_cast<int>(rem.size()) - 1 >= dd) {
    int k = static_cast<int>(rem.size()) - 1 - dd;
    Rational q = rem.back() / den.c_.back();
    if (static_cast<int>(quo.size()) < k + 1) quo.resize(static_cast<std::size_t>(k) + 1);
    quo[static_cast<std::size_t>(k)] = q;
    for (int i = 0; i <= dd; ++i) {
      rem[static_cast<std::size_t>(k + i)] -= q * den.c_[static_cast<std::size_t>(i)];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

bool divides(const Polynomial& den, const Polynomial& num) {
  if (den.is_zero()) return num.is_zero();
  return divmod(num, den).second.is_zero();
}

std::string Polynomial::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << "*";
      out << var;
      if (k != 1) out << "^" << k;
    }
  }
  return out.str();
}

// --- rational root extraction ----------------------------------------------

namespace {

bool miller_rabin(const Int& n, const Int& a) {
  if (n % a == 0) return n == a;
  Int d = n - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  Int x = powm(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // Deterministic for n < 3.3e24 with these bases.
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  Int x = 2, y = 2, d = 1, c = 1;
  auto f = [&](const Int& v) { return (v * v + c) % n; };
  long long guard = 0;
  while (d == 1) {
    x = f(x);
    y = f(f(y));
    Int diff = x > y ? x - y : y - x;
    d = gcd(diff, n);
    if (++guard > 4'000'000) {
      throw PrecisionExhausted("integer factorization budget exhausted");
    }
    if (d == n) {
      // cycle without a factor: restart with a new increment
      c += 1;
      x = 2;
      y = 2;
      d = 1;
    }
  }
  return d;
}

void factor_into(Int n, std::map<Int, int>& out) {
  if (n <= 1) return;
  for (int p = 2; p < 100000; p = p == 2 ? 3 : p + 2) {
    if (Int(p) * p > n) break;
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

void enumerate_divisors(const std::map<Int, int>& factors,
                        std::vector<Int>& out) {
  out.assign(1, Int(1));
  for (const auto& [p, e] : factors) {
    std::size_t base = out.size();
    Int pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
}

// Smallest-magnitude rational root of p, or nullopt. Uses the monic integer
// model Q(y) = D^n * p(y/D) whose integer roots are D times the rational
// roots of p.
bool find_one_root(const Polynomial& p, Rational* root) {
  if (p.degree() < 1) return false;
  if (p.coeff(0) == 0) {
    *root = 0;
    return true;
  }
  Int lead_den = 1;
  for (const Rational& c : p.coefficients()) {
    lead_den = lcm(lead_den, denominator(c));
  }
  // Normalize to a monic integer polynomial in y = (D * lead) * x ... simpler:
  // first make p monic over Q, then clear denominators by y = D*x.
  int n = p.degree();
  Rational inv_lead = Rational(1) / p.leading();
  std::vector<Rational> monic(p.coefficients());
  for (auto& c : monic) c *= inv_lead;
  Int d_scale = 1;
  for (const Rational& c : monic) d_scale = lcm(d_scale, denominator(c));
  // Q(y) = sum_k monic_k * D^{n-k} y^k is monic with integer coefficients.
  std::vector<Int> q(static_cast<std::size_t>(n) + 1);
  std::vector<Int> dpows(static_cast<std::size_t>(n) + 1);
  dpows[static_cast<std::size_t>(n)] = 1;
  for (int k = n - 1; k >= 0; --k) {
    dpows[static_cast<std::size_t>(k)] = dpows[static_cast<std::size_t>(k) + 1] * d_scale;
  }
  for (int k = 0; k <= n; ++k) {
    Rational scaled = monic[static_cast<std::size_t>(k)] *
                      Rational(dpows[static_cast<std::size_t>(k)]);
    if (!is_integer(scaled)) {
      throw Error(ErrorKind::Domain, "internal: monic scaling failed");
    }
    q[static_cast<std::size_t>(k)] = numerator(scaled);
  }
  std::map<Int, int> factors;
  Int c0 = q[0] < 0 ? Int(-q[0]) : q[0];
  factor_into(c0, factors);
  std::vector<Int> divs;
  enumerate_divisors(factors, divs);
  auto eval = [&](const Int& y) {
    Int acc = 0;
    for (int k = n; k >= 0; --k) acc = acc * y + q[static_cast<std::size_t>(k)];
    return acc;
  };
  for (const Int& d : divs) {
    if (eval(d) == 0) {
      *root = Rational(d, d_scale);
      return true;
    }
    if (eval(-d) == 0) {
      *root = Rational(-d, d_scale);
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p,
                                     Polynomial* remainder) {
  if (p.is_zero()) {
    throw Error(ErrorKind::Domain, "rational roots of the zero polynomial");
  }
  Polynomial rest = p;
  std::vector<Rational> roots;
  while (rest.degree() >= 1) {
    Rational r;
    if (!find_one_root(rest, &r)) break;
    roots.push_back(r);
    auto [quo, rem] = divmod(rest, Polynomial({-r, Rational(1)}));
    if (!rem.is_zero()) {
      throw Error(ErrorKind::Domain, "internal: root deflation failed");
    }
    rest = std::move(quo);
  }
  std::sort(roots.begin(), roots.end());
  if (remainder) *remainder = rest;
  return roots;
}

std::string render_factored(const Polynomial& p, const std::string& var) {
  if (p.degree() < 1 || !p.is_monic()) return p.str(var);
  Polynomial rest;
  std::vector<Rational> roots = rational_roots(p, &rest);
  if (rest.degree() != 0) return p.str(var);
  // Group by root, ascending by the rendered constant (-root ascending means
  // root descending).
  std::map<Rational, int> mult;
  for (const Rational& r : roots) ++mult[r];
  std::ostringstream out;
  bool first = true;
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    const Rational& r = it->first;
    int m = it->second;
    if (!first) out << "*";
    first = false;
    if (r == 0) {
      out << var;
    } else {
      Rational c = -r;
      out << "(" << var << (c < 0 ? " - " : " + ")
          << (c < 0 ? Rational(-c) : c).str() << ")";
    }
    if (m > 1) out << "^" << m;
  }
  return out.str();
}

// --- polynomial text parser --------------------------------------------------

namespace {

struct PolyParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::ostringstream msg;
    msg << "parse error at offset " << pos << ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg << ", ";
      msg << expected[i];
    }
    throw ParseError(pos, std::move(expected), msg.str());
  }

  Rational parse_uint_rational() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == start) fail({"number"});
    Int num(std::string(text.substr(start, pos - start)));
    if (eat('/')) {
      skip_ws();
      std::size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (pos == dstart) fail({"denominator"});
      Int den(std::string(text.substr(dstart, pos - dstart)));
      if (den == 0) fail({"nonzero denominator"});
      return Rational(num, den);
    }
    return Rational(num);
  }

  unsigned parse_uint() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == start || pos - start > 6) fail({"exponent"});
    return static_cast<unsigned>(
        std::stoul(std::string(text.substr(start, pos - start))));
  }

  Polynomial parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail({"number", "x", "("});
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Polynomial e = parse_expr();
      if (!eat(')')) fail({")"});
      return e;
    }
    if (c == 'x') {
      ++pos;
      return Polynomial::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(parse_uint_rational());
    }
    fail({"number", "x", "("});
  }

  Polynomial parse_factor() {
    Polynomial base = parse_atom();
    skip_ws();
    if (eat('^')) {
      unsigned e = parse_uint();
      Polynomial acc = Polynomial::constant(1);
      for (unsigned i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        acc = acc * parse_factor();
        continue;
      }
      // Juxtaposition "(x+1)(x+2)" is accepted for convenience.
      if (pos < text.size() && text[pos] == '(') {
        acc = acc * parse_factor();
        continue;
      }
      return acc;
    }
  }

  Polynomial parse_expr() {
    skip_ws();
    bool neg = false;
    if (eat('-')) {
      neg = true;
    } else {
      eat('+');
    }
    Polynomial acc = parse_term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      if (eat('+')) {
        acc += parse_term();
      } else if (eat('-')) {
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  PolyParser p{text};
  Polynomial result = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) {
    throw ParseError(p.pos, {"end of input", "+", "-", "*"},
                     "parse error at offset " + std::to_string(p.pos) +
                         ": trailing input");
  }
  return result;
}

}  // namespace abcalc
