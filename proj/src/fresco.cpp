#include "abcalc/fresco.hpp"

#include <algorithm>

#include "abcalc/errors.hpp"

namespace abcalc {

HomogeneousElement::HomogeneousElement(int degree, std::vector<Rational> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree_ < 0 || static_cast<int>(coeffs_.size()) != degree_ + 1) {
    throw Error(ErrorKind::Domain,
                "homogeneous element needs degree + 1 coefficients");
  }
}

HomogeneousElement HomogeneousElement::from_element(const NcElement& x) {
  int degree = 0;
  if (x.is_zero() || !x.is_homogeneous(&degree)) {
    throw NotHomogeneous("element is not homogeneous in (a, b): " + render(x));
  }
  for (const auto& [mono, c] : x.terms()) {
    if (mono.b_exp < 0) {
      throw NotHomogeneous("homogeneous elements live in A, not A[b^-1]");
    }
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1,
                               Rational(0));
  for (const auto& [mono, c] : x.terms()) {
    coeffs[static_cast<std::size_t>(mono.b_exp)] = c;
  }
  return HomogeneousElement(degree, std::move(coeffs));
}

NcElement HomogeneousElement::to_element(bool laurent) const {
  NcElement x(laurent);
  for (int j = 0; j <= degree_; ++j) {
    x.add_term(coeffs_[static_cast<std::size_t>(j)], degree_ - j, j);
  }
  return x;
}

HomogeneousElement bernstein_element(const std::vector<Rational>& lambdas) {
  NcElement acc = NcElement::one();
  for (const Rational& lambda : lambdas) {
    NcElement factor;
    factor.add_term(1, 1, 0);
    factor.add_term(-lambda, 0, 1);
    acc = multiply(acc, factor);
  }
  return HomogeneousElement::from_element(acc);
}

namespace {

// E_j = (-b)^k (-b^{-1} a)^j, the triangular solving basis of the
// correspondence; E_j is homogeneous of degree k with top a-exponent j.
std::vector<NcElement> sharp_basis(int k, int laurent_window) {
  NcElement u(true);  // -b^{-1} a = -(a b^{-1} + 1)
  u.add_term(-1, 1, -1);
  u.add_term(-1, 0, 0);
  NcElement bk = NcElement::term(Rational(k % 2 == 0 ? 1 : -1), 0, k);
  std::vector<NcElement> basis;
  NcElement upow = NcElement::one(true);
  for (int j = 0; j <= k; ++j) {
    basis.push_back(multiply(bk, upow, laurent_window));
    if (j < k) upow = multiply(upow, u, laurent_window);
  }
  return basis;
}

}  // namespace

Polynomial element_to_bpoly(const HomogeneousElement& p, int laurent_window) {
  if (!p.monic_in_a()) {
    throw NotMonic("Bernstein correspondence needs an element monic in a");
  }
  int k = p.degree();
  std::vector<NcElement> basis = sharp_basis(k, laurent_window);
  NcElement residual = p.to_element(true);
  std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1, Rational(0));
  for (int j = k; j >= 0; --j) {
    Rational target = residual.coeff(j, k - j);
    Rational lead = basis[static_cast<std::size_t>(j)].coeff(j, k - j);
    Rational c = target / lead;
    coeffs[static_cast<std::size_t>(j)] = c;
    if (c != 0) residual -= c * basis[static_cast<std::size_t>(j)];
  }
  if (!residual.is_zero()) {
    throw Error(ErrorKind::Domain,
                "internal: triangular solve left a residual " +
                    render(residual));
  }
  return Polynomial(std::move(coeffs));
}

HomogeneousElement bpoly_to_element(const Polynomial& b, int k,
                                    int laurent_window) {
  if (b.degree() != k || !b.is_monic()) {
    throw NotMonic("expected a monic polynomial of degree " +
                   std::to_string(k));
  }
  std::vector<NcElement> basis = sharp_basis(k, laurent_window);
  NcElement acc(true);
  for (int j = 0; j <= k; ++j) {
    acc += b.coeff(j) * basis[static_cast<std::size_t>(j)];
  }
  for (const auto& [mono, c] : acc.terms()) {
    if (mono.b_exp < 0) {
      throw Error(ErrorKind::Domain, "internal: correspondence left b^-1");
    }
  }
  NcElement plain;
  for (const auto& [mono, c] : acc.terms()) {
    plain.add_term(c, mono.a_exp, mono.b_exp);
  }
  return HomogeneousElement::from_element(plain);
}

std::vector<Rational> roots_from_factors(const std::vector<Rational>& lambdas) {
  int k = static_cast<int>(lambdas.size());
  std::vector<Rational> roots;
  roots.reserve(lambdas.size());
  for (int j = 1; j <= k; ++j) {
    roots.push_back(-(lambdas[static_cast<std::size_t>(j - 1)] + j - k));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

HomogeneousElement divide_right(const HomogeneousElement& q,
                                const HomogeneousElement& p) {
  if (!q.monic_in_a() || !p.monic_in_a()) {
    throw NotMonic("division needs both elements monic in a");
  }
  if (q.degree() < p.degree()) {
    throw Error(ErrorKind::Domain, "divide_right needs deg Q >= deg P");
  }
  int k = p.degree();
  int d = q.degree() - k;
  NcElement residual = q.to_element();
  NcElement pelem = p.to_element();
  NcElement w;
  for (int s = q.degree(); s >= k; --s) {
    Rational c = residual.coeff(s, q.degree() - s);
    if (c == 0) continue;
    NcElement wterm = NcElement::term(c, s - k, q.degree() - s);
    w += wterm;
    residual -= multiply(wterm, pelem);
  }
  if (!residual.is_zero()) {
    throw NotDivisible("right division left a nonzero remainder",
                       render(residual));
  }
  return HomogeneousElement(d, [&] {
    std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1, Rational(0));
    for (const auto& [mono, c] : w.terms()) {
      coeffs[static_cast<std::size_t>(mono.b_exp)] = c;
    }
    return coeffs;
  }());
}

Polynomial cofactor_poly(const HomogeneousElement& w, int q, int k,
                         int laurent_window) {
  if (w.degree() != q - k) {
    throw Error(ErrorKind::Domain, "cofactor degree must be q - k");
  }
  // Signs cancel in the conjugation, so b^{-k} W b^k suffices.
  NcElement conj = multiply(
      NcElement::term(1, 0, -k),
      multiply(w.to_element(true), NcElement::term(1, 0, k), laurent_window),
      laurent_window);
  NcElement plain;
  for (const auto& [mono, c] : conj.terms()) {
    if (mono.b_exp < 0) {
      throw Error(ErrorKind::Domain, "internal: conjugation left b^-1");
    }
    plain.add_term(c, mono.a_exp, mono.b_exp);
  }
  return element_to_bpoly(HomogeneousElement::from_element(plain),
                          laurent_window);
}

Polynomial exact_sequence_bpoly(const Polynomial& b_f, const Polynomial& b_h,
                                int rank_h) {
  if (b_h.degree() != rank_h) {
    throw Error(ErrorKind::Domain,
                "rank of H must match the degree of B_H");
  }
  // Pinned by the element product: the middle term's Bernstein element is
  // P_F * P_H. The closed form B_F(x - rank_H) * B_H(x) is the same
  // polynomial; tests hold the two routes against each other.
  int window = std::max(kDefaultLaurentWindow,
                        2 * (b_f.degree() + b_h.degree()) + 2);
  NcElement product =
      multiply(bpoly_to_element(b_f, b_f.degree(), window).to_element(),
               bpoly_to_element(b_h, rank_h, window).to_element());
  return element_to_bpoly(HomogeneousElement::from_element(product), window);
}

void FrescoPresentation::validate() const {
  if (lambdas.empty()) {
    throw Error(ErrorKind::Domain, "a presentation needs at least one factor");
  }
  if (series.size() + 1 != lambdas.size()) {
    throw Error(ErrorKind::Domain,
                "a rank-k presentation carries exactly k - 1 series");
  }
  for (const TruncatedSeries& s : series) {
    if (s.is_zero() || s.coeff(0) != 1) {
      throw Error(ErrorKind::Domain, "presentation series must satisfy S(0) = 1");
    }
  }
}

NcSeriesElement expand_presentation(const FrescoPresentation& p,
                                    int precision) {
  p.validate();
  if (precision < 1) {
    throw Error(ErrorKind::Domain, "precision must be >= 1");
  }
  NcSeriesElement acc(kPrecInf);
  bool started = false;
  for (std::size_t j = 0; j < p.lambdas.size(); ++j) {
    NcElement factor;
    factor.add_term(1, 1, 0);
    factor.add_term(-p.lambdas[j], 0, 1);
    NcSeriesElement f = NcSeriesElement::from_element(factor);
    acc = started ? multiply(acc, f) : f;
    started = true;
    if (j + 1 < p.lambdas.size()) {
      TruncatedSeries inv = p.series[j].inverse(precision);
      acc = multiply(acc, NcSeriesElement::from_columns({{0, inv}}, precision));
    }
  }
  acc = acc.truncated(precision);
  if (acc.precision() < precision) {
    throw PrecisionExhausted("presentation expansion certified only to b^" +
                             std::to_string(acc.precision()));
  }
  return acc;
}

std::vector<TruncatedSeries> reduce_mod_pi(const NcSeriesElement& x,
                                           const FrescoPresentation& p,
                                           int precision) {
  p.validate();
  int k = p.rank();
  NcSeriesElement pi = expand_presentation(p, precision);
  TruncatedSeries lead = pi.column(k);
  TruncatedSeries lead_inv = lead.inverse(precision);
  NcSeriesElement residual = x;
  while (residual.max_a_exp() >= k) {
    int top = residual.max_a_exp();
    TruncatedSeries t = residual.column(top);
    // u = a^{top-k} * (t * lead^{-1}) kills the a^top column of u * Pi.
    TruncatedSeries coeff = t * lead_inv;
    NcSeriesElement u = NcSeriesElement::from_columns(
        {{top - k, coeff}}, prec_min(coeff.precision(), residual.precision()));
    residual -= multiply(u, pi);
    if (!residual.column(top).is_zero()) {
      throw Error(ErrorKind::Domain, "internal: reduction failed to clear a^" +
                                         std::to_string(top));
    }
  }
  std::vector<TruncatedSeries> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    TruncatedSeries col = residual.column(j).truncated(precision);
    if (col.precision() < precision) {
      throw PrecisionExhausted("reduction certified only to b^" +
                               std::to_string(col.precision()));
    }
    out.push_back(std::move(col));
  }
  return out;
}

void AbModulePresentation::validate() const {
  if (rank < 1) throw Error(ErrorKind::Domain, "module rank must be >= 1");
  if (precision < 1) throw Error(ErrorKind::Domain, "precision must be >= 1");
  if (static_cast<int>(a_matrix.size()) != rank) {
    throw Error(ErrorKind::Domain, "a-matrix must be rank x rank");
  }
  for (const auto& row : a_matrix) {
    if (static_cast<int>(row.size()) != rank) {
      throw Error(ErrorKind::Domain, "a-matrix must be rank x rank");
    }
  }
}

AbModulePresentation a_matrix_from_presentation(const FrescoPresentation& p,
                                                int precision) {
  p.validate();
  int k = p.rank();
  NcElement apow = NcElement::term(1, k, 0);
  std::vector<TruncatedSeries> normal =
      reduce_mod_pi(NcSeriesElement::from_element(apow), p, precision);
  // a^k e = sum_j a^j * S_j(b) e; rewrite with series on the left so the
  // column is C[[b]]-linear: process from the top a-power downwards, using
  // T(b) a^j = a^j T(b) - corrections at lower powers.
  NcSeriesElement residual =
      NcSeriesElement::from_columns(
          [&] {
            std::map<int, TruncatedSeries> cols;
            for (int j = 0; j < k; ++j) cols.emplace(j, normal[static_cast<std::size_t>(j)]);
            return cols;
          }(),
          precision);
  std::vector<TruncatedSeries> left(static_cast<std::size_t>(k),
                                    TruncatedSeries(precision));
  for (int j = k - 1; j >= 0; --j) {
    TruncatedSeries t = residual.column(j);
    left[static_cast<std::size_t>(j)] = t;
    if (t.is_zero() && t.precision() >= residual.precision()) continue;
    NcSeriesElement pushed = NcSeriesElement::from_columns(
        push_series_through_apow(t, j), residual.precision());
    residual -= pushed;
  }
  AbModulePresentation m;
  m.rank = k;
  m.precision = precision;
  m.basis_note = "powers (e, ae, ..., a^" + std::to_string(k - 1) +
                 "e) of the canonical generator";
  m.a_matrix.assign(static_cast<std::size_t>(k),
                    std::vector<TruncatedSeries>(
                        static_cast<std::size_t>(k), TruncatedSeries(precision)));
  for (int j = 0; j + 1 < k; ++j) {
    // a * (a^j e) = a^{j+1} e
    m.a_matrix[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(j)] =
        TruncatedSeries::one().truncated(precision);
  }
  for (int i = 0; i < k; ++i) {
    m.a_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)] =
        left[static_cast<std::size_t>(i)];
  }
  return m;
}

GeometricVerdict is_geometric(const Polynomial& b) {
  if (b.is_zero()) {
    throw Error(ErrorKind::Domain, "the zero polynomial has no verdict");
  }
  GeometricVerdict v;
  v.rational_roots = rational_roots(b, &v.unfactored);
  bool nonneg = std::any_of(v.rational_roots.begin(), v.rational_roots.end(),
                            [](const Rational& r) { return r >= 0; });
  if (nonneg) {
    v.status = GeometricStatus::NotGeometric;
  } else if (v.unfactored.degree() > 0) {
    v.status = GeometricStatus::Unknown;
  } else {
    v.status = GeometricStatus::Geometric;
  }
  return v;
}

}  // namespace abcalc
