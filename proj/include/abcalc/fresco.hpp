#pragma once

#include <string>
#include <vector>

#include "abcalc/nc_series.hpp"
#include "abcalc/polynomial.hpp"

namespace abcalc {

// Homogeneous element of A of degree k: sum_j coeffs[j] * a^{k-j} * b^j.
class HomogeneousElement {
 public:
  HomogeneousElement(int degree, std::vector<Rational> coeffs);

  // NotHomogeneous when mixed total degrees appear.
  static HomogeneousElement from_element(const NcElement& x);

  int degree() const { return degree_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool monic_in_a() const { return coeffs_.front() == 1; }

  NcElement to_element(bool laurent = false) const;

  friend bool operator==(const HomogeneousElement& lhs,
                         const HomogeneousElement& rhs) {
    return lhs.degree_ == rhs.degree_ && lhs.coeffs_ == rhs.coeffs_;
  }

 private:
  int degree_;
  std::vector<Rational> coeffs_;  // c_0..c_k, c_0 multiplies a^k
};

// Ordered product (a - lambda_1 b) ... (a - lambda_k b), normal-ordered.
HomogeneousElement bernstein_element(const std::vector<Rational>& lambdas);

// The unique monic B of degree k with (-b)^k B(-b^{-1} a) = p in A[b^{-1}],
// solved on the triangular basis E_j = (-b)^k (-b^{-1} a)^j. NotMonic /
// NotHomogeneous are checked up front.
Polynomial element_to_bpoly(const HomogeneousElement& p,
                            int laurent_window = kDefaultLaurentWindow);

// Inverse direction of the correspondence.
HomogeneousElement bpoly_to_element(const Polynomial& b, int k,
                                    int laurent_window = kDefaultLaurentWindow);

// Roots {-(lambda_j + j - k)} with j counted from the left of the product;
// sorted ascending with multiplicity.
std::vector<Rational> roots_from_factors(const std::vector<Rational>& lambdas);

// Monic W with q = W * p exactly; NotDivisible otherwise (the remainder is
// reported in rendered form).
HomogeneousElement divide_right(const HomogeneousElement& q,
                                const HomogeneousElement& p);

// C with B_Q = C * B_P for Q = W * P, deg Q = q, deg P = k; computed by
// Laurent normal ordering of the conjugate (-b)^{-k} W (-b)^k.
Polynomial cofactor_poly(const HomogeneousElement& w, int q, int k,
                         int laurent_window = kDefaultLaurentWindow);

// Bernstein polynomial of the middle term of an exact sequence: the rule
// consistent with P_G = P_F * P_H under the correspondence,
// B_G(x) = B_F(x - rank_H) * B_H(x).
Polynomial exact_sequence_bpoly(const Polynomial& b_f, const Polynomial& b_h,
                                int rank_h);

// Presentation data (lambda_j, S_j) with S_j(0) = 1 and exactly k - 1 series.
struct FrescoPresentation {
  std::vector<Rational> lambdas;
  std::vector<TruncatedSeries> series;

  int rank() const { return static_cast<int>(lambdas.size()); }
  void validate() const;
};

// Pi = (a - lambda_1 b) S_1^{-1} (a - lambda_2 b) ... S_{k-1}^{-1}
// (a - lambda_k b), expanded in normal order at the given precision.
NcSeriesElement expand_presentation(const FrescoPresentation& p, int precision);

// Class of x in the quotient by the left ideal generated by Pi, written on
// the basis (1, a, ..., a^{k-1}) in normal order: x = sum_j a^j * T_j(b).
// Returns (T_0, ..., T_{k-1}); PrecisionExhausted when the requested
// precision cannot be certified.
std::vector<TruncatedSeries> reduce_mod_pi(const NcSeriesElement& x,
                                           const FrescoPresentation& p,
                                           int precision);

// Rank-r module presentation: a acts C[[b]]-linearly through a_matrix in a
// chosen basis, a * e_j = sum_i a_matrix[i][j] * e_i.
struct AbModulePresentation {
  int rank = 0;
  int precision = 0;
  std::vector<std::vector<TruncatedSeries>> a_matrix;  // row-major
  std::string basis_note;

  void validate() const;
};

// Companion-style realization on the basis (e, ae, ..., a^{k-1}e); the last
// column comes from reduce_mod_pi(a^k) rewritten with C[[b]]-coefficients on
// the left.
AbModulePresentation a_matrix_from_presentation(const FrescoPresentation& p,
                                                int precision);

enum class GeometricStatus { Geometric, NotGeometric, Unknown };

struct GeometricVerdict {
  GeometricStatus status;
  std::vector<Rational> rational_roots;  // ascending, with multiplicity
  Polynomial unfactored;
};

// Full rational-root extraction; Geometric iff everything factors over Q with
// strictly negative roots, NotGeometric on any rational root >= 0, Unknown
// when a nonconstant rational-root-free part remains.
GeometricVerdict is_geometric(const Polynomial& b);

}  // namespace abcalc
