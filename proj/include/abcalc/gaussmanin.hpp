#pragma once

#include <string>
#include <vector>

#include "abcalc/fresco.hpp"

namespace abcalc {

// Exponent data of f = sum_i c_i m_i + lambda * m together with the monomial
// form x^beta dx. The distinguished monomial m absorbs lambda, so lambda
// never enters any coefficient.
struct MonomialInput {
  std::vector<std::vector<int>> monomials;  // rows m_1..m_{n+1}
  std::vector<Rational> coefficients;       // c_i, defaults to all ones
  std::vector<int> distinguished;           // mu, defaults to all ones
  std::vector<int> form_exponents;          // beta, defaults to all zeros

  int size() const { return static_cast<int>(monomials.size()); }
  void validate() const;
  // Fills defaulted fields in place.
  void apply_defaults();
};

// sigma(k) = slope * k + constant.
struct AffineMap {
  Rational slope;
  Rational constant;
  Rational at(const Rational& k) const { return slope * k + constant; }
};

struct RecurrenceData {
  AffineMap sigma;  // (a - sigma(k) b)[m^k] = rhs [m^{k+1}]
  Rational rhs;
};

struct ClosureData {
  int degree = 0;               // N
  std::vector<long long> powers;  // p_1..p_{n+1}
};

struct RecurrenceResult {
  std::vector<std::vector<Rational>> weights;  // u^(i)
  std::vector<Rational> alpha;                 // alpha_i = u^(i) . mu
  RecurrenceData recurrence;
  ClosureData closure;
  HomogeneousElement product;
  Polynomial divisor;
  std::vector<Rational> divisor_roots;  // ascending, with multiplicity
  std::vector<std::string> warnings;
};

// Weight vector u with sum_j u_j c_{i'} A_{i',j} = delta_{i,i'}; encodes the
// combination sum_j u_j x_j d_j f = m_i + (u . mu) lambda m. i is 0-based.
std::vector<Rational> solve_weights(const MonomialInput& input, int i);

// One-step recurrence (a - sigma(k) b)[m^k w] = rhs [m^{k+1} w] with
// sigma(k) = sum_i c_i sum_j u^(i)_j (k mu_j + beta_j + 1) and
// rhs = 1 - sum_i c_i alpha_i. DegenerateRecurrence when rhs = 0.
RecurrenceData recurrence(const MonomialInput& input);

// Minimal positive N with nonnegative integers p_i satisfying
// sum_i p_i A_i = N mu componentwise. Exact rational solve with LCM scaling
// first, bounded enumeration as a fallback.
ClosureData closure_degree(const MonomialInput& input, int search_bound = 256);

// Product over k = N-1 down to 0 of (a - sigma(k) b), normal-ordered.
HomogeneousElement annihilator_product(const MonomialInput& input,
                                       int search_bound = 256);

struct DivisorResult {
  Polynomial divisor;
  std::vector<Rational> roots;
  std::vector<std::string> warnings;
};

// Candidate Bernstein divisor: the correspondence applied to the annihilator
// product. Warns with "NonNegativeRoot" when the chain's uniform recurrence
// cannot separate a nonnegative exponent.
DivisorResult bernstein_divisor(const MonomialInput& input,
                                int search_bound = 256);

RecurrenceResult gauss_manin_pipeline(const MonomialInput& input,
                                      int search_bound = 256);

// Plain-text derivation: weights, reduction identities, the recurrence, the
// closure relation and the divisor.
std::string report(const MonomialInput& input, const RecurrenceResult& result);

// Exhaustive nonnegative-integer search used as the enumeration fallback:
// smallest N in [1, bound] admitting a solution, or degree 0 when none.
ClosureData closure_by_enumeration(const MonomialInput& input, int bound);

}  // namespace abcalc
