// Acceptance suite: one line per criterion, exact expectations pinned in
// code, wall-clock budgets enforced. Exits nonzero when anything fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "abcalc/gaussmanin.hpp"
#include "abcalc/poles.hpp"
#include "abcalc/saturation.hpp"
#include "oracles.hpp"

using namespace abcalc;
using abcalc::testing::Rng;
using abcalc::testing::swap_oracle;

namespace {

struct Criterion {
  int number;
  std::string label;
  double budget_seconds;
  std::function<void()> body;
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

Polynomial degree12_divisor() {
  std::vector<Rational> roots;
  for (int k = 0; k <= 11; ++k) roots.push_back(Rational(-(k + 7), 6));
  return Polynomial::from_roots(roots);
}

MonomialInput paired_cusps_input() {
  MonomialInput input;
  input.monomials = {{1, 2, 0, 0}, {2, 1, 0, 0}, {0, 0, 1, 3}, {0, 0, 3, 1}};
  input.apply_defaults();
  return input;
}

// --- criterion bodies -------------------------------------------------------

void criterion_1_gm_end_to_end() {
  RecurrenceResult r = gauss_manin_pipeline(paired_cusps_input());
  require(r.alpha == std::vector<Rational>{Rational(1, 3), Rational(1, 3),
                                           Rational(1, 4), Rational(1, 4)},
          "weights alpha != (1/3, 1/3, 1/4, 1/4)");
  require(r.recurrence.sigma.slope == Rational(7, 6) &&
              r.recurrence.sigma.constant == Rational(7, 6),
          "sigma(k) != (7/6)(k+1)");
  require(r.recurrence.rhs == Rational(-1, 6), "rhs != -1/6");
  require(r.closure.degree == 12, "closure degree != 12");
  require(r.closure.powers == std::vector<long long>{4, 4, 3, 3},
          "closure powers != (4, 4, 3, 3)");
  require(r.divisor == degree12_divisor(),
          "divisor != prod_{k=0}^{11} (x + (k+7)/6)");
  require(r.warnings.empty(), "unexpected warnings");
}

void criterion_2_reference_tables() {
  const std::vector<std::string> divisors = {
      // quintic with x y z^2 deformation
      "(x + 7/10)*(x + 4/5)^2*(x + 6/5)",
      "(x + 9/10)*(x + 1)*(x + 6/5)*(x + 7/5)",
      "(x + 1)^3*(x + 3/2)",
      "(x + 6/5)^2*(x + 13/10)*(x + 9/5)",
      "(x + 11/10)*(x + 7/5)^2*(x + 8/5)",
      "(x + 6/5)*(x + 8/5)^2*(x + 11/10)",
      "(x + 6/5)^2*(x + 7/5)*(x + 17/10)",
      "(x + 7/5)*(x + 8/5)^2*(x + 19/10)",
      // cyclic cubic forms
      "(x + 1)^3",
      "(x + 8/7)*(x + 9/7)*(x + 11/7)",
      "(x + 9/7)*(x + 11/7)*(x + 15/7)",
      "(x + 10/7)*(x + 12/7)*(x + 13/7)",
      "(x + 2)^3",
      "(x + 5)*(x + 3)*(x + 2)",
      // four-variable cyclic form
      "(x + 1)^4",
  };
  for (const std::string& text : divisors) {
    Polynomial b = parse_polynomial(text);
    GeometricVerdict v = is_geometric(b);
    require(v.status == GeometricStatus::Geometric,
            "divisor not geometric: " + text);
    require(v.unfactored.degree() == 0, "unfactored part left for: " + text);
  }
  GeometricVerdict chain = is_geometric(degree12_divisor());
  require(chain.status == GeometricStatus::Geometric,
          "degree-12 chain divisor not geometric");
}

void criterion_3_sharp_round_trip() {
  Rng rng(1001);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> lambdas = rng.lambda_list(8, 50, 50);
    HomogeneousElement p = bernstein_element(lambdas);
    Polynomial b = element_to_bpoly(p);
    require(bpoly_to_element(b, p.degree()) == p,
            "round trip broke at trial " + std::to_string(trial));
    require(b == Polynomial::from_roots(roots_from_factors(lambdas)),
            "roots mismatch at trial " + std::to_string(trial));
  }
}

void criterion_4_division_lemma() {
  Rng rng(2002);
  for (int trial = 0; trial < 200; ++trial) {
    auto random_monic = [&](int degree) {
      std::vector<Rational> coeffs{Rational(1)};
      for (int j = 1; j <= degree; ++j) coeffs.push_back(rng.rational(9, 6));
      return HomogeneousElement(degree, std::move(coeffs));
    };
    HomogeneousElement w = random_monic(rng.uniform(0, 6));
    HomogeneousElement p = random_monic(rng.uniform(0, 6));
    HomogeneousElement product = HomogeneousElement::from_element(
        multiply(w.to_element(), p.to_element()));
    require(divide_right(product, p) == w,
            "division broke at trial " + std::to_string(trial));
    Polynomial c = cofactor_poly(w, product.degree(), p.degree());
    require(element_to_bpoly(product) == c * element_to_bpoly(p),
            "cofactor identity broke at trial " + std::to_string(trial));
  }
}

void criterion_5_saturation_cross_validation() {
  Rng rng(3003);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> lambdas = rng.lambda_list(4, 9, 5);
    FrescoPresentation p{lambdas, {}};
    for (std::size_t j = 1; j < lambdas.size(); ++j) {
      std::vector<Rational> coeffs{1};
      int deg = rng.uniform(0, 3);
      for (int d = 0; d < deg; ++d) coeffs.push_back(rng.rational(4, 3));
      p.series.emplace_back(coeffs);
    }
    SaturationConfig config;  // precision 32, max_iter 64, window 16
    SaturationResult sat =
        saturate_bernstein(a_matrix_from_presentation(p, config.precision),
                           config);
    Polynomial expected = element_to_bpoly(HomogeneousElement::from_element(
        initial_form(expand_presentation(p, config.precision)).element));
    require(sat.char_poly == expected,
            "char poly mismatch at trial " + std::to_string(trial));
    require(divides(sat.min_poly, sat.char_poly),
            "min poly does not divide char poly at trial " +
                std::to_string(trial));
  }
}

void criterion_6_exact_sequence_oracle() {
  // named regression from the worked example
  require(exact_sequence_bpoly(Polynomial({2, 1}), Polynomial({1, 1}), 1) ==
              Polynomial({1, 2, 1}),
          "worked case (x+2, x+1) != (x+1)^2");
  Rng rng(4004);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> lf = rng.lambda_list(2, 9, 6);
    std::vector<Rational> lh = rng.lambda_list(2, 9, 6);
    HomogeneousElement pf = bernstein_element(lf);
    HomogeneousElement ph = bernstein_element(lh);
    Polynomial bf = element_to_bpoly(pf);
    Polynomial bh = element_to_bpoly(ph);
    Polynomial direct = element_to_bpoly(HomogeneousElement::from_element(
        multiply(pf.to_element(), ph.to_element())));
    Polynomial closed = bf.shifted_arg(Rational(-ph.degree())) * bh;
    require(direct == closed,
            "exact-sequence routes disagree at trial " + std::to_string(trial));
    require(exact_sequence_bpoly(bf, bh, ph.degree()) == direct,
            "exact_sequence_bpoly drifted at trial " + std::to_string(trial));
  }
}

void criterion_7_confluence() {
  Rng rng(5005);
  for (int trial = 0; trial < 500; ++trial) {
    Word w;
    w.scalar = rng.nonzero_rational(7, 5);
    int len = rng.uniform(0, 10);
    for (int i = 0; i < len; ++i) {
      w.gens.push_back(rng.uniform(0, 1) == 0 ? Gen::A : Gen::B);
    }
    require(normal_order(w) == swap_oracle(w, false),
            "confluence broke at trial " + std::to_string(trial));
  }
}

void criterion_8_pole_calculus() {
  LedgerParams params{4, Rational(-7, 10), 1};
  auto family_with = [&](LedgerParams p, long long h, const Rational& loc,
                         int order) {
    LedgerFamily family(p);
    PoleLedger ledger(p);
    ledger.set(loc, PoleEntry{order, true});
    family.set_ledger(h, std::move(ledger));
    return family;
  };

  // The a- and b-actions both shift locations, orders and h; the lambda
  // factor of the a-action is unit-like on negative locations, so the two
  // ledger actions coincide.
  LedgerFamily base = family_with(params, 0, Rational(-7, 10), 2);
  LedgerFamily via_b = apply_generator(base, GenKind::B);
  LedgerFamily via_a = apply_generator(base, GenKind::A);
  require(via_a == via_b, "a-action must match b-action on ledgers");
  require(via_b.ledger(1).entries().at(Rational(-17, 10)).order == 2,
          "b-action must shift and preserve the order");
  require(via_b.ledger(0).empty(), "h must advance with the b-action");

  // A linear factor drops one order at its matched location only.
  LedgerFamily matched =
      apply_generator(base, GenKind::Linear, Rational(7, 10));
  require(matched.ledger(1).entries().at(Rational(-17, 10)).order == 1,
          "matched factor must drop the order");
  LedgerFamily unmatched =
      apply_generator(base, GenKind::Linear, Rational(1, 2));
  require(unmatched.ledger(1).entries().at(Rational(-17, 10)).order == 2,
          "unmatched factor must keep the order");

  // The shift is injective, so b never merges or erases poles.
  PoleLedger l1(params), l2(params);
  l1.set(Rational(-7, 10), PoleEntry{2, true});
  l2.set(Rational(-17, 10), PoleEntry{2, true});
  require(!(shift(l1) == shift(l2)), "shift must stay injective");

  // The a-action preserves the multiset of orders.
  require(via_a.ledger(1).entries().size() == 1 &&
              via_a.ledger(1).entries().begin()->second.order == 2,
          "a-action must preserve orders");

  // Unmatched factors move the maximal pole to xi0 - 1 with h0 + 1.
  LedgerFamily big = family_with(params, 0, Rational(-7, 10), 3);
  auto moved = maximal_pole(apply_generator(big, GenKind::Linear, Rational(1, 2)));
  require(moved && moved->location == Rational(-17, 10) && moved->order == 3 &&
              moved->h == 1,
          "maximality must persist one step down");

  // An order q+d+1 pole at -l0 becomes an order q+d pole at -l0 - 1
  // after the matched factor, with h shifted.
  auto traded =
      maximal_pole(apply_generator(big, GenKind::Linear, Rational(7, 10)));
  require(traded && traded->location == Rational(-17, 10) &&
              traded->order == 2 && traded->h == 1,
          "matched factor trades order for shift");

  // A unit series keeps the maximal entry exact and bounds the rest.
  LedgerParams q2{4, Rational(-7, 10), 2};
  LedgerFamily fam_q2 = family_with(q2, 0, Rational(-7, 10), 2);
  LedgerFamily merged = apply_series(fam_q2, TruncatedSeries({1, 1}));
  const PoleEntry& kept = merged.ledger(0).entries().at(Rational(-7, 10));
  require(kept.order == 2 && kept.exact,
          "maximal entry must stay exact under a unit series");
  const PoleEntry& bound = merged.ledger(1).entries().at(Rational(-17, 10));
  require(bound.order == 2 && !bound.exact,
          "lower entries must become bounds");

  // Matched and unmatched factors on an order q+d pole with d = 1.
  LedgerFamily deep = family_with(q2, 0, Rational(-7, 10), 3);
  auto after_other =
      maximal_pole(apply_generator(deep, GenKind::Linear, Rational(1, 2)));
  require(after_other && after_other->order == 3 &&
              after_other->location == Rational(-17, 10),
          "unmatched: order q+d persists and stays maximal");
  auto after_match =
      maximal_pole(apply_generator(deep, GenKind::Linear, Rational(7, 10)));
  require(after_match && after_match->order == 2 &&
              after_match->location == Rational(-17, 10),
          "matched: order drops to q+d-1 and stays maximal");

  // check_root_count on the degree-12 chain with a simple pole at -7/6.
  std::vector<Rational> lambdas;
  for (int k = 11; k >= 0; --k) lambdas.push_back(Rational(7, 6) * (k + 1));
  FrescoPresentation chain{
      lambdas, std::vector<TruncatedSeries>(11, TruncatedSeries::one())};
  LedgerParams chain_params{4, Rational(-7, 6), 1};
  LedgerFamily chain_family = family_with(chain_params, 0, Rational(-7, 6), 1);
  RootCountResult r = check_root_count(chain_family, chain, 1);
  require(r.holds, "check_root_count must hold on the degree-12 chain");
  require(r.witnesses == std::vector<int>{12},
          "check_root_count witnesses must be exactly {12}");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "degree-12 chain end to end (weights, recurrence, closure, divisor)",
       1.0, criterion_1_gm_end_to_end},
      {2, "reference divisor tables are geometric", 1.0,
       criterion_2_reference_tables},
      {3, "correspondence round trip on 200 random factor lists", 5.0,
       criterion_3_sharp_round_trip},
      {4, "division lemma on 200 random pairs", 5.0,
       criterion_4_division_lemma},
      {5, "saturation cross-validation on 50 random presentations", 30.0,
       criterion_5_saturation_cross_validation},
      {6, "exact-sequence rule against the element route", 5.0,
       criterion_6_exact_sequence_oracle},
      {7, "normal-order confluence on 500 random words", 5.0,
       criterion_7_confluence},
      {8, "pole calculus conformance and root counting", 5.0,
       criterion_8_pole_calculus},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      c.body();
    } catch (const std::exception& e) {
      reason = e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (reason.empty() && seconds > c.budget_seconds) {
      std::ostringstream msg;
      msg << "exceeded budget: " << seconds << "s > " << c.budget_seconds
          << "s";
      reason = msg.str();
    }
    if (reason.empty()) {
      std::cout << "PASS criterion " << c.number << ": " << c.label << " ("
                << seconds << "s)\n";
    } else {
      std::cout << "FAIL criterion " << c.number << ": " << c.label << " -- "
                << reason << "\n";
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
