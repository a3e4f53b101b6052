#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abcalc/errors.hpp"
#include "abcalc/gaussmanin.hpp"
#include "oracles.hpp"

using namespace abcalc;
using abcalc::testing::closure_oracle;

namespace {

MonomialInput two_cusps() {
  // x y^2 + x^2 y + z t^3 + t z^3 + lambda x y z t
  MonomialInput input;
  input.monomials = {{1, 2, 0, 0}, {2, 1, 0, 0}, {0, 0, 1, 3}, {0, 0, 3, 1}};
  input.apply_defaults();
  return input;
}

MonomialInput cyclic_cubic() {
  // x y^3 + y z^3 + z x^3 + lambda x y z
  MonomialInput input;
  input.monomials = {{1, 3, 0}, {0, 1, 3}, {3, 0, 1}};
  input.apply_defaults();
  return input;
}

MonomialInput squares(std::vector<int> beta = {}) {
  // x^2 + y^2 + z^2 + lambda x y z
  MonomialInput input;
  input.monomials = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
  input.form_exponents = std::move(beta);
  input.apply_defaults();
  return input;
}

}  // namespace

TEST_CASE("reduction weights") {
  MonomialInput input = two_cusps();
  CHECK(solve_weights(input, 0) ==
        std::vector<Rational>{Rational(-1, 3), Rational(2, 3), 0, 0});
  std::vector<Rational> u3 = solve_weights(input, 2);
  Rational alpha3 = 0;
  for (const Rational& u : u3) alpha3 += u;
  CHECK(alpha3 == Rational(1, 4));

  MonomialInput cyc = cyclic_cubic();
  CHECK(solve_weights(cyc, 0) ==
        std::vector<Rational>{Rational(1, 28), Rational(9, 28),
                              Rational(-3, 28)});
}

TEST_CASE("weights reproduce the unit system") {
  for (const MonomialInput& input :
       {two_cusps(), cyclic_cubic(), squares()}) {
    int n = input.size();
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> u = solve_weights(input, i);
      for (int ip = 0; ip < n; ++ip) {
        Rational acc = 0;
        for (int j = 0; j < n; ++j) {
          acc += u[static_cast<std::size_t>(j)] *
                 input.coefficients[static_cast<std::size_t>(ip)] *
                 input.monomials[static_cast<std::size_t>(ip)]
                                [static_cast<std::size_t>(j)];
        }
        CHECK(acc == (i == ip ? Rational(1) : Rational(0)));
      }
    }
  }
}

TEST_CASE("one-step recurrences") {
  RecurrenceData rec = recurrence(two_cusps());
  CHECK(rec.sigma.slope == Rational(7, 6));
  CHECK(rec.sigma.constant == Rational(7, 6));
  CHECK(rec.rhs == Rational(-1, 6));

  RecurrenceData sq = recurrence(squares());
  CHECK(sq.sigma.slope == Rational(3, 2));
  CHECK(sq.sigma.constant == Rational(3, 2));
  CHECK(sq.rhs == Rational(-1, 2));

  RecurrenceData sqx = recurrence(squares({1, 0, 0}));
  CHECK(sqx.sigma.slope == Rational(3, 2));
  CHECK(sqx.sigma.constant == Rational(2));
  CHECK(sqx.rhs == Rational(-1, 2));
}

TEST_CASE("sigma is affine with slope sum(c_i alpha_i) for all-ones mu") {
  for (const MonomialInput& input : {two_cusps(), cyclic_cubic(), squares()}) {
    RecurrenceData rec = recurrence(input);
    Rational alpha_sum = 0;
    for (int i = 0; i < input.size(); ++i) {
      std::vector<Rational> u = solve_weights(input, i);
      Rational a = 0;
      for (int j = 0; j < input.size(); ++j) {
        a += u[static_cast<std::size_t>(j)] *
             input.distinguished[static_cast<std::size_t>(j)];
      }
      alpha_sum += input.coefficients[static_cast<std::size_t>(i)] * a;
    }
    CHECK(rec.sigma.slope == alpha_sum);
    CHECK(rec.sigma.at(5) - rec.sigma.at(4) == rec.sigma.at(1) - rec.sigma.at(0));
    CHECK(rec.rhs == Rational(1) - alpha_sum);
  }
}

TEST_CASE("closure degrees") {
  ClosureData c1 = closure_degree(two_cusps());
  CHECK(c1.degree == 12);
  CHECK(c1.powers == std::vector<long long>{4, 4, 3, 3});
  ClosureData c2 = closure_degree(cyclic_cubic());
  CHECK(c2.degree == 4);
  CHECK(c2.powers == std::vector<long long>{1, 1, 1});
  ClosureData c3 = closure_degree(squares());
  CHECK(c3.degree == 2);
  CHECK(c3.powers == std::vector<long long>{1, 1, 1});
}

TEST_CASE("closure relations verify and are minimal") {
  for (const MonomialInput& input : {two_cusps(), cyclic_cubic(), squares()}) {
    ClosureData c = closure_degree(input);
    for (int j = 0; j < input.size(); ++j) {
      long long acc = 0;
      for (int i = 0; i < input.size(); ++i) {
        acc += c.powers[static_cast<std::size_t>(i)] *
               input.monomials[static_cast<std::size_t>(i)]
                              [static_cast<std::size_t>(j)];
      }
      CHECK(acc == static_cast<long long>(c.degree) *
                       input.distinguished[static_cast<std::size_t>(j)]);
    }
    CHECK(closure_oracle(input, 64) == c.degree);
  }
}

TEST_CASE("annihilator products") {
  HomogeneousElement sq = annihilator_product(squares());
  CHECK(sq == bernstein_element({Rational(3), Rational(3, 2)}));
  HomogeneousElement sqx = annihilator_product(squares({1, 0, 0}));
  CHECK(sqx == bernstein_element({Rational(7, 2), Rational(2)}));
  CHECK(annihilator_product(two_cusps()).degree() == 12);
}

TEST_CASE("candidate divisors and warnings") {
  DivisorResult d44 = bernstein_divisor(two_cusps());
  std::vector<Rational> roots;
  for (int k = 0; k <= 11; ++k) roots.push_back(Rational(-(k + 7), 6));
  CHECK(d44.divisor == Polynomial::from_roots(roots));
  CHECK(d44.warnings.empty());

  DivisorResult dx = bernstein_divisor(squares({1, 0, 0}));
  CHECK(dx.divisor ==
        Polynomial::from_roots({Rational(-5, 2), Rational(-2)}));
  CHECK(dx.warnings.empty());

  DivisorResult dcyc = bernstein_divisor(cyclic_cubic());
  CHECK(dcyc.divisor ==
        Polynomial::from_roots({Rational(0), Rational(-1, 4), Rational(-1, 2),
                                Rational(-3, 4)}));
  REQUIRE(dcyc.warnings.size() == 1);
  CHECK(dcyc.warnings[0] == "NonNegativeRoot");
}

TEST_CASE("divisor degree equals the closure degree and stays monic") {
  for (const MonomialInput& input : {two_cusps(), cyclic_cubic(), squares()}) {
    RecurrenceResult r = gauss_manin_pipeline(input);
    CHECK(r.divisor.degree() == r.closure.degree);
    CHECK(r.divisor.is_monic());
    CHECK(r.product.degree() == r.closure.degree);
    CHECK(r.product.monic_in_a());
  }
}

TEST_CASE("degenerate inputs fail loudly") {
  MonomialInput dup;
  dup.monomials = {{1, 1}, {1, 1}};
  dup.apply_defaults();
  CHECK_THROWS_AS(solve_weights(dup, 0), DegenerateExponents);

  MonomialInput stalled;
  stalled.monomials = {{1}};
  stalled.apply_defaults();
  CHECK_THROWS_AS(recurrence(stalled), DegenerateRecurrence);

  MonomialInput negative;
  negative.monomials = {{1, 2}, {0, 1}};
  negative.apply_defaults();
  CHECK_THROWS_AS(closure_degree(negative), NoClosure);
  try {
    closure_degree(negative);
  } catch (const NoClosure& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }

  MonomialInput huge;
  huge.monomials = {{257, 0}, {0, 1}};
  huge.apply_defaults();
  try {
    closure_degree(huge);
    FAIL("expected NoClosure");
  } catch (const NoClosure& e) {
    CHECK(e.kind() == ErrorKind::Exhausted);
  }
}

TEST_CASE("the report carries the headline facts") {
  MonomialInput input = two_cusps();
  RecurrenceResult r = gauss_manin_pipeline(input);
  std::string text = report(input, r);
  CHECK(text.find("N = 12") != std::string::npos);
  CHECK(text.find("p = (4, 4, 3, 3)") != std::string::npos);
  CHECK(text.find("(x + 7/6)") != std::string::npos);
  CHECK(text.find("(x + 3)") != std::string::npos);
  CHECK(text.find("-1/6 * m^(k+1)") != std::string::npos);
}
