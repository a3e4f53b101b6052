#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abcalc/errors.hpp"
#include "abcalc/poles.hpp"
#include "oracles.hpp"

using namespace abcalc;

namespace {

LedgerParams params(int cap, const char* xi, int q) {
  return LedgerParams{cap, parse_rational(xi), q};
}

LedgerFamily single_pole(const LedgerParams& p, long long h, const char* loc,
                         int order, bool exact = true) {
  LedgerFamily family(p);
  PoleLedger ledger(p);
  ledger.set(parse_rational(loc), PoleEntry{order, exact});
  family.set_ledger(h, std::move(ledger));
  return family;
}

}  // namespace

TEST_CASE("shift moves locations by -1 and keeps orders") {
  LedgerParams p = params(4, "-7/10", 1);
  PoleLedger ledger(p);
  ledger.set(parse_rational("-7/10"), PoleEntry{2, true});
  PoleLedger shifted = shift(ledger);
  CHECK(shifted.entries().size() == 1);
  CHECK(shifted.entries().begin()->first == parse_rational("-17/10"));
  CHECK(shifted.entries().begin()->second.order == 2);

  CHECK(shift(PoleLedger(p)).empty());

  PoleLedger multi(params(4, "-1/2", 1));
  multi.set(parse_rational("-1/2"), PoleEntry{3, true});
  multi.set(parse_rational("-3/2"), PoleEntry{1, true});
  PoleLedger moved = shift(multi);
  CHECK(moved.entries().at(parse_rational("-3/2")).order == 3);
  CHECK(moved.entries().at(parse_rational("-5/2")).order == 1);
}

TEST_CASE("shift is injective on ledgers") {
  // Structural: shifting is a bijection on locations, so distinct ledgers
  // stay distinct and shifting never merges or drops qualifying poles.
  LedgerParams p = params(4, "-1/3", 1);
  PoleLedger a(p), b(p);
  a.set(parse_rational("-1/3"), PoleEntry{2, true});
  b.set(parse_rational("-4/3"), PoleEntry{2, true});
  CHECK(!(shift(a) == shift(b)));
  CHECK(shift(a).entries().size() == a.entries().size());
}

TEST_CASE("generator actions on families") {
  LedgerParams p = params(4, "-7/10", 1);
  LedgerFamily family = single_pole(p, 0, "-7/10", 2);

  LedgerFamily after_b = apply_generator(family, GenKind::B);
  CHECK(after_b.window().size() == 1);
  CHECK(after_b.ledger(1).entries().at(parse_rational("-17/10")).order == 2);
  CHECK(after_b.ledger(0).empty());

  // a shifts orders exactly like b: the lambda factor is unit-like on
  // strictly negative locations
  LedgerFamily after_a = apply_generator(family, GenKind::A);
  CHECK(after_a == after_b);

  LedgerFamily matched =
      apply_generator(family, GenKind::Linear, parse_rational("7/10"));
  CHECK(matched.ledger(1).entries().at(parse_rational("-17/10")).order == 1);

  LedgerFamily unmatched =
      apply_generator(family, GenKind::Linear, parse_rational("1/2"));
  CHECK(unmatched.ledger(1).entries().at(parse_rational("-17/10")).order == 2);
}

TEST_CASE("matched linear factors remove simple poles entirely") {
  LedgerParams p = params(4, "-7/10", 1);
  LedgerFamily family = single_pole(p, 0, "-7/10", 1);
  LedgerFamily gone =
      apply_generator(family, GenKind::Linear, parse_rational("7/10"));
  CHECK(gone.window().empty());
}

TEST_CASE("series actions keep the maximal entry exact and bound the rest") {
  LedgerParams p = params(4, "-7/10", 2);
  LedgerFamily family = single_pole(p, 0, "-7/10", 2);

  CHECK(apply_series(family, TruncatedSeries::one()) == family);

  // the exact unit is the identity even on families with several entries
  LedgerFamily multi = family;
  PoleLedger extra(p);
  extra.set(parse_rational("-27/10"), PoleEntry{3, true});
  multi.set_ledger(2, std::move(extra));
  CHECK(apply_series(multi, TruncatedSeries::one()) == multi);

  LedgerFamily merged = apply_series(family, TruncatedSeries({1, 1}));
  const auto& kept = merged.ledger(0).entries().at(parse_rational("-7/10"));
  CHECK(kept.order == 2);
  CHECK(kept.exact);
  const auto& bound = merged.ledger(1).entries().at(parse_rational("-17/10"));
  CHECK(bound.order == 2);
  CHECK(!bound.exact);

  // 1 + b^2 contributes two shifts down; the maximal entry still survives
  LedgerFamily sparse = apply_series(family, TruncatedSeries({1, 0, 1}));
  const auto& still = sparse.ledger(0).entries().at(parse_rational("-7/10"));
  CHECK(still.order == 2);
  CHECK(still.exact);
  CHECK(sparse.ledger(2).entries().count(parse_rational("-27/10")) == 1);
}

TEST_CASE("maximal pole respects the quotient") {
  LedgerParams p2 = params(4, "-7/10", 2);
  LedgerFamily family(p2);
  PoleLedger l0(p2);
  l0.set(parse_rational("-7/10"), PoleEntry{2, true});
  PoleLedger l1(p2);
  l1.set(parse_rational("-17/10"), PoleEntry{3, true});
  family.set_ledger(0, l0);
  family.set_ledger(1, l1);

  auto top = maximal_pole(family);
  REQUIRE(top);
  CHECK(top->location == parse_rational("-7/10"));
  CHECK(top->order == 2);
  CHECK(top->h == 0);

  LedgerParams p3 = params(4, "-7/10", 3);
  LedgerFamily family3(p3);
  PoleLedger m0(p3);
  m0.set(parse_rational("-7/10"), PoleEntry{2, true});
  PoleLedger m1(p3);
  m1.set(parse_rational("-17/10"), PoleEntry{3, true});
  family3.set_ledger(0, m0);
  family3.set_ledger(1, m1);
  auto top3 = maximal_pole(family3);
  REQUIRE(top3);
  CHECK(top3->location == parse_rational("-17/10"));
  CHECK(top3->order == 3);
  CHECK(top3->h == 1);

  CHECK(!maximal_pole(LedgerFamily(p2)));
}

TEST_CASE("out-of-class poles are invisible to maximal_pole") {
  LedgerParams p = params(4, "-7/10", 1);
  LedgerFamily family = single_pole(p, 0, "-1/2", 3);
  CHECK(!maximal_pole(family));
}

TEST_CASE("unmatched factors preserve maximality one step down") {
  LedgerParams p = params(4, "-7/10", 1);
  LedgerFamily family = single_pole(p, 0, "-7/10", 3);
  LedgerFamily moved =
      apply_generator(family, GenKind::Linear, parse_rational("1/2"));
  auto top = maximal_pole(moved);
  REQUIRE(top);
  CHECK(top->location == parse_rational("-17/10"));
  CHECK(top->order == 3);
  CHECK(top->h == 1);
}

TEST_CASE("a matched factor trades one order for one shift") {
  // order q+d+1 at -l0 for Phi_h equates to order q+d at -l0-1 after the
  // factor (a - l0 b) with h+1
  LedgerParams p = params(4, "-7/10", 1);
  LedgerFamily family = single_pole(p, 2, "-7/10", 3);
  LedgerFamily after =
      apply_generator(family, GenKind::Linear, parse_rational("7/10"));
  auto top = maximal_pole(after);
  REQUIRE(top);
  CHECK(top->location == parse_rational("-17/10"));
  CHECK(top->order == 2);
  CHECK(top->h == 3);
}

TEST_CASE("check_root_count on rank one") {
  LedgerParams p = params(4, "-7/10", 2);
  LedgerFamily family = single_pole(p, 0, "-7/10", 2);

  FrescoPresentation matching{{parse_rational("7/10")}, {}};
  RootCountResult r = check_root_count(family, matching, 1);
  CHECK(r.holds);
  CHECK(r.witnesses == std::vector<int>{1});

  FrescoPresentation off{{parse_rational("1/2")}, {}};
  CHECK_THROWS_AS(check_root_count(family, off, 1), InconsistentLedger);
}

TEST_CASE("check_root_count on the degree-12 chain") {
  std::vector<Rational> lambdas;
  for (int k = 11; k >= 0; --k) lambdas.push_back(Rational(7, 6) * (k + 1));
  FrescoPresentation p{lambdas, std::vector<TruncatedSeries>(
                                    11, TruncatedSeries::one())};
  LedgerParams lp = params(4, "-7/6", 1);
  LedgerFamily family = single_pole(lp, 0, "-7/6", 1);
  RootCountResult r = check_root_count(family, p, 1);
  CHECK(r.holds);
  CHECK(r.witnesses == std::vector<int>{12});
}

TEST_CASE("check_root_count tolerates bound spread from nontrivial series") {
  // order 2 pole, both factor roots hit it; the series inverse scatters
  // bounds below the trajectory, which must not count as a contradiction
  LedgerParams p = params(4, "-7/10", 1);
  LedgerFamily family = single_pole(p, 0, "-7/10", 2);
  FrescoPresentation pres{
      {parse_rational("17/10"), parse_rational("7/10")},
      {TruncatedSeries({1, 1})}};
  RootCountResult r = check_root_count(family, pres, 2, 16);
  CHECK(r.holds);
  CHECK(r.witnesses == std::vector<int>{1, 2});

  // an exact surviving pole still trips the consistency check
  FrescoPresentation off{{parse_rational("17/10"), parse_rational("1/2")},
                         {TruncatedSeries({1, 1})}};
  CHECK_THROWS_AS(check_root_count(family, off, 1, 16), InconsistentLedger);
}

TEST_CASE("witness count is monotone in d") {
  LedgerParams p = params(4, "-7/10", 1);
  LedgerFamily family = single_pole(p, 0, "-7/10", 2);
  // roots: -(17/10 + 1 - 2) = -7/10 and -(7/10) = -7/10: two witnesses
  FrescoPresentation both{
      {parse_rational("17/10"), parse_rational("7/10")},
      {TruncatedSeries::one()}};
  RootCountResult r1 = check_root_count(family, both, 1);
  RootCountResult r2 = check_root_count(family, both, 2);
  RootCountResult r3 = check_root_count(family, both, 3);
  CHECK(r1.holds);
  CHECK(r2.holds);
  CHECK(!r3.holds);
  CHECK(r1.witnesses == std::vector<int>{1, 2});
}

TEST_CASE("ledger invariants are enforced") {
  LedgerParams p = params(3, "-1/2", 1);
  PoleLedger ledger(p);
  CHECK_THROWS_AS(ledger.set(parse_rational("1/2"), PoleEntry{1, true}),
                  Error);
  CHECK_THROWS_AS(ledger.set(parse_rational("-1/2"), PoleEntry{4, true}),
                  Error);
  CHECK_THROWS_AS(ledger.set(parse_rational("-1/2"), PoleEntry{0, true}),
                  Error);
  LedgerParams bad{0, Rational(-1), 1};
  CHECK_THROWS_AS(PoleLedger{bad}, Error);
}
