#pragma once

#include <map>
#include <optional>
#include <vector>

#include "abcalc/fresco.hpp"
#include "abcalc/series.hpp"

namespace abcalc {

// Shared quotient parameters: poles of order up to cap are representable and
// poles of order < q at points of xi_class + Z are zero in the quotient.
struct LedgerParams {
  int cap = 0;            // n+1
  Rational xi_class = 0;  // representative of xi mod Z
  int q = 1;

  void validate() const;
  bool in_class(const Rational& location) const;
};

struct PoleEntry {
  int order = 0;
  bool exact = true;  // false marks an upper bound coming from a merge
  friend bool operator==(const PoleEntry&, const PoleEntry&) = default;
};

// Finite map of strictly negative pole locations to orders, modeling one
// class of meromorphic functions in the quotient space.
class PoleLedger {
 public:
  explicit PoleLedger(LedgerParams params);

  const LedgerParams& params() const { return params_; }
  const std::map<Rational, PoleEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // order must stay in [1, cap]; locations must be strictly negative.
  void set(const Rational& location, PoleEntry entry);
  // Order at a location as the quotient sees it: entries of order < q at a
  // class point answer 0.
  int visible_order(const Rational& location) const;

  friend bool operator==(const PoleLedger& lhs, const PoleLedger& rhs) {
    return lhs.entries_ == rhs.entries_;
  }

 private:
  LedgerParams params_;
  std::map<Rational, PoleEntry> entries_;
};

// Shift operator: every pole location moves by -1; orders and flags carry.
PoleLedger shift(const PoleLedger& ledger);

// Ledgers indexed by the twist integer h; absent indices are empty ledgers.
class LedgerFamily {
 public:
  explicit LedgerFamily(LedgerParams params);

  const LedgerParams& params() const { return params_; }
  const std::map<long long, PoleLedger>& window() const { return window_; }
  PoleLedger ledger(long long h) const;
  void set_ledger(long long h, PoleLedger ledger);

  friend bool operator==(const LedgerFamily& lhs, const LedgerFamily& rhs) {
    return lhs.window_ == rhs.window_;
  }

 private:
  LedgerParams params_;
  std::map<long long, PoleLedger> window_;
};

enum class GenKind { A, B, Linear };

// New family with Phi'_h built from Phi_{h-1}: a and b act as pure shifts on
// orders (signs and the lambda factor are not observable here); the factor
// (a - lambda0 b) first drops the order at location -lambda0 by one, then
// shifts. The h-window slides by +1.
LedgerFamily apply_generator(const LedgerFamily& family, GenKind kind,
                             const Rational& lambda0 = 0);

// Action of S(b) with S(0) = 1: Phi'_h = max-merge over the nonzero
// coefficients S_k of the k-fold shifted Phi_{h-k}. The maximal qualifying
// location of each residue class keeps its exact flag (the identity term
// dominates there); everything strictly lower becomes an upper bound.
LedgerFamily apply_series(const LedgerFamily& family, const TruncatedSeries& s);

struct MaximalPole {
  Rational location;
  int order = 0;
  long long h = 0;
};

// Largest location in the class xi + Z carrying a visible (>= q) order for
// some h; none when no qualifying pole exists.
std::optional<MaximalPole> maximal_pole(const LedgerFamily& family);

struct RootCountResult {
  bool holds = false;
  std::vector<int> witnesses;  // factor indices j, 1-based from the left
};

// Root-counting check: witnesses are the factor indices j with
// -(lambda_j + j - k) equal to the family's maximal pole location; holds when
// at least d of them exist. The presentation is then simulated factor by
// factor, right to left; if a visible class pole survives the full product,
// the data is InconsistentLedger.
RootCountResult check_root_count(const LedgerFamily& family,
                        const FrescoPresentation& presentation, int d,
                        int series_precision = 32);

}  // namespace abcalc
