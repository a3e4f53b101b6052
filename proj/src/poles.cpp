#include "abcalc/poles.hpp"

#include <algorithm>

#include "abcalc/errors.hpp"

namespace abcalc {

void LedgerParams::validate() const {
  if (cap < 1) throw Error(ErrorKind::Domain, "pole order cap must be >= 1");
  if (q < 1) throw Error(ErrorKind::Domain, "quotient order q must be >= 1");
  if (q > cap) throw Error(ErrorKind::Domain, "q cannot exceed the order cap");
}

bool LedgerParams::in_class(const Rational& location) const {
  return is_integer(location - xi_class);
}

PoleLedger::PoleLedger(LedgerParams params) : params_(params) {
  params_.validate();
}

void PoleLedger::set(const Rational& location, PoleEntry entry) {
  if (location >= 0) {
    throw Error(ErrorKind::Domain,
                "pole locations must be strictly negative, got " +
                    location.str());
  }
  if (entry.order < 1 || entry.order > params_.cap) {
    throw Error(ErrorKind::Domain,
                "pole order " + std::to_string(entry.order) +
                    " outside [1, " + std::to_string(params_.cap) + "]");
  }
  entries_.insert_or_assign(location, entry);
}

int PoleLedger::visible_order(const Rational& location) const {
  auto it = entries_.find(location);
  if (it == entries_.end()) return 0;
  if (params_.in_class(location) && it->second.order < params_.q) return 0;
  return it->second.order;
}

PoleLedger shift(const PoleLedger& ledger) {
  PoleLedger out(ledger.params());
  for (const auto& [loc, entry] : ledger.entries()) {
    out.set(loc - 1, entry);
  }
  return out;
}

LedgerFamily::LedgerFamily(LedgerParams params) : params_(params) {
  params_.validate();
}

PoleLedger LedgerFamily::ledger(long long h) const {
  auto it = window_.find(h);
  if (it != window_.end()) return it->second;
  return PoleLedger(params_);
}

void LedgerFamily::set_ledger(long long h, PoleLedger ledger) {
  if (ledger.empty()) {
    window_.erase(h);
    return;
  }
  window_.insert_or_assign(h, std::move(ledger));
}

LedgerFamily apply_generator(const LedgerFamily& family, GenKind kind,
                             const Rational& lambda0) {
  LedgerFamily out(family.params());
  for (const auto& [h, ledger] : family.window()) {
    PoleLedger stage(family.params());
    switch (kind) {
      case GenKind::A:
      case GenKind::B:
        // Multiplication by lambda (case a) is unit-like on strictly negative
        // locations, so both actions reduce to the shift on orders.
        stage = ledger;
        break;
      case GenKind::Linear: {
        // (lambda + lambda0) vanishes simply at -lambda0: the order there
        // drops by one; an entry reaching order 0 disappears.
        stage = PoleLedger(family.params());
        for (const auto& [loc, entry] : ledger.entries()) {
          PoleEntry e = entry;
          if (loc == -lambda0) {
            e.order -= 1;
            if (e.order == 0) continue;
          }
          stage.set(loc, e);
        }
        break;
      }
    }
    out.set_ledger(h + 1, shift(stage));
  }
  return out;
}

namespace {

// Maximality bookkeeping after a merge: within each residue class the top
// qualifying location keeps the identity term's flag, strictly lower
// locations are only bounds.
void apply_merge_flags(const LedgerFamily& identity, LedgerFamily& merged) {
  const LedgerParams& params = merged.params();
  // Residue class key -> maximal location carrying a qualifying order.
  std::map<Rational, Rational> class_max;
  for (const auto& [h, ledger] : merged.window()) {
    for (const auto& [loc, entry] : ledger.entries()) {
      bool in_main = params.in_class(loc);
      int threshold = in_main ? params.q : 1;
      if (entry.order < threshold) continue;
      Rational key = fractional_part(loc);
      auto it = class_max.find(key);
      if (it == class_max.end() || loc > it->second) {
        class_max.insert_or_assign(key, loc);
      }
    }
  }
  std::map<long long, PoleLedger> rebuilt;
  for (const auto& [h, ledger] : merged.window()) {
    PoleLedger fixed(params);
    for (const auto& [loc, entry] : ledger.entries()) {
      Rational key = fractional_part(loc);
      auto it = class_max.find(key);
      PoleEntry e = entry;
      if (it == class_max.end()) {
        e.exact = false;
      } else if (loc == it->second) {
        // The identity contributor dominates at the maximal location; its
        // order and flag are authoritative when present.
        auto src = identity.ledger(h).entries().find(loc);
        if (src != identity.ledger(h).entries().end()) {
          e = src->second;
        } else {
          e.exact = false;
        }
      } else {
        e.exact = false;
      }
      fixed.set(loc, e);
    }
    if (!fixed.empty()) rebuilt.insert_or_assign(h, std::move(fixed));
  }
  LedgerFamily out(params);
  for (auto& [h, ledger] : rebuilt) out.set_ledger(h, std::move(ledger));
  merged = std::move(out);
}

}  // namespace

LedgerFamily apply_series(const LedgerFamily& family, const TruncatedSeries& s) {
  if (s.is_zero() || s.coeff(0) != 1) {
    throw Error(ErrorKind::Domain, "series actions need S(0) = 1");
  }
  // The exact constant 1 acts as the identity. A truncated 1 + O(b^P) does
  // not: its unknown tail still feeds the bound semantics below.
  if (s.exact() && s.coefficients().size() <= 1) return family;
  LedgerFamily merged(family.params());
  for (const auto& [h, ledger] : family.window()) {
    // Phi'_{h+k} receives Sh^k(Phi_h) for every nonzero S_k. Stored indices
    // sit below the precision; the unknown tail only feeds the bound
    // semantics applied below.
    PoleLedger shifted_ledger = ledger;
    int top_k = static_cast<int>(s.coefficients().size()) - 1;
    for (int k = 0; k <= top_k; ++k) {
      if (k > 0) shifted_ledger = shift(shifted_ledger);
      if (s.coeff(k) == 0) continue;
      PoleLedger target = merged.ledger(h + k);
      for (const auto& [loc, entry] : shifted_ledger.entries()) {
        auto existing = target.entries().find(loc);
        if (existing == target.entries().end() ||
            existing->second.order < entry.order) {
          target.set(loc, entry);
        }
      }
      merged.set_ledger(h + k, std::move(target));
    }
  }
  apply_merge_flags(family, merged);
  return merged;
}

std::optional<MaximalPole> maximal_pole(const LedgerFamily& family) {
  const LedgerParams& params = family.params();
  std::optional<MaximalPole> best;
  for (const auto& [h, ledger] : family.window()) {
    for (const auto& [loc, entry] : ledger.entries()) {
      if (!params.in_class(loc)) continue;
      if (entry.order < params.q) continue;
      if (!best || loc > best->location ||
          (loc == best->location && entry.order > best->order) ||
          (loc == best->location && entry.order == best->order &&
           h < best->h)) {
        best = MaximalPole{loc, entry.order, h};
      }
    }
  }
  return best;
}

RootCountResult check_root_count(const LedgerFamily& family,
                        const FrescoPresentation& presentation, int d,
                        int series_precision) {
  presentation.validate();
  if (d < 0) throw Error(ErrorKind::Domain, "multiplicity d must be >= 0");
  auto top = maximal_pole(family);
  if (!top) {
    throw Error(ErrorKind::Domain,
                "check_root_count needs a family with a qualifying pole");
  }
  int k = presentation.rank();
  RootCountResult result;
  for (int j = 1; j <= k; ++j) {
    Rational root =
        -(presentation.lambdas[static_cast<std::size_t>(j - 1)] + j - k);
    if (root == top->location) result.witnesses.push_back(j);
  }
  result.holds = static_cast<int>(result.witnesses.size()) >= d;

  // Simulate Pi right to left: (a - lambda_k b), then S_{k-1}^{-1}, ...
  LedgerFamily state = family;
  for (int j = k; j >= 1; --j) {
    state = apply_generator(state, GenKind::Linear,
                            presentation.lambdas[static_cast<std::size_t>(j - 1)]);
    if (j >= 2) {
      TruncatedSeries inv =
          presentation.series[static_cast<std::size_t>(j - 2)].inverse(
              series_precision);
      state = apply_series(state, inv);
    }
  }
  // Only an exact surviving pole contradicts annihilation; bound entries from
  // series merges are upper estimates and may already be zero.
  for (const auto& [h, ledger] : state.window()) {
    for (const auto& [loc, entry] : ledger.entries()) {
      if (entry.exact && state.params().in_class(loc) &&
          entry.order >= state.params().q) {
        throw InconsistentLedger(
            "the presentation cannot annihilate the family: an exact class "
            "pole of order " + std::to_string(entry.order) + " survives at " +
            loc.str());
      }
    }
  }
  return result;
}

}  // namespace abcalc
