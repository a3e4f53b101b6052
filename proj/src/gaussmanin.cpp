#include "abcalc/gaussmanin.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>

#include "abcalc/errors.hpp"

namespace abcalc {

namespace {

// Solves M x = rhs over the rationals; nullopt when singular.
std::optional<std::vector<Rational>> solve_linear(
    std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    Rational inv = Rational(1) / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
      rhs[i] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

void MonomialInput::apply_defaults() {
  int n = size();
  if (coefficients.empty()) coefficients.assign(static_cast<std::size_t>(n), Rational(1));
  if (distinguished.empty()) distinguished.assign(static_cast<std::size_t>(n), 1);
  if (form_exponents.empty()) form_exponents.assign(static_cast<std::size_t>(n), 0);
}

void MonomialInput::validate() const {
  int n = size();
  if (n < 1) throw Error(ErrorKind::Domain, "at least one monomial is required");
  for (const auto& row : monomials) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorKind::Domain,
                  "exponent matrix must be square: n+1 monomials in n+1 "
                  "variables");
    }
    for (int e : row) {
      if (e < 0) throw Error(ErrorKind::Domain, "monomial exponents must be >= 0");
    }
  }
  if (static_cast<int>(coefficients.size()) != n ||
      static_cast<int>(distinguished.size()) != n ||
      static_cast<int>(form_exponents.size()) != n) {
    throw Error(ErrorKind::Domain,
                "coefficients, distinguished and form vectors must match the "
                "variable count");
  }
  for (const Rational& c : coefficients) {
    if (c == 0) throw Error(ErrorKind::Domain, "monomial coefficients must be nonzero");
  }
  for (int mu : distinguished) {
    if (mu < 1) {
      throw Error(ErrorKind::Domain,
                  "the distinguished monomial must involve every variable");
    }
  }
  for (int beta : form_exponents) {
    if (beta < 0) throw Error(ErrorKind::Domain, "form exponents must be >= 0");
  }
}

std::vector<Rational> solve_weights(const MonomialInput& input, int i) {
  input.validate();
  int n = input.size();
  if (i < 0 || i >= n) throw Error(ErrorKind::Domain, "monomial index out of range");
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n)));
  std::vector<Rational> rhs(static_cast<std::size_t>(n), Rational(0));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          input.coefficients[static_cast<std::size_t>(r)] *
          Rational(input.monomials[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
  }
  rhs[static_cast<std::size_t>(i)] = 1;
  auto u = solve_linear(std::move(m), std::move(rhs));
  if (!u) {
    throw DegenerateExponents(
        "the weighted exponent matrix is singular; no reduction weights");
  }
  return *u;
}

RecurrenceData recurrence(const MonomialInput& input) {
  input.validate();
  int n = input.size();
  Rational slope = 0, constant = 0, alpha_sum = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> u = solve_weights(input, i);
    Rational t_slope = 0, t_const = 0, alpha = 0;
    for (int j = 0; j < n; ++j) {
      const Rational& uj = u[static_cast<std::size_t>(j)];
      t_slope += uj * input.distinguished[static_cast<std::size_t>(j)];
      t_const += uj * Rational(input.form_exponents[static_cast<std::size_t>(j)] + 1);
      alpha += uj * input.distinguished[static_cast<std::size_t>(j)];
    }
    const Rational& c = input.coefficients[static_cast<std::size_t>(i)];
    slope += c * t_slope;
    constant += c * t_const;
    alpha_sum += c * alpha;
  }
  Rational rhs = Rational(1) - alpha_sum;
  if (rhs == 0) {
    throw DegenerateRecurrence(
        "the chain does not advance: 1 - sum c_i alpha_i = 0");
  }
  return RecurrenceData{AffineMap{slope, constant}, rhs};
}

ClosureData closure_by_enumeration(const MonomialInput& input, int bound) {
  int n = input.size();
  for (int target = 1; target <= bound; ++target) {
    std::vector<long long> p(static_cast<std::size_t>(n), 0);
    std::vector<long long> remaining(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      remaining[static_cast<std::size_t>(j)] =
          static_cast<long long>(target) * input.distinguished[static_cast<std::size_t>(j)];
    }
    // Depth-first with componentwise pruning.
    std::vector<long long> stack_p(static_cast<std::size_t>(n), 0);
    bool found = false;
    auto dfs = [&](auto&& self, int idx, std::vector<long long> rem) -> void {
      if (found) return;
      if (idx == n) {
        if (std::all_of(rem.begin(), rem.end(), [](long long v) { return v == 0; })) {
          p = stack_p;
          found = true;
        }
        return;
      }
      const auto& row = input.monomials[static_cast<std::size_t>(idx)];
      long long cap = std::numeric_limits<long long>::max();
      for (int j = 0; j < n; ++j) {
        if (row[static_cast<std::size_t>(j)] > 0) {
          cap = std::min(cap, rem[static_cast<std::size_t>(j)] /
                                  row[static_cast<std::size_t>(j)]);
        }
      }
      if (cap == std::numeric_limits<long long>::max()) cap = 0;  // zero row
      for (long long take = 0; take <= cap && !found; ++take) {
        std::vector<long long> next = rem;
        bool ok = true;
        for (int j = 0; j < n; ++j) {
          next[static_cast<std::size_t>(j)] -=
              take * row[static_cast<std::size_t>(j)];
          if (next[static_cast<std::size_t>(j)] < 0) ok = false;
        }
        if (!ok) break;
        stack_p[static_cast<std::size_t>(idx)] = take;
        self(self, idx + 1, std::move(next));
      }
      stack_p[static_cast<std::size_t>(idx)] = 0;
    };
    dfs(dfs, 0, remaining);
    if (found) return ClosureData{target, std::move(p)};
  }
  return ClosureData{0, {}};
}

ClosureData closure_degree(const MonomialInput& input, int search_bound) {
  input.validate();
  int n = input.size();
  // sum_i p_i A_{i,j} = N mu_j: transpose solve for p at N = 1.
  std::vector<std::vector<Rational>> at(static_cast<std::size_t>(n),
                                        std::vector<Rational>(static_cast<std::size_t>(n)));
  std::vector<Rational> mu(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      at[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          Rational(input.monomials[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]);
    }
    mu[static_cast<std::size_t>(r)] = Rational(input.distinguished[static_cast<std::size_t>(r)]);
  }
  auto sol = solve_linear(at, mu);
  if (sol) {
    Int scale = 1;
    for (const Rational& r : *sol) {
      if (r < 0) {
        throw NoClosure(ErrorKind::Domain,
                        "the exponent system forces a negative power; no "
                        "closure relation exists");
      }
      scale = lcm(scale, denominator(r));
    }
    if (scale > search_bound) {
      throw NoClosure(ErrorKind::Exhausted,
                      "minimal closure degree " + scale.str() +
                          " exceeds the search bound " +
                          std::to_string(search_bound));
    }
    ClosureData out;
    out.degree = scale.convert_to<int>();
    for (const Rational& r : *sol) {
      Rational p = r * Rational(scale);
      out.powers.push_back(numerator(p).convert_to<long long>());
    }
    return out;
  }
  ClosureData out = closure_by_enumeration(input, search_bound);
  if (out.degree == 0) {
    throw NoClosure(ErrorKind::Exhausted,
                    "no closure relation found with N <= " +
                        std::to_string(search_bound));
  }
  return out;
}

HomogeneousElement annihilator_product(const MonomialInput& input,
                                       int search_bound) {
  RecurrenceData rec = recurrence(input);
  ClosureData closure = closure_degree(input, search_bound);
  std::vector<Rational> lambdas;
  for (int k = closure.degree - 1; k >= 0; --k) {
    lambdas.push_back(rec.sigma.at(Rational(k)));
  }
  return bernstein_element(lambdas);
}

DivisorResult bernstein_divisor(const MonomialInput& input, int search_bound) {
  RecurrenceData rec = recurrence(input);
  ClosureData closure = closure_degree(input, search_bound);
  std::vector<Rational> lambdas;
  for (int k = closure.degree - 1; k >= 0; --k) {
    lambdas.push_back(rec.sigma.at(Rational(k)));
  }
  HomogeneousElement product = bernstein_element(lambdas);
  int window = std::max(kDefaultLaurentWindow, 2 * closure.degree);
  DivisorResult out{element_to_bpoly(product, window),
                    roots_from_factors(lambdas),
                    {}};
  for (const Rational& r : out.roots) {
    if (r >= 0) {
      out.warnings.push_back("NonNegativeRoot");
      break;
    }
  }
  return out;
}

RecurrenceResult gauss_manin_pipeline(const MonomialInput& input,
                                      int search_bound) {
  input.validate();
  int n = input.size();
  std::vector<std::vector<Rational>> weights;
  std::vector<Rational> alpha;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> u = solve_weights(input, i);
    Rational a = 0;
    for (int j = 0; j < n; ++j) {
      a += u[static_cast<std::size_t>(j)] *
           input.distinguished[static_cast<std::size_t>(j)];
    }
    weights.push_back(std::move(u));
    alpha.push_back(a);
  }
  RecurrenceData rec = recurrence(input);
  ClosureData closure = closure_degree(input, search_bound);
  std::vector<Rational> lambdas;
  for (int k = closure.degree - 1; k >= 0; --k) {
    lambdas.push_back(rec.sigma.at(Rational(k)));
  }
  HomogeneousElement product = bernstein_element(lambdas);
  int window = std::max(kDefaultLaurentWindow, 2 * closure.degree);
  Polynomial divisor = element_to_bpoly(product, window);
  std::vector<Rational> roots = roots_from_factors(lambdas);
  std::vector<std::string> warnings;
  for (const Rational& r : roots) {
    if (r >= 0) {
      warnings.push_back("NonNegativeRoot");
      break;
    }
  }
  return RecurrenceResult{std::move(weights), std::move(alpha),    rec,
                          closure,            std::move(product),  std::move(divisor),
                          std::move(roots),   std::move(warnings)};
}

std::string report(const MonomialInput& input, const RecurrenceResult& r) {
  std::ostringstream out;
  int n = input.size();
  out << "monomials:\n";
  for (int i = 0; i < n; ++i) {
    out << "  m_" << (i + 1) << " exponents (";
    for (int j = 0; j < n; ++j) {
      if (j) out << ", ";
      out << input.monomials[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    out << "), coefficient " << input.coefficients[static_cast<std::size_t>(i)].str()
        << "\n";
  }
  out << "reduction weights:\n";
  for (int i = 0; i < n; ++i) {
    out << "  u(" << (i + 1) << ") = (";
    for (int j = 0; j < n; ++j) {
      if (j) out << ", ";
      out << r.weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].str();
    }
    out << "), alpha_" << (i + 1) << " = "
        << r.alpha[static_cast<std::size_t>(i)].str() << "\n";
  }
  out << "one-step identities:\n";
  for (int i = 0; i < n; ++i) {
    Rational t_slope = 0, t_const = 0;
    for (int j = 0; j < n; ++j) {
      t_slope += r.weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                 input.distinguished[static_cast<std::size_t>(j)];
      t_const += r.weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                 Rational(input.form_exponents[static_cast<std::size_t>(j)] + 1);
    }
    out << "  m_" << (i + 1) << " * m^k = (" << t_slope.str() << "*k + "
        << t_const.str() << ") * b[m^k] - "
        << r.alpha[static_cast<std::size_t>(i)].str() << " * m^(k+1)\n";
  }
  out << "recurrence: (a - (" << r.recurrence.sigma.slope.str() << "*k + "
      << r.recurrence.sigma.constant.str() << ")*b)[m^k] = "
      << r.recurrence.rhs.str() << " * m^(k+1)\n";
  out << "closure: N = " << r.closure.degree << ", p = (";
  for (std::size_t i = 0; i < r.closure.powers.size(); ++i) {
    if (i) out << ", ";
    out << r.closure.powers[i];
  }
  out << ")\n";
  out << "annihilator initial form: " << render(r.product.to_element()) << "\n";
  out << "candidate divisor: " << render_factored(r.divisor) << "\n";
  if (!r.warnings.empty()) {
    out << "warnings:";
    for (const std::string& w : r.warnings) out << " " << w;
    out << "\n";
  }
  return out.str();
}

}  // namespace abcalc
