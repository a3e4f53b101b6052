#include "abcalc/saturation.hpp"

#include <algorithm>
#include <optional>

#include "abcalc/errors.hpp"

namespace abcalc {

namespace {

using Vec = std::vector<LaurentSeries>;  // coordinates in the ambient basis

struct Lattice {
  // Triangular generating set: column j has its pivot in row pivot_row[j],
  // where it is the entry of minimal valuation, and columns > j vanish there.
  std::vector<Vec> cols;
  std::vector<int> pivot_row;
};

void check_vec_window(const Vec& v, int window) {
  for (const LaurentSeries& s : v) {
    if (!s.is_zero() && s.valuation() < -window) {
      throw LaurentWindowExceeded(
          "lattice vector valuation " + std::to_string(s.valuation()) +
          " fell below the Laurent window -" + std::to_string(window));
    }
  }
}

// a * v for v with C((b)) coordinates: a(S e_j) = S (a e_j) + b^2 S' e_j.
Vec apply_a(const std::vector<std::vector<LaurentSeries>>& a_matrix,
            const Vec& v) {
  std::size_t r = v.size();
  Vec out(r);
  for (std::size_t i = 0; i < r; ++i) {
    LaurentSeries acc;
    for (std::size_t j = 0; j < r; ++j) {
      if (v[j].is_zero() && v[j].exact()) continue;
      acc += a_matrix[i][j] * v[j];
    }
    acc += v[i].derivative().shifted(2);
    out[i] = std::move(acc);
  }
  return out;
}

Vec apply_binv_a(const std::vector<std::vector<LaurentSeries>>& a_matrix,
                 const Vec& v, int window) {
  Vec out = apply_a(a_matrix, v);
  for (LaurentSeries& s : out) s = s.shifted(-1);
  check_vec_window(out, window);
  return out;
}

// Reduces v against the triangular basis. Returns the C[[b]] coefficients
// when v lies in the lattice, nullopt otherwise.
std::optional<std::vector<LaurentSeries>> solve_in_lattice(const Lattice& lat,
                                                           Vec v) {
  std::vector<LaurentSeries> coeffs(lat.cols.size());
  for (std::size_t j = 0; j < lat.cols.size(); ++j) {
    int row = lat.pivot_row[j];
    const LaurentSeries& pivot = lat.cols[j][static_cast<std::size_t>(row)];
    const LaurentSeries& target = v[static_cast<std::size_t>(row)];
    if (target.is_zero()) continue;
    if (target.valuation() < pivot.valuation()) return std::nullopt;
    LaurentSeries c = divide(target, pivot);
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] -= c * lat.cols[j][i];
    }
    coeffs[j] = std::move(c);
  }
  for (const LaurentSeries& s : v) {
    if (!s.is_zero()) return std::nullopt;
  }
  return coeffs;
}

// Valuation-pivot column reduction: brings the generating set into the
// triangular form above, discarding columns that reduce to zero.
Lattice reduce_columns(std::vector<Vec> gens, std::size_t rank) {
  Lattice lat;
  std::vector<bool> row_used(rank, false);
  while (lat.cols.size() < rank) {
    // Globally minimal valuation entry over unused rows.
    int best_val = kPrecInf;
    std::size_t best_col = 0, best_row = 0;
    bool found = false;
    for (std::size_t c = 0; c < gens.size(); ++c) {
      for (std::size_t i = 0; i < rank; ++i) {
        if (row_used[i] || gens[c][i].is_zero()) continue;
        if (gens[c][i].valuation() < best_val) {
          best_val = gens[c][i].valuation();
          best_col = c;
          best_row = i;
          found = true;
        }
      }
    }
    if (!found) break;
    Vec pivot_col = std::move(gens[best_col]);
    gens.erase(gens.begin() + static_cast<long>(best_col));
    // Clear this row from every remaining generator; entries there have
    // valuation >= the pivot's by minimality, so the factors stay in C[[b]].
    // Columns accepted later are then zero at every earlier pivot row, which
    // is all the triangularity solve_in_lattice needs.
    const LaurentSeries& pivot = pivot_col[best_row];
    for (Vec& g : gens) {
      if (g[best_row].is_zero()) continue;
      LaurentSeries f = divide(g[best_row], pivot);
      for (std::size_t i = 0; i < rank; ++i) g[i] -= f * pivot_col[i];
    }
    row_used[best_row] = true;
    lat.cols.push_back(std::move(pivot_col));
    lat.pivot_row.push_back(static_cast<int>(best_row));
  }
  return lat;
}

}  // namespace

Polynomial char_poly(const std::vector<std::vector<Rational>>& matrix) {
  std::size_t n = matrix.size();
  // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
  // M_{k+1} = A (M_k + c_{n-k} I), c_{n-k-1} = -tr(M_{k+1}) / (k+1).
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    // m = A * m
    std::vector<std::vector<Rational>> next(n,
                                            std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (matrix[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          next[i][j] += matrix[i][l] * m[l][j];
        }
      }
    }
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += next[i][i];
    Rational ck = -tr / Rational(static_cast<int>(k));
    c[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) next[i][i] += ck;
    m = std::move(next);
  }
  return Polynomial(std::move(c));
}

Polynomial min_poly(const std::vector<std::vector<Rational>>& matrix) {
  std::size_t n = matrix.size();
  // Krylov on the flattened powers: find the first linear dependence among
  // I, A, A^2, ... via incremental Gaussian elimination.
  std::vector<std::vector<Rational>> rows;      // reduced power vectors
  std::vector<std::vector<Rational>> combos;    // expression in earlier powers
  std::vector<std::size_t> lead_cols;
  std::vector<std::vector<Rational>> power(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  for (std::size_t d = 0;; ++d) {
    std::vector<Rational> v(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = power[i][j];
    }
    std::vector<Rational> combo(d + 1, Rational(0));
    combo[d] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Rational f = v[lead_cols[r]];  // rows are normalized with lead 1
      if (f == 0) continue;
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * rows[r][c];
      for (std::size_t c = 0; c < combos[r].size(); ++c) {
        combo[c] -= f * combos[r][c];
      }
    }
    std::size_t lead = v.size();
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] != 0) {
        lead = c;
        break;
      }
    }
    if (lead == v.size()) {
      // A^d = -(combo_0 I + ... + combo_{d-1} A^{d-1}) up to the sign fold.
      std::vector<Rational> coeffs(combo.begin(), combo.end());
      return Polynomial(std::move(coeffs));
    }
    Rational inv = Rational(1) / v[lead];
    for (auto& x : v) x *= inv;
    for (auto& x : combo) x *= inv;
    rows.push_back(std::move(v));
    combos.push_back(std::move(combo));
    lead_cols.push_back(lead);
    // next power
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (matrix[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          next[i][j] += matrix[i][l] * power[l][j];
        }
      }
    }
    power = std::move(next);
  }
}

SaturationResult saturate_bernstein(const AbModulePresentation& m,
                                    const SaturationConfig& config) {
  m.validate();
  if (config.precision < 2) {
    throw Error(ErrorKind::Domain, "saturation needs precision >= 2");
  }
  std::size_t r = static_cast<std::size_t>(m.rank);
  std::vector<std::vector<LaurentSeries>> a_matrix(r,
                                                   std::vector<LaurentSeries>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      a_matrix[i][j] =
          LaurentSeries(m.a_matrix[i][j].truncated(config.precision));
    }
  }
  // Start from the module basis itself.
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < r; ++j) {
    Vec e(r);
    for (std::size_t i = 0; i < r; ++i) {
      e[i] = (i == j) ? LaurentSeries(TruncatedSeries::one())
                      : LaurentSeries();
    }
    // Bound the basis precision so downstream division stays certified.
    for (LaurentSeries& s : e) s = s.truncated(config.precision);
    gens.push_back(std::move(e));
  }
  Lattice lat = reduce_columns(std::move(gens), r);
  if (lat.cols.size() != r) {
    throw Error(ErrorKind::Domain, "module basis failed to triangularize");
  }

  int iterations = 0;
  for (;;) {
    std::vector<Vec> images;
    bool stable = true;
    for (const Vec& g : lat.cols) {
      Vec w = apply_binv_a(a_matrix, g, config.laurent_window);
      if (!solve_in_lattice(lat, w)) stable = false;
      images.push_back(std::move(w));
    }
    if (stable) break;
    if (iterations >= config.max_iter) {
      throw NotStabilized("saturation did not stabilize within " +
                          std::to_string(config.max_iter) + " iterations");
    }
    ++iterations;
    std::vector<Vec> extended;
    for (const Vec& g : lat.cols) extended.push_back(g);
    for (Vec& w : images) extended.push_back(std::move(w));
    lat = reduce_columns(std::move(extended), r);
    if (lat.cols.size() != r) {
      throw PrecisionExhausted(
          "lattice rank collapsed during reduction; raise the precision");
    }
  }

  // Matrix of -b^{-1} a on the saturated basis, then modulo b.
  std::vector<std::vector<Rational>> action(r, std::vector<Rational>(r, Rational(0)));
  for (std::size_t j = 0; j < r; ++j) {
    Vec w = apply_binv_a(a_matrix, lat.cols[j], config.laurent_window);
    for (LaurentSeries& s : w) s = -s;
    auto coeffs = solve_in_lattice(lat, std::move(w));
    if (!coeffs) {
      throw Error(ErrorKind::Domain,
                  "internal: stabilized lattice rejected its own image");
    }
    for (std::size_t i = 0; i < r; ++i) {
      const LaurentSeries& c = (*coeffs)[i];
      if (c.is_zero() && c.precision() < 1) {
        throw PrecisionExhausted("action matrix entry lost its constant term");
      }
      if (!c.is_zero() && c.valuation() < 0) {
        throw Error(ErrorKind::Domain,
                    "internal: action coefficient fell outside C[[b]]");
      }
      action[i][j] = c.is_zero() ? Rational(0) : c.coeff(0);
    }
  }
  SaturationResult out;
  out.char_poly = char_poly(action);
  out.min_poly = min_poly(action);
  out.iterations = iterations;
  return out;
}

}  // namespace abcalc
