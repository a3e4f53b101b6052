#pragma once

#include "abcalc/fresco.hpp"

namespace abcalc {

struct SaturationConfig {
  int max_iter = 64;
  int laurent_window = 16;
  int precision = 32;
};

struct SaturationResult {
  Polynomial char_poly;
  Polynomial min_poly;
  int iterations = 0;
};

// Saturates the lattice under b^{-1}a by iterated generation and
// valuation-pivot column reduction, then reads the action of -b^{-1}a on the
// saturation modulo b and returns its characteristic and minimal polynomials.
// Failure modes are the configured bounds: NotStabilized (max_iter),
// LaurentWindowExceeded, PrecisionExhausted.
SaturationResult saturate_bernstein(const AbModulePresentation& m,
                                    const SaturationConfig& config = {});

// Characteristic polynomial of a square rational matrix (row-major), by the
// Faddeev-LeVerrier recursion; exact.
Polynomial char_poly(const std::vector<std::vector<Rational>>& matrix);

// Minimal polynomial of a square rational matrix; exact, monic.
Polynomial min_poly(const std::vector<std::vector<Rational>>& matrix);

}  // namespace abcalc
