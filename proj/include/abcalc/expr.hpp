#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "abcalc/nc_element.hpp"

namespace abcalc {

// Syntax tree over rational literals, the generators a / b / b^-k, the
// binary operators + - * ^ and series literals S[c0, c1, ...].
struct OperatorExpr {
  enum class Kind {
    RationalLit,
    GenA,
    GenB,
    GenBInv,  // b^-k, exponent in binv_exp
    Series,
    Add,
    Sub,
    Mul,
    Pow,
  };

  Kind kind;
  Rational value;                       // RationalLit
  int binv_exp = 1;                     // GenBInv
  unsigned exponent = 0;                // Pow
  std::vector<Rational> series_coeffs;  // Series
  std::vector<OperatorExpr> children;
};

// Grammar:
//   expr   := ["+"|"-"] term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ["^" uint]
//   atom   := rational | "a" | "b" | "b^-" uint | "(" expr ")"
//           | "S[" srational ("," srational)* "]"
// Whitespace insensitive, left-associative. ParseError carries the offset and
// the expected-token set.
OperatorExpr parse_expression(std::string_view text);

// Evaluates the tree in A (or A[b^{-1}] when laurent_mode is set; b^-k
// outside Laurent mode is LaurentNotAllowed). Series literals evaluate to the
// exact polynomial in b they spell.
NcElement evaluate(const OperatorExpr& expr, bool laurent_mode = false,
                   int laurent_window = kDefaultLaurentWindow);

}  // namespace abcalc
