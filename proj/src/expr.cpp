#include "abcalc/expr.hpp"

#include <cctype>
#include <sstream>

#include "abcalc/errors.hpp"

namespace abcalc {

namespace {

struct ExprParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool peek_char(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool eat(char c) {
    if (peek_char(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::ostringstream msg;
    msg << "parse error at offset " << pos << ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg << ", ";
      msg << expected[i];
    }
    throw ParseError(pos, std::move(expected), msg.str());
  }

  Int parse_int_digits(const char* what) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == start) fail({what});
    return Int(std::string(text.substr(start, pos - start)));
  }

  Rational parse_rational_lit() {
    Int num = parse_int_digits("number");
    std::size_t save = pos;
    if (eat('/')) {
      skip_ws();
      if (pos < text.size() &&
          std::isdigit(static_cast<unsigned char>(text[pos]))) {
        Int den = parse_int_digits("denominator");
        if (den == 0) {
          pos = save + 1;
          fail({"nonzero denominator"});
        }
        return Rational(num, den);
      }
      pos = save;  // '/' belonged to something else (nothing else, actually)
    }
    return Rational(num);
  }

  // Signed rational inside S[...] lists.
  Rational parse_signed_rational() {
    skip_ws();
    bool neg = eat('-');
    if (!neg) eat('+');
    Rational r = parse_rational_lit();
    return neg ? Rational(-r) : r;
  }

  unsigned parse_uint(const char* what) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == start || pos - start > 6) fail({what});
    return static_cast<unsigned>(
        std::stoul(std::string(text.substr(start, pos - start))));
  }

  OperatorExpr parse_atom() {
    skip_ws();
    if (pos >= text.size()) {
      fail({"number", "a", "b", "b^-1", "(", "S["});
    }
    char c = text[pos];
    if (c == '(') {
      ++pos;
      OperatorExpr e = parse_expr();
      if (!eat(')')) fail({")"});
      return e;
    }
    if (c == 'a') {
      ++pos;
      return OperatorExpr{OperatorExpr::Kind::GenA};
    }
    if (c == 'b') {
      ++pos;
      // "b^-k" is part of the atom; a plain "b^k" is handled by the factor.
      std::size_t save = pos;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        std::size_t caret = pos;
        ++pos;
        skip_ws();
        if (pos < text.size() && text[pos] == '-') {
          ++pos;
          unsigned k = parse_uint("exponent");
          OperatorExpr e{OperatorExpr::Kind::GenBInv};
          e.binv_exp = static_cast<int>(k);
          return e;
        }
        pos = caret;  // defer to the factor-level "^ uint"
      } else {
        pos = save;
      }
      return OperatorExpr{OperatorExpr::Kind::GenB};
    }
    if (c == 'S') {
      ++pos;
      if (!eat('[')) fail({"["});
      OperatorExpr e{OperatorExpr::Kind::Series};
      e.series_coeffs.push_back(parse_signed_rational());
      while (eat(',')) {
        e.series_coeffs.push_back(parse_signed_rational());
      }
      if (!eat(']')) fail({"]", ","});
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      OperatorExpr e{OperatorExpr::Kind::RationalLit};
      e.value = parse_rational_lit();
      return e;
    }
    fail({"number", "a", "b", "b^-1", "(", "S["});
  }

  OperatorExpr parse_factor() {
    OperatorExpr base = parse_atom();
    skip_ws();
    if (peek_char('^')) {
      ++pos;
      unsigned e = parse_uint("exponent");
      OperatorExpr p{OperatorExpr::Kind::Pow};
      p.exponent = e;
      p.children.push_back(std::move(base));
      return p;
    }
    return base;
  }

  OperatorExpr parse_term() {
    OperatorExpr acc = parse_factor();
    while (eat('*')) {
      OperatorExpr m{OperatorExpr::Kind::Mul};
      m.children.push_back(std::move(acc));
      m.children.push_back(parse_factor());
      acc = std::move(m);
    }
    return acc;
  }

  OperatorExpr parse_expr() {
    skip_ws();
    bool negate = false;
    if (eat('-')) {
      negate = true;
    } else {
      eat('+');
    }
    OperatorExpr acc = parse_term();
    if (negate) {
      OperatorExpr neg{OperatorExpr::Kind::Sub};
      OperatorExpr zero{OperatorExpr::Kind::RationalLit};
      zero.value = 0;
      neg.children.push_back(std::move(zero));
      neg.children.push_back(std::move(acc));
      acc = std::move(neg);
    }
    for (;;) {
      skip_ws();
      if (eat('+')) {
        OperatorExpr add{OperatorExpr::Kind::Add};
        add.children.push_back(std::move(acc));
        add.children.push_back(parse_term());
        acc = std::move(add);
      } else if (eat('-')) {
        OperatorExpr sub{OperatorExpr::Kind::Sub};
        sub.children.push_back(std::move(acc));
        sub.children.push_back(parse_term());
        acc = std::move(sub);
      } else {
        return acc;
      }
    }
  }
};

}  // namespace

OperatorExpr parse_expression(std::string_view text) {
  ExprParser p{text};
  OperatorExpr e = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) {
    throw ParseError(p.pos, {"end of input", "+", "-", "*", "^"},
                     "parse error at offset " + std::to_string(p.pos) +
                         ": trailing input");
  }
  return e;
}

NcElement evaluate(const OperatorExpr& expr, bool laurent_mode,
                   int laurent_window) {
  switch (expr.kind) {
    case OperatorExpr::Kind::RationalLit:
      return expr.value == 0 ? NcElement::zero(laurent_mode)
                             : NcElement::term(expr.value, 0, 0);
    case OperatorExpr::Kind::GenA:
      return NcElement::term(1, 1, 0);
    case OperatorExpr::Kind::GenB:
      return NcElement::term(1, 0, 1);
    case OperatorExpr::Kind::GenBInv: {
      if (!laurent_mode) {
        throw LaurentNotAllowed("b^-" + std::to_string(expr.binv_exp) +
                                " needs Laurent mode");
      }
      if (expr.binv_exp > laurent_window) {
        throw LaurentWindowExceeded("b^-" + std::to_string(expr.binv_exp) +
                                    " exceeds the Laurent window");
      }
      return NcElement::term(1, 0, -expr.binv_exp);
    }
    case OperatorExpr::Kind::Series: {
      NcElement acc(laurent_mode);
      for (std::size_t k = 0; k < expr.series_coeffs.size(); ++k) {
        acc.add_term(expr.series_coeffs[k], 0, static_cast<int>(k));
      }
      return acc;
    }
    case OperatorExpr::Kind::Add:
      return evaluate(expr.children[0], laurent_mode, laurent_window) +
             evaluate(expr.children[1], laurent_mode, laurent_window);
    case OperatorExpr::Kind::Sub:
      return evaluate(expr.children[0], laurent_mode, laurent_window) -
             evaluate(expr.children[1], laurent_mode, laurent_window);
    case OperatorExpr::Kind::Mul:
      return multiply(evaluate(expr.children[0], laurent_mode, laurent_window),
                      evaluate(expr.children[1], laurent_mode, laurent_window),
                      laurent_window);
    case OperatorExpr::Kind::Pow:
      return power(evaluate(expr.children[0], laurent_mode, laurent_window),
                   expr.exponent, laurent_window);
  }
  throw Error(ErrorKind::Domain, "internal: unknown expression node");
}

}  // namespace abcalc
