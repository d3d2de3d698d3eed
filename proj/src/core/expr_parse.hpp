#pragma once

#include "zeta_expr.hpp"

#include <set>
#include <string>
#include <string_view>

namespace qzeta {

struct ExprOptions {
  // When set, bracketed symbols must be members (UndeclaredSymbol otherwise).
  const std::set<std::string> *symbols = nullptr;
  bool allow_T = true;
  bool allow_factors = true;
  // Position of the first character, for error reporting inside larger files.
  int line = 1;
  int column = 1;
};

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power ('*' power)*
//   power  := atom ['^' exp]
//   atom   := INT | 'L' | 'T' | '[' NAME ']' | 'Fac(' Q ';' Q ')' | '(' expr ')'
//   exp    := ['-'] INT | '(' ['-'] INT ['/' INT] ')'
// Rational exponents apply to unit monomials only; anything else takes a
// nonnegative integer exponent.
ZetaExpr parse_zeta_expr(std::string_view text, const ExprOptions &opts = {});
MotPoly parse_motpoly(std::string_view text, const ExprOptions &opts = {});

}  // namespace qzeta
