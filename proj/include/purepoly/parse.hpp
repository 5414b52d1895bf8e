#pragma once

#include <string_view>

#include "purepoly/poly_q.hpp"

namespace purepoly {

/// EBNF accepted by parse_poly, printed by the CLI on usage errors.
inline constexpr std::string_view kPolynomialGrammar =
    "expr     := term (('+'|'-') term)*\n"
    "term     := unary (('*'|'/')? unary)*      (division only by constants)\n"
    "unary    := '-' unary | factor\n"
    "factor   := base ('^' nat)?\n"
    "base     := rational | 'x' | '(' expr ')'\n"
    "rational := int ('/' posint)?\n";

/// Parses a univariate expression in x over Q and returns the expanded polynomial.
/// Throws ParseError with the offending position.
PolyQ parse_poly(std::string_view text);

}  // namespace purepoly
