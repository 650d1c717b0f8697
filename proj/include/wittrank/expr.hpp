#pragma once

#include "wittrank/laurent.hpp"

#include <string_view>

namespace wittrank {

/// Parses an element of Q(t) from text.
///
///   expr     := term (('+'|'-') term)*
///   term     := unary (('*'|'/') unary)*
///   unary    := '-'? factor
///   factor   := base ('^' signed-integer)?
///   base     := rational | VAR | '(' expr ')'
///   rational := integer ('/' positive-integer)?
///
/// Whitespace is insignificant and '^' binds tighter than unary minus.
/// "3/2^2" is (3/2)^2: an integer literal directly followed by '/' and another
/// integer literal is read as one rational.
///
/// Throws ParseError (with byte offset) on malformed text and MathError on
/// division by the zero polynomial.
RationalFunction parse_expr(std::string_view text, char var = 't');

/// Parses a polynomial in `var` with nonnegative exponents, e.g. "x^2 - x - 1".
Poly parse_poly(std::string_view text, char var = 'x');

}  // namespace wittrank
