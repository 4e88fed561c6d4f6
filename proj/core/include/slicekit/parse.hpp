#pragma once

#include <string>
#include <string_view>

#include "slicekit/laurent.hpp"
#include "slicekit/polynomial.hpp"

namespace slicekit {

// Parse an expression over the named variables into a Polynomial.
//
// Grammar (whitespace insensitive, products need an explicit '*'):
//   expr     := term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := '-' factor | atom ('^' natural)?
//   atom     := rational | variable | '(' expr ')'
//   rational := natural ('/' natural)?
//   natural  := [0-9]+          (arbitrary precision)
//   variable := [A-Za-z_][A-Za-z0-9_]*
//
// Unknown identifiers, negative exponents, zero denominators and stray
// tokens raise ParseError with a 1-based line/column position.
Polynomial parse_polynomial(std::string_view text, const VarContext& ctx);

// Canonical rendering: terms in descending graded-lex order, explicit '*'
// between factors, '^' for powers, coefficients as integers or 'a/b'.  The
// output parses back to an equal polynomial.
std::string format_polynomial(const Polynomial& p);

// Rendering for report output: coefficients of each power of the parameter
// in parentheses, descending by exponent, e.g. "(x)*t^2 + (y - x*z)*t".
std::string format_laurent(const LaurentPoly& a, std::string_view parameter = "t");

}  // namespace slicekit
