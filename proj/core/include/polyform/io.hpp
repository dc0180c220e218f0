#pragma once

#include <optional>
#include <string>

#include "polyform/form.hpp"

namespace polyform {

// Coordinate letter family of an expression: x-names address the simplex
// side, u-names the sphere/ambient side. The algebra underneath is the same
// either way; the distinction only drives naming and chart-direction checks.
enum class CoordSystem { x, u };

// A parsed expression together with what was inferred about it. coords is
// empty when no variable or differential appeared (pure rational constants).
struct FormExpression {
  std::string source;
  Form form;
  std::optional<CoordSystem> coords;
};

// Grammar: variables x1..x9 / u1..u9 (aliases x,y,z / u,v,w when n = 2),
// differentials d<variable>, rational literals p/q, '*' products, '+'/'-',
// parentheses. '^' after a bare variable with an integer literal on the
// right is a power; every other '^' is a wedge. Mixing x- and u-names in
// one expression raises CoordinateError; syntax errors raise ParseError
// with a 1-based character position. The result is an ambient form in
// n+1 variables, not reduced modulo any ideal.
FormExpression parse_form(const std::string& text, int n);

// Canonical text rendering: terms sorted by coefficient monomial (graded
// lex, high degree first) then index set, coefficients +-1 elided next to a
// variable or differential part, powers via '^', wedges via '^' between
// differentials, '*' elsewhere. The zero form renders as "0". parse_form of
// the output reproduces the form exactly.
std::string format_form(const Form& a, CoordSystem coords);

// Variable name for 1-based index i out of nvars ("x2", or "y" in the
// three-variable alias scheme).
std::string variable_name(CoordSystem coords, int i, int nvars);

// The JSON encoding of one form: a list of
//   {"indices": [ints], "coeff": [{"exps": [ints], "num": str, "den": str}]}
// entries in index-set order, coefficients in term order, numerator and
// denominator as decimal strings. Deterministic: equal forms serialize to
// identical bytes.
std::string form_to_json(const Form& a);

}  // namespace polyform
