#pragma once

#include <string>
#include <string_view>

#include "eqres/factored.hpp"
#include "eqres/poly.hpp"

namespace eqres {

/// Parse the polynomial grammar: terms joined by +/-, a term an optional
/// rational coefficient and variable powers X^k, Yi^k joined by '*';
/// parenthesized subexpressions with + - * ^ are expanded.  Variables are
/// X and Y1..Ym.  Throws ParseError with a position on bad input.
Poly parse_poly(std::string_view text, std::size_t num_y);

/// Canonical printing in graded-lex term order (highest total degree
/// first, then lexicographically by exponents with X most significant).
/// parse_poly(print_poly(p)) == p for every canonical p.
std::string print_poly(const Poly& p);

/// Fraction grammar: the polynomial grammar extended with '/', whose right
/// operand must be a product of powers of linear forms and nonzero
/// constants, e.g. "X / ((X+Y1)*(X-Y1))" or "1/X^2".
FactoredRational parse_fraction(std::string_view text, std::size_t num_y);

std::string print_fraction(const FactoredRational& f);

std::string print_linform(const LinForm& l);

}  // namespace eqres
