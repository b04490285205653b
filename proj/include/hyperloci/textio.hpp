#ifndef HYPERLOCI_TEXTIO_HPP
#define HYPERLOCI_TEXTIO_HPP

#include <string>

#include "hyperloci/poly.hpp"

namespace hyperloci {

// Rendering grammar for constants: integers, a/b rationals, I (= zeta_4),
// z<m>^<k> for zeta_m^k, sqrt3, sqrt5, combined with + - * / ^ and parens.
// Polynomials use the same grammar with a variable symbol.

std::string cyc_to_string(const CycNum& v);

// Renders high degree first, e.g. "x^8 + 14*x^4 + 1".
std::string poly_to_string(const Poly& p, const std::string& var = "x");

// Parses an expression over the constant grammar and one variable; the
// result must be a polynomial (constant denominator).
Poly parse_poly(const std::string& text, const std::string& var = "x");

// Parses an expression that may have a polynomial denominator; returns
// numerator and denominator (not normalized).
std::pair<Poly, Poly> parse_ratfunc(const std::string& text, const std::string& var = "x");

CycNum parse_cyc(const std::string& text);

}  // namespace hyperloci

#endif
