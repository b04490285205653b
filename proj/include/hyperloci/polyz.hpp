#ifndef HYPERLOCI_POLYZ_HPP
#define HYPERLOCI_POLYZ_HPP

#include <vector>

#include "hyperloci/rational.hpp"

namespace hyperloci {

// Dense integer polynomials, low degree first, no trailing zeros.
// Workhorse for resultants and gcds of rational-coefficient polynomials,
// where naive field arithmetic would blow up.
using PolyZ = std::vector<Int>;

void polyz_trim(PolyZ& p);
long polyz_deg(const PolyZ& p);  // -1 for zero
PolyZ polyz_mul(const PolyZ& a, const PolyZ& b);
PolyZ polyz_derivative(const PolyZ& a);
Int polyz_content(const PolyZ& a);
PolyZ polyz_primitive(const PolyZ& a);

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
PolyZ polyz_prem(const PolyZ& a, const PolyZ& b);

// Subresultant-PRS gcd (primitive, positive leading coefficient).
PolyZ polyz_gcd(PolyZ a, PolyZ b);

// Exact resultant of two nonzero integer polynomials.
Rat polyz_resultant(const PolyZ& a, const PolyZ& b);

}  // namespace hyperloci

#endif
