#ifndef HYPERLOCI_NUMERIC_HPP
#define HYPERLOCI_NUMERIC_HPP

#include <optional>
#include <vector>

#include "hyperloci/poly.hpp"

namespace hyperloci {

// All complex roots of a squarefree polynomial, each accurate to roughly
// `digits` decimal digits (Durand-Kerner iteration at elevated precision).
std::vector<BigComplex> complex_roots(const Poly& squarefree, int digits);

// Attempt to match a (high-precision) complex approximation to an exact
// element of the working cyclotomic tower.  Tries rationals and rational
// multiples / rational combinations of I, sqrt3, sqrt5, sqrt15.  The caller
// must verify the candidate exactly; this only proposes.
std::optional<CycNum> recognize_cyc(const BigComplex& z, int digits);

}  // namespace hyperloci

#endif
