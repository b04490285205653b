#ifndef HYPERLOCI_RATMAP_HPP
#define HYPERLOCI_RATMAP_HPP

#include <utility>

#include "hyperloci/poly.hpp"

namespace hyperloci {

// Quotient of coprime polynomials nf/df with df monic.  Normalized on
// construction: common factor removed, denominator scaled monic.
class RationalMap {
 public:
  RationalMap(Poly nf, Poly df);
  explicit RationalMap(Poly nf) : RationalMap(std::move(nf), Poly::one()) {}

  const Poly& nf() const { return nf_; }
  const Poly& df() const { return df_; }
  long degree() const { return std::max(nf_.degree(), df_.degree()); }

  bool operator==(const RationalMap& o) const { return nf_ == o.nf_ && df_ == o.df_; }

  // nf(x) - t*df(x) for a concrete t.
  Poly fiber_equation(const CycNum& t) const { return nf_ - df_ * t; }

  // Wronskian nf'*df - nf*df'; its roots are the finite critical points.
  Poly wronskian() const { return nf_.derivative() * df_ - nf_ * df_.derivative(); }

  std::string to_string(const std::string& var = "x") const;

 private:
  Poly nf_, df_;
};

// D(t) = disc_x(nf(x) - t*df(x)) as an exact polynomial in t, computed by
// evaluation at 2*deg+1 rational points and Lagrange interpolation.
// Requires deg(m) >= 2.
Poly discriminant_in_t(const RationalMap& m);

// Largest s >= 1 with m expressible as g(x^s); returns (s, g).
std::pair<long, RationalMap> power_decompose(const RationalMap& m);

}  // namespace hyperloci

#endif
