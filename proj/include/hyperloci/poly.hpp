#ifndef HYPERLOCI_POLY_HPP
#define HYPERLOCI_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hyperloci/cyclotomic.hpp"
#include "hyperloci/polyz.hpp"

namespace hyperloci {

// Univariate polynomial over the cyclotomic field, coefficients lowest
// degree first, no trailing zero coefficient.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<CycNum> coeffs) : c_(std::move(coeffs)) { trim(); }
  /* implicit */ Poly(const CycNum& constant) : c_{constant} { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(CycNum::one()); }
  static Poly x() { return monomial(1, CycNum::one()); }
  static Poly monomial(size_t deg, const CycNum& coeff);
  // Convenience: integer coefficients, lowest first.
  static Poly from_ints(const std::vector<long>& coeffs);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<CycNum>& coeffs() const { return c_; }
  const CycNum& lc() const { return c_.back(); }
  CycNum coeff(size_t k) const { return k < c_.size() ? c_[k] : CycNum::zero(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const CycNum& s) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divrem(const Poly& o) const;
  Poly derivative() const;
  Poly monic() const;
  Poly pow(unsigned long e) const;
  CycNum eval(const CycNum& v) const;
  BigComplex eval_approx(const BigComplex& z, mpfr_prec_t prec) const;

  // All coefficients rational?
  bool is_rational() const;
  // Clears denominators: returns integer polynomial and the scalar s with
  // *this = (1/s) * zpoly.  Only valid when is_rational().
  std::pair<PolyZ, Int> to_polyz() const;

  std::string key() const;

 private:
  void trim();
  std::vector<CycNum> c_;
};

// Monic gcd over the field (fast integer path when both inputs rational).
Poly poly_gcd(const Poly& a, const Poly& b);

// Resultant of two nonzero polynomials.
CycNum poly_resultant(const Poly& a, const Poly& b);

// Squarefree decomposition: returns list of (multiplicity, factor) with
// distinct multiplicities dropped to monic factors, product of
// factor^multiplicity = input up to a constant.  Ordered by decreasing
// multiplicity.
struct SquarefreePart {
  long multiplicity;
  Poly factor;
};
std::vector<SquarefreePart> squarefree_decompose(const Poly& a);

// The squarefree part (radical), monic.
Poly squarefree_part(const Poly& a);

// Profile [(multiplicity, degree-of-that-part)] ordered by decreasing
// multiplicity.
std::vector<std::pair<long, long>> multiplicity_profile(const Poly& a);

}  // namespace hyperloci

#endif
