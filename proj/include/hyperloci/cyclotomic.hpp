#ifndef HYPERLOCI_CYCLOTOMIC_HPP
#define HYPERLOCI_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "hyperloci/bigfloat.hpp"
#include "hyperloci/rational.hpp"

namespace hyperloci {

// Element of the cyclotomic field Q(zeta_m), stored as the residue modulo
// the m-th cyclotomic polynomial: coeffs[k] is the coefficient of zeta_m^k,
// with exactly phi(m) coefficients.  Conductors congruent to 2 mod 4 are
// normalized away (Q(zeta_{2k}) = Q(zeta_k) for odd k), and a value whose
// coefficients live in a proper subfield keeps its stated conductor until
// reduce() is called.  Values are immutable after construction.
class CycNum {
 public:
  CycNum() : m_(1), c_(1, Rat(0)) {}
  /* implicit */ CycNum(const Rat& r) : m_(1), c_(1, r) {}
  /* implicit */ CycNum(long n) : m_(1), c_(1, Rat(n)) {}

  static CycNum zero() { return CycNum(); }
  static CycNum one() { return CycNum(Rat(1)); }
  // zeta_m^k
  static CycNum zeta(unsigned long m, long k = 1);
  static CycNum i();       // zeta_4
  static CycNum sqrt3();   // -i (zeta_3 - zeta_3^2), verified by squaring
  static CycNum sqrt5();   // 1 + 2 (zeta_5 + zeta_5^4), verified by squaring
  static CycNum omega();   // (-1+sqrt5)/2 = zeta_5 + zeta_5^4

  unsigned long conductor() const { return m_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat as_rational() const;  // throws if not rational

  CycNum embed(unsigned long m2) const;  // conductor must divide m2 (after normalization)
  CycNum reduce() const;                 // rewrite over the minimal conductor

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator/(const CycNum& o) const;  // throws DivisionByZero
  CycNum operator-() const;
  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  CycNum inv() const;
  CycNum pow(long e) const;

  // Galois automorphism zeta_m -> zeta_m^j, gcd(j, m) = 1.
  CycNum galois(unsigned long j) const;

  // Complex approximation via zeta_m -> exp(2 pi i / m), accurate to
  // |approx - exact| < 10^-digits.
  BigComplex approx(int digits) const;

  // Stable key for hashing / set membership (embeds nothing; callers that
  // need cross-conductor identity should reduce() first).
  std::string key() const;

  static constexpr int kDigitsCap = 60;

 private:
  CycNum(unsigned long m, std::vector<Rat> c) : m_(m), c_(std::move(c)) {}
  static std::pair<CycNum, CycNum> to_common(const CycNum& a, const CycNum& b);

  unsigned long m_;
  std::vector<Rat> c_;
};

inline CycNum operator*(const Rat& r, const CycNum& c) { return CycNum(r) * c; }
inline CycNum operator*(long n, const CycNum& c) { return CycNum(Rat(n)) * c; }
inline CycNum operator+(const Rat& r, const CycNum& c) { return CycNum(r) + c; }
inline CycNum operator-(const Rat& r, const CycNum& c) { return CycNum(r) - c; }

unsigned long euler_phi(unsigned long n);

// Monic integer coefficients of the m-th cyclotomic polynomial, low degree
// first, length phi(m)+1.  Cached.
const std::vector<Int>& cyclotomic_poly(unsigned long m);

}  // namespace hyperloci

#endif
