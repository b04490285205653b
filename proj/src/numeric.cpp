#include "hyperloci/numeric.hpp"

#include "hyperloci/error.hpp"

namespace hyperloci {

std::vector<BigComplex> complex_roots(const Poly& squarefree, int digits) {
  long n = squarefree.degree();
  if (n <= 0) return {};
  mpfr_prec_t prec = static_cast<mpfr_prec_t>((digits + 30) * 3.33) + 64;
  int adigits = std::min(CycNum::kDigitsCap, digits + 20);

  std::vector<BigComplex> coef(n + 1, BigComplex(prec));
  for (long k = 0; k <= n; ++k) coef[k] = squarefree.coeff(k).approx(adigits);
  // normalize to monic numerically
  for (long k = 0; k < n; ++k) coef[k] = coef[k] / coef[n];
  coef[n] = BigComplex(BigFloat::from_long(1, prec), BigFloat::from_long(0, prec));

  auto eval = [&](const BigComplex& z) {
    BigComplex acc(prec);
    for (long k = n; k >= 0; --k) acc = acc * z + coef[k];
    return acc;
  };

  // Starting points spread on a spiral, the classical (0.4 + 0.9i)^k seeds.
  std::vector<BigComplex> roots;
  roots.reserve(n);
  BigComplex seed(BigFloat::from_rat(Rat(2, 5), prec), BigFloat::from_rat(Rat(9, 10), prec));
  BigComplex cur(BigFloat::from_long(1, prec), BigFloat::from_long(0, prec));
  for (long k = 0; k < n; ++k) {
    cur = cur * seed;
    roots.push_back(cur);
  }

  BigFloat tol = BigFloat::pow10(-(digits + 15), prec);
  for (int iter = 0; iter < 2000; ++iter) {
    BigFloat worst = BigFloat::from_long(0, prec);
    for (long i = 0; i < n; ++i) {
      BigComplex denom(BigFloat::from_long(1, prec), BigFloat::from_long(0, prec));
      for (long j = 0; j < n; ++j) {
        if (j == i) continue;
        denom = denom * (roots[i] - roots[j]);
      }
      BigComplex delta = eval(roots[i]) / denom;
      roots[i] = roots[i] - delta;
      BigFloat d = delta.abs();
      if (worst < d) worst = d;
    }
    if (worst < tol) break;
  }
  return roots;
}

namespace {

bool reconstruct_real(const BigFloat& x, int digits, Rat& out) {
  mpfr_prec_t prec = x.prec();
  Int bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 10, 12);
  BigFloat tol = BigFloat::pow10(-(digits - 8), prec);
  return rational_reconstruct(x, bound, tol, out);
}

}  // namespace

std::optional<CycNum> recognize_cyc(const BigComplex& z, int digits) {
  mpfr_prec_t prec = z.re.prec();
  BigFloat tiny = BigFloat::pow10(-(digits - 5), prec);
  bool real_zero = z.re.abs() < tiny;
  bool imag_zero = z.im.abs() < tiny;
  int adigits = std::min(CycNum::kDigitsCap, digits);

  struct Unit {
    CycNum value;
    bool imaginary;  // value is purely imaginary
  };
  std::vector<Unit> units = {
      {CycNum::one(), false},
      {CycNum::sqrt3(), false},
      {CycNum::sqrt5(), false},
      {CycNum::sqrt3() * CycNum::sqrt5(), false},
      {CycNum::i(), true},
      {CycNum::i() * CycNum::sqrt3(), true},
      {CycNum::i() * CycNum::sqrt5(), true},
      {CycNum::i() * CycNum::sqrt3() * CycNum::sqrt5(), true},
  };

  // Pure rational multiple of a single basis surd.
  for (const Unit& u : units) {
    if (u.imaginary ? !real_zero : !imag_zero) continue;
    BigFloat unit_val = u.imaginary ? u.value.approx(adigits).im : u.value.approx(adigits).re;
    BigFloat target = (u.imaginary ? z.im : z.re) / unit_val;
    Rat q;
    if (reconstruct_real(target, digits, q)) {
      if (q == 0 && !(real_zero && imag_zero)) continue;
      return u.value * CycNum(q);
    }
  }
  // a + b*surd with a, b rational (real or imaginary surd).
  for (size_t k = 1; k < units.size(); ++k) {
    const Unit& u = units[k];
    Rat a, b;
    if (u.imaginary) {
      if (!reconstruct_real(z.re, digits, a)) continue;
      BigFloat unit_val = u.value.approx(adigits).im;
      if (!reconstruct_real(z.im / unit_val, digits, b)) continue;
    } else {
      if (!imag_zero) continue;
      // a + b*sqrtd real: split via two-unit projection is ambiguous;
      // try b from fractional structure: not solvable from one number,
      // so only attempt when a = 0 handled above.  Skip.
      continue;
    }
    return CycNum(a) + u.value * CycNum(b);
  }
  return std::nullopt;
}

}  // namespace hyperloci
