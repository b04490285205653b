#ifndef HYPERLOCI_BIGFLOAT_HPP
#define HYPERLOCI_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "hyperloci/rational.hpp"

namespace hyperloci {

// Thin RAII wrapper around mpfr_t.  Precision is fixed per value; binary
// operations take the max precision of their operands.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat from_rat(const Rat& r, mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_set_q(x.v_, r.get_mpq_t(), MPFR_RNDN);
    return x;
  }
  static BigFloat from_long(long n, mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_set_si(x.v_, n, MPFR_RNDN);
    return x;
  }
  static BigFloat pi(mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_const_pi(x.v_, MPFR_RNDN);
    return x;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  BigFloat operator+(const BigFloat& o) const { return bin(o, mpfr_add); }
  BigFloat operator-(const BigFloat& o) const { return bin(o, mpfr_sub); }
  BigFloat operator*(const BigFloat& o) const { return bin(o, mpfr_mul); }
  BigFloat operator/(const BigFloat& o) const { return bin(o, mpfr_div); }
  BigFloat operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  BigFloat abs() const {
    BigFloat r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat sqrt() const {
    BigFloat r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
  }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
  bool operator>(const BigFloat& o) const { return cmp(o) > 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // pow of 10, used for tolerance thresholds: 10^e.
  static BigFloat pow10(long e, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, 10, MPFR_RNDN);
    BigFloat out(prec);
    mpfr_pow_si(out.v_, r.v_, e, MPFR_RNDN);
    return out;
  }

  // Exact decomposition v = m * 2^e with integer m; exact (no rounding).
  Rat to_exact_rat() const {
    if (is_zero()) return Rat(0);
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
    Rat r(m);
    if (e >= 0) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
      r *= Rat(p);
    } else {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
      r /= Rat(p);
    }
    r.canonicalize();
    return r;
  }

  std::string to_string(int digits = 20) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  // sin and cos of 2*pi*k/m at the given precision.
  static std::pair<BigFloat, BigFloat> cos_sin_2pi(long k, long m, mpfr_prec_t prec) {
    BigFloat angle = pi(prec) * from_long(2 * k, prec) / from_long(m, prec);
    BigFloat c(prec), s(prec);
    mpfr_sin_cos(s.v_, c.v_, angle.v_, MPFR_RNDN);
    return {c, s};
  }

 private:
  using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  BigFloat bin(const BigFloat& o, BinOp op) const {
    BigFloat r(std::max(prec(), o.prec()));
    op(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

struct BigComplex {
  BigFloat re, im;

  explicit BigComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
  BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
  BigComplex operator*(const BigComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  BigComplex operator/(const BigComplex& o) const {
    BigFloat d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  BigComplex operator-() const { return {-re, -im}; }

  BigFloat abs2() const { return re * re + im * im; }
  BigFloat abs() const { return abs2().sqrt(); }

  std::string to_string(int digits = 20) const {
    return re.to_string(digits) + (im.sign() < 0 ? " - " : " + ") +
           im.abs().to_string(digits) + "*i";
  }
};

// Continued-fraction rational reconstruction: the nearest rational with
// denominator <= den_bound within tol of x, if one exists.
bool rational_reconstruct(const BigFloat& x, const Int& den_bound,
                          const BigFloat& tol, Rat& out);

}  // namespace hyperloci

#endif
