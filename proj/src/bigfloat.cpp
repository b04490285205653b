#include "hyperloci/bigfloat.hpp"

namespace hyperloci {

bool rational_reconstruct(const BigFloat& x, const Int& den_bound,
                          const BigFloat& tol, Rat& out) {
  // Exact dyadic value of x, then continued-fraction convergents.
  Rat target = x.to_exact_rat();
  Int p0 = 1, q0 = 0;  // convergent h_{-1}
  Int p1, q1;          // running convergent
  Rat rest = target;
  Int a;
  mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
  p1 = a;
  q1 = 1;
  for (int iter = 0; iter < 200; ++iter) {
    Rat conv(p1, q1);
    conv.canonicalize();
    BigFloat err = (BigFloat::from_rat(conv, x.prec()) - x).abs();
    if (!(tol < err)) {
      out = conv;
      return true;
    }
    Rat frac = rest - Rat(a);
    if (frac == 0) break;
    rest = Rat(1) / frac;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    Int p2 = a * p1 + p0;
    Int q2 = a * q1 + q0;
    if (q2 > den_bound) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
  }
  return false;
}

}  // namespace hyperloci
