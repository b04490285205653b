#include "hyperloci/ratmap.hpp"

#include <numeric>

#include "hyperloci/error.hpp"
#include "hyperloci/textio.hpp"

namespace hyperloci {

RationalMap::RationalMap(Poly nf, Poly df) : nf_(std::move(nf)), df_(std::move(df)) {
  if (df_.is_zero()) throw DivisionByZero("rational map with zero denominator");
  Poly g = poly_gcd(nf_, df_);
  if (g.degree() > 0) {
    nf_ = nf_.divrem(g).first;
    df_ = df_.divrem(g).first;
  }
  CycNum scale = df_.lc().inv();
  nf_ = nf_ * scale;
  df_ = df_ * scale;
}

std::string RationalMap::to_string(const std::string& var) const {
  if (df_.degree() == 0) return poly_to_string(nf_, var);
  return "(" + poly_to_string(nf_, var) + ")/(" + poly_to_string(df_, var) + ")";
}

Poly discriminant_in_t(const RationalMap& m) {
  long d = m.degree();
  if (d < 2) throw Error("discriminant_in_t requires map degree >= 2");
  const Poly& nf = m.nf();
  const Poly& df = m.df();
  CycNum nf_top = nf.coeff(d);
  CycNum df_top = df.coeff(d);

  // res_x(nf - t df, nf' - t df') has degree <= 2d-1 in t; interpolate it
  // from 2d evaluations, avoiding the single t where the x-degree drops.
  long npoints = 2 * d;
  std::vector<CycNum> ts, vs;
  ts.reserve(npoints);
  vs.reserve(npoints);
  long tv = 0;
  while (static_cast<long>(ts.size()) < npoints) {
    CycNum t{Rat(tv)};
    ++tv;
    if (!df_top.is_zero() && (nf_top - t * df_top).is_zero()) continue;
    Poly p = nf - df * t;
    Poly q = p.derivative();
    if (p.degree() != d || q.degree() != d - 1)
      throw Error("discriminant_in_t: unexpected degree drop at sample point");
    ts.push_back(t);
    vs.push_back(poly_resultant(p, q));
  }

  // Newton divided differences, then expansion to monomial coefficients.
  std::vector<CycNum> dd = vs;
  for (long j = 1; j < npoints; ++j)
    for (long i = npoints - 1; i >= j; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (ts[i] - ts[i - j]);
  Poly res_t = Poly::zero();
  Poly basis = Poly::one();
  for (long i = 0; i < npoints; ++i) {
    res_t = res_t + basis * dd[i];
    basis = basis * (Poly::x() - Poly(ts[i]));
  }

  // disc = (-1)^{d(d-1)/2} res / lc_x(nf - t df); the leading coefficient
  // is nf_d - t*df_d, a constant or a linear polynomial in t.
  bool negate = ((d * (d - 1) / 2) % 2) == 1;
  Poly lc_t = Poly(std::vector<CycNum>{nf_top, -df_top});
  auto [quo, rem] = res_t.divrem(lc_t);
  if (!rem.is_zero()) throw Error("discriminant_in_t: leading coefficient does not divide");
  return negate ? -quo : quo;
}

std::pair<long, RationalMap> power_decompose(const RationalMap& m) {
  long s = 0;
  auto gather = [&s](const Poly& p) {
    for (long k = 0; k <= p.degree(); ++k)
      if (!p.coeff(k).is_zero()) s = std::gcd(s, k);
  };
  gather(m.nf());
  gather(m.df());
  if (s == 0) s = 1;
  auto compress = [s](const Poly& p) {
    std::vector<CycNum> out(p.degree() / s + 1, CycNum::zero());
    for (long k = 0; k <= p.degree(); ++k)
      if (!p.coeff(k).is_zero()) out[k / s] = p.coeff(k);
    return Poly(std::move(out));
  };
  RationalMap g(compress(m.nf()), compress(m.df()));
  // Round trip: g(x^s) must reproduce m exactly.
  auto expand = [s](const Poly& p) {
    std::vector<CycNum> out(p.degree() * s + 1, CycNum::zero());
    for (long k = 0; k <= p.degree(); ++k) out[k * s] = p.coeff(k);
    return Poly(std::move(out));
  };
  if (RationalMap(expand(g.nf()), expand(g.df())) != m)
    throw ConsistencyError("power_decompose: reconstruction mismatch");
  return {s, g};
}

}  // namespace hyperloci
