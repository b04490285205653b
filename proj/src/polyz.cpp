#include "hyperloci/polyz.hpp"

#include "hyperloci/error.hpp"

namespace hyperloci {

void polyz_trim(PolyZ& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

long polyz_deg(const PolyZ& p) { return static_cast<long>(p.size()) - 1; }

PolyZ polyz_mul(const PolyZ& a, const PolyZ& b) {
  if (a.empty() || b.empty()) return {};
  PolyZ out(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

PolyZ polyz_derivative(const PolyZ& a) {
  if (a.size() <= 1) return {};
  PolyZ out(a.size() - 1);
  for (size_t k = 1; k < a.size(); ++k) out[k - 1] = Int(static_cast<long>(k)) * a[k];
  polyz_trim(out);
  return out;
}

Int polyz_content(const PolyZ& a) {
  Int g = 0;
  for (const Int& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

PolyZ polyz_primitive(const PolyZ& a) {
  Int g = polyz_content(a);
  if (g == 0 || g == 1) return a;
  PolyZ out = a;
  for (Int& c : out) c /= g;
  return out;
}

PolyZ polyz_prem(const PolyZ& a, const PolyZ& b) {
  long da = polyz_deg(a), db = polyz_deg(b);
  if (db < 0) throw DivisionByZero("polyz_prem by zero");
  if (da < db) return a;
  PolyZ r = a;
  const Int& lb = b.back();
  for (long k = da; k >= db; --k) {
    // scale remaining remainder by lb, then cancel the top term
    Int top = r[k];
    for (long j = 0; j <= k; ++j) r[j] *= lb;
    if (top != 0)
      for (long j = 0; j <= db; ++j) r[k - db + j] -= top * b[j];
  }
  r.resize(db > 0 ? db : 0);
  polyz_trim(r);
  return r;
}

PolyZ polyz_gcd(PolyZ a, PolyZ b) {
  polyz_trim(a);
  polyz_trim(b);
  if (a.empty()) return polyz_primitive(b);
  if (b.empty()) return polyz_primitive(a);
  Int cont;
  mpz_gcd(cont.get_mpz_t(), polyz_content(a).get_mpz_t(), polyz_content(b).get_mpz_t());
  a = polyz_primitive(a);
  b = polyz_primitive(b);
  if (polyz_deg(a) < polyz_deg(b)) std::swap(a, b);
  // Subresultant PRS.
  Int g(1), h(1);
  while (true) {
    long delta = polyz_deg(a) - polyz_deg(b);
    PolyZ r = polyz_prem(a, b);
    if (r.empty()) break;
    if (polyz_deg(r) == 0) {
      b = {Int(1)};
      break;
    }
    Int divisor = g;
    for (long k = 0; k < delta; ++k) divisor *= h;
    a = std::move(b);
    b = std::move(r);
    for (Int& c : b) c /= divisor;
    g = a.back();
    // h = g^delta * h^(1-delta)
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      Int gnum(1);
      for (long k = 0; k < delta; ++k) gnum *= g;
      Int hden(1);
      for (long k = 0; k < delta - 1; ++k) hden *= h;
      h = gnum / hden;
    }
  }
  PolyZ out = polyz_primitive(b);
  if (!out.empty() && out.back() < 0)
    for (Int& c : out) c = -c;
  if (cont > 1) {
    // gcd of contents multiplies back in
    for (Int& c : out) c *= cont;
  }
  return out;
}

namespace {

// res(a, b) with field-style recursion but pseudo-division underneath;
// the scalar correction factors are tracked as an exact rational.
Rat resultant_rec(PolyZ a, PolyZ b) {
  polyz_trim(a);
  polyz_trim(b);
  long m = polyz_deg(a), n = polyz_deg(b);
  if (m < 0 || n < 0) return Rat(0);
  if (n == 0) {
    Rat out(1);
    for (long k = 0; k < m; ++k) out *= Rat(b[0]);
    return out;
  }
  if (m < n) {
    Rat sign = (m * n) % 2 == 0 ? Rat(1) : Rat(-1);
    return sign * resultant_rec(b, a);
  }
  PolyZ r = polyz_prem(a, b);
  long dr = polyz_deg(r);
  if (dr < 0) return Rat(0);
  // prem: lc(b)^(m-n+1) a = q b + r, so
  // res(a,b) = (-1)^{mn} lc(b)^{m - dr - n(m-n+1)} res(b, r)
  Rat lb(b.back());
  long e = m - dr - n * (m - n + 1);
  Rat scale(1);
  if (e >= 0)
    for (long k = 0; k < e; ++k) scale *= lb;
  else
    for (long k = 0; k < -e; ++k) scale /= lb;
  Rat sign = (m * n) % 2 == 0 ? Rat(1) : Rat(-1);
  return sign * scale * resultant_rec(b, r);
}

}  // namespace

Rat polyz_resultant(const PolyZ& a, const PolyZ& b) {
  Rat r = resultant_rec(a, b);
  r.canonicalize();
  return r;
}

}  // namespace hyperloci
