#include "hyperloci/poly.hpp"

#include <algorithm>

#include "hyperloci/error.hpp"

namespace hyperloci {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(size_t deg, const CycNum& coeff) {
  std::vector<CycNum> c(deg + 1, CycNum::zero());
  c[deg] = coeff;
  return Poly(std::move(c));
}

Poly Poly::from_ints(const std::vector<long>& coeffs) {
  std::vector<CycNum> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(Rat(v));
  return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<CycNum> out(std::max(c_.size(), o.c_.size()), CycNum::zero());
  for (size_t k = 0; k < c_.size(); ++k) out[k] = c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) out[k] = out[k] + o.c_[k];
  return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<CycNum> out(std::max(c_.size(), o.c_.size()), CycNum::zero());
  for (size_t k = 0; k < c_.size(); ++k) out[k] = c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) out[k] = out[k] - o.c_[k];
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  std::vector<CycNum> out = c_;
  for (CycNum& v : out) v = -v;
  return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<CycNum> out(c_.size() + o.c_.size() - 1, CycNum::zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      out[i + j] = out[i + j] + c_[i] * o.c_[j];
    }
  }
  return Poly(std::move(out));
}

Poly Poly::operator*(const CycNum& s) const {
  if (s.is_zero()) return Poly();
  std::vector<CycNum> out = c_;
  for (CycNum& v : out) v = v * s;
  return Poly(std::move(out));
}

bool Poly::operator==(const Poly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != o.c_[k]) return false;
  return true;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& o) const {
  if (o.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (degree() < o.degree()) return {Poly(), *this};
  std::vector<CycNum> rem = c_;
  std::vector<CycNum> quo(degree() - o.degree() + 1, CycNum::zero());
  CycNum inv_lead = o.lc().inv();
  for (long k = degree(); k >= o.degree(); --k) {
    CycNum c = rem[k] * inv_lead;
    if (c.is_zero()) continue;
    quo[k - o.degree()] = c;
    for (long j = 0; j <= o.degree(); ++j)
      rem[k - o.degree() + j] = rem[k - o.degree() + j] - c * o.c_[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<CycNum> out(c_.size() - 1, CycNum::zero());
  for (size_t k = 1; k < c_.size(); ++k) out[k - 1] = CycNum(Rat(static_cast<long>(k))) * c_[k];
  return Poly(std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lc().inv();
}

Poly Poly::pow(unsigned long e) const {
  Poly acc = one();
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

CycNum Poly::eval(const CycNum& v) const {
  CycNum acc = CycNum::zero();
  for (long k = degree(); k >= 0; --k) acc = acc * v + c_[k];
  return acc;
}

BigComplex Poly::eval_approx(const BigComplex& z, mpfr_prec_t prec) const {
  BigComplex acc(prec);
  int digits = static_cast<int>(prec / 4);
  if (digits > CycNum::kDigitsCap) digits = CycNum::kDigitsCap;
  for (long k = degree(); k >= 0; --k) acc = acc * z + c_[k].approx(digits);
  return acc;
}

bool Poly::is_rational() const {
  return std::all_of(c_.begin(), c_.end(), [](const CycNum& v) { return v.reduce().is_rational(); });
}

std::pair<PolyZ, Int> Poly::to_polyz() const {
  Int den(1);
  std::vector<Rat> rats;
  rats.reserve(c_.size());
  for (const CycNum& v : c_) {
    Rat r = v.reduce().as_rational();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
    rats.push_back(r);
  }
  PolyZ out(rats.size());
  for (size_t k = 0; k < rats.size(); ++k) {
    Rat scaled = rats[k] * Rat(den);
    scaled.canonicalize();
    out[k] = scaled.get_num();
  }
  polyz_trim(out);
  return {out, den};
}

std::string Poly::key() const {
  std::string s;
  for (const CycNum& v : c_) {
    s += v.key();
    s += '|';
  }
  return s;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_rational() && b.is_rational()) {
    PolyZ za = a.to_polyz().first;
    PolyZ zb = b.to_polyz().first;
    PolyZ g = polyz_gcd(za, zb);
    std::vector<CycNum> c;
    c.reserve(g.size());
    for (const Int& v : g) c.emplace_back(Rat(v));
    return Poly(std::move(c)).monic();
  }
  Poly r0 = a, r1 = b;
  if (r0.degree() < r1.degree()) std::swap(r0, r1);
  while (!r1.is_zero()) {
    Poly rem = r0.divrem(r1).second;
    r0 = std::move(r1);
    r1 = rem.monic();  // keep coefficients tame
  }
  return r0.monic();
}

CycNum poly_resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return CycNum::zero();
  if (a.is_rational() && b.is_rational()) {
    auto [za, da] = a.to_polyz();
    auto [zb, db] = b.to_polyz();
    Rat res = polyz_resultant(za, zb);
    // res(a/da, b/db) = res(za, zb) / (da^deg b * db^deg a)
    Rat scale(1);
    for (long k = 0; k < polyz_deg(zb) + 0; ++k) scale *= Rat(da);
    for (long k = 0; k < polyz_deg(za) + 0; ++k) scale *= Rat(db);
    Rat out = res / scale;
    out.canonicalize();
    return CycNum(out);
  }
  // Field PRS with explicit lc bookkeeping.
  Poly f = a, g = b;
  CycNum acc = CycNum::one();
  bool negate = false;
  if (f.degree() < g.degree()) {
    if ((f.degree() * g.degree()) % 2 == 1) negate = !negate;
    std::swap(f, g);
  }
  while (true) {
    long m = f.degree(), n = g.degree();
    if (n == 0) {
      acc = acc * g.lc().pow(m);
      break;
    }
    Poly r = f.divrem(g).second;
    if (r.is_zero()) return CycNum::zero();
    long dr = r.degree();
    acc = acc * g.lc().pow(m - dr);
    if ((m * n) % 2 == 1) negate = !negate;
    f = std::move(g);
    g = std::move(r);
  }
  return negate ? -acc : acc;
}

std::vector<SquarefreePart> squarefree_decompose(const Poly& a) {
  if (a.is_zero()) throw Error("squarefree decomposition of zero polynomial");
  std::vector<SquarefreePart> parts;
  if (a.degree() == 0) return parts;
  // Yun's algorithm (characteristic zero).
  Poly f = a.monic();
  Poly fp = f.derivative();
  Poly g = poly_gcd(f, fp);
  Poly w = f.divrem(g).first;
  Poly y = fp.divrem(g).first;
  long mult = 1;
  while (w.degree() > 0) {
    Poly z = y - w.derivative();
    Poly p = poly_gcd(w, z);
    if (p.degree() > 0) parts.push_back({mult, p.monic()});
    w = w.divrem(p).first;
    y = z.divrem(p).first;
    ++mult;
  }
  std::sort(parts.begin(), parts.end(),
            [](const SquarefreePart& l, const SquarefreePart& r) {
              return l.multiplicity > r.multiplicity;
            });
  return parts;
}

Poly squarefree_part(const Poly& a) {
  Poly out = Poly::one();
  for (const SquarefreePart& p : squarefree_decompose(a)) out = out * p.factor;
  return out.monic();
}

std::vector<std::pair<long, long>> multiplicity_profile(const Poly& a) {
  std::vector<std::pair<long, long>> out;
  for (const SquarefreePart& p : squarefree_decompose(a))
    out.emplace_back(p.multiplicity, p.factor.degree());
  return out;
}

}  // namespace hyperloci
