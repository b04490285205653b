#include "hyperloci/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "hyperloci/error.hpp"

namespace hyperloci {

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact division of integer polynomials (low-first), remainder must vanish.
std::vector<Int> zpoly_divexact(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> r = a;
  std::vector<Int> q(a.size() - b.size() + 1, Int(0));
  for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
    Int coef = r[k + b.size() - 1];  // b is monic in our usage
    q[k] = coef;
    if (coef != 0)
      for (size_t j = 0; j < b.size(); ++j) r[k + j] -= coef * b[j];
  }
  for (const Int& c : r)
    if (c != 0) throw Error("zpoly_divexact: nonzero remainder");
  return q;
}

struct ConductorData {
  std::vector<Int> phi;                    // cyclotomic polynomial, monic
  std::vector<std::vector<Rat>> powbasis;  // x^e mod Phi_m for e in [0, m)
};

std::map<unsigned long, ConductorData>& registry() {
  static std::map<unsigned long, ConductorData> reg;
  return reg;
}
std::mutex& registry_mutex() {
  static std::mutex mu;
  return mu;
}

std::vector<Int> compute_cyclotomic(unsigned long m) {
  // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
  std::vector<Int> num(m + 1, Int(0));
  num[0] = -1;
  num[m] = 1;
  for (unsigned long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = zpoly_divexact(num, cyclotomic_poly(d));
  }
  return num;
}

const ConductorData& conductor_data(unsigned long m) {
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(m);
    if (it != registry().end() && !it->second.powbasis.empty()) return it->second;
  }
  ConductorData data;
  data.phi = cyclotomic_poly(m);
  unsigned long deg = data.phi.size() - 1;
  // x^e mod Phi_m for 0 <= e < m via the recurrence
  // x^deg = -(phi[0] + ... + phi[deg-1] x^{deg-1}).
  data.powbasis.resize(m);
  for (unsigned long e = 0; e < m; ++e) {
    if (e < deg) {
      std::vector<Rat> row(deg, Rat(0));
      row[e] = 1;
      data.powbasis[e] = std::move(row);
    } else {
      const std::vector<Rat>& prev = data.powbasis[e - 1];
      std::vector<Rat> row(deg, Rat(0));
      // multiply prev by x, then reduce the overflow term
      Rat top = prev[deg - 1];
      for (unsigned long k = deg - 1; k >= 1; --k) row[k] = prev[k - 1];
      row[0] = 0;
      if (top != 0)
        for (unsigned long k = 0; k < deg; ++k) row[k] -= top * Rat(data.phi[k]);
      data.powbasis[e] = std::move(row);
    }
  }
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto [it, ok] = registry().emplace(m, std::move(data));
  (void)ok;
  return it->second;
}

// Reduce an arbitrary-length coefficient vector (in powers of zeta_m)
// modulo Phi_m into the phi(m) basis.
std::vector<Rat> reduce_mod_phi(unsigned long m, const std::vector<Rat>& raw) {
  const ConductorData& data = conductor_data(m);
  unsigned long deg = data.phi.size() - 1;
  std::vector<Rat> out(deg, Rat(0));
  std::vector<Rat> work = raw;
  for (long e = static_cast<long>(work.size()) - 1; e >= static_cast<long>(deg); --e) {
    Rat c = work[e];
    if (c == 0) continue;
    work[e] = 0;
    for (unsigned long k = 0; k < deg; ++k) work[e - deg + k] -= c * Rat(data.phi[k]);
  }
  for (unsigned long k = 0; k < std::min<unsigned long>(deg, work.size()); ++k) out[k] = work[k];
  return out;
}

unsigned long normalize_conductor(unsigned long m) {
  return (m > 2 && m % 4 == 2) ? m / 2 : (m == 2 ? 1 : m);
}

}  // namespace

const std::vector<Int>& cyclotomic_poly(unsigned long m) {
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(m);
    if (it != registry().end() && !it->second.phi.empty()) return it->second.phi;
  }
  std::vector<Int> phi = compute_cyclotomic(m);
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& slot = registry()[m];
  if (slot.phi.empty()) slot.phi = std::move(phi);
  return slot.phi;
}

CycNum CycNum::zeta(unsigned long m, long k) {
  if (m == 0) throw Error("zeta: conductor must be positive");
  long km = k % static_cast<long>(m);
  if (km < 0) km += m;
  if (m > 2 && m % 4 == 2) {
    // zeta_{2n} = -zeta_n^{(n+1)/2} for odd n; fold into the odd conductor.
    unsigned long n = m / 2;
    if (km % 2 == 0) return zeta(n, km / 2);
    return -zeta(n, (km * ((n + 1) / 2)) % n);
  }
  if (m <= 2) return CycNum(Rat(m == 2 && km == 1 ? -1 : 1));
  const ConductorData& data = conductor_data(m);
  return CycNum(m, data.powbasis[km]);
}

CycNum CycNum::i() { return zeta(4, 1); }

CycNum CycNum::sqrt3() {
  static const CycNum value = [] {
    CycNum v = -i() * (zeta(3, 1) - zeta(3, 2));
    if (v * v != CycNum(Rat(3))) throw Error("sqrt3 sign convention failed verification");
    return v;
  }();
  return value;
}

CycNum CycNum::sqrt5() {
  static const CycNum value = [] {
    CycNum v = CycNum(Rat(1)) + CycNum(Rat(2)) * (zeta(5, 1) + zeta(5, 4));
    if (v * v != CycNum(Rat(5))) throw Error("sqrt5 sign convention failed verification");
    return v;
  }();
  return value;
}

CycNum CycNum::omega() { return zeta(5, 1) + zeta(5, 4); }

bool CycNum::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool CycNum::is_rational() const {
  for (size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

Rat CycNum::as_rational() const {
  CycNum r = reduce();
  if (r.m_ != 1) throw Error("as_rational: value is not rational");
  return r.c_[0];
}

CycNum CycNum::embed(unsigned long m2) const {
  m2 = normalize_conductor(m2);
  if (m2 == m_) return *this;
  if (m2 % m_ != 0) throw Error("embed: target conductor not a multiple");
  unsigned long ratio = m2 / m_;
  const ConductorData& data = conductor_data(m2);
  unsigned long deg = data.phi.size() - 1;
  std::vector<Rat> out(deg, Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const std::vector<Rat>& row = data.powbasis[(k * ratio) % m2];
    for (unsigned long j = 0; j < deg; ++j) out[j] += c_[k] * row[j];
  }
  return CycNum(m2, std::move(out));
}

std::pair<CycNum, CycNum> CycNum::to_common(const CycNum& a, const CycNum& b) {
  if (a.m_ == b.m_) return {a, b};
  unsigned long l = std::lcm(a.m_, b.m_);
  l = normalize_conductor(l);
  return {a.embed(l), b.embed(l)};
}

CycNum CycNum::operator+(const CycNum& o) const {
  auto [a, b] = to_common(*this, o);
  std::vector<Rat> out = a.c_;
  for (size_t k = 0; k < out.size(); ++k) out[k] += b.c_[k];
  return CycNum(a.m_, std::move(out));
}

CycNum CycNum::operator-(const CycNum& o) const {
  auto [a, b] = to_common(*this, o);
  std::vector<Rat> out = a.c_;
  for (size_t k = 0; k < out.size(); ++k) out[k] -= b.c_[k];
  return CycNum(a.m_, std::move(out));
}

CycNum CycNum::operator-() const {
  std::vector<Rat> out = c_;
  for (Rat& r : out) r = -r;
  return CycNum(m_, std::move(out));
}

CycNum CycNum::operator*(const CycNum& o) const {
  auto [a, b] = to_common(*this, o);
  if (a.m_ == 1) return CycNum(a.c_[0] * b.c_[0]);
  std::vector<Rat> conv(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return CycNum(a.m_, reduce_mod_phi(a.m_, conv));
}

CycNum CycNum::inv() const {
  if (is_zero()) throw DivisionByZero("cyclotomic inverse of zero");
  if (m_ == 1) return CycNum(Rat(1) / c_[0]);
  // Extended Euclid in Q[x] modulo Phi_m.
  const std::vector<Int>& phiz = cyclotomic_poly(m_);
  std::vector<Rat> r0(phiz.begin(), phiz.end());
  std::vector<Rat> r1 = c_;
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};
  auto deg = [](const std::vector<Rat>& p) { return static_cast<long>(p.size()) - 1; };
  auto trim = [](std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  while (deg(r1) > 0) {
    // divide r0 by r1
    std::vector<Rat> rem = r0;
    std::vector<Rat> q(std::max<long>(deg(r0) - deg(r1) + 1, 0), Rat(0));
    Rat lead = r1.back();
    for (long k = deg(rem); k >= deg(r1); --k) {
      Rat c = rem[k] / lead;
      if (c == 0) continue;
      q[k - deg(r1)] = c;
      for (long j = 0; j <= deg(r1); ++j) rem[k - deg(r1) + j] -= c * r1[j];
    }
    trim(rem);
    // s2 = s0 - q*s1
    std::vector<Rat> s2 = s0;
    s2.resize(std::max(s0.size(), q.size() + s1.size() - 1), Rat(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw Error("inv: element not invertible (shares factor with Phi_m)");
  Rat scale = Rat(1) / r1[0];
  std::vector<Rat> out(euler_phi(m_), Rat(0));
  for (size_t k = 0; k < s1.size() && k < out.size(); ++k) out[k] = s1[k] * scale;
  return CycNum(m_, std::move(out));
}

CycNum CycNum::operator/(const CycNum& o) const { return *this * o.inv(); }

CycNum CycNum::pow(long e) const {
  if (e == 0) return one();
  CycNum base = e < 0 ? inv() : *this;
  unsigned long n = e < 0 ? -e : e;
  CycNum acc = one();
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool CycNum::operator==(const CycNum& o) const {
  auto [a, b] = to_common(*this, o);
  return a.c_ == b.c_;
}

CycNum CycNum::galois(unsigned long j) const {
  if (std::gcd(j, m_) != 1) throw Error("galois: exponent not coprime to conductor");
  if (m_ == 1) return *this;
  const ConductorData& data = conductor_data(m_);
  unsigned long deg = data.phi.size() - 1;
  std::vector<Rat> out(deg, Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const std::vector<Rat>& row = data.powbasis[(k * j) % m_];
    for (unsigned long t = 0; t < deg; ++t) out[t] += c_[k] * row[t];
  }
  return CycNum(m_, std::move(out));
}

CycNum CycNum::reduce() const {
  if (m_ == 1) return *this;
  // Find the smallest divisor d of m_ such that the value is fixed by
  // Gal(Q(zeta_m)/Q(zeta_d)) = { sigma_j : j = 1 mod d, gcd(j,m)=1 }.
  for (unsigned long d = 1; d < m_; ++d) {
    if (m_ % d != 0) continue;
    if (normalize_conductor(d) != d) continue;
    bool fixed = true;
    for (unsigned long j = 1; j < m_ && fixed; ++j) {
      if (j % d != 1 % d) continue;
      if (std::gcd(j, m_) != 1) continue;
      if (galois(j) != *this) fixed = false;
    }
    if (!fixed) continue;
    // Solve embed(b, m_) = this for b over Q(zeta_d) by Gaussian elimination.
    unsigned long degd = euler_phi(d);
    unsigned long degm = c_.size();
    const ConductorData& data = conductor_data(m_);
    unsigned long ratio = m_ / d;
    // columns: image of zeta_d^k in the zeta_m basis
    std::vector<std::vector<Rat>> mat(degm, std::vector<Rat>(degd + 1, Rat(0)));
    for (unsigned long k = 0; k < degd; ++k) {
      const std::vector<Rat>& col = data.powbasis[(k * ratio) % m_];
      for (unsigned long r = 0; r < degm; ++r) mat[r][k] = col[r];
    }
    for (unsigned long r = 0; r < degm; ++r) mat[r][degd] = c_[r];
    // eliminate
    unsigned long row = 0;
    std::vector<long> pivot_col(degd, -1);
    for (unsigned long col = 0; col < degd && row < degm; ++col) {
      unsigned long p = row;
      while (p < degm && mat[p][col] == 0) ++p;
      if (p == degm) continue;
      std::swap(mat[p], mat[row]);
      Rat lead = mat[row][col];
      for (auto& v : mat[row]) v /= lead;
      for (unsigned long r2 = 0; r2 < degm; ++r2) {
        if (r2 == row || mat[r2][col] == 0) continue;
        Rat f = mat[r2][col];
        for (unsigned long c2 = col; c2 <= degd; ++c2) mat[r2][c2] -= f * mat[row][c2];
      }
      pivot_col[col] = row;
      ++row;
    }
    bool solvable = true;
    for (unsigned long r2 = row; r2 < degm && solvable; ++r2)
      if (mat[r2][degd] != 0) solvable = false;
    if (!solvable) continue;
    std::vector<Rat> sol(degd, Rat(0));
    for (unsigned long col = 0; col < degd; ++col)
      if (pivot_col[col] >= 0) sol[col] = mat[pivot_col[col]][degd];
    return d == 1 ? CycNum(sol[0]) : CycNum(d, std::move(sol));
  }
  return *this;
}

BigComplex CycNum::approx(int digits) const {
  if (digits > kDigitsCap) throw Error("approx: digits beyond configured cap");
  mpfr_prec_t prec = static_cast<mpfr_prec_t>((digits + 25) * 3.33) + 16;
  BigComplex acc(prec);
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    auto [c, s] = BigFloat::cos_sin_2pi(static_cast<long>(k), static_cast<long>(m_), prec);
    BigFloat coef = BigFloat::from_rat(c_[k], prec);
    acc.re = acc.re + coef * c;
    acc.im = acc.im + coef * s;
  }
  return acc;
}

std::string CycNum::key() const {
  std::string s = std::to_string(m_) + ":";
  for (const Rat& r : c_) {
    s += r.get_str();
    s += ',';
  }
  return s;
}

}  // namespace hyperloci
