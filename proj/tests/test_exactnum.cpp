#include <random>

#include "doctest.h"
#include "hyperloci/cyclotomic.hpp"
#include "hyperloci/textio.hpp"

using namespace hyperloci;

namespace {

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  return make_rat(num(rng), den(rng));
}

CycNum random_cyc(std::mt19937_64& rng, unsigned long m) {
  CycNum acc = CycNum::zero();
  unsigned long deg = euler_phi(m);
  for (unsigned long k = 0; k < deg; ++k)
    acc = acc + CycNum(random_rat(rng)) * CycNum::zeta(m, static_cast<long>(k));
  return acc;
}

}  // namespace

TEST_CASE("basic roots of unity") {
  CHECK(CycNum::i() * CycNum::i() == CycNum(Rat(-1)));
  CHECK(CycNum::zeta(3, 1).pow(3) == CycNum::one());
  CHECK(CycNum::zeta(60, 1).pow(60) == CycNum::one());
  CHECK(CycNum::zeta(60, 1).pow(59) != CycNum::one());
  // zeta_2 folds to -1, zeta_6 folds into conductor 3
  CHECK(CycNum::zeta(2, 1) == CycNum(Rat(-1)));
  CHECK(CycNum::zeta(6, 1).conductor() == 3);
  CHECK(CycNum::zeta(6, 1).pow(6) == CycNum::one());
  CHECK(CycNum::zeta(6, 1).pow(3) == CycNum(Rat(-1)));
}

TEST_CASE("sqrt5 matches numeric square root to 30 digits, then squares exactly") {
  CycNum s5 = CycNum::sqrt5();
  BigComplex z = s5.approx(30);
  mpfr_prec_t prec = z.re.prec();
  BigFloat target = BigFloat::from_long(5, prec).sqrt();
  CHECK((z.re - target).abs() < BigFloat::pow10(-30, prec));
  CHECK(z.im.abs() < BigFloat::pow10(-30, prec));
  CHECK(s5 * s5 == CycNum(Rat(5)));
  CHECK(CycNum::sqrt3() * CycNum::sqrt3() == CycNum(Rat(3)));
}

TEST_CASE("omega satisfies x^2 + x - 1 = 0") {
  CycNum w = CycNum::omega();
  CHECK(w * w + w == CycNum::one());
  // and omega = (-1+sqrt5)/2
  CHECK(w == (CycNum(Rat(-1)) + CycNum::sqrt5()) / CycNum(Rat(2)));
}

TEST_CASE("embedding round trips and power checks") {
  CycNum minus1{Rat(-1)};
  CHECK(minus1.embed(12) == CycNum(Rat(-1)));
  CycNum i4 = CycNum::i();
  CycNum i60 = i4.embed(60);
  CHECK(i60.conductor() == 60);
  CHECK(i60.reduce() == i4);
  CHECK(i60.reduce().conductor() == 4);
  CycNum z3in12 = CycNum::zeta(3, 1).embed(12);
  CHECK(z3in12.pow(3) == CycNum::one());
  CHECK(z3in12.pow(2) != CycNum::one());
  CHECK_THROWS_AS(CycNum::zeta(4, 1).embed(30), Error);
}

TEST_CASE("approx of branch constant 6*I*sqrt3") {
  CycNum v = CycNum(Rat(6)) * CycNum::i() * CycNum::sqrt3();
  BigComplex z = v.approx(20);
  mpfr_prec_t prec = z.re.prec();
  BigFloat target = BigFloat::from_long(108, prec).sqrt();  // 6*sqrt3 = sqrt(108)
  CHECK(z.re.abs() < BigFloat::pow10(-20, prec));
  CHECK((z.im - target).abs() < BigFloat::pow10(-20, prec));
}

TEST_CASE("approx of i") {
  BigComplex z = CycNum::i().approx(30);
  mpfr_prec_t prec = z.re.prec();
  CHECK(z.re.abs() < BigFloat::pow10(-30, prec));
  CHECK((z.im - BigFloat::from_long(1, prec)).abs() < BigFloat::pow10(-30, prec));
}

TEST_CASE("division by zero is an explicit error") {
  CHECK_THROWS_AS(CycNum::one() / CycNum::zero(), DivisionByZero);
}

TEST_CASE("field axioms on random samples per conductor") {
  for (unsigned long m : {4ul, 5ul, 8ul, 12ul, 60ul}) {
    std::mt19937_64 rng(1234 + m);
    int samples = m == 60 ? 60 : 250;  // 60 has a 16-dim basis; keep runtime sane
    for (int s = 0; s < samples; ++s) {
      CycNum a = random_cyc(rng, m), b = random_cyc(rng, m), c = random_cyc(rng, m);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inv() == CycNum::one());
    }
  }
}

TEST_CASE("approx respects arithmetic") {
  std::mt19937_64 rng(99);
  const int digits = 30;
  for (int s = 0; s < 20; ++s) {
    CycNum a = random_cyc(rng, 12), b = random_cyc(rng, 12);
    BigComplex pa = a.approx(digits), pb = b.approx(digits), pab = (a * b).approx(digits);
    BigFloat err = (pab - pa * pb).abs();
    CHECK(err < BigFloat::pow10(-digits + 5, pa.re.prec()));
  }
}

TEST_CASE("mixed-conductor arithmetic embeds into the lcm") {
  CycNum v = CycNum::zeta(4, 1) + CycNum::zeta(3, 1);
  CHECK(v.conductor() == 12);
  CHECK((v - CycNum::zeta(3, 1)).reduce() == CycNum::i());
}

TEST_CASE("constant grammar round trip") {
  for (const CycNum& v :
       {CycNum(Rat(-7)), make_rat(3, 2) * CycNum::one(), CycNum::i(), CycNum::sqrt3(),
        CycNum(Rat(6)) * CycNum::i() * CycNum::sqrt3(), CycNum::omega(),
        CycNum::zeta(60, 7) + CycNum(make_rat(1, 2))}) {
    std::string s = cyc_to_string(v);
    CHECK(parse_cyc(s) == v);
  }
  CHECK(parse_cyc("I") == CycNum::i());
  CHECK(parse_cyc("-2/3") == CycNum(make_rat(-2, 3)));
  CHECK(parse_cyc("z5^2") == CycNum::zeta(5, 2));
  CHECK(parse_cyc("1 + 2*(z5 + z5^4)") == CycNum::sqrt5());
}

TEST_CASE("reduce finds minimal conductor") {
  CycNum v = CycNum::sqrt3().embed(60);
  CHECK(v.conductor() == 60);
  CHECK(v.reduce().conductor() == 12);
  CycNum r = CycNum(make_rat(5, 3)).embed(60).reduce();
  CHECK(r.conductor() == 1);
  CHECK(r.as_rational() == make_rat(5, 3));
}

TEST_CASE("galois automorphisms fix rationals and permute roots") {
  CycNum z = CycNum::zeta(5, 1);
  CHECK(z.galois(2) == CycNum::zeta(5, 2));
  CHECK(CycNum::sqrt5().galois(2) == -CycNum::sqrt5());  // sqrt5 -> conjugate
  CHECK(CycNum(make_rat(7, 2)).embed(5).galois(3).reduce().as_rational() == make_rat(7, 2));
}
