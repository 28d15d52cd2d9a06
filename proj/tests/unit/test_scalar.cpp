#include <random>

#include "doctest.h"
#include "support/random.hpp"

using namespace qpf;
using qpf::testing::random_cyclotomic;
using qpf::testing::random_ratfunc;
using qpf::testing::random_rational;
using qpf::testing::random_zpoly;

namespace {

ZPoly zp(std::initializer_list<long> c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return ZPoly(std::move(v));
}

const RatFunc q = RatFunc::q();

}  // namespace

TEST_CASE("zpoly gcd and exact division") {
  ZPoly a = zp({-1, 0, 1});  // q^2 - 1
  ZPoly b = zp({-1, 1});     // q - 1
  CHECK(ZPoly::gcd(a, b) == b);
  CHECK(ZPoly::divexact(a, b) == zp({1, 1}));
  CHECK(ZPoly::gcd(zp({4, 6}), zp({2})) == zp({2}));
  CHECK(ZPoly::gcd(zp({2, 2}) * zp({1, 3}), zp({6, 6}) * zp({5, 1})) == zp({2, 2}));
  CHECK_THROWS_AS(ZPoly::divexact(zp({1, 1}), zp({2})), Error);
  CHECK(zp({3, 0, -1}).to_string() == "-q^2 + 3");
}

TEST_CASE("rf_normalize examples") {
  RatFunc r = rf_normalize(zp({-1, 0, 1}), zp({-1, 1}));
  CHECK(r.numerator() == zp({1, 1}));
  CHECK(r.denominator() == zp({1}));
  RatFunc z = rf_normalize(zp({0}), zp({7}));
  CHECK(z.is_zero());
  CHECK(z.numerator().is_zero());
  CHECK(z.denominator() == zp({1}));
  RatFunc s = rf_normalize(zp({0, 2}), zp({-4}));
  CHECK(s.numerator() == zp({0, -1}));
  CHECK(s.denominator() == zp({2}));
  CHECK_THROWS_AS(rf_normalize(zp({1}), ZPoly()), DivisionByZero);
}

TEST_CASE("field operation examples") {
  CHECK(q * q.inverse() == RatFunc(1));
  CHECK((q - q.inverse()) + q.inverse() == q);
  CHECK(q.pow(-2) * q.pow(2) == RatFunc(1));
  Cyclotomic z = Cyclotomic::zeta(3);
  CHECK((z * z + z + Cyclotomic(1)).is_zero());
  CHECK(z.pow(3) == Cyclotomic(mpq_class(1), 3));
  CHECK_THROWS_AS(q / RatFunc(0), DivisionByZero);
  CHECK_THROWS_AS(Cyclotomic::zeta(3) + Cyclotomic::zeta(4), FieldMismatch);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
}

TEST_CASE("canonical form is independent of the representative") {
  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    ZPoly n = random_zpoly(rng, 3, 6), d = random_zpoly(rng, 3, 6), k = random_zpoly(rng, 2, 3);
    if (d.is_zero() || k.is_zero()) continue;
    RatFunc a = rf_normalize(n, d), b = rf_normalize(n * k, d * k);
    CHECK(a == b);
    CHECK(a.numerator() == b.numerator());
    CHECK(a.denominator() == b.denominator());
    if (!a.is_zero()) {
      CHECK(a.denominator().lc() > 0);
      ZPoly g = ZPoly::gcd(a.numerator(), a.denominator());
      CHECK(g.is_one());
    }
  }
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937 rng(5);
  for (int it = 0; it < 60; ++it) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RatFunc(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(1));
  }
  for (int l : {3, 4, 5, 9}) {
    for (int it = 0; it < 20; ++it) {
      Cyclotomic a = random_cyclotomic(rng, l), b = random_cyclotomic(rng, l), c = random_cyclotomic(rng, l);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(static_cast<int>(a.coeffs().size()) <= cyclotomic_polynomial(l).degree());
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(mpq_class(1), l));
    }
  }
  for (int it = 0; it < 20; ++it) {
    Rational a = random_rational(rng), b = random_rational(rng);
    CHECK(a * (a + b) == a * a + a * b);
    if (!a.is_zero()) CHECK(a / a == Rational(1));
  }
}

TEST_CASE("specialize examples") {
  CHECK(specialize_numeric(q + RatFunc(1), 1) == Rational(2));
  CHECK_THROWS_AS(specialize_numeric((q - RatFunc(1)).inverse(), 1), SingularSpecialization);
  CHECK(specialize_root(q * q, 4) == Cyclotomic(mpq_class(-1), 4));
  CHECK(specialize_root(q - q.inverse(), 4) == Cyclotomic(2) * Cyclotomic::zeta(4));
  CHECK_THROWS_AS(specialize_to<Rational>(q, FieldSpec::generic()), FieldMismatch);
  auto v = specialize(q.pow(3), FieldSpec::root_of_unity(3));
  CHECK(std::get<Cyclotomic>(v) == Cyclotomic(mpq_class(1), 3));
}

TEST_CASE("specialize is a ring homomorphism") {
  std::mt19937 rng(17);
  int checked = 0;
  for (int it = 0; it < 200; ++it) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
    for (const mpq_class& x : {mpq_class(5, 3), mpq_class(-2), mpq_class(7, 2)}) {
      try {
        Rational sa = specialize_numeric(a, x), sb = specialize_numeric(b, x);
        CHECK(specialize_numeric(a + b, x) == sa + sb);
        CHECK(specialize_numeric(a * b, x) == sa * sb);
        ++checked;
      } catch (const SingularSpecialization&) {
      }
    }
    for (int l : {3, 5}) {
      try {
        Cyclotomic sa = specialize_root(a, l), sb = specialize_root(b, l);
        CHECK(specialize_root(a + b, l) == sa + sb);
        CHECK(specialize_root(a * b, l) == sa * sb);
      } catch (const SingularSpecialization&) {
      }
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("print and parse round-trip") {
  std::mt19937 rng(23);
  for (int it = 0; it < 100; ++it) {
    RatFunc a = random_ratfunc(rng);
    CHECK(RatFunc::parse(a.to_string()) == a);
  }
  CHECK((q - q.inverse()).to_string() == "(q^2 - 1)/q");
  CHECK(RatFunc::parse("q^-1 + 2*q^3/(q+1)") == q.inverse() + RatFunc(2) * q.pow(3) / (q + RatFunc(1)));
  CHECK(rf_normalize(zp({0, 2}), zp({-4})).to_string() == "-q/2");
  FieldSpec f9 = FieldSpec::root_of_unity(9);
  for (int it = 0; it < 30; ++it) {
    Cyclotomic c = random_cyclotomic(rng, 9);
    CHECK(Cyclotomic::parse(c.to_string(), f9) == c);
  }
  FieldSpec fn = FieldSpec::numeric(mpq_class(5, 3));
  CHECK(Rational::parse("q^2 - 1/3", fn) == Rational(mpq_class(22, 9)));
  CHECK_THROWS_AS(RatFunc::parse("q + * 2"), ParseError);
  CHECK_THROWS_AS(RatFunc::parse("x"), ParseError);
  CHECK_THROWS_AS(RatFunc::parse("1/(q-q)"), ParseError);
}

TEST_CASE("field spec validation") {
  CHECK_THROWS(FieldSpec::root_of_unity(1));
  CHECK_THROWS(FieldSpec::numeric(0));
  CHECK(FieldSpec::root_of_unity(4).to_string() == "root-of-unity(4)");
  CHECK(Cyclotomic::generator(FieldSpec::root_of_unity(4)).pow(2) == Cyclotomic(mpq_class(-1), 4));
  CHECK_THROWS_AS(RatFunc::generator(FieldSpec::root_of_unity(3)), FieldMismatch);
}
