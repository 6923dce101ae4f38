#include <random>

#include "doctest.h"
#include "toroidal/scalar.hpp"

using namespace tor;

namespace {

ParamPoly P(Var v) { return ParamPoly::var(v); }

ParamPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 4);
  std::uniform_int_distribution<int> var(0, 6);
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<long long> coef(-9, 9);
  ParamPoly p;
  for (int t = nterms(rng); t > 0; --t) {
    long long d = coef(rng);
    ParamPoly mono(Rational(coef(rng), 1 + d * d));
    for (int k = 0; k < 2; ++k) mono *= P(static_cast<Var>(var(rng))).pow(expo(rng));
    p += mono;
  }
  return p;
}

}  // namespace

TEST_SUITE("scalar") {

TEST_CASE("rational canonical form and promotion to big integers") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(0, 5).str() == "0");
  Rational big(1);
  for (int k = 0; k < 5; ++k) big *= Rational(1LL << 40);
  CHECK_FALSE(big.is_small());
  Rational back = big;
  for (int k = 0; k < 5; ++k) back /= Rational(1LL << 40);
  CHECK(back.is_small());
  CHECK(back == Rational(1));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("ffact examples") {
  CHECK(ffact(ParamPoly(5), 3) == ParamPoly(60));
  CHECK(ffact(P(Var::a), 0) == ParamPoly(1));
  CHECK(ffact(P(Var::a), 2) == P(Var::a) * P(Var::a) - P(Var::a));
  CHECK(ffact(P(Var::a), 2).str() == "a^2 - a");
}

TEST_CASE("specialize examples") {
  ParamPoly p = P(Var::mu) * P(Var::ell) + ParamPoly(2);
  CHECK(p.specialize({{Var::mu, 1}, {Var::ell, 3}}) == ParamPoly(5));
  ParamPoly q = ffact(P(Var::a), 2);
  CHECK(q.specialize({{Var::a, 0}}).is_zero());
  CHECK(q.specialize({}) == q);
  // parameters absent from the assignment stay formal
  CHECK(p.specialize({{Var::mu, 2}}) == ParamPoly(2) * P(Var::ell) + ParamPoly(2));
}

TEST_CASE("ffact recursion and Newton identity") {
  ParamPoly a = P(Var::a);
  ParamPoly b = P(Var::b);
  for (unsigned r = 0; r <= 10; ++r) {
    CHECK(ffact(a, r) * (a - ParamPoly(static_cast<long long>(r))) == ffact(a, r + 1));
    CHECK(ffact(a, r).total_degree() == static_cast<int>(r));
  }
  for (unsigned q = 0; q <= 8; ++q) {
    ParamPoly rhs;
    for (unsigned i = 0; i <= q; ++i) rhs += ParamPoly(binom(q, i)) * ffact(a, i) * ffact(b, q - i);
    CHECK(ffact(a + b, q) == rhs);
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(20241016);
  for (int t = 0; t < 200; ++t) {
    ParamPoly x = random_poly(rng);
    ParamPoly y = random_poly(rng);
    ParamPoly z = random_poly(rng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x - x).is_zero());
  }
}

TEST_CASE("disjoint specializations commute") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    ParamPoly x = random_poly(rng);
    Assignment s1{{Var::mu, Rational(2, 3)}, {Var::alpha, -1}};
    Assignment s2{{Var::ell, 5}, {Var::a, Rational(1, 2)}};
    CHECK(x.specialize(s1).specialize(s2) == x.specialize(s2).specialize(s1));
  }
}

TEST_CASE("binomial with negative upper argument") {
  CHECK(binom(-1, 3) == Rational(-1));
  CHECK(binom(-2, 2) == Rational(3));
  CHECK(binom(5, 2) == Rational(10));
  CHECK(binom(3, 5) == Rational(0));
}

}  // TEST_SUITE
