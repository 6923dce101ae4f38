#include "doctest.h"
#include "toroidal/genfun.hpp"

using namespace tor;

namespace {

struct Fixture {
  Toroidal T{SimpleAlgebra::sl2()};
  Window w{-4, 4, -4, 4};
};

}  // namespace

TEST_SUITE("genfun") {

TEST_CASE_FIXTURE(Fixture, "field expansions") {
  auto d1 = expand_field(T, FieldSymbol::d1(DeltaStyle::square), -3, 3);
  for (int n = -3; n <= 3; ++n) CHECK(d1.at(-n) == der(n, 0, 1));
  auto D = expand_field(T, FieldSymbol::dfield(DeltaStyle::round, 2), -6, 6);
  for (int n = -4; n <= 4; ++n) CHECK(D.at(-n - 2) == dvar(n, 2));
  auto K0 = expand_field(T, FieldSymbol::kfield(DeltaStyle::round, 0), -3, 3);
  CHECK(K0.log() == k1());
  CHECK(K0.at(0).is_zero());
  auto K2 = expand_field(T, FieldSymbol::kfield(DeltaStyle::round, 2), -3, 3);
  CHECK(K2.log().is_zero());
}

TEST_CASE_FIXTURE(Fixture, "commutators that vanish") {
  for (int m = -2; m <= 2; ++m) {
    for (int n = -2; n <= 2; ++n) {
      CHECK(lhs_commutator(T, FieldSymbol::kfield(DeltaStyle::square, m), FieldSymbol::kfield(DeltaStyle::square, n), w)
                .is_zero());
    }
  }
  CHECK(lhs_commutator(T, FieldSymbol::d1(DeltaStyle::round), FieldSymbol::d1(DeltaStyle::round), w).is_zero());
  CHECK(rhs_closed(T, "round.5", 1, 2, w).is_zero());
  CHECK(rhs_closed(T, "square.2", 1, 2, w).is_zero());
}

TEST_CASE_FIXTURE(Fixture, "item 8 at n = 0 carries a delta k0 term") {
  auto r = rhs_closed(T, "round.8", 1, 0, w);
  for (int i = -3; i <= 3; ++i) CHECK(r.get({-i - 1, i, 0, 0}) == k0());
}

TEST_CASE_FIXTURE(Fixture, "spec examples verify") {
  CHECK(verify_relation(T, "square.10", 1, 2, w).is_zero());
  CHECK(verify_relation(T, "round.10", 2, -2, w).is_zero());
  for (int u = 0; u < 3; ++u) {
    for (int v = 0; v < 3; ++v) CHECK(verify_relation(T, "round.1", 1, -1, w, u, v).is_zero());
  }
  CHECK_THROWS_AS(verify_relation(T, "square.7", 0, 0, w), std::invalid_argument);
  CHECK(relation_catalog().size() == 20);
}

TEST_CASE_FIXTURE(Fixture, "relations off the n = 0 row") {
  for (const auto& info : relation_catalog()) {
    for (int m = -2; m <= 2; ++m) {
      for (int n = -2; n <= 2; ++n) {
        if (n == 0) continue;
        for (int u = 0; u < (info.uses_u ? 3 : 1); ++u) {
          for (int v = 0; v < (info.uses_v ? 3 : 1); ++v) {
            INFO(info.id << " m=" << m << " n=" << n);
            CHECK(verify_relation(T, info.id, m, n, w, u, v).is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "items with K_0 as second field differ from the engine in one row") {
  // k_{0,0} = 0 and [d_{i,m}, k1] = 0, so the w^0 coefficient of the commutator
  // vanishes while the displayed right-hand side does not.
  auto r8 = verify_relation(T, "square.8", 0, 0, w);
  REQUIRE_FALSE(r8.is_zero());
  CHECK(r8.terms().size() == 1);
  CHECK(r8.get({0, 0, 0, 0}) == -k0());
  auto r6 = verify_relation(T, "round.6", 2, 0, w);
  for (const auto& [key, v] : r6.terms()) CHECK(key.q == 0);
  CHECK(r6.get({-4, 0, 0, 0}) == ParamPoly(-2) * kmn(2, 2));
  CHECK(verify_relation(T, "square.6", 2, 0, w).is_zero());
}

}  // TEST_SUITE
