#include "doctest.h"
#include "toroidal/liealg.hpp"
#include "toroidal/oracles.hpp"

using namespace tor;

namespace {

const ParamPoly kMu = ParamPoly::var(Var::mu);

struct Fixture {
  std::shared_ptr<const SimpleAlgebra> g = SimpleAlgebra::sl2();
  Toroidal T{g};
  int ue = *g->index_of("e");
  int uh = *g->index_of("h");
  int uf = *g->index_of("f");
};

}  // namespace

TEST_SUITE("liealg") {

TEST_CASE_FIXTURE(Fixture, "reduce_k examples") {
  CHECK(reduce_k(2, 3, 1, 0) == ParamPoly(3) * kmn(2, 3));
  CHECK(reduce_k(2, 3, 2, 3).is_zero());
  ParamPoly a = ParamPoly::var(Var::a);
  ParamPoly b = ParamPoly::var(Var::b);
  CHECK(reduce_k(0, 0, a, b) == a * k0() + b * k1());
  CHECK(tk1(4, 0) == ParamPoly(-4) * kmn(4, 0));
  CHECK(tk1(0, 0) == k1());
}

TEST_CASE_FIXTURE(Fixture, "bracket examples") {
  CHECK(T.bracket(der(1, 0, 1), tk1(-1, 0)) == k0());
  TorElem x = loop(1, 2, ue);
  CHECK(T.bracket(x, x).is_zero());
  TorElem r = T.bracket(dtilde(1, 2), dtilde(2, 1));
  CHECK(r == ParamPoly(-3) * dtilde(3, 3) + ParamPoly(-27) * kMu * kmn(3, 3));
  CHECK(T.str_dtilde(r) == "-3*dtilde(3,3) - 27*mu*kmn(3,3)");
  CHECK(T.bracket(k0(), der(5, 5, 1)).is_zero());
}

TEST_CASE_FIXTURE(Fixture, "derived derivation constructors") {
  CHECK(dtilde(4, 0) == ParamPoly(4) * der(4, 0, 1));
  CHECK(dtilde(0, 0).is_zero());
  CHECK(dtilde(1, 1) == der(1, 1, 1) - der(1, 1, 0));
  CHECK(dbar(-1, 0).is_zero());
  CHECK(dbar(0, 2) == der(0, 2, 1) - ParamPoly(2) * der(0, 2, 0));
  CHECK(dbar(2, 3) == ParamPoly(3) * der(2, 3, 1) - ParamPoly(3) * der(2, 3, 0));
  CHECK(dvar(-1, 0).is_zero());
  CHECK(dvar(0, 0) == der(0, 0, 1));
  CHECK(dvar(3, 0) == ParamPoly(4) * der(3, 0, 1));
  CHECK(dvar(2, 3) == dbar(2, 3) + ParamPoly(Rational(45, 2)) * kMu * kmn(2, 3));
  // second form of the definition: mu m (n + 1/2) t^{n,m} k0
  for (int n = -3; n <= 3; ++n) {
    for (int m = -3; m <= 3; ++m) {
      TorElem alt = dbar(n, m) + ParamPoly(Rational((2 * n + 1) * m, 2)) * kMu * tk0(n, m);
      CHECK(dvar(n, m) == alt);
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "jacobi examples") {
  CHECK(T.jacobi_residual(loop(1, 0, ue), loop(-1, 0, uf), der(0, 0, 0)).is_zero());
  CHECK(T.jacobi_residual(der(1, 1, 0), der(-1, 2, 1), kmn(1, 1)).is_zero());
  TorElem x = dbar(1, -2) + loop(0, 1, uh);
  CHECK(T.jacobi_residual(x, x, der(2, 1, 0)).is_zero());
}

TEST_CASE_FIXTURE(Fixture, "grade examples") {
  auto g1 = T.grade(loop(-2, 3, ue));
  REQUIRE(g1.has_value());
  CHECK(*g1 == std::make_pair(2, 3));
  auto g2 = T.grade(k0());
  REQUIRE(g2.has_value());
  CHECK(*g2 == std::make_pair(0, 0));
  CHECK_FALSE(T.grade(loop(1, 0, ue) + loop(2, 0, ue)).has_value());
  auto g3 = T.grade(dvar(-2, 1));
  REQUIRE(g3.has_value());
  CHECK(*g3 == std::make_pair(2, 1));
}

TEST_CASE_FIXTURE(Fixture, "membership examples") {
  CHECK(T.member(der(-1, 0, 0), "Ddiv'"));
  CHECK_FALSE(T.member(der(0, 0, 0), "Ddiv'"));
  CHECK(T.member(dtilde(2, 3), "Ddiv"));
  CHECK(T.member(k0(), "toroidal"));
  CHECK(T.member(der(-1, 0, 1), "that_o"));
  CHECK_FALSE(T.member(der(-1, 0, 0), "that_o"));
  CHECK(T.member(der(-1, 0, 0), "ttilde_o"));
  CHECK(T.member(dvar(2, -1), "that_o"));
  CHECK_FALSE(T.member(der(0, 0, 0), "that"));
  CHECK(T.member(der(0, 0, 1), "that"));
  CHECK_THROWS_AS(T.member(k0(), "nonsense"), std::invalid_argument);
}

TEST_CASE_FIXTURE(Fixture, "closure of named subalgebras") {
  // The derivation algebras close only modulo the centre, since the cocycle
  // on D lands in K; the toroidal extensions close on the nose.
  std::vector<TorElem> tor_part;
  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) {
      tor_part.push_back(loop(a, b, ue));
      tor_part.push_back(kmn(a, b) + k0());
    }
  }
  std::vector<TorElem> div;
  std::vector<TorElem> divp;
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) {
      div.push_back(dtilde(a, b));
      divp.push_back(dbar(a, b));
    }
  }
  div.push_back(der(0, 0, 0));
  div.push_back(der(0, 0, 1));
  divp.push_back(der(-1, 0, 0));
  divp.push_back(der(-1, 0, 1));
  auto closed = [&](const std::vector<TorElem>& fam, const std::string& name, bool mod_centre = false) {
    for (const auto& x : fam) {
      REQUIRE(T.member(x, name));
      for (const auto& y : fam) {
        TorElem b = T.bracket(x, y);
        if (mod_centre) b = oracle::drop_centre(b);
        if (!T.member(b, name)) return false;
      }
    }
    return true;
  };
  std::vector<TorElem> tt = tor_part;
  tt.insert(tt.end(), div.begin(), div.end());
  std::vector<TorElem> tto = tor_part;
  tto.insert(tto.end(), divp.begin(), divp.end());
  CHECK(closed(div, "Ddiv", true));
  CHECK(closed(divp, "Ddiv'", true));
  CHECK_FALSE(closed(div, "Ddiv"));
  CHECK(closed(tt, "ttilde"));
  CHECK(closed(tto, "ttilde_o"));
  CHECK(closed(tor_part, "toroidal"));
}

TEST_CASE_FIXTURE(Fixture, "affine sl2 embedding for both roots") {
  for (std::size_t r = 0; r < g->roots().size(); ++r) {
    for (int m = -2; m <= 2; ++m) {
      // sl2 relations: [e,f] = h, [h,e] = 2e, [h,f] = -2f, <e,f> = 1, <h,h> = 2
      const int br[3][3][3] = {{{0, 0, 0}, {-2, 0, 0}, {0, 1, 0}},
                               {{2, 0, 0}, {0, 0, 0}, {0, 0, -2}},
                               {{0, -1, 0}, {0, 0, 2}, {0, 0, 0}}};
      const int form[3][3] = {{0, 0, 1}, {0, 2, 0}, {1, 0, 0}};
      for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) {
          for (int p = -2; p <= 2; ++p) {
            for (int q = -2; q <= 2; ++q) {
              TorElem lhs = T.bracket(T.sl2_image(r, m, x, p), T.sl2_image(r, m, y, q));
              TorElem rhs;
              for (int z = 0; z < 3; ++z) {
                if (br[x][y][z] != 0) rhs += ParamPoly(br[x][y][z]) * T.sl2_image(r, m, z, p + q);
              }
              if (p + q == 0 && form[x][y] != 0) {
                rhs += ParamPoly(p * form[x][y]) * T.sl2_image(r, m, 3, 0);
              }
              CHECK(lhs == rhs);
            }
          }
        }
      }
    }
  }
  CHECK(g->roots()[0].eps == Rational(1));
}

TEST_CASE("algebra loader rejects corrupted constants") {
  std::string good =
      "basis e h f\nbracket e f = 1 h\nbracket h e = 2 e\nbracket h f = -2 f\n"
      "form e f = 1\nform h h = 2\ncartan h\nroot alpha e f\n";
  CHECK_NOTHROW(SimpleAlgebra::parse(good));
  std::string bad = good;
  bad.replace(bad.find("bracket h e = 2 e"), 17, "bracket h e = 3 e");
  CHECK_THROWS_AS(SimpleAlgebra::parse(bad), AlgebraError);
  CHECK_THROWS_AS(SimpleAlgebra::parse("basis e\nfrobnicate\n"), AlgebraError);
  std::string unnormalized = good;
  unnormalized.replace(unnormalized.find("form h h = 2"), 12, "form h h = 4");
  unnormalized.replace(unnormalized.find("form e f = 1"), 12, "form e f = 2");
  CHECK_THROWS_AS(SimpleAlgebra::parse(unnormalized), AlgebraError);
}

}  // TEST_SUITE

TEST_SUITE("liealg") {

// The closed forms below disagree with the bracket engine, and only on rows
// where the K-index degenerates.  These cases pin the exact size of each gap
// so a change in either side shows up here.
TEST_CASE_FIXTURE(Fixture, "closed forms differ from the engine only on degenerate K rows") {
  const ParamPoly a = ParamPoly::var(Var::a);
  const ParamPoly b = ParamPoly::var(Var::b);
  for (int i = -3; i <= 3; ++i) {
    for (int m = -3; m <= 3; ++m) {
      for (int j = -3; j <= 3; ++j) {
        const bool zero_sum = i + j == 0;
        // [dtilde_{i,m}, t0^j k1]: engine minus closed form is delta_{m,0} delta_{i+j,0} i^2 k0.
        const TorElem r1 = T.bracket(dtilde(i, m), tk1(j, 0)) - oracle::dtilde_t0k1(i, m, j);
        CHECK(r1 == (m == 0 && zero_sum ? ParamPoly(i * i) * k0() : TorElem{}));
        // [d_{i,m}, t0^j k1]: the gap is delta_{m,0} delta_{i+j,0} i (i+1) k0.
        const TorElem r2 = T.bracket(dvar(i, m, kMu), tk1(j, 0)) - oracle::dvar_t0k1(kMu, i, m, j);
        CHECK(r2 == (m == 0 && zero_sum ? ParamPoly(i * (i + 1)) * k0() : TorElem{}));
        // [t0^i d1, k_{j,n}] with n = m: the gap is k0 when n = 0, i + j = 0, j != 0.
        const TorElem r3 = T.bracket(der(i, 0, 1), kmn(j, m)) - oracle::t0d1_kmn(i, j, m);
        CHECK(r3 == (m == 0 && zero_sum && j != 0 ? k0() : TorElem{}));
        for (int n = -3; n <= 3; ++n) {
          // k_{0,0} = 0, so both brackets vanish there; the closed forms need not.
          const bool k00 = j == 0 && n == 0;
          const TorElem lhs4 = T.bracket(dvar(i, m, kMu), kmn(j, n));
          if (k00) CHECK(lhs4.is_zero());
          else CHECK(lhs4 == oracle::dvar_kmn(kMu, i, m, j, n));
          const TorElem lhs5 = T.bracket(a * der(i, m, 0) + b * der(i, m, 1), kmn(j, n));
          if (k00) CHECK(lhs5.is_zero());
          else CHECK(lhs5 == oracle::der_k(a, b, i, m, j, n));
        }
      }
    }
  }
}

}  // TEST_SUITE
