#include "doctest.h"
#include "toroidal/pbw.hpp"

using namespace tor;

namespace {

Toroidal sl2_algebra() { return Toroidal(SimpleAlgebra::sl2()); }

constexpr int kE = 0;
constexpr int kH = 1;
constexpr int kF = 2;

/// Acts with the generators listed, rightmost first.
ModVec apply(const InducedModule& M, std::initializer_list<Gen> gens, ModVec v) {
  std::vector<Gen> gs(gens);
  for (auto it = gs.rbegin(); it != gs.rend(); ++it) v = M.act(*it, v);
  return v;
}

}  // namespace

TEST_SUITE("pbw") {

TEST_CASE("decomposition into generators") {
  Toroidal T = sl2_algebra();
  auto d = decompose(T, dvar(2, 3, T.mu()));
  CHECK(d.gens == LinComb<Gen>(Gen::d(2, 3)));
  d = decompose(T, tk1(-2, 0) + k0());
  CHECK(d.gens == LinComb<Gen>(Gen::k(-2, 0)));
  CHECK(d.k0 == ParamPoly(1));
  d = decompose(T, kmn(3, 0));
  CHECK(d.gens == LinComb<Gen>(Gen::k(3, 0), ParamPoly(Rational(-1, 3))));
  d = decompose(T, der(-1, 0, 0));
  CHECK(d.t0inv_d0 == ParamPoly(1));
  CHECK_THROWS_AS(decompose(T, der(2, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(decompose(T, der(1, 1, 1)), std::invalid_argument);
  for (int j = -2; j <= 2; ++j) {
    for (int m = -2; m <= 2; ++m) {
      for (const Gen& g : {Gen::loop(j, m, kH), Gen::k(j, m), Gen::d(j, m)}) {
        if (g.cls != Gen::Loop && m == 0 && j == 0 && g.cls == Gen::K) continue;
        auto dd = decompose(T, gen_elem(T, g));
        CHECK(dd.gens == LinComb<Gen>(g));
      }
    }
  }
}

TEST_CASE("vacuum module basics") {
  InducedModule V(sl2_algebra(), BaseModule::vacuum());
  const ModVec one = V.base_vector();
  CHECK(V.act(k0(), one) == ParamPoly::var(Var::ell) * one);
  CHECK(V.act(loop(1, 0, kE), one).is_zero());
  CHECK(V.act(tk1(1, 0), one).is_zero());
  CHECK(V.act(der(1, 0, 1), one).is_zero());
  CHECK(V.act(kmn(1, 2), one).is_zero());
  CHECK(V.act(dvar(-1, 2, V.algebra().mu()), one).is_zero());
  CHECK_FALSE(V.act(kmn(0, 2), one).is_zero());
  CHECK_FALSE(V.act(dvar(-2, 2, V.algebra().mu()), one).is_zero());
  CHECK_THROWS_AS(V.act(der(3, 0, 0), one), std::invalid_argument);
}

TEST_CASE("normal ordering") {
  InducedModule V(sl2_algebra(), BaseModule::vacuum());
  const ModVec one = V.base_vector();
  // e(-1) f(-1) 1 vs f(-1) e(-1) 1 differ by h(-2) 1
  auto ef = apply(V, {Gen::loop(-1, 0, kE), Gen::loop(-1, 0, kF)}, one);
  auto fe = apply(V, {Gen::loop(-1, 0, kF), Gen::loop(-1, 0, kE)}, one);
  CHECK(ef - fe == V.act(Gen::loop(-2, 0, kH), one));
  for (const auto& [m, c] : ef) {
    for (std::size_t i = 1; i < m.gens.size(); ++i) CHECK_FALSE(m.gens[i - 1] < m.gens[i]);
  }
  // e(1) f(-1) 1 = h(0) 1 + <e,f> k0 1 = ell 1
  auto x = apply(V, {Gen::loop(1, 0, kE), Gen::loop(-1, 0, kF)}, one);
  CHECK(x == ParamPoly::var(Var::ell) * one);
}

TEST_CASE("base module actions") {
  Toroidal T = sl2_algebra();
  InducedModule W(T, BaseModule::t_full(2));
  const ParamPoly al = ParamPoly::var(Var::alpha);
  const ParamPoly be = ParamPoly::var(Var::beta);
  for (int m = -2; m <= 2; ++m) {
    if (m == 0) continue;
    for (int n = -2; n <= 2; ++n) {
      auto r = W.act(dvar(0, m, T.mu()), W.base_vector(n, 1));
      CHECK(r == (ParamPoly(n) + al + be * ParamPoly(m)) * W.base_vector(n + m, 1));
    }
  }
  CHECK(W.act(der(0, 0, 1), W.base_vector(3, 0)) == (ParamPoly(3) + al) * W.base_vector(3, 0));
  CHECK(W.act(k1(), W.base_vector(0, 0)).is_zero());
  CHECK(W.act(tk0(0, 2), W.base_vector(1, 0)) == ParamPoly::var(Var::ell) * W.base_vector(3, 0));
  CHECK(W.act(loop(0, 1, kF), W.base_vector(0, 0)) == W.base_vector(1, 1));
  CHECK(W.act(loop(0, 0, kH), W.base_vector(0, 2)) == ParamPoly(-2) * W.base_vector(0, 2));
  CHECK(W.act(loop(0, 0, kE), W.base_vector(0, 1)) == ParamPoly(2) * W.base_vector(0, 0));
  CHECK(W.act(loop(1, 0, kE), W.base_vector(0, 1)).is_zero());
  // d0 acts as minus the degree
  auto v = W.act(loop(-2, 1, kE), W.base_vector(0, 1));
  CHECK(W.act(der(0, 0, 0), v) == ParamPoly(-2) * v);

  InducedModule Te(T, BaseModule::t_ell());
  CHECK(Te.act(dvar(0, 2, T.mu()), Te.base_vector(3)) == ParamPoly(3) * Te.base_vector(5));
  CHECK(Te.act(loop(0, 1, kE), Te.base_vector(3)).is_zero());
}

TEST_CASE("representation consistency examples") {
  Toroidal T = sl2_algebra();
  InducedModule V(T, BaseModule::vacuum());
  const ModVec one = V.base_vector();
  for (int m = -3; m <= 3; ++m) {
    INFO("m = " << m);
    CHECK(V.rep_consistency(dvar(1, -m, T.mu()), kmn(-1, m), one).is_zero());
  }
  CHECK(V.rep_consistency(loop(-1, 0, kE), loop(-1, 0, kF), one).is_zero());
  auto v = apply(V, {Gen::d(-2, 1), Gen::loop(-1, -1, kE)}, one);
  CHECK(V.rep_consistency(dvar(2, -1, T.mu()), dvar(2, -1, T.mu()), v).is_zero());
}

TEST_CASE("sampled representation consistency") {
  Toroidal T = sl2_algebra();
  std::vector<BaseModule> bases = {BaseModule::vacuum(), BaseModule::t_ell(), BaseModule::t_full(0),
                                   BaseModule::t_full(1), BaseModule::t_full(2)};
  for (const auto& b : bases) {
    InducedModule M(T, b);
    PbwSampler S(20240611);
    for (int s = 0; s < 200; ++s) {
      const Gen x = S.generator(T, -2, 2);
      const Gen y = S.generator(T, -2, 2);
      const ModVec v = S.vector(M, 3, -2, 2);
      INFO(b.str() << " x=" << gen_str(T, x) << " y=" << gen_str(T, y) << " v=" << M.str(v));
      CHECK(M.rep_consistency(gen_elem(T, x), gen_elem(T, y), v).is_zero());
    }
  }
}

TEST_CASE("degree-zero relations on the base") {
  Toroidal T = sl2_algebra();
  InducedModule W(T, BaseModule::t_full(1));
  const ParamPoly mu = T.mu();
  auto comm = [&](const TorElem& x, const TorElem& y, const ModVec& v) {
    return W.act(x, W.act(y, v)) - W.act(y, W.act(x, v));
  };
  for (int m = -3; m <= 3; ++m) {
    for (int n = -3; n <= 3; ++n) {
      for (int w = 0; w <= 1; ++w) {
        const ModVec v = W.base_vector(1, w);
        const TorElem d0m = m == 0 ? der(0, 0, 1) : dvar(0, m, mu);
        const TorElem d0n = n == 0 ? der(0, 0, 1) : dvar(0, n, mu);
        const int mpn = m + n;
        const TorElem d0mn = mpn == 0 ? der(0, 0, 1) : dvar(0, mpn, mu);
        const ParamPoly dl(m + n == 0 ? 1 : 0);
        CHECK(comm(tk0(0, m), tk0(0, n), v).is_zero());
        CHECK(comm(tk0(0, m), loop(0, n, kE), v).is_zero());
        CHECK(comm(d0m, d0n, v) ==
              W.act(ParamPoly(n - m) * d0mn + ParamPoly(2) * mu * ParamPoly(m * m * m) * dl * k1(), v));
        CHECK(comm(d0m, tk0(0, n), v) == W.act(ParamPoly(n) * tk0(0, mpn) + ParamPoly(m) * dl * k1(), v));
        CHECK(comm(d0m, loop(0, n, kF), v) == W.act(loop(0, mpn, kF, ParamPoly(n)), v));
        CHECK(comm(loop(0, m, kE), loop(0, n, kF), v) ==
              W.act(loop(0, mpn, kH) + ParamPoly(m) * dl * k1(), v));
      }
    }
  }
}

TEST_CASE("translation operator") {
  Toroidal T = sl2_algebra();
  InducedModule V(T, BaseModule::vacuum());
  const ModVec one = V.base_vector();
  CHECK(V.translation(one).is_zero());
  auto u1 = V.act(Gen::loop(-1, 2, kE), one);
  CHECK(V.translation(u1) == V.act(Gen::loop(-2, 2, kE), one));
  // K_m(-1) 1 = k_{0,m} 1 goes to K_m(-2) 1 = k_{-1,m} 1
  CHECK(V.translation(V.act(Gen::k(0, 3), one)) == V.act(Gen::k(-1, 3), one));
  PbwSampler S(7);
  for (int s = 0; s < 40; ++s) {
    const ModVec v = S.vector(V, 3, -3, 2);
    CHECK(V.translation(v) == V.translation_recursive(v));
    const Gen g = S.generator(T, -2, 2);
    const auto [a, n] = field_of(g);
    // [d, a(n)] = -n a(n-1)
    auto lhs = V.translation(V.field_coeff(a, n, v)) - V.field_coeff(a, n, V.translation(v));
    INFO(gen_str(T, g) << " on " << V.str(v));
    CHECK(lhs == ParamPoly(-n) * V.field_coeff(a, n - 1, v));
  }
}

TEST_CASE("field coefficients") {
  Toroidal T = sl2_algebra();
  InducedModule V(T, BaseModule::vacuum());
  const ModVec one = V.base_vector();
  CHECK(V.field_coeff(FieldGen::kfield(2), 0, one).is_zero());
  CHECK(V.field_coeff(FieldGen::loop(0, kE), -1, one) == V.act(loop(-1, 0, kE), one));
  auto fw = V.field_window(FieldGen::dfield(2), one, -3, 3);
  CHECK(fw.truncation_ok);
  for (const auto& [n, c] : fw.coeffs) CHECK(c.is_zero() == (n >= 0));
  auto v = V.act(Gen::loop(-2, 1, kF), one);
  auto fw2 = V.field_window(FieldGen::loop(-1, kE), v, -2, 4);
  CHECK(fw2.truncation_ok);
  CHECK(fw2.bound == 2);
  CHECK_FALSE(fw2.coeffs[4].second.is_zero());  // n = 2 reaches the bound
}

TEST_CASE("bigrading") {
  Toroidal T = sl2_algebra();
  InducedModule V(T, BaseModule::vacuum());
  PbwSampler S(99);
  for (int s = 0; s < 40; ++s) {
    const ModVec v = S.vector(V, 3, -2, 2);
    const Gen g = S.generator(T, -2, 2);
    const TorElem x = gen_elem(T, g);
    const auto gr = T.grade(x);
    REQUIRE(gr.has_value());
    std::optional<std::pair<int, int>> in;
    for (const auto& [m, c] : v) {
      if (!in) in = V.bigrade(m);
      CHECK(V.bigrade(m) == *in);
    }
    for (const auto& [m, c] : V.act(x, v)) {
      CHECK(V.bigrade(m) == std::make_pair(in->first + gr->first, in->second + gr->second));
    }
  }
}

TEST_CASE("nilpotency probe") {
  Toroidal T = sl2_algebra();
  InducedModule V0(T, BaseModule::vacuum(ParamPoly(0)));
  const FieldGen e = FieldGen::loop(0, kE);
  CHECK(V0.nilpotency_probe(e, V0.base_vector(), 2, -1, 3));
  InducedModule V(T, BaseModule::vacuum(ParamPoly(Rational(5, 3))));
  CHECK_FALSE(V.nilpotency_probe(e, V.base_vector(), 1, -3, 0));
  CHECK_THROWS_AS(InducedModule(T, BaseModule::vacuum()).nilpotency_probe(e, V.base_vector(), 1, 0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(V.nilpotency_probe(FieldGen::loop(0, kH), V.base_vector(), 1, 0, 0), std::invalid_argument);
  // recorded probe in V(1): e(z)^2 applied to e(-1) 1 on total modes [-4, -1]
  InducedModule V1(T, BaseModule::vacuum(ParamPoly(1)));
  const ModVec v = V1.act(Gen::loop(-1, 0, kE), V1.base_vector());
  const bool probe = V1.nilpotency_probe(e, v, 2, -4, -1);
  MESSAGE("e(z)^2 e(-1)1 vanishes on [-4,-1] in V(1): " << probe);
  CHECK_FALSE(probe);
}

}  // TEST_SUITE
