#include "toroidal/genfun.hpp"

#include <stdexcept>

namespace tor {

namespace {

bool square(const FieldSymbol& f) { return f.style == DeltaStyle::square; }

/// Mode index n of the coefficient of z^q: z^{-n} (square, K), z^{-n-1}
/// (round loop, k1, d1), z^{-n-2} (round D).
int mode_of(const FieldSymbol& f, int q) {
  if (square(f) || f.gen == FieldSymbol::K) return -q;
  if (f.gen == FieldSymbol::D) return -q - 2;
  return -q - 1;
}

/// Margin by which field expansions exceed the requested window, enough for
/// three derivatives and the delta shifts.
constexpr int kMargin = 12;

}  // namespace

TorElem field_coefficient(const Toroidal& T, const FieldSymbol& f, int q) {
  const int n = mode_of(f, q);
  switch (f.gen) {
    case FieldSymbol::Loop: {
      TorElem r;
      for (const auto& [k, c] : f.u) r += loop(n, f.m, k, ParamPoly(c));
      return r;
    }
    case FieldSymbol::K:
      return kmn(n, f.m);
    case FieldSymbol::K1:
      return tk1(n, 0);
    case FieldSymbol::D1:
      return der(n, 0, 1);
    case FieldSymbol::D:
      return square(f) ? dtilde(n, f.m) : dvar(n, f.m, T.mu());
  }
  return {};
}

Series<TorElem> expand_field(const Toroidal& T, const FieldSymbol& f, int lo, int hi) {
  Series<TorElem> s(lo, hi);
  for (int q = lo; q <= hi; ++q) s.at(q) = field_coefficient(T, f, q);
  if (f.gen == FieldSymbol::K && f.m == 0) s.log() = k1();
  return s;
}

DistWindow<TorElem> lhs_commutator(const Toroidal& T, const FieldSymbol& f, const FieldSymbol& g,
                                   const Window& w) {
  if (f.style != g.style) throw std::invalid_argument("lhs_commutator: mixed mode conventions");
  auto F = expand_field(T, f, w.zlo, w.zhi);
  auto G = expand_field(T, g, w.wlo, w.whi);
  DistWindow<TorElem> out(w.zlo, w.zhi, w.wlo, w.whi);
  for (int p = w.zlo; p <= w.zhi; ++p) {
    if (F.at(p).is_zero()) continue;
    for (int q = w.wlo; q <= w.whi; ++q) out.add({p, q, 0, 0}, T.bracket(F.at(p), G.at(q)));
  }
  if (!F.log().is_zero()) {
    for (int q = w.wlo; q <= w.whi; ++q) out.add({0, q, 1, 0}, T.bracket(F.log(), G.at(q)));
  }
  if (!G.log().is_zero()) {
    for (int p = w.zlo; p <= w.zhi; ++p) out.add({p, 0, 0, 1}, T.bracket(F.at(p), G.log()));
  }
  if (!F.log().is_zero() && !G.log().is_zero()) out.add({0, 0, 1, 1}, T.bracket(F.log(), G.log()));
  return out;
}

const std::vector<RelationInfo>& relation_catalog() {
  static const std::vector<RelationInfo> cat = [] {
    std::vector<RelationInfo> v;
    const char* what[12] = {"",
                            "[(t1^m u), (t1^n v)]",
                            "[K_m, (t1^n u)]",
                            "[D_m, (t1^n u)]",
                            "[d1, (t1^n u)]",
                            "[K_m, K_n]",
                            "[D_m, K_n]",
                            "",
                            "[d1, K_n]",
                            "[d1, k1] and [d1, d1]",
                            "[D_m, D_n]",
                            "[d1, D_n]"};
    for (DeltaStyle s : {DeltaStyle::square, DeltaStyle::round}) {
      const bool sq = s == DeltaStyle::square;
      for (int item = 1; item <= 11; ++item) {
        if (item == 7) continue;
        RelationInfo r;
        r.id = std::string(sq ? "square." : "round.") + std::to_string(item);
        r.ref = std::string(sq ? "square-bracket generating functions of the divergence-zero algebra, "
                               : "round-bracket generating functions of the variant algebra, ") +
                what[item];
        r.style = s;
        r.item = item;
        r.uses_u = item <= 4;
        r.uses_v = item == 1;
        v.push_back(r);
      }
    }
    return v;
  }();
  return cat;
}

const RelationInfo& relation_info(const std::string& id) {
  for (const auto& r : relation_catalog()) {
    if (r.id == id) return r;
  }
  throw std::invalid_argument("unknown relation identifier: " + id);
}

namespace {

/// Builds the right-hand sides.  Op is w d/dw (square) or d/dw (round).
struct RhsBuilder {
  const Toroidal& T;
  DeltaStyle style;
  Window w;

  int lo() const { return w.wlo + w.zlo - kMargin; }
  int hi() const { return w.whi + w.zhi + kMargin; }

  Series<TorElem> field(const FieldSymbol& f) const { return expand_field(T, f, lo(), hi()); }
  Series<TorElem> op(const Series<TorElem>& s, unsigned r = 1) const {
    Series<TorElem> x = s;
    for (unsigned i = 0; i < r; ++i) x = style == DeltaStyle::square ? x.theta() : x.deriv();
    return x;
  }
  Series<TorElem> constant(const TorElem& x) const {
    Series<TorElem> s(lo(), hi());
    s.at(0) = x;
    return s;
  }
  DistWindow<TorElem> dt(const Series<TorElem>& A, unsigned r, const ParamPoly& c) const {
    if (c.is_zero()) return DistWindow<TorElem>(w.zlo, w.zhi, w.wlo, w.whi);
    return delta_term(style, A, r, w.zlo, w.zhi, w.wlo, w.whi).scale(c);
  }
  DistWindow<TorElem> zero() const { return DistWindow<TorElem>(w.zlo, w.zhi, w.wlo, w.whi); }
};

GVec basis_vec(int u) { return GVec{{u, Rational(1)}}; }

}  // namespace

DistWindow<TorElem> rhs_closed(const Toroidal& T, const std::string& id, int m, int n, const Window& w, int u,
                               int v) {
  const RelationInfo& info = relation_info(id);
  RhsBuilder B{T, info.style, w};
  const DeltaStyle s = info.style;
  const ParamPoly M(m);
  const ParamPoly N(n);
  const ParamPoly MN(m + n);
  const ParamPoly& mu = T.mu();
  auto K = [&](int r) { return B.field(FieldSymbol::kfield(s, r)); };
  auto D = [&](int r) { return B.field(FieldSymbol::dfield(s, r)); };
  auto L = [&](int r, const GVec& x) { return B.field(FieldSymbol::loop(s, r, x)); };
  const Series<TorElem> k0c = B.constant(k0());
  const int dmn0 = m + n == 0 ? 1 : 0;

  switch (info.item) {
    case 1: {
      const ParamPoly f(T.g().form(u, v));
      auto r = B.dt(L(m + n, T.g().bracket(u, v)), 0, 1);
      r += B.dt(B.op(K(m + n)), 0, f * M);
      r += B.dt(K(m + n), 1, f * MN);
      r += B.dt(k0c, 1, f * ParamPoly(dmn0));
      return r;
    }
    case 2:
    case 5:
      return B.zero();
    case 3: {
      auto r = B.dt(B.op(L(m + n, basis_vec(u))), 0, M);
      r += B.dt(L(m + n, basis_vec(u)), 1, MN);
      return r;
    }
    case 4:
      return B.dt(L(n, basis_vec(u)), 0, N);
    case 6: {
      auto r = B.dt(B.op(K(m + n)), 0, M);
      r += B.dt(K(m + n), 1, MN);
      r += B.dt(k0c, 1, ParamPoly(dmn0));
      return r;
    }
    case 8: {
      auto r = B.dt(K(n), 0, N);
      r += B.dt(k0c, 0, ParamPoly(n == 0 ? 1 : 0));
      return r;
    }
    case 9:
      return B.dt(k0c, 1, 1);
    case 10: {
      auto r = B.dt(B.op(D(m + n)), 0, M);
      r += B.dt(D(m + n), 1, MN);
      const auto Kmn = K(m + n);
      for (unsigned k = 0; k <= 3; ++k) {
        Rational c = binom(3, k);
        for (unsigned i = 0; i < k; ++i) c *= Rational(m);
        for (unsigned i = k; i < 3; ++i) c *= Rational(m + n);
        r += B.dt(B.op(Kmn, k), 3 - k, mu * ParamPoly(c));
      }
      return r;
    }
    case 11: {
      auto r = B.dt(D(n), 0, N);
      r += B.dt(K(n), 2, mu * ParamPoly(static_cast<long long>(n) * n * n));
      return r;
    }
    default:
      break;
  }
  throw std::invalid_argument("unknown relation identifier: " + id);
}

DistWindow<TorElem> verify_relation(const Toroidal& T, const std::string& id, int m, int n, const Window& w,
                                    int u, int v) {
  const RelationInfo& info = relation_info(id);
  const DeltaStyle s = info.style;
  FieldSymbol f;
  FieldSymbol g;
  switch (info.item) {
    case 1:
      f = FieldSymbol::loop(s, m, basis_vec(u));
      g = FieldSymbol::loop(s, n, basis_vec(v));
      break;
    case 2:
      f = FieldSymbol::kfield(s, m);
      g = FieldSymbol::loop(s, n, basis_vec(u));
      break;
    case 3:
      f = FieldSymbol::dfield(s, m);
      g = FieldSymbol::loop(s, n, basis_vec(u));
      break;
    case 4:
      f = FieldSymbol::d1(s);
      g = FieldSymbol::loop(s, n, basis_vec(u));
      break;
    case 5:
      f = FieldSymbol::kfield(s, m);
      g = FieldSymbol::kfield(s, n);
      break;
    case 6:
      f = FieldSymbol::dfield(s, m);
      g = FieldSymbol::kfield(s, n);
      break;
    case 8:
      f = FieldSymbol::d1(s);
      g = FieldSymbol::kfield(s, n);
      break;
    case 9:
      f = FieldSymbol::d1(s);
      g = FieldSymbol::k1(s);
      break;
    case 10:
      f = FieldSymbol::dfield(s, m);
      g = FieldSymbol::dfield(s, n);
      break;
    case 11:
      f = FieldSymbol::d1(s);
      g = FieldSymbol::dfield(s, n);
      break;
    default:
      throw std::invalid_argument("unknown relation identifier: " + id);
  }
  auto res = lhs_commutator(T, f, g, w) - rhs_closed(T, id, m, n, w, u, v);
  if (info.item == 9 && res.is_zero()) {
    res = lhs_commutator(T, FieldSymbol::d1(s), FieldSymbol::d1(s), w);
  }
  return res;
}

}  // namespace tor
