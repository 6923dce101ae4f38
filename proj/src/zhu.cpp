#include "toroidal/zhu.hpp"

#include <map>
#include <stdexcept>

namespace tor {

std::vector<ParamPoly> square_mode_coeffs(int wt, int m, int count) {
  const int order = count + 2;
  const LaurentSeries s = LaurentSeries::log1p(order).pow(m) * LaurentSeries::one_plus_z_pow(wt - 1, order);
  std::vector<ParamPoly> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(s.coeff(m + i));
  return out;
}

namespace {

/// (d/dz)^{(n)} F = F^{(n)} / n!.
Field divided_deriv(Field f, int n) {
  for (int k = 0; k < n; ++k) f = f.deriv();
  return n > 0 ? ParamPoly(Rational(1) / factorial(static_cast<unsigned>(n))) * f : f;
}

Field letter_field(const Letter& x) {
  switch (x.kind) {
    case Letter::U: return divided_deriv(Field::affine(x.u), -x.n - 1);
    case Letter::I: return divided_deriv(Field::iota(), -x.n - 1);
    case Letter::Lp: return divided_deriv(Field::virasoro_v(), -x.n - 2);
  }
  return Field::identity();
}

Field zero_field() { return ParamPoly() * Field::identity(); }

Field mono_field(const FockMono& m) {
  Field f = Field::lattice(m.r);
  for (const auto& h : m.h) f = Field::normal(divided_deriv(Field::heis(h.kind), h.p - 1), f);
  for (auto it = m.f.f.rbegin(); it != m.f.f.rend(); ++it) f = Field::normal(letter_field(*it), f);
  return f;
}

using Window = std::vector<std::pair<int, FockVec>>;

Window coefficients(const Field& f, const FockSpace& W, int lo, int hi, const FockVec& target) {
  Window out;
  for (int n = lo; n <= hi; ++n) out.emplace_back(n, f.coeff(W, -n, target));
  return out;
}

}  // namespace

Field state_field(const FockSpace& V, const FockVec& x) {
  if (V.config().highest) throw std::invalid_argument("state_field: not a vacuum module");
  bool any = false;
  Field out = zero_field();
  for (const auto& [m, c] : x) {
    const Field f = c == ParamPoly(1) ? mono_field(m) : c * mono_field(m);
    out = any ? out + f : f;
    any = true;
  }
  return out;
}

std::vector<std::pair<int, FockVec>> weight_components(const FockVec& x) {
  std::map<int, FockVec> parts;
  for (const auto& [m, c] : x) parts[FockSpace::level(m)].add(m, c);
  return {parts.begin(), parts.end()};
}

FockVec square_mode(const FockSpace& V, const FockVec& a, int m, const FockSpace& W, const FockVec& v) {
  if (a.is_zero() || v.is_zero()) return {};
  const auto parts = weight_components(a);
  if (parts.size() != 1) throw std::invalid_argument("square_mode: vector is not homogeneous");
  const int wt = parts.front().first;
  const int bound = FockSpace::level(v) + wt - 1;
  if (bound < m) return {};
  const Field f = state_field(V, a);
  const auto c = square_mode_coeffs(wt, m, bound - m + 1);
  FockVec out;
  for (int i = m; i <= bound; ++i) {
    const ParamPoly& ci = c[i - m];
    if (!ci.is_zero()) out.add_scaled(f.mode(W, i, v), ci);
  }
  return out;
}

// ---------------------------------------------------------------------------
// PhiVec

struct PhiVec::Node {
  Kind kind = Vacuum;
  FockVec x;
  int j = 0;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
  std::vector<std::pair<ParamPoly, std::shared_ptr<const Node>>> terms;
};

PhiVec PhiVec::vacuum() { return PhiVec(std::make_shared<Node>()); }

PhiVec PhiVec::primary(FockVec x) {
  auto n = std::make_shared<Node>();
  n->kind = Primary;
  n->x = std::move(x);
  return PhiVec(n);
}

PhiVec PhiVec::omega() {
  auto n = std::make_shared<Node>();
  n->kind = Omega;
  return PhiVec(n);
}

PhiVec PhiVec::product(const PhiVec& a, int j, const PhiVec& b) {
  auto n = std::make_shared<Node>();
  n->kind = Product;
  n->j = j;
  n->a = a.node_;
  n->b = b.node_;
  return PhiVec(n);
}

PhiVec PhiVec::lminus1(const PhiVec& v) {
  auto n = std::make_shared<Node>();
  n->kind = LMinus1;
  n->a = v.node_;
  return PhiVec(n);
}

PhiVec operator+(const PhiVec& a, const PhiVec& b) {
  auto n = std::make_shared<PhiVec::Node>();
  n->kind = PhiVec::Sum;
  n->terms = {{ParamPoly(1), a.node_}, {ParamPoly(1), b.node_}};
  return PhiVec(n);
}

PhiVec operator*(const ParamPoly& c, const PhiVec& a) {
  auto n = std::make_shared<PhiVec::Node>();
  n->kind = PhiVec::Sum;
  n->terms = {{c, a.node_}};
  return PhiVec(n);
}

PhiVec::Kind PhiVec::kind() const { return node_->kind; }

// ---------------------------------------------------------------------------
// ZhuContext

ZhuContext::ZhuContext(std::shared_ptr<const SimpleAlgebra> g, ParamPoly ell, ParamPoly mu, ParamPoly c_tilde)
    : g_(g),
      ell_(std::move(ell)),
      mu_(std::move(mu)),
      c_(std::move(c_tilde)),
      V_(std::move(g), FockConfig::affine_virasoro_vacuum(ell_, ParamPoly(24) * mu_ * ell_ - ParamPoly(2),
                                                          ParamPoly(0))) {}

ZhuContext ZhuContext::pinned(std::shared_ptr<const SimpleAlgebra> g, ParamPoly ell, ParamPoly mu) {
  ParamPoly c = ParamPoly(24) * mu * ell - ParamPoly(2);
  return ZhuContext(std::move(g), std::move(ell), std::move(mu), std::move(c));
}

FockSpace ZhuContext::module(int lambda) const {
  return FockSpace(g_, FockConfig::affine_virasoro_highest(ell_, ParamPoly(24) * mu_ * ell_ - ParamPoly(2), lambda));
}

FockVec ZhuContext::omega() const {
  const FockVec vac = V_.vacuum();
  return V_.virasoro_v(-2, vac) + V_.heis_virasoro(-2, vac);
}

FockVec ZhuContext::lattice(int n) const { return V_.vacuum(n); }

FockVec ZhuContext::loop_state(int u, int m) const { return V_.letter(Letter::a(u, -1), V_.vacuum(m)); }

FockVec ZhuContext::heis_state(HeisMode::Kind h) const { return V_.heis(h, -1, V_.vacuum()); }

ParamPoly ZhuContext::central_charge() const {
  const FockVec w = omega();
  const FockVec r = state_field(V_, w).mode(V_, 3, w);
  const FockVec vac = V_.vacuum();
  const ParamPoly half = r.coeff(vac.begin()->first);
  if (!(r == FockVec(vac.begin()->first, half))) throw std::logic_error("omega_3 omega is not a multiple of 1");
  return ParamPoly(2) * half;
}

bool ZhuContext::is_primary(const FockVec& x) const {
  for (int n : {1, 2}) {
    if (!(V_.virasoro_v(n, x) + V_.heis_virasoro(n, x)).is_zero()) return false;
  }
  return true;
}

FockVec ZhuContext::vector(const PhiVec& pv) const {
  const PhiVec::Node& n = *pv.node_;
  switch (n.kind) {
    case PhiVec::Vacuum: return V_.vacuum();
    case PhiVec::Primary: return n.x;
    case PhiVec::Omega: return omega();
    case PhiVec::Product: {
      const FockVec a = vector(PhiVec(n.a));
      return state_field(V_, a).mode(V_, n.j, vector(PhiVec(n.b)));
    }
    case PhiVec::LMinus1: {
      const FockVec v = vector(PhiVec(n.a));
      return V_.virasoro_v(-1, v) + V_.heis_virasoro(-1, v);
    }
    case PhiVec::Sum: {
      FockVec out;
      for (const auto& [c, t] : n.terms) out.add_scaled(vector(PhiVec(t)), c);
      return out;
    }
  }
  return {};
}

FockVec ZhuContext::t_image(const PhiVec& pv) const {
  const PhiVec::Node& n = *pv.node_;
  switch (n.kind) {
    case PhiVec::Vacuum: return V_.vacuum();
    case PhiVec::Primary:
      if (!is_primary(n.x)) throw std::invalid_argument("phi_field: vector is not primary");
      return n.x;
    case PhiVec::Omega: {
      FockVec out = omega();
      out.add_scaled(V_.vacuum(), -c_ * ParamPoly(Rational(1, 24)));
      return out;
    }
    case PhiVec::Product: {
      // T(a_j b) = T(a)[j] T(b); the vacuum part of T(a) contributes 1[j] = delta_{j,-1}.
      const FockVec ta = t_image(PhiVec(n.a));
      const FockVec tb = t_image(PhiVec(n.b));
      const FockMono one = V_.vacuum().begin()->first;
      FockVec out;
      for (auto [wt, part] : weight_components(ta)) {
        const ParamPoly c1 = part.coeff(one);
        if (!c1.is_zero()) {
          if (n.j == -1) out.add_scaled(tb, c1);
          part.add(one, -c1);
        }
        out += square_mode(V_, part, n.j, V_, tb);
      }
      return out;
    }
    case PhiVec::LMinus1: {
      // T(L(-1) v) = T(omega_0 v) = omega[0] T(v).
      return square_mode(V_, omega(), 0, V_, t_image(PhiVec(n.a)));
    }
    case PhiVec::Sum: {
      FockVec out;
      for (const auto& [c, t] : n.terms) out.add_scaled(t_image(PhiVec(t)), c);
      return out;
    }
  }
  return {};
}

Field ZhuContext::phi(const PhiVec& v) const {
  Field out = zero_field();
  for (const auto& [wt, part] : weight_components(t_image(v))) out = out + state_field(V_, part).shift(wt);
  return out;
}

std::vector<std::pair<int, FockVec>> ZhuContext::phi_field(const PhiVec& v, const FockSpace& W, int lo, int hi,
                                                           const FockVec& target) const {
  return coefficients(phi(v), W, lo, hi, target);
}

std::pair<std::vector<std::pair<int, FockVec>>, std::vector<std::pair<int, FockVec>>> ZhuContext::lminus1_phi(
    const PhiVec& v, const FockSpace& W, int lo, int hi, const FockVec& target) const {
  auto lhs = phi_field(PhiVec::lminus1(v), W, lo, hi, target);
  auto rhs = phi_field(v, W, lo, hi, target);
  for (auto& [n, x] : rhs) x = ParamPoly(-n) * x;
  return {std::move(lhs), std::move(rhs)};
}

PhiVec ZhuContext::theta_dn(int n) const {
  const PhiVec e = PhiVec::primary(lattice(n));
  const PhiVec d = PhiVec::primary(heis_state(HeisMode::D));
  const PhiVec nk = PhiVec::primary(ParamPoly(n) * heis_state(HeisMode::K));
  return ParamPoly(n) * PhiVec::product(PhiVec::omega(), -1, e) +
         ParamPoly(-1) * PhiVec::lminus1(PhiVec::product(d, -1, e)) +
         (ParamPoly(n) * (mu_ * ell_ - ParamPoly(1))) * PhiVec::product(nk, -2, e);
}

Field ZhuContext::dn_square(int n, DnLastSummand last) const {
  const ParamPoly pn(n);
  const Field e = Field::lattice(n);
  const Field zde = e.deriv().shift(1);
  Field f = pn * Field::normal(omega_v_field(), e).shift(2);
  f = f + pn * zde;
  f = f - (pn * c_ * ParamPoly(Rational(1, 24))) * e;
  f = f - Field::normal(Field::heis(HeisMode::D), e).shift(1).deriv().shift(1);
  const ParamPoly corr = pn * (ell_ * mu_ - ParamPoly(1));
  if (last == DnLastSummand::AsDisplayed) {
    f = f + corr * Field::product(zde, e);
  } else {
    f = f + corr * (Field::product((pn * Field::heis(HeisMode::K)).deriv(), e).shift(2) + zde);
  }
  return f;
}

std::vector<std::pair<int, FockVec>> ZhuContext::dn_square_field(int n, const FockSpace& W, int lo, int hi,
                                                                 const FockVec& target, DnLastSummand last) const {
  return coefficients(dn_square(n, last), W, lo, hi, target);
}

PhiCommutatorResult ZhuContext::phi_commutator_check(const PhiVec& u, const PhiVec& v, const FockSpace& W, int lo,
                                                     int hi, const FockVec& target) const {
  PhiCommutatorResult res;
  const FockVec uv = vector(u);
  const FockVec vv = vector(v);
  res.j_bound = FockSpace::level(uv) + FockSpace::level(vv) - 1;
  const Field fu_state = state_field(V_, uv);
  for (int j = res.j_bound + 1; j <= res.j_bound + 3; ++j) {
    if (j >= 0 && !fu_state.mode(V_, j, vv).is_zero()) res.bound_ok = false;
  }
  const Field fu = phi(u);
  const Field fv = phi(v);
  std::vector<Field> prods;
  for (int j = 0; j <= res.j_bound; ++j) prods.push_back(phi(PhiVec::product(u, j, v)));
  for (int m = lo; m <= hi; ++m) {
    for (int n = lo; n <= hi; ++n) {
      FockVec r = fu.coeff(W, -m, fv.coeff(W, -n, target));
      r -= fv.coeff(W, -n, fu.coeff(W, -m, target));
      Rational mj(1);
      for (int j = 0; j <= res.j_bound; ++j) {
        if (j > 0) mj = mj * Rational(m) / Rational(j);
        if (!mj.is_zero()) r.add_scaled(prods[j].coeff(W, -(m + n), target), -ParamPoly(mj));
      }
      if (!r.is_zero()) {
        res.witness = PhiCommutatorWitness{m, n, std::move(r)};
        return res;
      }
    }
  }
  return res;
}

FockVec ZhuContext::act_square(const FockSpace& W, const Sym& s, const FockVec& v) const {
  switch (s.kind) {
    case Sym::Loop: return Field::product(Field::affine(s.idx), Field::lattice(s.m1)).mode(W, s.m0, v);
    case Sym::K0: return ell_ * v;
    case Sym::K1: return ell_ * W.heis(HeisMode::K, 0, v);
    case Sym::Kmn:
      // K_n[z] = sum_i k_{i,n} z^{-i} = (ell/n) Y(e^{nk}, z); t0^a k1 = -a k_{a,0}.
      if (s.m1 != 0) return ell_ * ParamPoly(Rational(1, s.m1)) * W.lattice(s.m1, s.m0 - 1, v);
      return ell_ * ParamPoly(Rational(-1, s.m0)) * W.heis(HeisMode::K, s.m0, v);
    case Sym::Der:
      if (s.idx == 1 && s.m1 == 0) return W.heis(HeisMode::D, s.m0, v);
      break;
  }
  throw std::invalid_argument("act_square: derivation outside the square-bracket dictionary");
}

FockVec ZhuContext::act_square(const FockSpace& W, const TorElem& x, const FockVec& v) const {
  FockVec out;
  for (const auto& [s, c] : x) out.add_scaled(act_square(W, s, v), c);
  return out;
}

}  // namespace tor
