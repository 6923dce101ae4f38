#include "toroidal/pbw.hpp"

#include <sstream>
#include <stdexcept>

namespace tor {

TorElem gen_elem(const Toroidal& T, const Gen& g) {
  switch (g.cls) {
    case Gen::Loop:
      return loop(g.j, g.m, g.u);
    case Gen::K:
      return g.m == 0 ? tk1(g.j, 0) : kmn(g.j, g.m);
    case Gen::D:
      return g.m == 0 ? der(g.j, 0, 1) : dvar(g.j, g.m, T.mu());
  }
  return {};
}

std::string gen_str(const Toroidal& T, const Gen& g) {
  std::ostringstream os;
  switch (g.cls) {
    case Gen::Loop:
      os << "t0^" << g.j << " t1^" << g.m << " " << T.g().label(g.u);
      break;
    case Gen::K:
      if (g.m == 0) {
        os << "t0^" << g.j << " k1";
      } else {
        os << "k(" << g.j << "," << g.m << ")";
      }
      break;
    case Gen::D:
      if (g.m == 0) {
        os << "t0^" << g.j << " d1";
      } else {
        os << "d(" << g.j << "," << g.m << ")";
      }
      break;
  }
  return os.str();
}

Decomposed decompose(const Toroidal& T, const TorElem& x) {
  Decomposed out;
  TorElem rest = x;
  // Derivations first: each t^{(a,b)} d0 with b != 0 belongs to d_{a,b}.
  for (bool again = true; again;) {
    again = false;
    for (const auto& [s, c] : rest) {
      if (s.kind != Sym::Der || s.idx != 0) continue;
      if (s.m1 == 0) {
        if (s.m0 == 0) {
          out.d0 += c;
        } else if (s.m0 == -1) {
          out.t0inv_d0 += c;
        } else {
          throw std::invalid_argument("element outside the acting algebra: " + T.str(x));
        }
        TorElem sub(s, c);
        rest -= sub;
      } else {
        const ParamPoly k = c * ParamPoly(Rational(-1, s.m1));
        const Sym key = s;
        out.gens.add(Gen::d(key.m0, key.m1), k);
        rest.add_scaled(dvar(key.m0, key.m1, T.mu()), -k);
      }
      again = true;
      break;
    }
  }
  for (const auto& [s, c] : rest) {
    switch (s.kind) {
      case Sym::Loop:
        out.gens.add(Gen::loop(s.m0, s.m1, s.idx), c);
        break;
      case Sym::K0:
        out.k0 += c;
        break;
      case Sym::K1:
        out.gens.add(Gen::k(0, 0), c);
        break;
      case Sym::Kmn:
        if (s.m1 == 0) {
          // k_{j,0} = -(1/j) t0^j k1
          out.gens.add(Gen::k(s.m0, 0), c * ParamPoly(Rational(-1, s.m0)));
        } else {
          out.gens.add(Gen::k(s.m0, s.m1), c);
        }
        break;
      case Sym::Der:
        if (s.idx == 1 && s.m1 == 0) {
          out.gens.add(Gen::d(s.m0, 0), c);
        } else {
          throw std::invalid_argument("element outside the acting algebra: " + T.str(x));
        }
        break;
    }
  }
  return out;
}

BaseModule BaseModule::vacuum(ParamPoly ell) {
  BaseModule b;
  b.kind = BaseKind::Vacuum;
  b.ell = std::move(ell);
  b.alpha = ParamPoly();
  b.beta = ParamPoly();
  return b;
}

BaseModule BaseModule::t_ell(ParamPoly ell) {
  BaseModule b;
  b.kind = BaseKind::TEll;
  b.ell = std::move(ell);
  b.alpha = ParamPoly();
  b.beta = ParamPoly();
  return b;
}

BaseModule BaseModule::t_full(int lambda, ParamPoly ell, ParamPoly alpha, ParamPoly beta) {
  if (lambda < 0) throw std::invalid_argument("t_full: highest weight must be dominant");
  BaseModule b;
  b.kind = BaseKind::TFull;
  b.lambda = lambda;
  b.ell = std::move(ell);
  b.alpha = std::move(alpha);
  b.beta = std::move(beta);
  return b;
}

std::string BaseModule::str() const {
  switch (kind) {
    case BaseKind::Vacuum:
      return "V(ell=" + ell.str() + ")";
    case BaseKind::TEll:
      return "V(T_ell, ell=" + ell.str() + ")";
    case BaseKind::TFull:
      return "V(T_{ell,lambda,alpha,beta}, lambda=" + std::to_string(lambda) + ", ell=" + ell.str() +
             ", alpha=" + alpha.str() + ", beta=" + beta.str() + ")";
  }
  return {};
}

Gen FieldGen::mode(int n) const {
  switch (kind) {
    case Loop:
      return Gen::loop(n, m, u);
    case K1:
      return Gen::k(n, 0);
    case D1:
      return Gen::d(n, 0);
    case K:
      return Gen::k(n + 1, m);
    case D:
      return Gen::d(n - 1, m);
  }
  return {};
}

std::pair<FieldGen, int> field_of(const Gen& g) {
  switch (g.cls) {
    case Gen::Loop:
      return {FieldGen::loop(g.m, g.u), g.j};
    case Gen::K:
      if (g.m == 0) return {FieldGen::k1(), g.j};
      return {FieldGen::kfield(g.m), g.j - 1};
    case Gen::D:
      if (g.m == 0) return {FieldGen::d1(), g.j};
      return {FieldGen::dfield(g.m), g.j + 1};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Sl2Irrep

Sl2Irrep::Sl2Irrep(const SimpleAlgebra& g, int lambda) : lambda_(lambda) {
  if (lambda < 0) throw std::invalid_argument("sl2 highest weight must be dominant");
  if (lambda == 0) return;
  if (!g.is_sl2()) throw std::invalid_argument("highest-weight modules with lambda > 0 need sl2");
  const auto& r = g.roots().front();
  GVec e{{r.e, Rational(1)}};
  const Rational ef = g.form(e, r.f);
  const Rational hh = g.form(r.h, r.h);
  for (int a = 0; a < g.dim(); ++a) {
    GVec x{{a, Rational(1)}};
    coords_.push_back({g.form(x, r.f) / ef, g.form(x, r.h) / hh, g.form(x, e) / ef});
  }
}

std::vector<std::pair<int, Rational>> Sl2Irrep::act(int u, int k) const {
  std::vector<std::pair<int, Rational>> out;
  if (lambda_ == 0) return out;
  const auto& c = coords_.at(u);
  const int lam = lambda_;
  if (!c[0].is_zero() && k > 0) out.emplace_back(k - 1, c[0] * Rational(static_cast<long long>(k) * (lam - k + 1)));
  if (!c[1].is_zero() && lam != 2 * k) out.emplace_back(k, c[1] * Rational(lam - 2 * k));
  if (!c[2].is_zero() && k < lam) out.emplace_back(k + 1, c[2]);
  return out;
}

// ---------------------------------------------------------------------------
// InducedModule

InducedModule::InducedModule(Toroidal T, BaseModule base) : T_(std::move(T)), base_(std::move(base)) {
  if (base_.kind == BaseKind::TFull) top_ = Sl2Irrep(T_.g(), base_.lambda);
}

ModVec InducedModule::base_vector(int n, int w) const {
  Monomial m;
  if (base_.kind != BaseKind::Vacuum) {
    m.n = n;
    m.w = w;
    if (w < 0 || w > base_.lambda) throw std::invalid_argument("base_vector: weight index out of range");
  }
  return ModVec(m);
}

bool InducedModule::is_creation(const Gen& g) const {
  if (base_.kind != BaseKind::Vacuum) return g.j < 0;
  switch (g.cls) {
    case Gen::Loop:
      return g.j <= -1;
    case Gen::K:
      return g.m == 0 ? g.j <= -1 : g.j <= 0;
    case Gen::D:
      return g.m == 0 ? g.j <= -1 : g.j <= -2;
  }
  return false;
}

int InducedModule::degree(const Monomial& mono) {
  int d = 0;
  for (const auto& g : mono.gens) d -= g.j;
  return d;
}

std::pair<int, int> InducedModule::bigrade(const Monomial& mono) const {
  std::pair<int, int> r{0, mono.n};
  for (const auto& g : mono.gens) {
    r.first -= g.j;
    r.second += g.m;
  }
  return r;
}

ModVec InducedModule::base_action(const Gen& g, const Monomial& mono) const {
  ModVec out;
  if (base_.kind == BaseKind::Vacuum || g.j != 0) return out;
  Monomial target = mono;
  target.n = mono.n + g.m;
  switch (g.cls) {
    case Gen::Loop:
      for (const auto& [k, c] : top_.act(g.u, mono.w)) {
        Monomial t = target;
        t.w = k;
        out.add(t, ParamPoly(c));
      }
      break;
    case Gen::K:
      // k1 acts trivially; k_{0,m} = (1/m) t1^m k0
      if (g.m != 0) out.add(target, base_.ell * ParamPoly(Rational(1, g.m)));
      break;
    case Gen::D:
      out.add(target, ParamPoly(mono.n) + base_.alpha + base_.beta * ParamPoly(g.m));
      break;
  }
  return out;
}

ModVec InducedModule::act_mono(const Gen& g, const Monomial& mono) const {
  auto key = std::make_pair(g, mono);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  ModVec out;
  const bool create = is_creation(g);
  if (mono.gens.empty()) {
    if (create) {
      Monomial r = mono;
      r.gens.push_back(g);
      out.add(r, ParamPoly(1));
    } else {
      out = base_action(g, mono);
    }
  } else if (create && !(g < mono.gens.front())) {
    Monomial r = mono;
    r.gens.insert(r.gens.begin(), g);
    out.add(r, ParamPoly(1));
  } else {
    // g g1 R = g1 (g R) + [g, g1] R
    const Gen g1 = mono.gens.front();
    Monomial rest = mono;
    rest.gens.erase(rest.gens.begin());
    out = act(g1, act_mono(g, rest));
    const TorElem br = T_.bracket(gen_elem(T_, g), gen_elem(T_, g1));
    if (!br.is_zero()) out += act_decomposed(decompose(T_, br), ModVec(rest));
  }
  cache_.emplace(std::move(key), out);
  return out;
}

ModVec InducedModule::act(const Gen& g, const ModVec& v) const {
  ModVec out;
  for (const auto& [m, c] : v) out.add_scaled(act_mono(g, m), c);
  return out;
}

ModVec InducedModule::act_t0inv_d0(const Monomial& mono) const {
  if (base_.kind != BaseKind::Vacuum) {
    throw std::invalid_argument("t0^-1 d0 acts only on the vacuum module");
  }
  if (mono.gens.empty()) return ModVec();
  const Gen g1 = mono.gens.front();
  Monomial rest = mono;
  rest.gens.erase(rest.gens.begin());
  ModVec out = act(g1, act_t0inv_d0(rest));
  const TorElem br = T_.bracket(der(-1, 0, 0), gen_elem(T_, g1));
  if (!br.is_zero()) out += act_decomposed(decompose(T_, br), ModVec(rest));
  return out;
}

ModVec InducedModule::act_decomposed(const Decomposed& d, const ModVec& v) const {
  ModVec out;
  for (const auto& [g, c] : d.gens) out.add_scaled(act(g, v), c);
  if (!d.k0.is_zero()) out.add_scaled(v, d.k0 * base_.ell);
  if (!d.d0.is_zero()) {
    // d0 acts as minus the degree
    for (const auto& [m, c] : v) out.add(m, c * d.d0 * ParamPoly(-degree(m)));
  }
  if (!d.t0inv_d0.is_zero()) {
    for (const auto& [m, c] : v) out.add_scaled(act_t0inv_d0(m), c * d.t0inv_d0);
  }
  return out;
}

ModVec InducedModule::act(const TorElem& x, const ModVec& v) const {
  return act_decomposed(decompose(T_, x), v);
}

ModVec InducedModule::rep_consistency(const TorElem& x, const TorElem& y, const ModVec& v) const {
  ModVec r = act(T_.bracket(x, y), v);
  r -= act(x, act(y, v));
  r += act(y, act(x, v));
  return r;
}

ModVec InducedModule::translation(const ModVec& v) const {
  ModVec out;
  for (const auto& [m, c] : v) out.add_scaled(act_t0inv_d0(m), -c);
  return out;
}

ModVec InducedModule::translation_recursive(const ModVec& v) const {
  if (base_.kind != BaseKind::Vacuum) {
    throw std::invalid_argument("the translation operator is defined on the vacuum module");
  }
  ModVec out;
  for (const auto& [mono, c] : v) {
    if (mono.gens.empty()) continue;
    const Gen g1 = mono.gens.front();
    Monomial rest = mono;
    rest.gens.erase(rest.gens.begin());
    const auto [a, n] = field_of(g1);
    ModVec term = act(a.mode(n - 1), ModVec(rest));
    term *= ParamPoly(-n);
    term += act(g1, translation_recursive(ModVec(rest)));
    out.add_scaled(term, c);
  }
  return out;
}

ModVec InducedModule::field_coeff(const FieldGen& a, int n, const ModVec& v) const {
  return act(a.mode(n), v);
}

FieldWindow InducedModule::field_window(const FieldGen& a, const ModVec& v, int lo, int hi) const {
  FieldWindow fw;
  int deg = 0;
  for (const auto& [m, c] : v) deg = std::max(deg, degree(m));
  // a(n) raises the t0-power to j(n); j(n) > deg leaves the module
  const int shift = a.mode(0).j;
  fw.bound = deg - shift;
  for (int n = lo; n <= hi; ++n) fw.coeffs.emplace_back(n, field_coeff(a, n, v));
  fw.truncation_ok = true;
  for (int n = fw.bound + 1; n <= fw.bound + 3; ++n) {
    if (!field_coeff(a, n, v).is_zero()) fw.truncation_ok = false;
  }
  return fw;
}

bool InducedModule::nilpotency_probe(const FieldGen& a, const ModVec& v, int k, int lo, int hi) const {
  if (!base_.ell.is_constant()) throw std::invalid_argument("nilpotency_probe: ell must be specialized");
  if (a.kind != FieldGen::Loop) throw std::invalid_argument("nilpotency_probe: needs a loop generator");
  if (k <= 0) throw std::invalid_argument("nilpotency_probe: power must be positive");
  if (!T_.g().form(a.u, a.u).is_zero() || !T_.g().bracket(a.u, a.u).empty()) {
    throw std::invalid_argument("nilpotency_probe: generator is not a root vector");
  }
  int deg = 0;
  for (const auto& [m, c] : v) deg = std::max(deg, degree(m));
  const int top = deg;  // a(j) v = 0 for j > deg; the modes commute
  for (int s = lo; s <= hi; ++s) {
    const int bottom = s - (k - 1) * top;
    ModVec total;
    // enumerate ordered tuples j_1 + ... + j_k = s with bottom <= j_i <= top
    std::vector<int> js(k, bottom);
    auto rec = [&](auto&& self, int i, int remaining, const ModVec& cur) -> void {
      if (cur.is_zero()) return;
      if (i == k - 1) {
        if (remaining < bottom || remaining > top) return;
        total += field_coeff(a, remaining, cur);
        return;
      }
      for (int j = bottom; j <= top; ++j) self(self, i + 1, remaining - j, field_coeff(a, j, cur));
    };
    rec(rec, 0, s, v);
    if (!total.is_zero()) return false;
  }
  return true;
}

std::string InducedModule::str(const ModVec& v) const {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : v) {
    os << coeff_prefix(c, first);
    first = false;
    for (const auto& g : m.gens) os << "[" << gen_str(T_, g) << "]";
    if (base_.kind == BaseKind::Vacuum) {
      os << "|1>";
    } else {
      os << "|q^" << m.n;
      if (base_.kind == BaseKind::TFull) os << " w" << m.w;
      os << ">";
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// PbwSampler

int PbwSampler::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng_() % span);
}

Gen PbwSampler::generator(const Toroidal& T, int lo, int hi) {
  const int cls = uniform(0, 2);
  const int j = uniform(lo, hi);
  const int m = uniform(lo, hi);
  if (cls == 0) return Gen::loop(j, m, uniform(0, T.g().dim() - 1));
  if (cls == 1) return Gen::k(j, m);
  return Gen::d(j, m);
}

ModVec PbwSampler::vector(const InducedModule& M, int max_len, int lo, int hi) {
  ModVec v = M.base().kind == BaseKind::Vacuum ? M.base_vector()
                                               : M.base_vector(uniform(lo, hi), uniform(0, M.base().lambda));
  const int len = uniform(0, max_len);
  for (int i = 0; i < len;) {
    Gen g = generator(M.algebra(), lo, hi);
    if (!M.is_creation(g)) continue;
    v = M.act(g, v);
    ++i;
  }
  return v;
}

}  // namespace tor
