#include "toroidal/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tor {

// ---------------------------------------------------------------------------
// f-bar

FbarElem fbar_L(int n) { return FbarElem(FbarSym::l(n)); }
FbarElem fbar_U(int u, int n) { return FbarElem(FbarSym::a(u, n)); }
FbarElem fbar_I(int n) { return FbarElem(FbarSym::i(n)); }
FbarElem fbar_central(FbarSym::Kind k) { return FbarElem(FbarSym::central(k)); }

namespace {

void bracket_sym(const SimpleAlgebra& g, const FbarSym& a, const FbarSym& b, const ParamPoly& s, FbarElem& out) {
  if (a.is_central() || b.is_central()) return;
  if (b.kind < a.kind) {
    bracket_sym(g, b, a, -s, out);
    return;
  }
  const int m = a.n;
  const int n = b.n;
  const bool dl = m + n == 0;
  if (a.kind == FbarSym::L) {
    switch (b.kind) {
      case FbarSym::L:
        out.add(FbarSym::l(m + n), s * ParamPoly(m - n));
        if (dl) out.add(FbarSym::central(FbarSym::KVir), s * ParamPoly(Rational(static_cast<long long>(m) * m * m - m, 12)));
        return;
      case FbarSym::U:
        out.add(FbarSym::a(b.u, m + n), s * ParamPoly(-n));
        return;
      case FbarSym::I:
        out.add(FbarSym::i(m + n), s * ParamPoly(-n));
        if (dl) out.add(FbarSym::central(FbarSym::KVI), s * ParamPoly(-(static_cast<long long>(m) * m + m)));
        return;
      default:
        return;
    }
  }
  if (a.kind == FbarSym::U && b.kind == FbarSym::U) {
    for (const auto& [w, c] : g.bracket(a.u, b.u)) out.add(FbarSym::a(w, m + n), s * ParamPoly(c));
    if (dl) out.add(FbarSym::central(FbarSym::K), s * ParamPoly(g.form(a.u, b.u) * Rational(m)));
    return;
  }
  if (a.kind == FbarSym::I && b.kind == FbarSym::I && dl) out.add(FbarSym::central(FbarSym::KI), s * ParamPoly(m));
}

}  // namespace

FbarElem fbar_bracket(const SimpleAlgebra& g, const FbarElem& x, const FbarElem& y) {
  FbarElem out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) bracket_sym(g, a, b, ca * cb, out);
  }
  return out;
}

FbarElem eta(const FbarElem& x) {
  FbarElem out;
  for (const auto& [s, c] : x) {
    switch (s.kind) {
      case FbarSym::L:
        out.add(FbarSym::l(s.n), c);
        out.add(FbarSym::i(s.n), c * ParamPoly(s.n + 1));
        break;
      case FbarSym::U:
      case FbarSym::K:
        out.add(s, c);
        break;
      case FbarSym::KVir:
        out.add(s, c);
        out.add(FbarSym::central(FbarSym::KVI), c * ParamPoly(24));
        out.add(FbarSym::central(FbarSym::KI), c * ParamPoly(-12));
        break;
      default:
        throw std::invalid_argument("eta: argument is not in the affine-Virasoro algebra");
    }
  }
  return out;
}

std::string fbar_str(const SimpleAlgebra& g, const FbarElem& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : x) {
    out += coeff_prefix(c, first);
    first = false;
    switch (s.kind) {
      case FbarSym::L: out += "L(" + std::to_string(s.n) + ")"; break;
      case FbarSym::U: out += g.label(s.u) + "(" + std::to_string(s.n) + ")"; break;
      case FbarSym::I: out += "I(" + std::to_string(s.n) + ")"; break;
      case FbarSym::K: out += "k"; break;
      case FbarSym::KI: out += "k_I"; break;
      case FbarSym::KVI: out += "k_VI"; break;
      case FbarSym::KVir: out += "k_Vir"; break;
    }
  }
  return out;
}

Centrals Centrals::gamma(const ParamPoly& ell, const ParamPoly& mu) {
  return {ell, ParamPoly(1) - mu * ell, ParamPoly(Rational(1, 2)), ParamPoly(12) * mu * ell - ParamPoly(2)};
}

Centrals Centrals::affine_virasoro(const ParamPoly& ell, const ParamPoly& c) { return {ell, {}, {}, c}; }

const ParamPoly& Centrals::of(FbarSym::Kind kind) const {
  switch (kind) {
    case FbarSym::K: return k;
    case FbarSym::KI: return kI;
    case FbarSym::KVI: return kVI;
    case FbarSym::KVir: return kVir;
    default: break;
  }
  throw std::logic_error("Centrals::of: not a central symbol");
}

FockConfig FockConfig::fbar_vacuum(const ParamPoly& ell, const ParamPoly& mu, const ParamPoly& alpha) {
  FockConfig c;
  c.with_I = true;
  c.c = Centrals::gamma(ell, mu);
  c.alpha = alpha;
  return c;
}

FockConfig FockConfig::affine_virasoro_vacuum(const ParamPoly& ell, const ParamPoly& cc, const ParamPoly& alpha) {
  FockConfig c;
  c.with_I = false;
  c.c = Centrals::affine_virasoro(ell, cc);
  c.alpha = alpha;
  return c;
}

FockConfig FockConfig::affine_virasoro_highest(const ParamPoly& ell, const ParamPoly& cc, int lambda,
                                               const ParamPoly& beta, const ParamPoly& alpha) {
  FockConfig c = affine_virasoro_vacuum(ell, cc, alpha);
  c.highest = true;
  c.lambda = lambda;
  c.beta = beta;
  return c;
}

// ---------------------------------------------------------------------------
// FockSpace

FockSpace::FockSpace(std::shared_ptr<const SimpleAlgebra> g, FockConfig cfg) : g_(std::move(g)), cfg_(std::move(cfg)) {
  if (cfg_.highest && cfg_.with_I) throw std::invalid_argument("highest-weight f-bar modules are not supported");
  if (cfg_.highest) top_ = Sl2Irrep(*g_, cfg_.lambda);
}

FockVec FockSpace::vacuum(int r, int top) const {
  FockMono m;
  m.f.top = top;
  m.r = r;
  return FockVec(m);
}

int FockSpace::level(const FockMono& m) {
  int l = 0;
  for (const auto& x : m.f.f) l -= x.n;
  for (const auto& h : m.h) l += h.p;
  return l;
}

int FockSpace::level(const FockVec& v) {
  int l = 0;
  for (const auto& [m, c] : v) l = std::max(l, level(m));
  return l;
}

bool FockSpace::is_creation(const Letter& x) const {
  if (cfg_.highest || x.kind != Letter::Lp) return x.n <= -1;
  return x.n <= -2;
}

bool FockSpace::in_affine_virasoro(const FockVec& v) const {
  for (const auto& [m, c] : v) {
    for (const auto& x : m.f.f) {
      if (x.kind == Letter::I) return false;
    }
  }
  return true;
}

FbarElem FockSpace::from_letter(const Letter& x) const {
  switch (x.kind) {
    case Letter::Lp: {
      FbarElem e = fbar_L(x.n);
      if (cfg_.with_I) e.add(FbarSym::i(x.n), ParamPoly(x.n + 1));
      return e;
    }
    case Letter::U: return fbar_U(x.u, x.n);
    case Letter::I: return fbar_I(x.n);
  }
  return {};
}

std::pair<std::vector<std::pair<Letter, ParamPoly>>, ParamPoly> FockSpace::to_letters(const FbarElem& x) const {
  std::vector<std::pair<Letter, ParamPoly>> out;
  ParamPoly central;
  for (const auto& [s, c] : x) {
    switch (s.kind) {
      case FbarSym::L:
        out.emplace_back(Letter::lp(s.n), c);
        if (cfg_.with_I) out.emplace_back(Letter::i(s.n), -c * ParamPoly(s.n + 1));
        break;
      case FbarSym::U:
        out.emplace_back(Letter::a(s.u, s.n), c);
        break;
      case FbarSym::I:
        if (!cfg_.with_I) throw std::logic_error("I-mode in an affine-Virasoro module");
        out.emplace_back(Letter::i(s.n), c);
        break;
      default:
        central += c * cfg_.c.of(s.kind);
    }
  }
  return {out, central};
}

FockSpace::FVec FockSpace::top_action(const Letter& x, const FPart& p) const {
  if (!cfg_.highest || x.n != 0) return {};
  switch (x.kind) {
    case Letter::Lp:
      return FVec(p, cfg_.beta);
    case Letter::U: {
      FVec out;
      for (const auto& [k, c] : top_.act(x.u, p.top)) out.add(FPart{{}, k}, ParamPoly(c));
      return out;
    }
    case Letter::I:
      break;
  }
  return {};
}

const FockSpace::FVec& FockSpace::act_f(const Letter& x, const FPart& p) const {
  auto key = std::make_pair(x, p);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  FVec out;
  if (p.f.empty()) {
    if (is_creation(x)) {
      out.add(FPart{{x}, p.top}, ParamPoly(1));
    } else {
      out = top_action(x, p);
    }
  } else if (is_creation(x) && !(x < p.f.front())) {
    FPart q = p;
    q.f.insert(q.f.begin(), x);
    out.add(q, ParamPoly(1));
  } else {
    const Letter front = p.f.front();
    FPart rest{{p.f.begin() + 1, p.f.end()}, p.top};
    // x front rest = front (x rest) + [x, front] rest
    out = act_f_vec(front, act_f(x, rest));
    auto [letters, central] = to_letters(fbar_bracket(*g_, from_letter(x), from_letter(front)));
    for (const auto& [y, c] : letters) out.add_scaled(act_f(y, rest), c);
    out.add(rest, central);
  }
  return cache_.emplace(key, std::move(out)).first->second;
}

FockSpace::FVec FockSpace::act_f_vec(const Letter& x, const FVec& v) const {
  FVec out;
  for (const auto& [p, c] : v) out.add_scaled(act_f(x, p), c);
  return out;
}

FockVec FockSpace::lift(const FVec& fv, const FockMono& proto) const {
  FockVec out;
  for (const auto& [p, c] : fv) {
    FockMono m = proto;
    m.f = p;
    out.add(std::move(m), ParamPoly(c));
  }
  return out;
}

FockVec FockSpace::letter(const Letter& x, const FockVec& v) const {
  FockVec out;
  for (const auto& [m, c] : v) out.add_scaled(lift(act_f(x, m.f), m), c);
  return out;
}

FockVec FockSpace::fbar(const FbarSym& s, const FockVec& v) const {
  if (s.is_central()) return cfg_.c.of(s.kind) * v;
  auto [letters, central] = to_letters(FbarElem(s));
  FockVec out = central * v;
  for (const auto& [x, c] : letters) out.add_scaled(letter(x, v), c);
  return out;
}

FockVec FockSpace::fbar(const FbarElem& x, const FockVec& v) const {
  FockVec out;
  for (const auto& [s, c] : x) out.add_scaled(fbar(s, v), c);
  return out;
}

FockVec FockSpace::virasoro(int n, const FockVec& v) const { return fbar(FbarSym::l(n), v); }

FockVec FockSpace::virasoro_v(int n, const FockVec& v) const { return letter(Letter::lp(n), v); }

FockVec FockSpace::heis(HeisMode::Kind h, int p, const FockVec& v) const {
  FockVec out;
  for (const auto& [m, c] : v) {
    if (p < 0) {
      FockMono t = m;
      HeisMode x{h, -p};
      t.h.insert(std::upper_bound(t.h.begin(), t.h.end(), x), x);
      out.add(std::move(t), ParamPoly(c));
    } else if (p == 0) {
      // k(0) = <k, (alpha+r)k> = 0 and d(0) = alpha + r
      if (h == HeisMode::D) out.add(m, c * (cfg_.alpha + ParamPoly(m.r)));
    } else {
      // k(p) = p d/d(d(-p)), d(p) = p d/d(k(-p))
      const HeisMode partner{h == HeisMode::K ? HeisMode::D : HeisMode::K, p};
      auto [lo, hi] = std::equal_range(m.h.begin(), m.h.end(), partner);
      const auto mult = hi - lo;
      if (mult == 0) continue;
      FockMono t = m;
      t.h.erase(t.h.begin() + (lo - m.h.begin()));
      out.add(std::move(t), c * ParamPoly(static_cast<long long>(p) * mult));
    }
  }
  return out;
}

FockVec FockSpace::heis_virasoro(int n, const FockVec& v) const {
  const int L = level(v);
  FockVec out;
  for (int p = n - L; p <= L; ++p) {
    const int q = n - p;
    // annihilation modes act first
    if (p >= 0) {
      out += heis(HeisMode::D, q, heis(HeisMode::K, p, v));
    } else {
      out += heis(HeisMode::K, p, heis(HeisMode::D, q, v));
    }
  }
  return out;
}

const LinComb<std::vector<HeisMode>>& FockSpace::schur(int m, int t) const {
  auto key = std::make_pair(m, t);
  if (auto it = schur_.find(key); it != schur_.end()) return it->second;
  LinComb<std::vector<HeisMode>> out;
  if (t == 0) {
    out.add(std::vector<HeisMode>{}, ParamPoly(1));
  } else if (m != 0) {
    // t E_t = m sum_{p=1}^t k(-p) E_{t-p}
    for (int p = 1; p <= t; ++p) {
      for (const auto& [w, c] : schur(m, t - p)) {
        auto x = w;
        HeisMode k{HeisMode::K, p};
        x.insert(std::upper_bound(x.begin(), x.end(), k), k);
        out.add(std::move(x), c * ParamPoly(Rational(m, t)));
      }
    }
  }
  return schur_.emplace(key, std::move(out)).first->second;
}

namespace {

/// Expansion of E^+(-mk, z) on one monomial: every d(-p) becomes d(-p) - m z^{-p}.
/// Produces (s, reduced Heisenberg word, coefficient) for the z^{-s} terms.
void eplus_terms(const std::vector<HeisMode>& h, int m,
                 std::vector<std::tuple<int, std::vector<HeisMode>, Rational>>& out) {
  std::vector<std::pair<int, int>> dcounts;  // (p, multiplicity)
  std::vector<HeisMode> rest;
  for (const auto& x : h) {
    if (x.kind == HeisMode::D) {
      if (!dcounts.empty() && dcounts.back().first == x.p) {
        ++dcounts.back().second;
      } else {
        dcounts.emplace_back(x.p, 1);
      }
    } else {
      rest.push_back(x);
    }
  }
  if (m == 0 || dcounts.empty()) {
    out.emplace_back(0, h, Rational(1));
    return;
  }
  std::vector<int> take(dcounts.size(), 0);
  while (true) {
    int s = 0;
    Rational c(1);
    std::vector<HeisMode> w = rest;
    for (std::size_t i = 0; i < dcounts.size(); ++i) {
      const auto [p, a] = dcounts[i];
      const int b = take[i];
      s += p * b;
      c *= binom(a, b);
      for (int k = 0; k < b; ++k) c *= Rational(-m);
      for (int k = 0; k < a - b; ++k) w.push_back({HeisMode::D, p});
    }
    std::sort(w.begin(), w.end());
    out.emplace_back(s, std::move(w), c);
    std::size_t i = 0;
    while (i < take.size() && take[i] == dcounts[i].second) take[i++] = 0;
    if (i == take.size()) break;
    ++take[i];
  }
}

std::vector<HeisMode> merge(const std::vector<HeisMode>& a, const std::vector<HeisMode>& b) {
  std::vector<HeisMode> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

FockVec FockSpace::lattice(int m, int q, const FockVec& v) const {
  FockVec out;
  std::vector<std::tuple<int, std::vector<HeisMode>, Rational>> terms;
  for (const auto& [mono, c] : v) {
    terms.clear();
    eplus_terms(mono.h, m, terms);
    for (const auto& [s, w, cp] : terms) {
      const int t = s - q - 1;
      if (t < 0) continue;
      for (const auto& [e, ce] : schur(m, t)) {
        FockMono x = mono;
        x.h = merge(w, e);
        x.r = mono.r + m;
        out.add(std::move(x), c * ce * ParamPoly(cp));
      }
    }
  }
  return out;
}

std::vector<FockVec> FockSpace::eminus(int m, const FockVec& v, int order) const {
  std::vector<FockVec> out;
  for (int t = 0; t < order; ++t) {
    FockVec x;
    for (const auto& [mono, c] : v) {
      for (const auto& [e, ce] : schur(m, t)) {
        FockMono y = mono;
        y.h = merge(mono.h, e);
        y.r = mono.r + m;
        x.add(std::move(y), c * ce);
      }
    }
    out.push_back(std::move(x));
  }
  return out;
}

FockVec FockSpace::create(const std::vector<Letter>& letters, const std::vector<HeisMode>& hs, int r,
                          int top) const {
  FockVec v = vacuum(r, top);
  for (const auto& h : hs) v = heis(h.kind, -h.p, v);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) v = letter(*it, v);
  return v;
}

std::string FockSpace::str(const FockMono& m) const {
  std::ostringstream os;
  for (const auto& x : m.f.f) {
    switch (x.kind) {
      case Letter::Lp: os << "L'(" << x.n << ")"; break;
      case Letter::U: os << g_->label(x.u) << "(" << x.n << ")"; break;
      case Letter::I: os << "I(" << x.n << ")"; break;
    }
  }
  if (cfg_.highest) os << "w" << m.f.top;
  for (const auto& h : m.h) os << (h.kind == HeisMode::K ? "k(" : "d(") << -h.p << ")";
  const ParamPoly marker = cfg_.alpha + ParamPoly(m.r);
  if (marker.is_zero()) {
    os << "1";
  } else if (marker.terms().size() == 1 && marker == ParamPoly(marker.terms()[0].c)) {
    const std::string c = marker.str();
    os << "e^{" << (c == "1" ? "" : c == "-1" ? "-" : c) << "k}";
  } else {
    os << "e^{(" << marker.str() << ")k}";
  }
  return os.str();
}

std::string FockSpace::str(const FockVec& v) const {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : v) {
    out += coeff_prefix(c, first) + str(m);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Field

struct Field::Node {
  enum Kind { Identity, Affine, Iota, Vir, VirV, Heis, HeisVir, Lattice, Deriv, Shift, Product, Normal, Sum, Scale };
  Kind kind = Identity;
  int a = 0;  // g-label, Heisenberg kind, lattice m, or shift
  int weight = 0;
  ParamPoly c;
  std::shared_ptr<const Node> x;
  std::shared_ptr<const Node> y;
};

namespace {

using NodeP = std::shared_ptr<const Field::Node>;

NodeP make(Field::Node::Kind k, int a, int weight, NodeP x = nullptr, NodeP y = nullptr, ParamPoly c = {}) {
  auto n = std::make_shared<Field::Node>();
  n->kind = k;
  n->a = a;
  n->weight = weight;
  n->x = std::move(x);
  n->y = std::move(y);
  n->c = std::move(c);
  return n;
}

FockVec eval(const Field::Node& f, const FockSpace& S, int n, const FockVec& v) {
  using N = Field::Node;
  if (v.is_zero()) return {};
  switch (f.kind) {
    case N::Identity:
      return n == -1 ? v : FockVec();
    case N::Affine:
      return S.fbar(FbarSym::a(f.a, n), v);
    case N::Iota:
      return S.fbar(FbarSym::i(n), v);
    case N::Vir:
      return S.virasoro(n - 1, v);
    case N::VirV:
      return S.virasoro_v(n - 1, v);
    case N::Heis:
      return S.heis(static_cast<HeisMode::Kind>(f.a), n, v);
    case N::HeisVir:
      return S.heis_virasoro(n - 1, v);
    case N::Lattice:
      return S.lattice(f.a, n, v);
    case N::Deriv:
      return n == 0 ? FockVec() : ParamPoly(-n) * eval(*f.x, S, n - 1, v);
    case N::Shift:
      return eval(*f.x, S, n + f.a, v);
    case N::Product:
    case N::Normal: {
      const int L = FockSpace::level(v);
      const int ha = f.x->weight;
      const int hb = f.y->weight;
      FockVec out;
      // B_q v = 0 for q > L + hb - 1 bounds p from below where B acts first;
      // A_p v = 0 for p > L + ha - 1 bounds it from above.
      const int lo = f.kind == N::Product ? n - L - hb : std::min(n - L - hb, 0);
      for (int p = lo; p <= L + ha - 1; ++p) {
        const int q = n - 1 - p;
        if (f.kind == N::Product || p < 0) {
          out += eval(*f.x, S, p, eval(*f.y, S, q, v));
        } else {
          out += eval(*f.y, S, q, eval(*f.x, S, p, v));
        }
      }
      return out;
    }
    case N::Sum:
      return eval(*f.x, S, n, v) + eval(*f.y, S, n, v);
    case N::Scale:
      return f.c * eval(*f.x, S, n, v);
  }
  return {};
}

}  // namespace

Field Field::identity() { return Field(make(Node::Identity, 0, 0)); }
Field Field::affine(int u) { return Field(make(Node::Affine, u, 1)); }
Field Field::iota() { return Field(make(Node::Iota, 0, 1)); }
Field Field::virasoro() { return Field(make(Node::Vir, 0, 2)); }
Field Field::virasoro_v() { return Field(make(Node::VirV, 0, 2)); }
Field Field::heis(HeisMode::Kind h) { return Field(make(Node::Heis, h, 1)); }
Field Field::heis_virasoro() { return Field(make(Node::HeisVir, 0, 2)); }
Field Field::lattice(int m) { return Field(make(Node::Lattice, m, 0)); }

Field Field::deriv() const { return Field(make(Node::Deriv, 0, node_->weight + 1, node_)); }
Field Field::shift(int k) const { return Field(make(Node::Shift, k, node_->weight - k, node_)); }

Field Field::product(const Field& a, const Field& b) {
  return Field(make(Node::Product, 0, a.weight() + b.weight(), a.node_, b.node_));
}

Field Field::normal(const Field& a, const Field& b) {
  return Field(make(Node::Normal, 0, a.weight() + b.weight(), a.node_, b.node_));
}

Field operator+(const Field& a, const Field& b) {
  return Field(make(Field::Node::Sum, 0, std::max(a.weight(), b.weight()), a.node_, b.node_));
}

Field operator-(const Field& a, const Field& b) { return a + ParamPoly(-1) * b; }

Field operator*(const ParamPoly& c, const Field& a) {
  return Field(make(Field::Node::Scale, 0, a.weight(), a.node_, nullptr, c));
}

int Field::weight() const { return node_->weight; }

FockVec Field::mode(const FockSpace& S, int n, const FockVec& v) const { return eval(*node_, S, n, v); }

Field omega_field() { return Field::virasoro() + Field::heis_virasoro(); }
Field omega_v_field() { return Field::virasoro_v() + Field::heis_virasoro(); }

// ---------------------------------------------------------------------------
// Realization

TorElem BilligLabel::element(const Toroidal& T, int j) const {
  switch (kind) {
    case K0: return tk0(j, m);
    case K1: return tk1(j, 0);
    case Loop: return tor::loop(j, m, u);
    case D1: return der(j, m, 1);
    case D0: {
      TorElem x = -der(j, m, 0);
      x.add_scaled(tk0(j, m), T.mu() * ParamPoly(Rational(2 * j + 1, 2)));
      return x;
    }
  }
  return {};
}

std::string BilligLabel::str(const SimpleAlgebra& g) const {
  const std::string ms = std::to_string(m);
  switch (kind) {
    case K0: return "k0[m=" + ms + "]";
    case K1: return "k1";
    case Loop: return g.label(u) + "[m=" + ms + "]";
    case D1: return "d1[m=" + ms + "]";
    case D0: return "d0[m=" + ms + "]";
  }
  return "";
}

std::vector<BilligLabel> billig_labels(const SimpleAlgebra& g, int mmax) {
  std::vector<BilligLabel> out;
  out.push_back(BilligLabel::k1());
  for (int m = -mmax; m <= mmax; ++m) {
    if (m != 0) out.push_back(BilligLabel::k0(m));
    for (int u = 0; u < g.dim(); ++u) out.push_back(BilligLabel::loop(m, u));
    out.push_back(BilligLabel::d1(m));
    out.push_back(BilligLabel::d0(m));
  }
  return out;
}

namespace {

Field d0_field(int m, const ParamPoly& ell, const ParamPoly& mu) {
  const Field e = Field::lattice(m);
  const Field mk = ParamPoly(m) * Field::heis(HeisMode::K);
  return Field::normal(omega_field(), e) + Field::product(Field::iota(), Field::product(mk, e)) +
         (ell * mu - ParamPoly(1)) * Field::product(mk.deriv(), e);
}

}  // namespace

Realization::Realization(Toroidal T, ParamPoly ell, ParamPoly alpha, K0Indexing k0)
    : T_(std::move(T)),
      ell_(std::move(ell)),
      k0_(k0),
      S_(T_.g_ptr(), FockConfig::fbar_vacuum(ell_, T_.mu(), std::move(alpha))) {}

Field Realization::field(const BilligLabel& a) const {
  switch (a.kind) {
    case BilligLabel::K0: return ell_ * Field::lattice(a.m);
    case BilligLabel::K1: return ell_ * Field::heis(HeisMode::K);
    case BilligLabel::Loop: return Field::product(Field::affine(a.u), Field::lattice(a.m));
    case BilligLabel::D1:
      return Field::normal(Field::heis(HeisMode::D) + ParamPoly(a.m) * Field::iota(), Field::lattice(a.m));
    case BilligLabel::D0: return d0_field(a.m, ell_, T_.mu());
  }
  return Field::identity();
}

int Realization::mode_index(const BilligLabel& a, int j) const {
  if (a.kind == BilligLabel::D0) return j + 1;
  if (a.kind == BilligLabel::K0 && k0_ == K0Indexing::Graded) return j - 1;
  return j;
}

std::vector<std::pair<int, FockVec>> Realization::billig_field(const BilligLabel& a, int lo, int hi,
                                                               const FockVec& v) const {
  const Field f = field(a);
  std::vector<std::pair<int, FockVec>> out;
  for (int j = lo; j <= hi; ++j) out.emplace_back(j, f.mode(S_, mode_index(a, j), v));
  return out;
}

FockVec Realization::k0_mode(int m, int j, const FockVec& v) const {
  return ell_ * S_.lattice(m, k0_ == K0Indexing::Graded ? j - 1 : j, v);
}

FockVec Realization::act(const Sym& s, const FockVec& v) const {
  switch (s.kind) {
    case Sym::Loop:
      return Field::product(Field::affine(s.idx), Field::lattice(s.m1)).mode(S_, s.m0, v);
    case Sym::K0:
      return ell_ * v;
    case Sym::K1:
      return ell_ * S_.heis(HeisMode::K, 0, v);
    case Sym::Kmn:
      // t^{(a,b)} k0 = b k_{a,b}; t0^a k1 = -a k_{a,0}
      if (s.m1 != 0) return ParamPoly(Rational(1, s.m1)) * k0_mode(s.m1, s.m0, v);
      return ell_ * ParamPoly(Rational(-1, s.m0)) * S_.heis(HeisMode::K, s.m0, v);
    case Sym::Der:
      if (s.idx == 1) return field(BilligLabel::d1(s.m1)).mode(S_, s.m0, v);
      {
        FockVec out = -field(BilligLabel::d0(s.m1)).mode(S_, s.m0 + 1, v);
        out.add_scaled(act(tk0(s.m0, s.m1), v), T_.mu() * ParamPoly(Rational(2 * s.m0 + 1, 2)));
        return out;
      }
  }
  return {};
}

FockVec Realization::act(const TorElem& x, const FockVec& v) const {
  FockVec out;
  for (const auto& [s, c] : x) out.add_scaled(act(s, v), c);
  return out;
}

FockVec Realization::residual(const BilligLabel& a, int i, const BilligLabel& b, int j, const FockVec& v) const {
  const Field fa = field(a);
  const Field fb = field(b);
  const int ia = mode_index(a, i);
  const int jb = mode_index(b, j);
  FockVec out = fa.mode(S_, ia, fb.mode(S_, jb, v));
  out -= fb.mode(S_, jb, fa.mode(S_, ia, v));
  out -= act(T_.bracket(a.element(T_, i), b.element(T_, j)), v);
  return out;
}

std::vector<FockVec> sample_vectors(const FockSpace& S, std::uint64_t seed, int count, int max_level) {
  PbwSampler rng(seed);
  const bool highest = S.config().highest;
  std::vector<FockVec> out;
  out.push_back(S.vacuum());
  while (static_cast<int>(out.size()) < count) {
    const int r = rng.uniform(-1, 1);
    int budget = rng.uniform(1, max_level);
    std::vector<Letter> letters;
    std::vector<HeisMode> hs;
    while (budget > 0) {
      const int p = rng.uniform(1, budget);
      switch (rng.uniform(0, 4)) {
        case 0:
          if (p < 2 && !highest) continue;
          letters.push_back(Letter::lp(-p));
          break;
        case 1: letters.push_back(Letter::a(rng.uniform(0, S.g().dim() - 1), -p)); break;
        case 2:
          if (!S.config().with_I) continue;
          letters.push_back(Letter::i(-p));
          break;
        case 3: hs.push_back({HeisMode::K, p}); break;
        default: hs.push_back({HeisMode::D, p}); break;
      }
      budget -= p;
    }
    const int top = highest ? rng.uniform(0, S.config().lambda) : 0;
    out.push_back(S.create(letters, hs, r, top));
  }
  return out;
}

std::vector<FockVec> Realization::samples(std::uint64_t seed, int count, int max_level) const {
  return sample_vectors(S_, seed, count, max_level);
}

std::optional<RealizationWitness> verify_realization(const Realization& R, const BilligLabel& a,
                                                     const BilligLabel& b, int lo, int hi,
                                                     const std::vector<FockVec>& samples) {
  for (int s = 0; s < static_cast<int>(samples.size()); ++s) {
    for (int i = lo; i <= hi; ++i) {
      for (int j = lo; j <= hi; ++j) {
        FockVec res = R.residual(a, i, b, j, samples[s]);
        if (!res.is_zero()) return RealizationWitness{a, i, b, j, s, std::move(res)};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Restricted fields, zero modes and the Theta map

Field restricted_field(const FieldGen& a, const ParamPoly& ell, const ParamPoly& mu) {
  switch (a.kind) {
    case FieldGen::Loop: return Field::product(Field::affine(a.u), Field::lattice(a.m));
    case FieldGen::K1: return ell * Field::heis(HeisMode::K);
    case FieldGen::D1: return Field::heis(HeisMode::D);
    case FieldGen::K: return ell * ParamPoly(Rational(1, a.m)) * Field::lattice(a.m);
    case FieldGen::D: {
      const int n = a.m;
      const Field e = Field::lattice(n);
      return ParamPoly(n) * Field::normal(omega_v_field(), e) -
             Field::normal(Field::heis(HeisMode::D), e).deriv() +
             ParamPoly(n) * (ell * mu - ParamPoly(1)) *
                 Field::product((ParamPoly(n) * Field::heis(HeisMode::K)).deriv(), e);
    }
  }
  return Field::identity();
}

std::vector<std::pair<int, FockVec>> restricted_window(const FockSpace& S, const FieldGen& a, int lo, int hi,
                                                       const FockVec& v, const ParamPoly& mu) {
  if (!S.in_affine_virasoro(v)) throw std::invalid_argument("restricted_field: vector outside V");
  const Field f = restricted_field(a, S.config().c.k, mu);
  std::vector<std::pair<int, FockVec>> out;
  for (int n = lo; n <= hi; ++n) out.emplace_back(n, f.mode(S, n, v));
  return out;
}

FockVec translation(const FockSpace& S, const FockVec& v) { return -omega_v_field().mode(S, 0, v); }

ZeroModeEigen zero_mode_eigen(std::shared_ptr<const SimpleAlgebra> g, int n, int r, int lambda, int top) {
  const ParamPoly ell = ParamPoly::var(Var::ell);
  const ParamPoly mu = ParamPoly::var(Var::mu);
  const ParamPoly c = ParamPoly(24) * mu * ell - ParamPoly(2);
  FockSpace S(std::move(g), FockConfig::affine_virasoro_highest(ell, c, lambda));
  const FockVec u = S.vacuum(r, top);
  FockMono target;
  target.f.top = top;
  target.r = r + n;
  const Field e = Field::lattice(n);

  ZeroModeEigen out;
  auto residue = [&](const FockVec& x) {
    const ParamPoly k = x.coeff(target);
    if (!(x == FockVec(target, k))) out.eigenvector = false;
    return k;
  };
  // Res_z z F(z) is the mode F_1; the derivative term gives -(-1) G_0.
  out.d_part = residue(Field::normal(Field::heis(HeisMode::D), e).mode(S, 0, u));
  out.omega_part = ParamPoly(n) * residue(Field::normal(omega_v_field(), e).mode(S, 1, u));
  out.correction = ParamPoly(n) * (ell * mu - ParamPoly(1)) *
                   residue(Field::product((ParamPoly(n) * Field::heis(HeisMode::K)).deriv(), e).mode(S, 1, u));
  return out;
}

FockVec theta_image(const FockSpace& S, const FieldGen& a, const ParamPoly& mu) {
  const ParamPoly& ell = S.config().c.k;
  switch (a.kind) {
    case FieldGen::Loop: return S.letter(Letter::a(a.u, -1), S.vacuum(a.m));
    case FieldGen::K1: return ell * S.heis(HeisMode::K, -1, S.vacuum());
    case FieldGen::D1: return S.heis(HeisMode::D, -1, S.vacuum());
    case FieldGen::K: return ell * ParamPoly(Rational(1, a.m)) * S.vacuum(a.m);
    case FieldGen::D: {
      const int n = a.m;
      const FockVec e = S.vacuum(n);
      auto lv = [&](int k, const FockVec& x) { return S.virasoro_v(k, x) + S.heis_virasoro(k, x); };
      FockVec out = ParamPoly(n) * lv(-2, e);
      out -= lv(-1, S.heis(HeisMode::D, -1, e));
      out.add_scaled(S.heis(HeisMode::K, -2, e), ParamPoly(n) * ParamPoly(n) * (mu * ell - ParamPoly(1)));
      return out;
    }
  }
  return {};
}

}  // namespace tor
