#include "toroidal/liealg.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace tor {

namespace {

void gvec_add(GVec& v, int k, const Rational& c) {
  if (c.is_zero()) return;
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (it->first == k) {
      it->second += c;
      if (it->second.is_zero()) v.erase(it);
      return;
    }
  }
  v.emplace_back(k, c);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

bool gvec_eq(GVec a, GVec b) {
  std::sort(a.begin(), a.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::sort(b.begin(), b.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].first != b[k].first || !(a[k].second == b[k].second)) return false;
  }
  return true;
}

GVec gvec_scale(const GVec& v, const Rational& s) {
  GVec r;
  if (s.is_zero()) return r;
  for (const auto& [k, c] : v) r.emplace_back(k, c * s);
  return r;
}

Rational parse_rational(const std::string& tok) {
  auto slash = tok.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(tok));
    return Rational(std::stoll(tok.substr(0, slash)), std::stoll(tok.substr(slash + 1)));
  } catch (const std::exception&) {
    throw AlgebraError("bad rational literal '" + tok + "'");
  }
}

bool is_number(const std::string& tok) {
  return !tok.empty() && (std::isdigit(static_cast<unsigned char>(tok[0])) != 0 ||
                          ((tok[0] == '-' || tok[0] == '+') && tok.size() > 1));
}

Rational determinant(std::vector<Rational> m, int n) {
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (!m[r * n + col].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(m[piv * n + c], m[col * n + c]);
      det = -det;
    }
    det *= m[col * n + col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r * n + col].is_zero()) continue;
      Rational f = m[r * n + col] / m[col * n + col];
      for (int c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
    }
  }
  return det;
}

constexpr const char* kSl2Text = R"(name sl2
basis e h f
bracket e f = 1 h
bracket h e = 2 e
bracket h f = -2 f
form e f = 1
form h h = 2
cartan h
root alpha e f
root -alpha f e
)";

}  // namespace

// ---------------------------------------------------------------------------
// SimpleAlgebra

std::shared_ptr<const SimpleAlgebra> SimpleAlgebra::sl2() {
  static const std::shared_ptr<const SimpleAlgebra> kSl2 = [] {
    auto p = parse(kSl2Text);
    auto q = std::make_shared<SimpleAlgebra>(*p);
    q->is_sl2_ = true;
    return std::shared_ptr<const SimpleAlgebra>(q);
  }();
  return kSl2;
}

std::shared_ptr<const SimpleAlgebra> SimpleAlgebra::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot open algebra file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::shared_ptr<const SimpleAlgebra> SimpleAlgebra::parse(const std::string& text) {
  auto alg = std::make_shared<SimpleAlgebra>();
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  std::vector<std::pair<int, int>> root_pairs;
  std::vector<std::string> root_names;
  auto need_basis = [&]() {
    if (alg->labels_.empty()) {
      throw AlgebraError("line " + std::to_string(lineno) + ": 'basis' must come first");
    }
  };
  auto idx = [&](const std::string& l) {
    auto i = alg->index_of(l);
    if (!i) throw AlgebraError("line " + std::to_string(lineno) + ": unknown label '" + l + "'");
    return *i;
  };
  while (std::getline(lines, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream toks(line);
    std::vector<std::string> t;
    for (std::string w; toks >> w;) t.push_back(w);
    if (t.empty()) continue;
    const std::string& kw = t[0];
    if (kw == "name") {
      if (t.size() != 2) throw AlgebraError("line " + std::to_string(lineno) + ": name <id>");
      alg->name_ = t[1];
    } else if (kw == "basis") {
      if (!alg->labels_.empty()) throw AlgebraError("duplicate 'basis' line");
      std::set<std::string> seen;
      for (std::size_t k = 1; k < t.size(); ++k) {
        if (!seen.insert(t[k]).second) throw AlgebraError("duplicate basis label '" + t[k] + "'");
        alg->labels_.push_back(t[k]);
      }
      if (alg->labels_.empty()) throw AlgebraError("empty basis");
      int n = alg->dim();
      alg->table_.assign(static_cast<std::size_t>(n * n), GVec{});
      alg->form_.assign(static_cast<std::size_t>(n * n), Rational(0));
    } else if (kw == "bracket") {
      need_basis();
      if (t.size() < 4 || t[3] != "=" || (t.size() - 4) % 2 != 0) {
        throw AlgebraError("line " + std::to_string(lineno) + ": bracket A B = c1 L1 c2 L2 ...");
      }
      int a = idx(t[1]);
      int b = idx(t[2]);
      GVec rhs;
      for (std::size_t k = 4; k < t.size(); k += 2) gvec_add(rhs, idx(t[k + 1]), parse_rational(t[k]));
      int n = alg->dim();
      alg->table_[a * n + b] = rhs;
      if (a != b) alg->table_[b * n + a] = gvec_scale(rhs, Rational(-1));
    } else if (kw == "form") {
      need_basis();
      if (t.size() != 5 || t[3] != "=" || !is_number(t[4])) {
        throw AlgebraError("line " + std::to_string(lineno) + ": form A B = c");
      }
      int a = idx(t[1]);
      int b = idx(t[2]);
      int n = alg->dim();
      alg->form_[a * n + b] = parse_rational(t[4]);
      alg->form_[b * n + a] = parse_rational(t[4]);
    } else if (kw == "cartan") {
      need_basis();
      for (std::size_t k = 1; k < t.size(); ++k) alg->cartan_.push_back(idx(t[k]));
    } else if (kw == "root") {
      need_basis();
      if (t.size() != 4) throw AlgebraError("line " + std::to_string(lineno) + ": root NAME E F");
      root_names.push_back(t[1]);
      root_pairs.emplace_back(idx(t[2]), idx(t[3]));
    } else {
      throw AlgebraError("line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
    }
  }
  need_basis();
  if (alg->name_.empty()) alg->name_ = "custom";
  alg->finish_roots(root_pairs);
  for (std::size_t k = 0; k < root_names.size(); ++k) alg->roots_[k].name = root_names[k];
  auto bad = alg->violations();
  if (!bad.empty()) {
    std::string msg = "algebra '" + alg->name_ + "' failed validation:";
    for (const auto& b : bad) msg += "\n  " + b;
    throw AlgebraError(msg);
  }
  return alg;
}

void SimpleAlgebra::finish_roots(const std::vector<std::pair<int, int>>& root_pairs) {
  roots_.clear();
  for (auto [e, f] : root_pairs) {
    Root r;
    r.e = e;
    GVec x = bracket(e, f);
    GVec y = bracket(x, GVec{{e, Rational(1)}});
    // y must be lambda * e
    Rational lambda(0);
    for (const auto& [k, c] : y) {
      if (k == e) lambda = c;
    }
    if (lambda.is_zero() || !gvec_eq(y, GVec{{e, lambda}})) {
      throw AlgebraError("root (" + label(e) + ", " + label(f) + ") does not span an sl2-triple");
    }
    Rational s = Rational(2) / lambda;
    r.h = gvec_scale(x, s);
    r.f = gvec_scale(GVec{{f, Rational(1)}}, s);
    r.eps = form(GVec{{e, Rational(1)}}, r.f);
    roots_.push_back(std::move(r));
  }
}

std::optional<int> SimpleAlgebra::index_of(std::string_view s) const {
  for (int k = 0; k < dim(); ++k) {
    if (labels_[k] == s) return k;
  }
  return std::nullopt;
}

GVec SimpleAlgebra::bracket(const GVec& x, const GVec& y) const {
  GVec out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      for (const auto& [k, c] : bracket(a, b)) gvec_add(out, k, ca * cb * c);
    }
  }
  return out;
}

Rational SimpleAlgebra::form(const GVec& x, const GVec& y) const {
  Rational s(0);
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) s += ca * cb * form(a, b);
  }
  return s;
}

std::vector<std::string> SimpleAlgebra::violations() const {
  std::vector<std::string> bad;
  const int n = dim();
  auto unit = [](int k) { return GVec{{k, Rational(1)}}; };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!gvec_eq(bracket(a, b), gvec_scale(bracket(b, a), Rational(-1)))) {
        bad.push_back("antisymmetry fails for [" + label(a) + "," + label(b) + "]");
      }
      if (!(form(a, b) == form(b, a))) {
        bad.push_back("form not symmetric at (" + label(a) + "," + label(b) + ")");
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        GVec j;
        auto acc = [&](const GVec& v) {
          for (const auto& [k, x] : v) gvec_add(j, k, x);
        };
        acc(bracket(bracket(a, b), unit(c)));
        acc(bracket(bracket(b, c), unit(a)));
        acc(bracket(bracket(c, a), unit(b)));
        if (!j.empty()) {
          bad.push_back("Jacobi fails for (" + label(a) + "," + label(b) + "," + label(c) + ")");
        }
        Rational lhs = form(bracket(a, b), unit(c));
        Rational rhs = form(unit(a), bracket(b, c));
        if (!(lhs == rhs)) {
          bad.push_back("form not invariant at (" + label(a) + "," + label(b) + "," + label(c) + ")");
        }
      }
    }
  }
  if (determinant(form_, n).is_zero()) bad.push_back("invariant form is degenerate");
  Rational min_eps;
  bool any = false;
  for (const auto& r : roots_) {
    GVec he = bracket(r.h, unit(r.e));
    if (!gvec_eq(he, gvec_scale(unit(r.e), Rational(2)))) {
      bad.push_back("root " + r.name + ": [h,e] != 2e");
    }
    GVec hf = bracket(r.h, r.f);
    if (!gvec_eq(hf, gvec_scale(r.f, Rational(-2)))) {
      bad.push_back("root " + r.name + ": [h,f] != -2f");
    }
    if (!(r.eps == Rational(1) || r.eps == Rational(2) || r.eps == Rational(3))) {
      bad.push_back("root " + r.name + ": eps = " + r.eps.str() + " not in {1,2,3}");
    }
    if (!(form(r.h, r.h) == Rational(2) * r.eps)) {
      bad.push_back("root " + r.name + ": <h,h> != 2 eps");
    }
    if (!any || r.eps < min_eps) min_eps = r.eps;
    any = true;
  }
  if (any && !(min_eps == Rational(1))) {
    bad.push_back("form not normalized: long roots must have squared length 2");
  }
  return bad;
}

// ---------------------------------------------------------------------------
// Element constructors

TorElem loop(int m0, int m1, int u, const ParamPoly& c) { return TorElem(Sym::loop(m0, m1, u), c); }
TorElem k0() { return TorElem(Sym::k0()); }
TorElem k1() { return TorElem(Sym::k1()); }
TorElem kmn(int m, int n) {
  if (m == 0 && n == 0) return TorElem();
  return TorElem(Sym::kmn(m, n));
}
TorElem der(int m0, int m1, int i) { return TorElem(Sym::der(m0, m1, i)); }

TorElem reduce_k(int m, int n, const ParamPoly& a, const ParamPoly& b) {
  TorElem r;
  if (m == 0 && n == 0) {
    r.add(Sym::k0(), a);
    r.add(Sym::k1(), b);
    return r;
  }
  r.add(Sym::kmn(m, n), a * ParamPoly(n) - b * ParamPoly(m));
  return r;
}

TorElem tk0(int m, int n) { return reduce_k(m, n, 1, 0); }
TorElem tk1(int m, int n) { return reduce_k(m, n, 0, 1); }

TorElem dtilde(int m0, int m1) {
  TorElem r;
  r.add(Sym::der(m0, m1, 1), ParamPoly(m0));
  r.add(Sym::der(m0, m1, 0), ParamPoly(-m1));
  return r;
}

TorElem dbar(int n, int m) {
  TorElem r;
  r.add(Sym::der(n, m, 1), ParamPoly(n + 1));
  r.add(Sym::der(n, m, 0), ParamPoly(-m));
  return r;
}

TorElem dvar(int n, int m, const ParamPoly& mu) {
  TorElem r = dbar(n, m);
  // mu (n + 1/2) m^2 k_{n,m}
  r.add_scaled(kmn(n, m), mu * ParamPoly(Rational(static_cast<long long>(2 * n + 1) * m * m, 2)));
  return r;
}

const std::vector<std::string>& subalgebra_names() {
  static const std::vector<std::string> kNames = {"full",  "toroidal", "Ddiv",     "Ddiv'",
                                                  "ttilde", "that",    "ttilde_o", "that_o"};
  return kNames;
}

// ---------------------------------------------------------------------------
// Toroidal

Toroidal::Toroidal(std::shared_ptr<const SimpleAlgebra> g, ParamPoly mu)
    : g_(std::move(g)), mu_(std::move(mu)) {}

namespace {

/// A K-symbol written as c0 t^n k0 + c1 t^n k1.
struct KParts {
  int n0;
  int n1;
  Rational c0;
  Rational c1;
};

KParts kparts(const Sym& s) {
  switch (s.kind) {
    case Sym::K0:
      return {0, 0, Rational(1), Rational(0)};
    case Sym::K1:
      return {0, 0, Rational(0), Rational(1)};
    default:
      if (s.m1 != 0) return {s.m0, s.m1, Rational(1, s.m1), Rational(0)};
      return {s.m0, 0, Rational(0), Rational(-1, s.m0)};
  }
}

bool is_k(const Sym& s) { return s.kind == Sym::K0 || s.kind == Sym::K1 || s.kind == Sym::Kmn; }

void add_reduce_k(TorElem& out, int m, int n, const ParamPoly& a, const ParamPoly& b) {
  if (m == 0 && n == 0) {
    out.add(Sym::k0(), a);
    out.add(Sym::k1(), b);
    return;
  }
  out.add(Sym::kmn(m, n), a * ParamPoly(n) - b * ParamPoly(m));
}

}  // namespace

void Toroidal::bracket_sym(const Sym& a, const Sym& b, const ParamPoly& s, TorElem& out) const {
  if (s.is_zero()) return;
  // Normalize so that a Der symbol, if any, comes first; Loop before K.
  if (b.kind == Sym::Der && a.kind != Sym::Der) {
    bracket_sym(b, a, -s, out);
    return;
  }
  if (a.kind == Sym::Loop && b.kind == Sym::Loop) {
    const int M0 = a.m0 + b.m0;
    const int M1 = a.m1 + b.m1;
    for (const auto& [k, c] : g_->bracket(a.idx, b.idx)) {
      out.add(Sym::loop(M0, M1, k), s * ParamPoly(c));
    }
    const Rational& f = g_->form(a.idx, b.idx);
    if (!f.is_zero()) {
      add_reduce_k(out, M0, M1, s * ParamPoly(f * Rational(a.m0)), s * ParamPoly(f * Rational(a.m1)));
    }
    return;
  }
  if (a.kind != Sym::Der) return;  // K is central in the toroidal part
  const int i = a.idx;
  const int mi[2] = {a.m0, a.m1};
  if (b.kind == Sym::Loop) {
    const int ni = i == 0 ? b.m0 : b.m1;
    if (ni != 0) out.add(Sym::loop(a.m0 + b.m0, a.m1 + b.m1, b.idx), s * ParamPoly(ni));
    return;
  }
  if (is_k(b)) {
    KParts kp = kparts(b);
    const int ni = i == 0 ? kp.n0 : kp.n1;
    const Rational& ci = i == 0 ? kp.c0 : kp.c1;
    Rational ka = kp.c0 * Rational(ni) + ci * Rational(mi[0]);
    Rational kb = kp.c1 * Rational(ni) + ci * Rational(mi[1]);
    add_reduce_k(out, a.m0 + kp.n0, a.m1 + kp.n1, s * ParamPoly(ka), s * ParamPoly(kb));
    return;
  }
  // Der, Der
  const int j = b.idx;
  const int ni = i == 0 ? b.m0 : b.m1;
  const int mj = j == 0 ? a.m0 : a.m1;
  const int M0 = a.m0 + b.m0;
  const int M1 = a.m1 + b.m1;
  if (ni != 0) out.add(Sym::der(M0, M1, j), s * ParamPoly(ni));
  if (mj != 0) out.add(Sym::der(M0, M1, i), s * ParamPoly(-mj));
  const long long w = static_cast<long long>(mj) * ni;
  if (w != 0 && !mu_.is_zero()) {
    ParamPoly f = s * mu_ * ParamPoly(-w);
    add_reduce_k(out, M0, M1, f * ParamPoly(a.m0), f * ParamPoly(a.m1));
  }
}

TorElem Toroidal::bracket(const TorElem& x, const TorElem& y) const {
  TorElem out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) bracket_sym(a, b, ca * cb, out);
  }
  return out;
}

TorElem Toroidal::jacobi_residual(const TorElem& x, const TorElem& y, const TorElem& z) const {
  TorElem r = bracket(bracket(x, y), z);
  r += bracket(bracket(y, z), x);
  r += bracket(bracket(z, x), y);
  return r;
}

std::optional<std::pair<int, int>> Toroidal::grade(const TorElem& x) const {
  if (x.is_zero()) return std::nullopt;
  const Sym& s = x.begin()->first;
  int m = 0;
  int n = 0;
  if (s.kind == Sym::Loop || s.kind == Sym::Kmn || s.kind == Sym::Der) {
    m = -s.m0;
    n = s.m1;
  }
  TorElem y0 = bracket(der(0, 0, 0), x);
  TorElem y1 = bracket(der(0, 0, 1), x);
  if (!(y0 == ParamPoly(-m) * x) || !(y1 == ParamPoly(n) * x)) return std::nullopt;
  return std::make_pair(m, n);
}

bool Toroidal::member(const TorElem& x, std::string_view algebra) const {
  const auto& names = subalgebra_names();
  std::string alg(algebra);
  if (alg == "Ddiv′") alg = "Ddiv'";
  if (std::find(names.begin(), names.end(), alg) == names.end()) {
    throw std::invalid_argument("unknown subalgebra '" + std::string(algebra) + "'");
  }
  if (alg == "full") return true;
  bool has_non_der = false;
  std::map<std::pair<int, int>, std::pair<ParamPoly, ParamPoly>> ders;
  for (const auto& [s, c] : x) {
    if (s.kind == Sym::Der) {
      auto& slot = ders[{s.m0, s.m1}];
      (s.idx == 0 ? slot.first : slot.second) += c;
    } else {
      has_non_der = true;
    }
  }
  if (alg == "toroidal") return ders.empty();
  if ((alg == "Ddiv" || alg == "Ddiv'") && has_non_der) return false;
  const bool prime = alg == "Ddiv'" || alg == "ttilde_o" || alg == "that_o";
  for (const auto& [mm, cc] : ders) {
    const auto& [c0, c1] = cc;
    const int shift = prime ? 1 : 0;
    ParamPoly div = c0 * ParamPoly(mm.first + shift) + c1 * ParamPoly(mm.second);
    if (!div.is_zero()) return false;
    if (alg == "that" && mm == std::make_pair(0, 0) && !c0.is_zero()) return false;
    if (alg == "that_o" && mm == std::make_pair(-1, 0) && !c0.is_zero()) return false;
  }
  return true;
}

std::string Toroidal::str(const Sym& s) const {
  auto i2 = [](int a, int b) { return std::to_string(a) + "," + std::to_string(b); };
  switch (s.kind) {
    case Sym::Loop:
      return "loop(" + i2(s.m0, s.m1) + "," + g_->label(s.idx) + ")";
    case Sym::K0:
      return "k0";
    case Sym::K1:
      return "k1";
    case Sym::Kmn:
      return "kmn(" + i2(s.m0, s.m1) + ")";
    case Sym::Der:
      return "der(" + i2(s.m0, s.m1) + "," + std::to_string(s.idx) + ")";
  }
  return "?";
}

std::string Toroidal::str(const TorElem& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : x) {
    out += coeff_prefix(c, first) + str(s);
    first = false;
  }
  return out;
}

std::string Toroidal::str_dtilde(const TorElem& x) const {
  if (x.is_zero()) return "0";
  std::vector<std::pair<std::string, ParamPoly>> words;
  std::map<std::pair<int, int>, std::pair<ParamPoly, ParamPoly>> ders;
  for (const auto& [s, c] : x) {
    if (s.kind == Sym::Der) {
      auto& slot = ders[{s.m0, s.m1}];
      (s.idx == 0 ? slot.first : slot.second) = c;
    }
  }
  std::string out;
  bool first = true;
  auto emit = [&](const ParamPoly& c, const std::string& w) {
    out += coeff_prefix(c, first) + w;
    first = false;
  };
  for (const auto& [mm, cc] : ders) {
    auto [a, b] = mm;
    const auto& [c0, c1] = cc;
    std::optional<ParamPoly> s;
    if (a != 0) {
      s = c1 * ParamPoly(Rational(1, a));
    } else if (b != 0) {
      s = c0 * ParamPoly(Rational(-1, b));
    }
    if (s && c1 == *s * ParamPoly(a) && c0 == *s * ParamPoly(-b)) {
      emit(*s, "dtilde(" + std::to_string(a) + "," + std::to_string(b) + ")");
    } else {
      if (!c0.is_zero()) emit(c0, str(Sym::der(a, b, 0)));
      if (!c1.is_zero()) emit(c1, str(Sym::der(a, b, 1)));
    }
  }
  for (const auto& [s, c] : x) {
    if (s.kind != Sym::Der) emit(c, str(s));
  }
  return out;
}

TorElem Toroidal::sl2_image(std::size_t root, int m, int x, int p) const {
  const auto& r = g_->roots().at(root);
  TorElem out;
  switch (x) {
    case 0:
      out.add(Sym::loop(p, m, r.e), 1);
      break;
    case 1:
      for (const auto& [k, c] : r.h) out.add(Sym::loop(p, 0, k), ParamPoly(c));
      out.add_scaled(tk1(p, 0), ParamPoly(r.eps * Rational(m)));
      break;
    case 2:
      for (const auto& [k, c] : r.f) out.add(Sym::loop(p, -m, k), ParamPoly(c));
      break;
    default:
      out.add(Sym::k0(), ParamPoly(r.eps));
      break;
  }
  return out;
}

}  // namespace tor
