#include "toroidal/suite.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include <gmpxx.h>

#include "json.hpp"
#include "toroidal/fock.hpp"
#include "toroidal/formal.hpp"
#include "toroidal/identities.hpp"
#include "toroidal/oracles.hpp"
#include "toroidal/pbw.hpp"
#include "toroidal/zhu.hpp"

namespace tor {

namespace {

using json = nlohmann::ordered_json;
using Witness = std::optional<std::string>;

/// Per-thread store of the memoizing objects (modules, Fock spaces) a check needs.
class Workspace {
 public:
  template <class T, class F>
  T& get(const std::string& key, F make) {
    auto it = slots_.find(key);
    if (it == slots_.end()) it = slots_.emplace(key, std::shared_ptr<void>(std::make_shared<T>(make()))).first;
    return *static_cast<T*>(it->second.get());
  }

 private:
  std::map<std::string, std::shared_ptr<void>> slots_;
};

struct Check {
  std::string suite;
  std::string id;
  std::string ref;
  int parts = 1;
  /// Runs one part; returns a witness on failure.
  std::function<Witness(int, Workspace&)> run;
};

template <class K, class F>
std::string first_term(const LinComb<K>& x, F key_str) {
  if (x.is_zero()) return "0";
  const auto& [k, c] = *x.begin();
  return key_str(k) + " -> " + c.str();
}

std::string idx_str(const std::vector<std::string>& names, const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < names.size(); ++i) s += (i ? " " : "") + names[i] + "=" + std::to_string(v[i]);
  return s;
}

/// Splits a pbw sample index into an independent seed.
std::uint64_t part_seed(std::uint64_t seed, std::uint64_t stream, int part) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(part)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

class Builder {
 public:
  Builder(const SuiteConfig& c, std::shared_ptr<const SimpleAlgebra> g) : c_(c), g_(std::move(g)), T_(g_, P(Var::mu)) {}

  std::vector<Check> build(std::vector<std::string>& notes) {
    const auto selected = [&](const std::string& s) {
      return c_.suites.empty() || std::find(c_.suites.begin(), c_.suites.end(), s) != c_.suites.end();
    };
    if (selected("brackets")) brackets();
    if (selected("genfun-square")) genfun("genfun-square", DeltaStyle::square);
    if (selected("genfun-round")) genfun("genfun-round", DeltaStyle::round);
    if (selected("identities")) identities();
    if (selected("pbw")) pbw();
    if (selected("fock")) fock();
    if (selected("zhu")) {
      zhu();
      notes.push_back("zhu: c in the D_n[z] formula is pinned to 24*mu*ell - 2 (assumption); the central charge "
                      "of omega computed from omega_3 omega is " +
                      ZhuContext::pinned(g_, P(Var::ell), P(Var::mu)).central_charge().str());
    }
    if (!c_.params.empty()) {
      std::string s = "specialized parameters:";
      for (const auto& [v, r] : c_.params) s += std::string(" ") + var_name(v) + "=" + r.str();
      notes.push_back(s);
    }
    return std::move(checks_);
  }

 private:
  ParamPoly P(Var v) const {
    auto it = c_.params.find(v);
    return it == c_.params.end() ? ParamPoly::var(v) : ParamPoly(it->second);
  }

  void add(std::string suite, std::string id, std::string ref, int parts, std::function<Witness(int, Workspace&)> run) {
    checks_.push_back({std::move(suite), std::move(id), std::move(ref), parts, std::move(run)});
  }

  std::string tstr(const TorElem& x) const {
    return first_term(x, [this](const Sym& s) { return T_.str(s); });
  }

  // ---------------------------------------------------------------- brackets

  std::vector<TorElem> axiom_basis() const {
    std::vector<TorElem> B{k0(), k1()};
    for (int a = c_.axiom_lo; a <= c_.axiom_hi; ++a) {
      for (int b = c_.axiom_lo; b <= c_.axiom_hi; ++b) {
        for (int u = 0; u < g_->dim(); ++u) B.push_back(loop(a, b, u));
        if (a != 0 || b != 0) B.push_back(kmn(a, b));
        B.push_back(der(a, b, 0));
        B.push_back(der(a, b, 1));
      }
    }
    return B;
  }

  /// A closed form checked on every index tuple: indices named in `names`
  /// range over the configured (m, n) range, except "u"/"v" (g-basis labels)
  /// and "d" (derivation index 0 or 1).
  void closed_form(const std::string& id, const std::string& ref, std::vector<std::string> names,
                   std::function<std::pair<TorElem, TorElem>(const std::vector<int>&)> sides) {
    std::vector<std::pair<int, int>> dom;
    for (const auto& n : names) {
      if (n == "u" || n == "v") {
        dom.emplace_back(0, g_->dim() - 1);
      } else if (n == "d") {
        dom.emplace_back(0, 1);
      } else {
        dom.emplace_back(c_.range_lo, c_.range_hi);
      }
    }
    const int parts = dom[0].second - dom[0].first + 1;
    add("brackets", "closed-form/" + id, ref, parts, [=, this](int part, Workspace&) -> Witness {
      std::vector<int> idx(dom.size());
      for (size_t i = 0; i < dom.size(); ++i) idx[i] = dom[i].first;
      idx[0] += part;
      while (true) {
        const auto [lhs, rhs] = sides(idx);
        const TorElem r = lhs - rhs;
        if (!r.is_zero()) return idx_str(names, idx) + ": " + tstr(r);
        size_t k = dom.size() - 1;
        while (k > 0 && idx[k] == dom[k].second) {
          idx[k] = dom[k].first;
          --k;
        }
        if (k == 0) return std::nullopt;
        ++idx[k];
      }
    });
  }

  void brackets() {
    auto B = std::make_shared<std::vector<TorElem>>(axiom_basis());
    const int nb = static_cast<int>(B->size());
    add("brackets", "axioms/antisymmetry", "[x, y] + [y, x] = 0 on canonical basis pairs", nb,
        [this, B](int x, Workspace&) -> Witness {
          for (const auto& y : *B) {
            const TorElem r = T_.bracket((*B)[x], y) + T_.bracket(y, (*B)[x]);
            if (!r.is_zero()) return "x=" + T_.str((*B)[x]) + " y=" + T_.str(y) + ": " + tstr(r);
          }
          return std::nullopt;
        });
    add("brackets", "axioms/jacobi", "Jacobi identity on canonical basis triples x < y < z", nb,
        [this, B](int x, Workspace&) -> Witness {
          const auto& b = *B;
          for (size_t y = x + 1; y < b.size(); ++y) {
            for (size_t z = y + 1; z < b.size(); ++z) {
              const TorElem r = T_.jacobi_residual(b[x], b[y], b[z]);
              if (!r.is_zero())
                return "x=" + T_.str(b[x]) + " y=" + T_.str(b[y]) + " z=" + T_.str(b[z]) + ": " + tstr(r);
            }
          }
          return std::nullopt;
        });

    const ParamPoly mu = T_.mu();
    const ParamPoly a = ParamPoly::var(Var::a);
    const ParamPoly b = ParamPoly::var(Var::b);
    const ParamPoly a0 = ParamPoly::var(Var::a0);
    const ParamPoly a1 = ParamPoly::var(Var::a1);
    const ParamPoly b0 = ParamPoly::var(Var::b0);
    const ParamPoly b1 = ParamPoly::var(Var::b1);
    const Toroidal& T = T_;
    const SimpleAlgebra& g = *g_;
    using V = std::vector<int>;
    using PE = std::pair<TorElem, TorElem>;

    closed_form("der-k", "[a t^m d0 + b t^m d1, k_n] with formal a, b", {"m0", "m1", "n0", "n1"},
                [=, &T](const V& i) -> PE {
                  return {T.bracket(a * der(i[0], i[1], 0) + b * der(i[0], i[1], 1), kmn(i[2], i[3])),
                          oracle::der_k(a, b, i[0], i[1], i[2], i[3])};
                });
    closed_form("der-der", "[a0 t^m d0 + a1 t^m d1, b0 t^n d0 + b1 t^n d1] with formal coefficients",
                {"m0", "m1", "n0", "n1"}, [=, &T](const V& i) -> PE {
                  return {T.bracket(a0 * der(i[0], i[1], 0) + a1 * der(i[0], i[1], 1),
                                    b0 * der(i[2], i[3], 0) + b1 * der(i[2], i[3], 1)),
                          oracle::der_der(mu, a0, a1, b0, b1, i[0], i[1], i[2], i[3])};
                });
    closed_form("d-dtilde", "[d_a, dtilde_m] in the divergence-zero algebra", {"d", "m0", "m1"},
                [&T](const V& i) -> PE {
                  return {T.bracket(der(0, 0, i[0]), dtilde(i[1], i[2])), oracle::d_dtilde(i[0], i[1], i[2])};
                });
    closed_form("dtilde-dtilde-mod-centre", "[dtilde_m, dtilde_n] modulo the centre", {"m0", "m1", "n0", "n1"},
                [&T](const V& i) -> PE {
                  return {oracle::drop_centre(T.bracket(dtilde(i[0], i[1]), dtilde(i[2], i[3]))),
                          oracle::dtilde_dtilde_mod_centre(i[0], i[1], i[2], i[3])};
                });
    closed_form("loop-loop", "[t^m u, t^n v] with the centre in the k basis", {"m0", "m1", "n0", "n1", "u", "v"},
                [&T, &g](const V& i) -> PE {
                  return {T.bracket(loop(i[0], i[1], i[4]), loop(i[2], i[3], i[5])),
                          oracle::loop_loop(g, i[0], i[1], i[2], i[3], i[4], i[5])};
                });
    closed_form("dtilde-loop", "[dtilde_{i,m}, t0^j t1^n u] = (ni - mj) t0^{i+j} t1^{m+n} u",
                {"i", "m", "j", "n", "u"}, [&T](const V& i) -> PE {
                  return {T.bracket(dtilde(i[0], i[1]), loop(i[2], i[3], i[4])),
                          oracle::dtilde_loop(i[0], i[1], i[2], i[3], i[4])};
                });
    closed_form("dtilde-t0k1", "[dtilde_{i,m}, t0^j k1] = m j^2 k_{i+j,m}", {"i", "m", "j"},
                [&T](const V& i) -> PE {
                  return {T.bracket(dtilde(i[0], i[1]), tk1(i[2], 0)), oracle::dtilde_t0k1(i[0], i[1], i[2])};
                });
    closed_form("t0d1-loop", "[t0^i d1, t0^j t1^n u] = n t0^{i+j} t1^n u", {"i", "j", "n", "u"},
                [&T](const V& i) -> PE {
                  return {T.bracket(der(i[0], 0, 1), loop(i[1], i[2], i[3])),
                          oracle::t0d1_loop(i[0], i[1], i[2], i[3])};
                });
    closed_form("t0d1-kmn", "[t0^i d1, k_{j,n}] = n k_{i+j,n}", {"i", "j", "n"}, [&T](const V& i) -> PE {
      return {T.bracket(der(i[0], 0, 1), kmn(i[1], i[2])), oracle::t0d1_kmn(i[0], i[1], i[2])};
    });
    closed_form("dtilde-kmn", "[dtilde_{i,m}, k_{j,n}] with the delta k0, k1 term", {"i", "m", "j", "n"},
                [&T](const V& i) -> PE {
                  return {T.bracket(dtilde(i[0], i[1]), kmn(i[2], i[3])),
                          oracle::dtilde_kmn(i[0], i[1], i[2], i[3])};
                });
    closed_form("t0d1-t0k1", "[t0^i d1, t0^j k1] = i delta_{i+j,0} k0", {"i", "j"}, [&T](const V& i) -> PE {
      return {T.bracket(der(i[0], 0, 1), tk1(i[1], 0)), oracle::t0d1_t0k1(i[0], i[1])};
    });
    closed_form("t0d1-t0d1", "[t0^i d1, t0^j d1] = 0", {"i", "j"}, [&T](const V& i) -> PE {
      return {T.bracket(der(i[0], 0, 1), der(i[1], 0, 1)), oracle::t0d1_t0d1(i[0], i[1])};
    });
    closed_form("dtilde-dtilde", "[dtilde_{i,m}, dtilde_{j,n}] with the mu (in-mj)^3 central term",
                {"i", "m", "j", "n"}, [=, &T](const V& i) -> PE {
                  return {T.bracket(dtilde(i[0], i[1]), dtilde(i[2], i[3])),
                          oracle::dtilde_dtilde(mu, i[0], i[1], i[2], i[3])};
                });
    closed_form("t0d1-dtilde", "[t0^i d1, dtilde_{j,n}] with the mu n^3 i^2 central term", {"i", "j", "n"},
                [=, &T](const V& i) -> PE {
                  return {T.bracket(der(i[0], 0, 1), dtilde(i[1], i[2])), oracle::t0d1_dtilde(mu, i[0], i[1], i[2])};
                });
    closed_form("dbar-dbar", "[dbar_m, dbar_n] with central terms", {"m0", "m1", "n0", "n1"},
                [=, &T](const V& i) -> PE {
                  return {T.bracket(dbar(i[0], i[1]), dbar(i[2], i[3])),
                          oracle::dbar_dbar(mu, i[0], i[1], i[2], i[3])};
                });
    closed_form("t0inv-d-dbar", "[t0^{-1} d_a, dbar_m] modulo the centre", {"d", "m0", "m1"},
                [&T](const V& i) -> PE {
                  const TorElem lhs = oracle::drop_centre(T.bracket(der(-1, 0, i[0]), dbar(i[1], i[2])));
                  return {lhs, i[0] == 0 ? oracle::t0inv_d0_dbar(i[1], i[2]) : oracle::t0inv_d1_dbar(i[1], i[2])};
                });
    closed_form("dvar-loop", "[d_{i,m}, t0^j t1^n u] = ((i+1)n - mj) t0^{i+j} t1^{m+n} u",
                {"i", "m", "j", "n", "u"}, [=, &T](const V& i) -> PE {
                  return {T.bracket(dvar(i[0], i[1], mu), loop(i[2], i[3], i[4])),
                          oracle::dvar_loop(mu, i[0], i[1], i[2], i[3], i[4])};
                });
    closed_form("dvar-kmn", "[d_{i,m}, k_{j,n}] with the delta k0, k1 term", {"i", "m", "j", "n"},
                [=, &T](const V& i) -> PE {
                  return {T.bracket(dvar(i[0], i[1], mu), kmn(i[2], i[3])),
                          oracle::dvar_kmn(mu, i[0], i[1], i[2], i[3])};
                });
    closed_form("dvar-t0k1", "[d_{i,m}, t0^j k1] = m j (j-1) k_{i+j,m}", {"i", "m", "j"},
                [=, &T](const V& i) -> PE {
                  return {T.bracket(dvar(i[0], i[1], mu), tk1(i[2], 0)), oracle::dvar_t0k1(mu, i[0], i[1], i[2])};
                });
    closed_form("dvar-dvar", "[d_{i,m}, d_{j,n}] with the 2 mu m^3 k1 and cubic k_{i+j,m+n} terms",
                {"i", "m", "j", "n"}, [=, &T](const V& i) -> PE {
                  return {T.bracket(dvar(i[0], i[1], mu), dvar(i[2], i[3], mu)),
                          oracle::dvar_dvar(mu, i[0], i[1], i[2], i[3])};
                });
    closed_form("t0d1-dvar", "[t0^i d1, d_{j,n}] with the mu n^3 i(i-1) central term", {"i", "j", "n"},
                [=, &T](const V& i) -> PE {
                  return {T.bracket(der(i[0], 0, 1), dvar(i[1], i[2], mu)), oracle::t0d1_dvar(mu, i[0], i[1], i[2])};
                });
  }

  // ---------------------------------------------------------------- genfun

  void genfun(const std::string& suite, DeltaStyle style) {
    const int span = c_.range_hi - c_.range_lo + 1;
    for (const auto& info : relation_catalog()) {
      if (info.style != style) continue;
      const std::string id = info.id;
      add(suite, "item-" + id.substr(id.find('.') + 1), info.ref, span * span,
          [this, info, span](int part, Workspace&) -> Witness {
            const int m = c_.range_lo + part / span;
            const int n = c_.range_lo + part % span;
            for (int u = 0; u < (info.uses_u ? g_->dim() : 1); ++u) {
              for (int v = 0; v < (info.uses_v ? g_->dim() : 1); ++v) {
                const auto r = verify_relation(T_, info.id, m, n, c_.window, u, v).first_nonzero();
                if (r) {
                  std::string s = "m=" + std::to_string(m) + " n=" + std::to_string(n);
                  if (info.uses_u) s += " u=" + g_->label(u);
                  if (info.uses_v) s += " v=" + g_->label(v);
                  return s + " " + r->first.str() + ": " + tstr(r->second);
                }
              }
            }
            return std::nullopt;
          });
    }
  }

  // ---------------------------------------------------------------- identities

  void identities() {
    add("identities", "falling-binomial", "falling-factorial binomial identity in formal a, b, alpha, beta, p <= 6",
        7, [](int p, Workspace&) -> Witness {
          const ParamPoly r = falling_binomial_residual(static_cast<unsigned>(p));
          if (r.is_zero()) return std::nullopt;
          return "p=" + std::to_string(p) + ": " + r.str();
        });
    add("identities", "newton", "(a+b)^{(q)} = sum_i C(q,i) a^{(i)} b^{(q-i)}, q <= 8", 9,
        [](int q, Workspace&) -> Witness {
          const ParamPoly r = newton_residual(static_cast<unsigned>(q));
          if (r.is_zero()) return std::nullopt;
          return "q=" + std::to_string(q) + ": " + r.str();
        });
    add("identities", "cubic-coefficient",
        "cubic coefficient identity behind [D_m, D_n], polynomial in i, j, m, n", 1, [](int, Workspace&) -> Witness {
          const ParamPoly r = cubic_coefficient_residual();
          if (r.is_zero()) return std::nullopt;
          return r.str();
        });
  }

  // ---------------------------------------------------------------- pbw

  void pbw() {
    struct Base {
      std::string name;
      BaseModule base;
    };
    const ParamPoly ell = P(Var::ell);
    const ParamPoly alpha = P(Var::alpha);
    const ParamPoly beta = P(Var::beta);
    const std::vector<Base> bases = {{"vacuum", BaseModule::vacuum(ell)},
                                     {"t-ell", BaseModule::t_ell(ell)},
                                     {"t-full-0", BaseModule::t_full(0, ell, alpha, beta)},
                                     {"t-full-1", BaseModule::t_full(1, ell, alpha, beta)},
                                     {"t-full-2", BaseModule::t_full(2, ell, alpha, beta)}};
    for (size_t bi = 0; bi < bases.size(); ++bi) {
      const Base b = bases[bi];
      add("pbw", "rep-consistency/" + b.name, "act([x,y], v) = x(y v) - y(x v) on seeded samples", c_.pbw_samples,
          [this, b, bi](int part, Workspace& ws) -> Witness {
            auto& M = ws.get<InducedModule>("pbw:" + b.name, [&] { return InducedModule(T_, b.base); });
            PbwSampler S(part_seed(c_.seed, bi, part));
            const Gen x = S.generator(T_, -2, 2);
            const Gen y = S.generator(T_, -2, 2);
            const ModVec v = S.vector(M, 3, -2, 2);
            const ModVec r = M.rep_consistency(gen_elem(T_, x), gen_elem(T_, y), v);
            if (r.is_zero()) return std::nullopt;
            return "sample " + std::to_string(part) + " x=" + gen_str(T_, x) + " y=" + gen_str(T_, y) +
                   " v=" + M.str(v) + ": " + first_term(r, [&](const Monomial& m) {
                     ModVec one;
                     one.add(m, ParamPoly(1));
                     return M.str(one);
                   });
          });
    }
    add("pbw", "translation", "[d, a(n)] = -n a(n-1) and d 1 = 0 on seeded vacuum-module samples",
        c_.pbw_samples, [this, ell](int part, Workspace& ws) -> Witness {
          auto& V = ws.get<InducedModule>("pbw:vacuum", [&] { return InducedModule(T_, BaseModule::vacuum(ell)); });
          PbwSampler S(part_seed(c_.seed, 99, part));
          const ModVec v = S.vector(V, 3, -3, 2);
          const Gen g = S.generator(T_, -2, 2);
          const std::string where = "sample " + std::to_string(part) + " v=" + V.str(v);
          if (!(V.translation(v) == V.translation_recursive(v))) return where + ": translation mismatch";
          const auto [a, n] = field_of(g);
          const ModVec r = V.translation(V.field_coeff(a, n, v)) - V.field_coeff(a, n, V.translation(v)) +
                           ParamPoly(n) * V.field_coeff(a, n - 1, v);
          if (r.is_zero()) return std::nullopt;
          return where + " a(n)=" + gen_str(T_, g) + ": " + V.str(r);
        });
  }

  // ---------------------------------------------------------------- fock

  struct RealizationData {
    Realization R;
    std::vector<FockVec> samples;
  };

  void fock() {
    auto basis = std::make_shared<std::vector<FbarElem>>();
    for (int n = -3; n <= 3; ++n) {
      basis->push_back(fbar_L(n));
      for (int u = 0; u < g_->dim(); ++u) basis->push_back(fbar_U(u, n));
    }
    add("fock", "eta/homomorphism", "eta([x, y]) = [eta x, eta y] on affine-Virasoro modes in [-3, 3]",
        static_cast<int>(basis->size()), [this, basis](int x, Workspace&) -> Witness {
          for (const auto& y : *basis) {
            const FbarElem r = eta(fbar_bracket(*g_, (*basis)[x], y)) - fbar_bracket(*g_, eta((*basis)[x]), eta(y));
            if (!r.is_zero()) return fbar_str(*g_, (*basis)[x]) + ", " + fbar_str(*g_, y) + ": " + fbar_str(*g_, r);
          }
          return std::nullopt;
        });
    add("fock", "eta/central-shift", "eta(k_Vir) = k_Vir + 24 k_VI - 12 k_I, seen in [L(2), L(-2)]", 1,
        [this](int, Workspace&) -> Witness {
          const FbarElem img = fbar_bracket(*g_, eta(fbar_L(2)), eta(fbar_L(-2)));
          FbarElem central;
          for (const auto& [s, c] : img)
            if (s.is_central()) central.add(s, c);
          const FbarElem expect = ParamPoly(Rational(1, 2)) * fbar_central(FbarSym::KVir) +
                                  ParamPoly(12) * fbar_central(FbarSym::KVI) - ParamPoly(6) * fbar_central(FbarSym::KI);
          if (central == expect) return std::nullopt;
          return "central part " + fbar_str(*g_, central);
        });

    const auto labels = billig_labels(*g_, c_.fock_mmax);
    const ParamPoly ell = P(Var::ell);
    const ParamPoly alpha = P(Var::alpha);
    for (size_t a = 0; a < labels.size(); ++a) {
      std::ostringstream id;
      id << "realization/" << std::setw(2) << std::setfill('0') << a << "-" << labels[a].str(*g_);
      add("fock", id.str(), "toroidal brackets of the realized generating series, k0 series graded by d0",
          static_cast<int>(labels.size() - a), [this, labels, a, ell, alpha](int part, Workspace& ws) -> Witness {
            auto& D = ws.get<RealizationData>("realization", [&] {
              Realization R(T_, ell, alpha);
              auto s = R.samples(c_.seed, c_.fock_samples, c_.fock_level);
              return RealizationData{std::move(R), std::move(s)};
            });
            const auto& A = labels[a];
            const auto& B = labels[a + part];
            const auto w = verify_realization(D.R, A, B, c_.fock_lo, c_.fock_hi, D.samples);
            if (!w) return std::nullopt;
            const FockSpace& S = D.R.space();
            return A.str(*g_) + "_" + std::to_string(w->i) + " vs " + B.str(*g_) + "_" + std::to_string(w->j) +
                   " on sample " + std::to_string(w->sample) + " (" + S.str(D.samples[w->sample]) +
                   "): " + first_term(w->residual, [&](const FockMono& m) { return S.str(m); });
          });
    }

    add("fock", "zero-mode-eigen", "d_{0,n} on u (x) e^{(alpha+r)k} has residues (alpha+r, n beta, 0)", 5 * 4 * 2,
        [this](int part, Workspace&) -> Witness {
          const int n = -2 + part / 8;
          const int r = -1 + (part / 2) % 4;
          const int lambda = part % 2;
          const auto z = zero_mode_eigen(g_, n, r, lambda, lambda);
          const ParamPoly alpha = ParamPoly::var(Var::alpha);
          const ParamPoly beta = ParamPoly::var(Var::beta);
          if (z.eigenvector && z.d_part == alpha + ParamPoly(r) && z.omega_part == ParamPoly(n) * beta &&
              z.correction.is_zero())
            return std::nullopt;
          return "n=" + std::to_string(n) + " r=" + std::to_string(r) + " lambda=" + std::to_string(lambda) +
                 ": (" + z.d_part.str() + ", " + z.omega_part.str() + ", " + z.correction.str() + ")" +
                 (z.eigenvector ? "" : " not an eigenvector");
        });
  }

  // ---------------------------------------------------------------- zhu

  struct ZhuData {
    ZhuContext Z;
    FockSpace W;
    std::vector<FockVec> targets;
  };

  ZhuData& zhu_data(Workspace& ws) const {
    return ws.get<ZhuData>("zhu", [&] {
      ZhuContext Z = ZhuContext::pinned(g_, P(Var::ell), P(Var::mu));
      FockSpace W = Z.module(1);
      auto t = sample_vectors(W, c_.seed, c_.zhu_samples, 2);
      return ZhuData{std::move(Z), std::move(W), std::move(t)};
    });
  }

  static std::string window_witness(const FockSpace& W, int n, const FockVec& r) {
    return "mode " + std::to_string(n) + ": " + first_term(r, [&](const FockMono& m) { return W.str(m); });
  }

  void zhu() {
    for (const auto& e : series_product_suite()) {
      add("zhu", "expansion/" + e.name, "displayed expansion of (log(1+z))^m (1+z)^k", 1,
          [e](int, Workspace&) -> Witness {
            if (e.pass) return std::nullopt;
            std::string s = "computed from z^" + std::to_string(e.lo) + ":";
            for (const auto& c : e.computed) s += " " + c.str();
            return s;
          });
    }

    struct Case {
      std::string id;
      int m;
      std::vector<Rational> coeffs;
    };
    const std::vector<Case> cases = {
        {"weight-0/m=-1", -1, {1, Rational(-1, 2), Rational(5, 12), Rational(-3, 8)}},
        {"weight-0/m=-2", -2, {1, 0, Rational(1, 12), Rational(-1, 12)}},
        {"weight-1/m=-1", -1, {1, Rational(1, 2), Rational(-1, 12), Rational(1, 24)}},
        {"weight-2/m=-1", -1, {1, Rational(3, 2), Rational(5, 12), Rational(-1, 24)}}};
    for (size_t ci = 0; ci < cases.size(); ++ci) {
      const Case cs = cases[ci];
      add("zhu", "square-mode/" + cs.id, "a[m] = sum_i c_i a_i for the low-weight cases", 1,
          [this, cs, ci](int, Workspace& ws) -> Witness {
            const ZhuContext& Z = zhu_data(ws).Z;
            const FockSpace& V = Z.vspace();
            FockVec a;
            FockVec v;
            // Targets deep enough that a_i v = 0 past the listed coefficients.
            if (ci < 2) {
              a = Z.lattice(1);
              v = V.create({Letter::a(g_->dim() - 1, -1), Letter::lp(-2)}, {}, 0);
            } else if (ci == 2) {
              a = Z.heis_state(HeisMode::D);
              v = V.create({}, {HeisMode{HeisMode::K, 1}, HeisMode{HeisMode::D, 1}}, 1);
            } else {
              a = Z.omega();
              v = V.create({}, {HeisMode{HeisMode::D, 1}}, -1);
            }
            const Field f = state_field(V, a);
            FockVec r = square_mode(V, a, cs.m, V, v);
            for (size_t i = 0; i < cs.coeffs.size(); ++i)
              r.add_scaled(f.mode(V, cs.m + static_cast<int>(i), v), -ParamPoly(cs.coeffs[i]));
            if (r.is_zero()) return std::nullopt;
            return first_term(r, [&](const FockMono& m) { return V.str(m); });
          });
    }

    const int nt = c_.zhu_samples;
    add("zhu", "omega-field", "Y^phi(omega, z) has modes L(n) - (c/24) delta_{n,0}", nt,
        [this](int t, Workspace& ws) -> Witness {
          auto& D = zhu_data(ws);
          const FockVec& x = D.targets[t];
          for (const auto& [n, y] : D.Z.phi_field(PhiVec::omega(), D.W, -2, 2, x)) {
            FockVec r = y - D.W.virasoro_v(n, x) - D.W.heis_virasoro(n, x);
            if (n == 0) r.add_scaled(x, D.Z.c_tilde() * ParamPoly(Rational(1, 24)));
            if (!r.is_zero()) return "target " + std::to_string(t) + " " + window_witness(D.W, n, r);
          }
          return std::nullopt;
        });
    add("zhu", "lminus1-rule", "Y^phi(L(-1) v, z) = z d/dz Y^phi(v, z)", nt, [this](int t, Workspace& ws) -> Witness {
      auto& D = zhu_data(ws);
      const ZhuContext& Z = D.Z;
      const PhiVec d = PhiVec::primary(Z.heis_state(HeisMode::D));
      const std::vector<PhiVec> vs = {PhiVec::vacuum(), PhiVec::primary(Z.lattice(2)),
                                      PhiVec::product(d, -1, PhiVec::primary(Z.lattice(-1))), PhiVec::omega(),
                                      PhiVec::primary(Z.loop_state(g_->dim() - 1, 1))};
      for (size_t k = 0; k < vs.size(); ++k) {
        const auto [lhs, rhs] = Z.lminus1_phi(vs[k], D.W, -2, 2, D.targets[t]);
        for (size_t i = 0; i < lhs.size(); ++i) {
          const FockVec r = lhs[i].second - rhs[i].second;
          if (!r.is_zero())
            return "vector " + std::to_string(k) + " target " + std::to_string(t) + " " +
                   window_witness(D.W, lhs[i].first, r);
        }
      }
      return std::nullopt;
    });
    for (const auto& [name, last] : {std::pair{"as-displayed", DnLastSummand::AsDisplayed},
                                     std::pair{"derived", DnLastSummand::Derived}}) {
      const std::string ref = std::string("D_n[z] assembled from the five summands equals Y^phi(Theta(D_n), z); ") +
                              (last == DnLastSummand::AsDisplayed
                                   ? "last summand n(ell mu - 1)(z d/dz Y(e^{nk}, z)) Y(e^{nk}, z) as displayed"
                                   : "last summand n(ell mu - 1)(z^2 (d/dz Y(nk, z)) Y(e^{nk}, z) + z d/dz Y(e^{nk}, z))");
      add("zhu", std::string("dn-two-path/") + name, ref, 4, [this, last](int part, Workspace& ws) -> Witness {
        const int n = std::array{-2, -1, 1, 2}[part];
        auto& D = zhu_data(ws);
        for (size_t t = 0; t < D.targets.size(); ++t) {
          const auto ref = D.Z.phi_field(D.Z.theta_dn(n), D.W, -2, 2, D.targets[t]);
          const auto got = D.Z.dn_square_field(n, D.W, -2, 2, D.targets[t], last);
          for (size_t i = 0; i < ref.size(); ++i) {
            const FockVec r = got[i].second - ref[i].second;
            if (!r.is_zero())
              return "n=" + std::to_string(n) + " target " + std::to_string(t) + " " +
                     window_witness(D.W, ref[i].first, r);
          }
        }
        return std::nullopt;
      });
    }

    add("zhu", "phi-commutator", "[u[m], v[n]] = sum_j (m^j/j!) (u_j v)[m+n], j-sum ending at wt u + wt v - 1", 8,
        [this](int part, Workspace& ws) -> Witness {
          auto& D = zhu_data(ws);
          const ZhuContext& Z = D.Z;
          const int top = g_->dim() - 1;
          const PhiVec om = PhiVec::omega();
          const PhiVec e1 = PhiVec::primary(Z.lattice(1));
          const PhiVec em1 = PhiVec::primary(Z.lattice(-1));
          const PhiVec ue = PhiVec::primary(Z.loop_state(0, 1));
          const PhiVec uf = PhiVec::primary(Z.loop_state(top, -1));
          const PhiVec d = PhiVec::primary(Z.heis_state(HeisMode::D));
          const PhiVec k = PhiVec::primary(Z.heis_state(HeisMode::K));
          const std::array<std::pair<PhiVec, PhiVec>, 8> pairs = {
              std::pair{e1, em1}, {e1, e1}, {ue, em1}, {ue, uf}, {om, e1}, {om, om}, {d, e1}, {k, d}};
          const std::array<const char*, 8> names = {"e^k, e^-k", "e^k, e^k", "u(-1)e^k, e^-k", "u(-1)e^k, f(-1)e^-k",
                                                    "omega, e^k", "omega, omega", "d, e^k", "k, d"};
          for (size_t t = 0; t < D.targets.size(); ++t) {
            const auto r = Z.phi_commutator_check(pairs[part].first, pairs[part].second, D.W, -2, 2, D.targets[t]);
            const std::string where = std::string("(") + names[part] + ") target " + std::to_string(t);
            if (!r.bound_ok) return where + ": u_j v nonzero past j = " + std::to_string(r.j_bound);
            if (r.witness)
              return where + " m=" + std::to_string(r.witness->m) + " n=" + std::to_string(r.witness->n) + ": " +
                     first_term(r.witness->residual, [&](const FockMono& m) { return D.W.str(m); });
          }
          return std::nullopt;
        });

    auto gens = std::make_shared<std::vector<TorElem>>();
    for (int i = -1; i <= 1; ++i) {
      gens->push_back(tk1(i, 0));
      gens->push_back(der(i, 0, 1));
      for (int m = -1; m <= 1; ++m) {
        for (int u = 0; u < g_->dim(); ++u) gens->push_back(loop(i, m, u));
        if (m != 0) gens->push_back(kmn(i, m));
      }
    }
    add("zhu", "square-bracket-action", "the square-bracket action on W respects the toroidal bracket",
        static_cast<int>(gens->size()), [this, gens](int x, Workspace& ws) -> Witness {
          auto& D = zhu_data(ws);
          const auto& X = (*gens)[x];
          for (size_t t = 0; t < std::min<size_t>(D.targets.size(), 3); ++t) {
            const FockVec& v = D.targets[t];
            for (const auto& Y : *gens) {
              FockVec r = D.Z.act_square(D.W, X, D.Z.act_square(D.W, Y, v));
              r -= D.Z.act_square(D.W, Y, D.Z.act_square(D.W, X, v));
              r -= D.Z.act_square(D.W, T_.bracket(X, Y), v);
              if (!r.is_zero())
                return "x=" + T_.str(X) + " y=" + T_.str(Y) + " target " + std::to_string(t) + ": " +
                       first_term(r, [&](const FockMono& m) { return D.W.str(m); });
            }
          }
          return std::nullopt;
        });
  }

  const SuiteConfig& c_;
  std::shared_ptr<const SimpleAlgebra> g_;
  Toroidal T_;
  std::vector<Check> checks_;
};

std::shared_ptr<const SimpleAlgebra> load_algebra(const std::string& src) {
  return src == "sl2" ? SimpleAlgebra::sl2() : SimpleAlgebra::load(src);
}

int suite_rank(const std::string& s) {
  const auto& names = suite_names();
  return static_cast<int>(std::find(names.begin(), names.end(), s) - names.begin());
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> kNames = {"brackets", "genfun-square", "genfun-round", "identities",
                                                  "pbw",      "fock",          "zhu"};
  return kNames;
}

void SuiteConfig::validate() const {
  if (range_lo > range_hi) throw ConfigError("empty (m, n) range");
  if (axiom_lo > axiom_hi) throw ConfigError("empty axiom range");
  if (fock_lo > fock_hi) throw ConfigError("empty realization window");
  if (window.zlo > -1 || window.zhi < 1 || window.wlo > -1 || window.whi < 1)
    throw ConfigError("window must contain [-1, 1] in both variables");
  if (fock_lo > -1 || fock_hi < 1) throw ConfigError("realization window must contain [-1, 1]");
  if (pbw_samples < 1 || fock_samples < 1 || zhu_samples < 1) throw ConfigError("sample counts must be positive");
  if (fock_mmax < 0 || fock_level < 0) throw ConfigError("negative realization bound");
  for (const auto& s : suites) {
    if (suite_rank(s) == static_cast<int>(suite_names().size())) throw ConfigError("unknown suite '" + s + "'");
  }
}

Rational parse_rational(const std::string& s) {
  try {
    mpq_class q(s, 10);
    if (q.get_den() == 0) throw ConfigError("zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw ConfigError("not a rational number: '" + s + "'");
  }
}

namespace {

std::pair<int, int> read_pair(const json& j, const char* key) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(std::string(key) + " must be [lo, hi]");
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

SuiteConfig config_from_json(const std::string& text) {
  SuiteConfig c;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be an object");
  try {
    for (const auto& [k, v] : j.items()) {
      if (k == "algebra") {
        c.algebra = v.get<std::string>();
      } else if (k == "range") {
        std::tie(c.range_lo, c.range_hi) = read_pair(v, "range");
      } else if (k == "axiom_range") {
        std::tie(c.axiom_lo, c.axiom_hi) = read_pair(v, "axiom_range");
      } else if (k == "window") {
        std::tie(c.window.zlo, c.window.zhi) = read_pair(v.at("z"), "window.z");
        std::tie(c.window.wlo, c.window.whi) = read_pair(v.at("w"), "window.w");
      } else if (k == "params") {
        for (const auto& [name, val] : v.items()) {
          auto var = var_from_name(name);
          if (!var) throw ConfigError("unknown parameter '" + name + "'");
          c.params[*var] = parse_rational(val.is_string() ? val.get<std::string>() : val.dump());
        }
      } else if (k == "suites") {
        c.suites = v.get<std::vector<std::string>>();
      } else if (k == "seed") {
        c.seed = v.get<std::uint64_t>();
      } else if (k == "samples") {
        for (const auto& [name, val] : v.items()) {
          if (name == "pbw") c.pbw_samples = val.get<int>();
          else if (name == "fock") c.fock_samples = val.get<int>();
          else if (name == "zhu") c.zhu_samples = val.get<int>();
          else throw ConfigError("unknown sample count '" + name + "'");
        }
      } else if (k == "realization") {
        for (const auto& [name, val] : v.items()) {
          if (name == "mmax") c.fock_mmax = val.get<int>();
          else if (name == "window") std::tie(c.fock_lo, c.fock_hi) = read_pair(val, "realization.window");
          else if (name == "level") c.fock_level = val.get<int>();
          else throw ConfigError("unknown realization key '" + name + "'");
        }
      } else if (k == "parallel") {
        c.parallel = v.get<bool>();
      } else if (k == "timing") {
        c.timing = v.get<bool>();
      } else if (k == "out") {
        c.out = v.get<std::string>();
      } else {
        throw ConfigError("unknown config key '" + k + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config type error: ") + e.what());
  }
  c.validate();
  return c;
}

namespace {

json config_json(const SuiteConfig& c) {
  json params = json::object();
  for (const auto& [v, r] : c.params) params[var_name(v)] = r.str();
  return json{{"algebra", c.algebra},
              {"range", {c.range_lo, c.range_hi}},
              {"axiom_range", {c.axiom_lo, c.axiom_hi}},
              {"window", {{"z", {c.window.zlo, c.window.zhi}}, {"w", {c.window.wlo, c.window.whi}}}},
              {"params", params},
              {"suites", c.suites.empty() ? suite_names() : c.suites},
              {"seed", c.seed},
              {"samples", {{"pbw", c.pbw_samples}, {"fock", c.fock_samples}, {"zhu", c.zhu_samples}}},
              {"realization", {{"mmax", c.fock_mmax}, {"window", {c.fock_lo, c.fock_hi}}, {"level", c.fock_level}}}};
}

}  // namespace

std::string config_to_json(const SuiteConfig& c) {
  json j = config_json(c);
  j["parallel"] = c.parallel;
  j["timing"] = c.timing;
  if (!c.out.empty()) j["out"] = c.out;
  return j.dump(2);
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.pass; });
}

std::string Report::json() const {
  // Execution mode and output path are left out so that serial and parallel
  // runs of the same config produce the same bytes.
  nlohmann::ordered_json j;
  j["config"] = config_json(config);
  j["notes"] = notes;
  std::size_t passed = 0;
  for (const auto& r : checks) passed += r.pass ? 1 : 0;
  j["summary"] = {{"checks", checks.size()}, {"passed", passed}, {"failed", checks.size() - passed}};
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : checks) {
    nlohmann::ordered_json e{{"suite", r.suite}, {"check_id", r.id}, {"ref", r.ref}, {"status", r.pass ? "pass" : "fail"}};
    if (!r.pass) e["witness"] = r.witness;
    if (config.timing) e["wall_time"] = r.seconds;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::vector<std::string> suite_catalog(const SuiteConfig& config) {
  config.validate();
  std::vector<std::string> notes;
  Builder b(config, load_algebra(config.algebra));
  const auto checks = b.build(notes);
  std::vector<std::string> out;
  for (const auto& c : checks) out.push_back(c.suite + "  " + c.id + "  " + c.ref);
  return out;
}

Report run_suite(const SuiteConfig& config) {
  config.validate();
  Report rep;
  rep.config = config;
  // The checks refer back to the builder, so it lives until they have run.
  Builder builder(config, load_algebra(config.algebra));
  std::vector<Check> checks = builder.build(rep.notes);

  std::vector<std::pair<int, int>> tasks;
  std::vector<std::vector<Witness>> out(checks.size());
  std::vector<std::vector<double>> secs(checks.size());
  for (size_t c = 0; c < checks.size(); ++c) {
    out[c].resize(checks[c].parts);
    secs[c].resize(checks[c].parts);
    for (int p = 0; p < checks[c].parts; ++p) tasks.emplace_back(static_cast<int>(c), p);
  }

  auto run_task = [&](std::size_t t, Workspace& ws) {
    const auto [c, p] = tasks[t];
    const auto start = std::chrono::steady_clock::now();
    try {
      out[c][p] = checks[c].run(p, ws);
    } catch (const std::exception& e) {
      out[c][p] = std::string("exception: ") + e.what();
    }
    secs[c][p] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  const long ntasks = static_cast<long>(tasks.size());
  if (config.parallel) {
    std::vector<Workspace> ws(omp_get_max_threads());
#pragma omp parallel for schedule(dynamic, 1)
    for (long t = 0; t < ntasks; ++t) run_task(t, ws[omp_get_thread_num()]);
  } else {
    Workspace ws;
    for (long t = 0; t < ntasks; ++t) run_task(t, ws);
  }

  for (size_t c = 0; c < checks.size(); ++c) {
    CheckResult r{checks[c].suite, checks[c].id, checks[c].ref, true, "", 0};
    for (int p = 0; p < checks[c].parts; ++p) {
      r.seconds += secs[c][p];
      if (r.pass && out[c][p]) {
        r.pass = false;
        r.witness = *out[c][p];
      }
    }
    rep.checks.push_back(std::move(r));
  }
  std::stable_sort(rep.checks.begin(), rep.checks.end(), [](const CheckResult& a, const CheckResult& b) {
    const int ra = suite_rank(a.suite);
    const int rb = suite_rank(b.suite);
    return ra != rb ? ra < rb : a.id < b.id;
  });
  if (!config.out.empty()) {
    std::ofstream f(config.out, std::ios::binary);
    if (!f) throw ConfigError("cannot write report to '" + config.out + "'");
    f << rep.json();
  }
  return rep;
}

}  // namespace tor
