#ifndef TOROIDAL_FOCK_HPP
#define TOROIDAL_FOCK_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/liealg.hpp"
#include "toroidal/pbw.hpp"

namespace tor {

/// @brief Basis symbol of the twisted Virasoro-affine algebra f-bar.
///
/// L(n), u(n) for a g-basis label u, I(n), and the four centrals k, k_I,
/// k_VI, k_Vir.  The affine-Virasoro algebra is the span of L, U, K and KVir.
struct FbarSym {
  enum Kind : std::uint8_t { L, U, I, K, KI, KVI, KVir };
  Kind kind = L;
  int n = 0;
  int u = 0;

  static FbarSym l(int n) { return {L, n, 0}; }
  static FbarSym a(int u, int n) { return {U, n, u}; }
  static FbarSym i(int n) { return {I, n, 0}; }
  static FbarSym central(Kind k) { return {k, 0, 0}; }
  bool is_central() const { return kind >= K; }

  friend auto operator<=>(const FbarSym&, const FbarSym&) = default;
};

using FbarElem = LinComb<FbarSym>;

FbarElem fbar_L(int n);
FbarElem fbar_U(int u, int n);
FbarElem fbar_I(int n);
FbarElem fbar_central(FbarSym::Kind k);

/// Bracket of f-bar; restricted to L, U, K, KVir it is the affine-Virasoro bracket.
FbarElem fbar_bracket(const SimpleAlgebra& g, const FbarElem& x, const FbarElem& y);

/// Embedding of the affine-Virasoro algebra: L(m) -> L(m) + (m+1) I(m),
/// k_Vir -> k_Vir + 24 k_VI - 12 k_I, identity on the affine part.
/// Throws std::invalid_argument on I, k_I or k_VI.
FbarElem eta(const FbarElem& x);

std::string fbar_str(const SimpleAlgebra& g, const FbarElem& x);

/// @brief Values of the four centrals.
struct Centrals {
  ParamPoly k;
  ParamPoly kI;
  ParamPoly kVI;
  ParamPoly kVir;

  /// gamma_ell: k = ell, k_I = 1 - mu ell, k_VI = 1/2, k_Vir = 12 mu ell - 2.
  static Centrals gamma(const ParamPoly& ell, const ParamPoly& mu);
  /// Affine-Virasoro algebra at level ell and central charge c.
  static Centrals affine_virasoro(const ParamPoly& ell, const ParamPoly& c);
  const ParamPoly& of(FbarSym::Kind kind) const;
};

/// @brief PBW letter of the f-bar module.
///
/// Lp(n) stands for L(n) + (n+1) I(n), the image of the affine-Virasoro L(n).
/// With I the smallest kind, I-letters sit rightmost in a normal-ordered word,
/// so a word lies in the affine-Virasoro submodule iff it has no I-letter.
struct Letter {
  enum Kind : std::uint8_t { I, U, Lp };
  Kind kind = Lp;
  int n = 0;
  int u = 0;

  static Letter lp(int n) { return {Lp, n, 0}; }
  static Letter a(int u, int n) { return {U, n, u}; }
  static Letter i(int n) { return {I, n, 0}; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// @brief Heisenberg creation mode h(-p), p > 0, with h = k or d.
struct HeisMode {
  enum Kind : std::uint8_t { K, D };
  Kind kind = K;
  int p = 1;
  friend auto operator<=>(const HeisMode&, const HeisMode&) = default;
};

/// @brief f-bar part of a basis vector: a normal-ordered word on a top vector.
struct FPart {
  std::vector<Letter> f;  ///< descending order
  int top = 0;            ///< basis index in L(lambda); 0 for the vacuum
  friend auto operator<=>(const FPart&, const FPart&) = default;
};

/// @brief Basis vector (f-bar word on the top) (x) (Heisenberg word) e^{(alpha+r)k}.
struct FockMono {
  FPart f;
  std::vector<HeisMode> h;  ///< sorted ascending
  int r = 0;
  friend auto operator<=>(const FockMono&, const FockMono&) = default;
};

using FockVec = LinComb<FockMono>;

/// @brief Data of a module of the form (f-bar or affine-Virasoro module) (x) V_(H,L)(alpha).
struct FockConfig {
  bool with_I = true;    ///< f-bar module; otherwise the affine-Virasoro module
  bool highest = false;  ///< induced from L(lambda) with L(0) = beta; otherwise the vacuum module
  Centrals c;
  int lambda = 0;
  ParamPoly beta;
  ParamPoly alpha = ParamPoly::var(Var::alpha);

  /// V_fbar(gamma_ell) (x) V_(H,L)(alpha).
  static FockConfig fbar_vacuum(const ParamPoly& ell = ParamPoly::var(Var::ell),
                                const ParamPoly& mu = ParamPoly::var(Var::mu),
                                const ParamPoly& alpha = ParamPoly::var(Var::alpha));
  /// V_{affine-Vir}(ell, c) (x) V_(H,L)(alpha).
  static FockConfig affine_virasoro_vacuum(const ParamPoly& ell, const ParamPoly& c,
                                           const ParamPoly& alpha = ParamPoly::var(Var::alpha));
  /// V_{affine-Vir}(ell, c, lambda, beta) (x) V_(H,L)(alpha).
  static FockConfig affine_virasoro_highest(const ParamPoly& ell, const ParamPoly& c, int lambda,
                                            const ParamPoly& beta = ParamPoly::var(Var::beta),
                                            const ParamPoly& alpha = ParamPoly::var(Var::alpha));
};

/// @brief The module together with its elementary mode operators.
///
/// Not thread-safe: f-bar actions and E^- coefficients are memoized.  Use one
/// instance per thread.
class FockSpace {
 public:
  FockSpace(std::shared_ptr<const SimpleAlgebra> g, FockConfig cfg);

  const SimpleAlgebra& g() const { return *g_; }
  const FockConfig& config() const { return cfg_; }

  /// Top vector (x) e^{(alpha+r)k}.
  FockVec vacuum(int r = 0, int top = 0) const;
  /// Level above the top: minus the sum of all creation-mode indices.
  static int level(const FockMono& m);
  /// Maximal level of the terms of v (0 for v = 0).
  static int level(const FockVec& v);

  bool is_creation(const Letter& x) const;
  /// True iff no term carries an I-letter.
  bool in_affine_virasoro(const FockVec& v) const;

  /// Action of one PBW letter.
  FockVec letter(const Letter& x, const FockVec& v) const;
  /// Action of an f-bar symbol (centrals act by their values).
  FockVec fbar(const FbarSym& s, const FockVec& v) const;
  FockVec fbar(const FbarElem& x, const FockVec& v) const;
  /// Virasoro mode of the f-bar (or affine-Virasoro) conformal vector.
  FockVec virasoro(int n, const FockVec& v) const;
  /// Mode L'(n) = L(n) + (n+1) I(n) of the affine-Virasoro conformal vector.
  FockVec virasoro_v(int n, const FockVec& v) const;

  /// Heisenberg mode h(p) for any integer p.
  FockVec heis(HeisMode::Kind h, int p, const FockVec& v) const;
  /// Virasoro mode of omega^H = k(-1) d(-1).
  FockVec heis_virasoro(int n, const FockVec& v) const;
  /// Mode q of Y(e^{mk}, z), i.e. the coefficient of z^{-q-1}.
  FockVec lattice(int m, int q, const FockVec& v) const;
  /// Coefficients of z^0 .. z^{order-1} of E^-(-mk, z) applied after shifting the marker by m.
  std::vector<FockVec> eminus(int m, const FockVec& v, int order) const;

  /// Convenience constructors: creation letters and Heisenberg modes applied to a vector.
  FockVec create(const std::vector<Letter>& letters, const std::vector<HeisMode>& heis, int r = 0,
                 int top = 0) const;

  std::string str(const FockVec& v) const;
  std::string str(const FockMono& m) const;

 private:
  using FVec = LinComb<FPart>;
  const FVec& act_f(const Letter& x, const FPart& p) const;
  FVec act_f_vec(const Letter& x, const FVec& v) const;
  FVec top_action(const Letter& x, const FPart& p) const;
  /// Letter expansion of an f-bar element plus its central value.
  std::pair<std::vector<std::pair<Letter, ParamPoly>>, ParamPoly> to_letters(const FbarElem& x) const;
  FbarElem from_letter(const Letter& x) const;
  FockVec lift(const FVec& fv, const FockMono& proto) const;
  const LinComb<std::vector<HeisMode>>& schur(int m, int t) const;

  std::shared_ptr<const SimpleAlgebra> g_;
  FockConfig cfg_;
  Sl2Irrep top_;
  mutable std::map<std::pair<Letter, FPart>, FVec> cache_;
  mutable std::map<std::pair<int, int>, LinComb<std::vector<HeisMode>>> schur_;
};

/// Seeded basis vectors of level <= max_level: the top vector first, then random
/// creation words with markers r in [-1, 1] (and random tops for highest-weight modules).
std::vector<FockVec> sample_vectors(const FockSpace& S, std::uint64_t seed, int count, int max_level);

/// @brief Formal field sum_n A_n z^{-n-1} acting on a FockSpace, built as an expression tree.
///
/// The weight h of a field fixes its truncation: A_n v = 0 whenever
/// n > level(v) + h - 1.  Products of fields take their mode sums over the
/// finite range this bound leaves.
class Field {
 public:
  /// Y(1, z): the identity.
  static Field identity();
  /// Y(u, z) = sum u(n) z^{-n-1}.
  static Field affine(int u);
  /// Y(I, z).
  static Field iota();
  /// Y(omega^f, z) = sum L(n) z^{-n-2}.
  static Field virasoro();
  /// sum L'(n) z^{-n-2}, the f-part of the affine-Virasoro conformal vector.
  static Field virasoro_v();
  /// Y(h, z) for h = k or d.
  static Field heis(HeisMode::Kind h);
  /// Y(omega^H, z).
  static Field heis_virasoro();
  /// Y(e^{mk}, z).
  static Field lattice(int m);

  /// d/dz F(z).
  Field deriv() const;
  /// z^k F(z).
  Field shift(int k) const;
  /// F(z) G(z) for fields whose modes commute.
  static Field product(const Field& a, const Field& b);
  /// :F(z) G(z): = F(z)_+ G(z) + G(z) F(z)_-.
  static Field normal(const Field& a, const Field& b);

  friend Field operator+(const Field& a, const Field& b);
  friend Field operator-(const Field& a, const Field& b);
  friend Field operator*(const ParamPoly& c, const Field& a);

  int weight() const;
  /// A_n v.
  FockVec mode(const FockSpace& S, int n, const FockVec& v) const;
  /// Coefficient of z^q in F(z) v.
  FockVec coeff(const FockSpace& S, int q, const FockVec& v) const { return mode(S, -q - 1, v); }

  struct Node;

 private:
  explicit Field(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Y(omega, z) for omega = omega^f + omega^H.
Field omega_field();
/// Y(omega^V, z) = Y(omega, z) - d/dz Y(I, z).
Field omega_v_field();

/// @brief Label of one realized generating series.
///
/// K0:   sum_j t0^j t1^m k0 z^{-j-1}          = ell Y(e^{mk}, z), m != 0
/// K1:   sum_j t0^j k1 z^{-j-1}               = ell Y(k, z)
/// Loop: sum_j t0^j t1^m u z^{-j-1}           = Y(u, z) Y(e^{mk}, z)
/// D1:   sum_j t0^j t1^m d1 z^{-j-1}          = :Y(d + m I, z) Y(e^{mk}, z):
/// D0:   sum_j (-t0^j t1^m d0 + mu (j+1/2) t0^j t1^m k0) z^{-j-2}
///       = :Y(omega, z) Y(e^{mk}, z): + Y(I, z) Y(mk, z) Y(e^{mk}, z)
///         + (ell mu - 1) (d/dz Y(mk, z)) Y(e^{mk}, z)
struct BilligLabel {
  enum Kind : std::uint8_t { K0, K1, Loop, D1, D0 };
  Kind kind = Loop;
  int m = 0;
  int u = 0;

  static BilligLabel k0(int m) { return {K0, m, 0}; }
  static BilligLabel k1() { return {K1, 0, 0}; }
  static BilligLabel loop(int m, int u) { return {Loop, m, u}; }
  static BilligLabel d1(int m) { return {D1, m, 0}; }
  static BilligLabel d0(int m) { return {D0, m, 0}; }

  /// Toroidal element carried by the coefficient with t0-power j.
  TorElem element(const Toroidal& T, int j) const;
  std::string str(const SimpleAlgebra& g) const;
  friend auto operator<=>(const BilligLabel&, const BilligLabel&) = default;
};

/// All labels with |m| <= mmax (K0 skips m = 0; K1 appears once).
std::vector<BilligLabel> billig_labels(const SimpleAlgebra& g, int mmax);

/// How the coefficients of ell Y(e^{mk}, z) are matched with t0^j t1^m k0.
enum class K0Indexing {
  AsDisplayed,  ///< t0^j t1^m k0 is the coefficient of z^{-j-1}
  Graded,       ///< t0^j t1^m k0 is the coefficient of z^{-j}, the d0-compatible choice
};

/// @brief The toroidal action on V_fbar(gamma_ell) (x) V_(H,L)(alpha).
class Realization {
 public:
  explicit Realization(Toroidal T, ParamPoly ell = ParamPoly::var(Var::ell),
                       ParamPoly alpha = ParamPoly::var(Var::alpha), K0Indexing k0 = K0Indexing::Graded);

  const Toroidal& algebra() const { return T_; }
  const FockSpace& space() const { return S_; }
  const ParamPoly& ell() const { return ell_; }
  K0Indexing k0_indexing() const { return k0_; }

  /// The field attached to a label, with F_{mode_index(a, j)} realizing a.element(j).
  Field field(const BilligLabel& a) const;
  int mode_index(const BilligLabel& a, int j) const;
  /// Coefficients with t0-power j in [lo, hi] applied to v.
  std::vector<std::pair<int, FockVec>> billig_field(const BilligLabel& a, int lo, int hi,
                                                    const FockVec& v) const;

  /// Action of a toroidal basis symbol or element.
  FockVec act(const Sym& s, const FockVec& v) const;
  FockVec act(const TorElem& x, const FockVec& v) const;

  /// [a_i, b_j] v - [a_i, b_j]_T v for the elements with t0-powers i and j.
  FockVec residual(const BilligLabel& a, int i, const BilligLabel& b, int j, const FockVec& v) const;

  /// Seeded basis vectors of level <= max_level with markers r in [-1, 1].
  std::vector<FockVec> samples(std::uint64_t seed, int count, int max_level) const;

 private:
  FockVec k0_mode(int m, int j, const FockVec& v) const;

  Toroidal T_;
  ParamPoly ell_;
  K0Indexing k0_;
  FockSpace S_;
};

/// @brief First failing entry of a verify_realization sweep.
struct RealizationWitness {
  BilligLabel a;
  int i = 0;
  BilligLabel b;
  int j = 0;
  int sample = 0;
  FockVec residual;
};

/// Checks every pair (a_i, b_j) with i, j in [lo, hi] on each sample; returns
/// the first nonzero residual, or nothing.
std::optional<RealizationWitness> verify_realization(const Realization& R, const BilligLabel& a,
                                                     const BilligLabel& b, int lo, int hi,
                                                     const std::vector<FockVec>& samples);

/// @brief Field of the restricted algebra acting on the affine-Virasoro part.
///
/// Loop, K1, D1, K (K_n(z) = sum k_{j,n} z^{-j}) and D (the D_n(z) of the
/// composite formula) as FieldGen; the translation t0^{-1} d0 separately.
Field restricted_field(const FieldGen& a, const ParamPoly& ell, const ParamPoly& mu);

/// Coefficients a(n) v, n in [lo, hi]; throws std::invalid_argument when v has
/// a component outside the affine-Virasoro submodule.
std::vector<std::pair<int, FockVec>> restricted_window(const FockSpace& S, const FieldGen& a, int lo, int hi,
                                                       const FockVec& v, const ParamPoly& mu);
/// t0^{-1} d0 = -omega^V_0 = -L(-1).
FockVec translation(const FockSpace& S, const FockVec& v);

/// @brief The three residues of d_{0,n} on u (x) e^{(alpha+r)k}.
struct ZeroModeEigen {
  ParamPoly d_part;        ///< from the d-term
  ParamPoly omega_part;    ///< from the omega-term, scaled by n
  ParamPoly correction;    ///< from the (ell mu - 1)-term
  bool eigenvector = true; ///< each residue was a multiple of u (x) e^{(alpha+n+r)k}
};

/// Works on V_{affine-Vir}(ell, 24 mu ell - 2, lambda, beta) (x) V_(H,L)(alpha)
/// with u the top basis vector `top`.
ZeroModeEigen zero_mode_eigen(std::shared_ptr<const SimpleAlgebra> g, int n, int r, int lambda = 0,
                              int top = 0);

/// Image of a field generator in the affine-Virasoro subspace of `S`:
/// K_n -> (ell/n) e^{nk}, k1 -> ell k, d1 -> d, t1^m u -> u (x) e^{mk},
/// D_n -> n L(-2) e^{nk} - L(-1)(d_{-1} e^{nk}) + n (mu ell - 1)(n k_{-2} e^{nk}).
FockVec theta_image(const FockSpace& S, const FieldGen& a, const ParamPoly& mu);

}  // namespace tor

#endif  // TOROIDAL_FOCK_HPP
