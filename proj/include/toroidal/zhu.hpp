#ifndef TOROIDAL_ZHU_HPP
#define TOROIDAL_ZHU_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/fock.hpp"
#include "toroidal/formal.hpp"

namespace tor {

/// Coefficients c_i (i = m, m+1, ..., m+count-1) of (log(1+z))^m (1+z)^{wt-1},
/// so that a[m] = sum_i c_i a_i for a of weight wt.
std::vector<ParamPoly> square_mode_coeffs(int wt, int m, int count);

/// @brief Y(x, z) for a vector x of a vacuum module, built from its PBW word.
///
/// Uses Y(a_{-n-1} b, z) = :(d/dz)^{(n)} Y(a, z) Y(b, z): letter by letter.
/// The lattice marker of x is read as e^{rk}, i.e. the module's alpha is
/// taken to be 0.  Throws std::invalid_argument on highest-weight spaces.
Field state_field(const FockSpace& V, const FockVec& x);

/// Splits x into L(0)-homogeneous components (weight, vector), weight ascending.
std::vector<std::pair<int, FockVec>> weight_components(const FockVec& x);

/// @brief a[m] v = Res_z Y(a, z) (log(1+z))^m (1+z)^{wt a - 1} v.
///
/// a is a homogeneous vector of the vacuum module V; v lives in W.  The sum over
/// a_i v stops at the truncation bound level(v) + wt a - 1.  Throws
/// std::invalid_argument when a is not homogeneous.
FockVec square_mode(const FockSpace& V, const FockVec& a, int m, const FockSpace& W, const FockVec& v);

/// @brief Vector of V together with enough structure to compute its T-image.
///
/// Supported: the vacuum, primary vectors (T a = a), the conformal vector
/// (T omega = omega - c/24), products a_j b of supported vectors
/// (T(a_j b) = T(a)[j] T(b)), L(-1) of a supported vector
/// (T(L(-1) v) = omega[0] T(v)), and linear combinations.  A primary node that
/// is not annihilated by L(1) and L(2) is rejected when its T-image is taken.
class PhiVec {
 public:
  enum Kind { Vacuum, Primary, Omega, Product, LMinus1, Sum };

  static PhiVec vacuum();
  static PhiVec primary(FockVec x);
  static PhiVec omega();
  /// a_j b.
  static PhiVec product(const PhiVec& a, int j, const PhiVec& b);
  static PhiVec lminus1(const PhiVec& v);

  friend PhiVec operator+(const PhiVec& a, const PhiVec& b);
  friend PhiVec operator*(const ParamPoly& c, const PhiVec& a);

  Kind kind() const;

  struct Node;

 private:
  explicit PhiVec(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
  friend class ZhuContext;
};

/// Which form of the last summand of the D_n[z] formula to assemble.
enum class DnLastSummand {
  AsDisplayed,  ///< n(ell mu - 1) (z d/dz Y(e^{nk}, z)) Y(e^{nk}, z)
  Derived,      ///< n(ell mu - 1) (z^2 (d/dz Y(nk, z)) Y(e^{nk}, z) + z d/dz Y(e^{nk}, z)), from T((nk)_{-2} e^{nk})
};

/// @brief First nonzero residual of a phi-commutator sweep.
struct PhiCommutatorWitness {
  int m = 0;
  int n = 0;
  FockVec residual;
};

struct PhiCommutatorResult {
  int j_bound = 0;            ///< predicted: u_j v = 0 for j > wt u + wt v - 1
  bool bound_ok = true;       ///< u_j v vanished for the next three j past the bound
  std::optional<PhiCommutatorWitness> witness;
};

/// @brief The vertex algebra V = V_{affine-Vir}(ell, c_vir) (x) V_(H,L) and its phi-coordinated action.
///
/// `c_tilde` is the constant in T(omega) = omega - c_tilde/24; the phi-coordinated
/// module axioms need it equal to the central charge of omega (see
/// central_charge()).  Not thread-safe (the underlying FockSpace memoizes).
class ZhuContext {
 public:
  ZhuContext(std::shared_ptr<const SimpleAlgebra> g, ParamPoly ell, ParamPoly mu, ParamPoly c_tilde);
  /// c_tilde = 24 mu ell - 2, the central charge of the affine-Virasoro factor.
  static ZhuContext pinned(std::shared_ptr<const SimpleAlgebra> g, ParamPoly ell = ParamPoly::var(Var::ell),
                           ParamPoly mu = ParamPoly::var(Var::mu));

  const FockSpace& vspace() const { return V_; }
  const ParamPoly& ell() const { return ell_; }
  const ParamPoly& mu() const { return mu_; }
  const ParamPoly& c_tilde() const { return c_; }
  /// The module W = V_{affine-Vir}(ell, c_vir, lambda, beta) (x) V_(H,L)(alpha).
  FockSpace module(int lambda) const;

  /// omega = L(-2)1 + k(-1)d(-1)1.
  FockVec omega() const;
  /// e^{nk}.
  FockVec lattice(int n) const;
  /// u(-1) e^{mk}.
  FockVec loop_state(int u, int m) const;
  /// h(-1) 1 for h = k or d.
  FockVec heis_state(HeisMode::Kind h) const;
  /// 2 omega_3 omega read off as a scalar: the central charge of omega.
  ParamPoly central_charge() const;
  /// L(1) x = L(2) x = 0.
  bool is_primary(const FockVec& x) const;

  /// The vector of V a PhiVec stands for.
  FockVec vector(const PhiVec& v) const;
  /// Its T-image.
  FockVec t_image(const PhiVec& v) const;
  /// Y_W(z^{L(0)} T(v), z) as a field.
  Field phi(const PhiVec& v) const;

  /// Coefficients v[n] of z^{-n}, n in [lo, hi], of Y^phi(v, z) applied to target.
  std::vector<std::pair<int, FockVec>> phi_field(const PhiVec& v, const FockSpace& W, int lo, int hi,
                                                 const FockVec& target) const;
  /// phi_field(L(-1) v) and z d/dz phi_field(v), computed independently.
  std::pair<std::vector<std::pair<int, FockVec>>, std::vector<std::pair<int, FockVec>>> lminus1_phi(
      const PhiVec& v, const FockSpace& W, int lo, int hi, const FockVec& target) const;

  /// PhiVec for Theta(D_n) = n omega_{-1} e^{nk} - L(-1)(d_{-1} e^{nk}) + n(mu ell - 1)(nk)_{-2} e^{nk}.
  PhiVec theta_dn(int n) const;
  /// The five-summand D_n[z] field with c = c_tilde.
  Field dn_square(int n, DnLastSummand last) const;
  std::vector<std::pair<int, FockVec>> dn_square_field(int n, const FockSpace& W, int lo, int hi,
                                                       const FockVec& target, DnLastSummand last) const;

  /// [u[m], v[n]] - sum_j m^j/j! (u_j v)[m+n] on target for m, n in [lo, hi].
  PhiCommutatorResult phi_commutator_check(const PhiVec& u, const PhiVec& v, const FockSpace& W, int lo, int hi,
                                           const FockVec& target) const;

  /// Square-bracket action of a toroidal basis symbol on W: loops, k0, k1, k_{i,n}
  /// and t0^i d1.  Throws std::invalid_argument on other derivations.
  FockVec act_square(const FockSpace& W, const Sym& s, const FockVec& v) const;
  FockVec act_square(const FockSpace& W, const TorElem& x, const FockVec& v) const;

 private:
  std::shared_ptr<const SimpleAlgebra> g_;
  ParamPoly ell_;
  ParamPoly mu_;
  ParamPoly c_;
  FockSpace V_;
};

}  // namespace tor

#endif  // TOROIDAL_ZHU_HPP
