#ifndef TOROIDAL_PBW_HPP
#define TOROIDAL_PBW_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/liealg.hpp"

namespace tor {

/// @brief Finite-dimensional irreducible sl2 module L(lambda).
///
/// Basis w_0..w_lambda with f w_k = w_{k+1}, h w_k = (lambda-2k) w_k,
/// e w_k = k(lambda-k+1) w_{k-1}; a general basis vector of g acts through its
/// coordinates along the (e, h, f) triple of the first root.
class Sl2Irrep {
 public:
  Sl2Irrep() = default;
  Sl2Irrep(const SimpleAlgebra& g, int lambda);
  int lambda() const { return lambda_; }
  /// x_u w_k as a list of (index, coefficient).
  std::vector<std::pair<int, Rational>> act(int u, int k) const;

 private:
  int lambda_ = 0;
  std::vector<std::array<Rational, 3>> coords_;
};

/// @brief Canonical generator of the vertex-Lie subalgebra used as a PBW letter.
///
/// Loop(j, m, u) = t0^j t1^m u.  K(j, m) = k_{j,m} for m != 0 and t0^j k1 for
/// m = 0.  D(j, m) = d_{j,m} for m != 0 and t0^j d1 for m = 0.  The t0-power j
/// is the degree with respect to ad(d0).
struct Gen {
  enum Cls : std::uint8_t { Loop, K, D };
  Cls cls = Loop;
  int j = 0;
  int m = 0;
  int u = 0;  ///< g-basis label, Loop only

  static Gen loop(int j, int m, int u) { return {Loop, j, m, u}; }
  static Gen k(int j, int m) { return {K, j, m, 0}; }
  static Gen d(int j, int m) { return {D, j, m, 0}; }

  friend auto operator<=>(const Gen&, const Gen&) = default;
};

/// The toroidal element a generator stands for.
TorElem gen_elem(const Toroidal& T, const Gen& g);
std::string gen_str(const Toroidal& T, const Gen& g);

/// @brief Element of the acting algebra split into generators and extras.
struct Decomposed {
  LinComb<Gen> gens;
  ParamPoly k0;        ///< central part
  ParamPoly d0;        ///< coefficient of d0 (grading operator)
  ParamPoly t0inv_d0;  ///< coefficient of t0^{-1} d0
};

/// Expresses x in the generator basis; throws std::invalid_argument when x has
/// a component outside the vertex-Lie algebra and its two extensions.
Decomposed decompose(const Toroidal& T, const TorElem& x);

enum class BaseKind { Vacuum, TEll, TFull };

/// @brief Degree-zero data an induced module is built from.
///
/// Vacuum: one vector, the positive part kills it and k0 acts as ell.
/// TEll: span of q^n, loops and k1 act as zero, t1^m k0 q^n = ell q^{m+n},
/// d_{0,m} q^n = n q^{m+n}.
/// TFull: q^n (x) w with w in the sl2 module L(lambda), t1^m a acting on w and
/// d_{0,m} (q^n (x) w) = (n + alpha + beta m) q^{m+n} (x) w.
struct BaseModule {
  BaseKind kind = BaseKind::Vacuum;
  ParamPoly ell = ParamPoly::var(Var::ell);
  ParamPoly alpha = ParamPoly::var(Var::alpha);
  ParamPoly beta = ParamPoly::var(Var::beta);
  int lambda = 0;

  static BaseModule vacuum(ParamPoly ell = ParamPoly::var(Var::ell));
  static BaseModule t_ell(ParamPoly ell = ParamPoly::var(Var::ell));
  static BaseModule t_full(int lambda, ParamPoly ell = ParamPoly::var(Var::ell),
                           ParamPoly alpha = ParamPoly::var(Var::alpha),
                           ParamPoly beta = ParamPoly::var(Var::beta));
  std::string str() const;
};

/// @brief Normal-ordered monomial g_1 g_2 ... g_k applied to q^n (x) w_w.
///
/// Generators are stored in descending order (g_1 >= g_2 >= ...).  For the
/// vacuum module n = w = 0.
struct Monomial {
  std::vector<Gen> gens;
  int n = 0;
  int w = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

using ModVec = LinComb<Monomial>;

/// @brief Generator of the field space A_g, with modes given by rho.
///
/// u(n) = t0^n u, k1(n) = t0^n k1, d1(n) = t0^n d1, K_m(n) = k_{n+1,m},
/// D_m(n) = d_{n-1,m}.
struct FieldGen {
  enum Kind : std::uint8_t { Loop, K1, D1, K, D };
  Kind kind = Loop;
  int m = 0;
  int u = 0;

  static FieldGen loop(int m, int u) { return {Loop, m, u}; }
  static FieldGen k1() { return {K1, 0, 0}; }
  static FieldGen d1() { return {D1, 0, 0}; }
  static FieldGen kfield(int m) { return {K, m, 0}; }
  static FieldGen dfield(int m) { return {D, m, 0}; }

  Gen mode(int n) const;
};

/// Inverse of FieldGen::mode.
std::pair<FieldGen, int> field_of(const Gen& g);

/// @brief Coefficients a(n) v on a window, with the truncation bound.
struct FieldWindow {
  std::vector<std::pair<int, ModVec>> coeffs;
  int bound = 0;          ///< a(n) v = 0 is predicted for every n > bound
  bool truncation_ok = false;  ///< checked on the next few modes past the bound
};

/// @brief Module induced from a BaseModule, acting by PBW normal ordering.
///
/// Not thread-safe: action results are memoized.  Use one instance per thread.
class InducedModule {
 public:
  InducedModule(Toroidal T, BaseModule base);

  const Toroidal& algebra() const { return T_; }
  const BaseModule& base() const { return base_; }

  /// q^n (x) w_w, or the vacuum vector.
  ModVec base_vector(int n = 0, int w = 0) const;
  /// Generators that create (do not annihilate) in this module.
  bool is_creation(const Gen& g) const;
  /// Total t0-degree of a monomial, i.e. minus the sum of its t0-powers.
  static int degree(const Monomial& mono);
  /// Joint (ad(-d0), ad(d1)) grade of a vacuum-module monomial.
  std::pair<int, int> bigrade(const Monomial& mono) const;

  ModVec act(const TorElem& x, const ModVec& v) const;
  ModVec act(const Gen& g, const ModVec& v) const;
  /// act([x,y],v) - x(y v) + y(x v).
  ModVec rep_consistency(const TorElem& x, const TorElem& y, const ModVec& v) const;

  /// Action of -t0^{-1} d0 (vacuum module only).
  ModVec translation(const ModVec& v) const;
  /// The same operator through d 1 = 0 and [d, a(n)] = -n a(n-1).
  ModVec translation_recursive(const ModVec& v) const;

  ModVec field_coeff(const FieldGen& a, int n, const ModVec& v) const;
  FieldWindow field_window(const FieldGen& a, const ModVec& v, int lo, int hi) const;

  /// True iff every coefficient of total mode s in [lo, hi] of a(z)^k v
  /// vanishes, where a = t1^m x for a root vector x with [x, x] = 0 and
  /// <x, x> = 0.  Throws std::invalid_argument unless ell is a constant.
  bool nilpotency_probe(const FieldGen& a, const ModVec& v, int k, int lo, int hi) const;

  std::string str(const ModVec& v) const;

 private:
  ModVec act_mono(const Gen& g, const Monomial& mono) const;
  ModVec act_decomposed(const Decomposed& d, const ModVec& v) const;
  ModVec act_t0inv_d0(const Monomial& mono) const;
  ModVec base_action(const Gen& g, const Monomial& mono) const;

  Toroidal T_;
  BaseModule base_;
  Sl2Irrep top_;
  mutable std::map<std::pair<Gen, Monomial>, ModVec> cache_;
};

/// @brief Seeded sampler of generators and module vectors for sweeps.
class PbwSampler {
 public:
  explicit PbwSampler(std::uint64_t seed) : rng_(seed) {}
  /// Uniform in [lo, hi]; independent of the standard library's distributions.
  int uniform(int lo, int hi);
  Gen generator(const Toroidal& T, int lo, int hi);
  /// Random monomial of PBW length <= max_len built from creation generators.
  ModVec vector(const InducedModule& M, int max_len, int lo, int hi);

 private:
  std::mt19937_64 rng_;
};

}  // namespace tor

#endif  // TOROIDAL_PBW_HPP
