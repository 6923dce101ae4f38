#ifndef TOROIDAL_LIEALG_HPP
#define TOROIDAL_LIEALG_HPP

#include <compare>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toroidal/lincomb.hpp"
#include "toroidal/scalar.hpp"

namespace tor {

/// Raised when a structure-constants file fails to parse or validate.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse vector of the finite-dimensional algebra, indexed by basis label.
using GVec = std::vector<std::pair<int, Rational>>;

/// @brief Finite-dimensional simple Lie algebra given by structure constants.
class SimpleAlgebra {
 public:
  /// Data attached to a root alpha: e_alpha is a basis vector, f_alpha and
  /// h_alpha are normalized so that (e, h, f) is an sl2-triple.
  struct Root {
    std::string name;
    int e = 0;
    GVec f;
    GVec h;
    Rational eps;  ///< <e_alpha, f_alpha> = 2/<alpha,alpha>
  };

  /// Built-in sl2 with basis e, h, f; <e,f> = 1, <h,h> = 2.
  static std::shared_ptr<const SimpleAlgebra> sl2();
  /// Parses the text format described in data/README; validates on load.
  static std::shared_ptr<const SimpleAlgebra> parse(const std::string& text);
  static std::shared_ptr<const SimpleAlgebra> load(const std::string& path);

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  std::optional<int> index_of(std::string_view s) const;

  const GVec& bracket(int a, int b) const { return table_[a * dim() + b]; }
  const Rational& form(int a, int b) const { return form_[a * dim() + b]; }
  GVec bracket(const GVec& x, const GVec& y) const;
  Rational form(const GVec& x, const GVec& y) const;

  const std::vector<int>& cartan() const { return cartan_; }
  const std::vector<Root>& roots() const { return roots_; }
  const std::string& name() const { return name_; }
  bool is_sl2() const { return is_sl2_; }

  /// Human-readable list of violated invariants; empty when valid.
  std::vector<std::string> violations() const;

 private:
  void finish_roots(const std::vector<std::pair<int, int>>& root_pairs);

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<GVec> table_;
  std::vector<Rational> form_;
  std::vector<int> cartan_;
  std::vector<Root> roots_;
  bool is_sl2_ = false;
};

/// @brief Canonical basis symbol of the full toroidal algebra.
struct Sym {
  enum Kind : std::uint8_t { Loop, K0, K1, Kmn, Der };
  Kind kind = K0;
  int m0 = 0;
  int m1 = 0;
  int idx = 0;  ///< g-basis label for Loop, derivation index for Der

  static Sym loop(int a, int b, int u) { return {Loop, a, b, u}; }
  static Sym k0() { return {K0, 0, 0, 0}; }
  static Sym k1() { return {K1, 0, 0, 0}; }
  static Sym kmn(int a, int b) { return {Kmn, a, b, 0}; }
  static Sym der(int a, int b, int i) { return {Der, a, b, i}; }

  friend auto operator<=>(const Sym&, const Sym&) = default;
};

using TorElem = LinComb<Sym>;

// Constructors for canonical and derived elements.
TorElem loop(int m0, int m1, int u, const ParamPoly& c = ParamPoly(1));
TorElem k0();
TorElem k1();
/// k_{m,n}; zero when (m,n) = (0,0).
TorElem kmn(int m, int n);
TorElem der(int m0, int m1, int i);
/// t0^m t1^n k0 expressed in the K basis.
TorElem tk0(int m, int n);
/// t0^m t1^n k1 expressed in the K basis.
TorElem tk1(int m, int n);
/// a t^{(m,n)} k0 + b t^{(m,n)} k1 in the K basis.
TorElem reduce_k(int m, int n, const ParamPoly& a, const ParamPoly& b);
TorElem dtilde(int m0, int m1);
TorElem dbar(int n, int m);
TorElem dvar(int n, int m, const ParamPoly& mu = ParamPoly::var(Var::mu));

/// Names accepted by Toroidal::member.
const std::vector<std::string>& subalgebra_names();

/// @brief Bracket engine for the full toroidal algebra over a simple algebra g.
class Toroidal {
 public:
  explicit Toroidal(std::shared_ptr<const SimpleAlgebra> g,
                    ParamPoly mu = ParamPoly::var(Var::mu));

  const SimpleAlgebra& g() const { return *g_; }
  std::shared_ptr<const SimpleAlgebra> g_ptr() const { return g_; }
  const ParamPoly& mu() const { return mu_; }

  /// Bracket of two canonical symbols, added into out with scale s.
  void bracket_sym(const Sym& a, const Sym& b, const ParamPoly& s, TorElem& out) const;
  TorElem bracket(const TorElem& x, const TorElem& y) const;
  TorElem jacobi_residual(const TorElem& x, const TorElem& y, const TorElem& z) const;

  /// Eigenvalues (m, n) of ad(-d0) and ad(d1) when x is a joint eigenvector.
  std::optional<std::pair<int, int>> grade(const TorElem& x) const;
  /// Membership in a named subalgebra; throws std::invalid_argument otherwise.
  bool member(const TorElem& x, std::string_view algebra) const;

  std::string str(const TorElem& x) const;
  std::string str(const Sym& s) const;
  /// Like str but groups derivation pairs into dtilde(m0,m1) where possible.
  std::string str_dtilde(const TorElem& x) const;

  /// Image of t^p x under the affine sl2 embedding for root r and t1-shift m.
  /// x is 0 = e, 1 = h, 2 = f.
  TorElem sl2_image(std::size_t root, int m, int x, int p) const;

 private:
  std::shared_ptr<const SimpleAlgebra> g_;
  ParamPoly mu_;
};

}  // namespace tor

#endif  // TOROIDAL_LIEALG_HPP
