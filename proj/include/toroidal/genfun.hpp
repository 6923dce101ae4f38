#ifndef TOROIDAL_GENFUN_HPP
#define TOROIDAL_GENFUN_HPP

#include <string>
#include <vector>

#include "toroidal/formal.hpp"
#include "toroidal/liealg.hpp"

namespace tor {

/// Bivariate coefficient window for generating-function checks.
struct Window {
  int zlo = -5;
  int zhi = 5;
  int wlo = -5;
  int whi = 5;
};

/// @brief Generator of the field space together with a mode convention.
///
/// square: u[z] = sum (t0^n u) z^{-n}, D_m[z] = sum dtilde_{n,m} z^{-n};
/// round:  u(z) = sum (t0^n u) z^{-n-1}, D_m(z) = sum d_{n,m} z^{-n-2}.
/// K_m uses z^{-n} in both conventions, with k1 log z added when m = 0.
struct FieldSymbol {
  enum Gen { Loop, K1, D1, K, D };
  DeltaStyle style = DeltaStyle::square;
  Gen gen = Loop;
  int m = 0;  ///< t1-index for Loop, K, D
  GVec u;     ///< g-vector for Loop

  static FieldSymbol loop(DeltaStyle s, int m, GVec u) { return {s, Loop, m, std::move(u)}; }
  static FieldSymbol kfield(DeltaStyle s, int m) { return {s, K, m, {}}; }
  static FieldSymbol dfield(DeltaStyle s, int m) { return {s, D, m, {}}; }
  static FieldSymbol k1(DeltaStyle s) { return {s, K1, 0, {}}; }
  static FieldSymbol d1(DeltaStyle s) { return {s, D1, 0, {}}; }
};

/// Coefficient of z^q of the field, as a toroidal element.
TorElem field_coefficient(const Toroidal& T, const FieldSymbol& f, int q);
/// Expansion on [lo, hi] including the log slot.
Series<TorElem> expand_field(const Toroidal& T, const FieldSymbol& f, int lo, int hi);

/// [f(z), g(w)] computed coefficientwise with the bracket engine.
DistWindow<TorElem> lhs_commutator(const Toroidal& T, const FieldSymbol& f, const FieldSymbol& g,
                                   const Window& w);

/// @brief One displayed generating-function relation.
struct RelationInfo {
  std::string id;
  std::string ref;
  DeltaStyle style;
  int item;
  bool uses_u;  ///< depends on a g-basis label u
  bool uses_v;  ///< depends on a second label v
};

/// All relation identifiers: square.1-6, square.8-11, round.1-6, round.8-11.
const std::vector<RelationInfo>& relation_catalog();
const RelationInfo& relation_info(const std::string& id);

/// Closed-form right-hand side; for item 9 returns the first sub-relation.
/// Throws std::invalid_argument for unknown identifiers.
DistWindow<TorElem> rhs_closed(const Toroidal& T, const std::string& id, int m, int n, const Window& w,
                               int u = 0, int v = 0);

/// LHS minus RHS on the window.  For item 9 the residuals of both
/// sub-relations are reported: the first one if nonzero, else the second.
DistWindow<TorElem> verify_relation(const Toroidal& T, const std::string& id, int m, int n, const Window& w,
                                    int u = 0, int v = 0);

}  // namespace tor

#endif  // TOROIDAL_GENFUN_HPP
