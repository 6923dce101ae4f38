#ifndef TOROIDAL_LINCOMB_HPP
#define TOROIDAL_LINCOMB_HPP

#include <functional>
#include <map>
#include <utility>

#include "toroidal/scalar.hpp"

namespace tor {

/// @brief Finite formal linear combination of keys with ParamPoly coefficients.
///
/// Zero coefficients are never stored, so is_zero() and operator== decide
/// equality of normal forms.
template <class K, class Cmp = std::less<K>>
class LinComb {
 public:
  using Map = std::map<K, ParamPoly, Cmp>;
  using value_type = typename Map::value_type;

  LinComb() = default;
  LinComb(const K& k, const ParamPoly& c = ParamPoly(1)) { add(k, c); }  // NOLINT

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  ParamPoly coeff(const K& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? ParamPoly() : it->second;
  }

  void add(const K& k, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(K&& k, ParamPoly&& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// *this += s * o
  void add_scaled(const LinComb& o, const ParamPoly& s) {
    if (s.is_zero()) return;
    for (const auto& [k, c] : o.terms_) add(k, c * s);
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const ParamPoly& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const ParamPoly& s, LinComb a) { return a *= s; }
  friend LinComb operator*(LinComb a, const ParamPoly& s) { return a *= s; }
  LinComb operator-() const {
    LinComb r(*this);
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }

  friend bool operator==(const LinComb& a, const LinComb& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    for (; i != a.terms_.end(); ++i, ++j) {
      if (Cmp{}(i->first, j->first) || Cmp{}(j->first, i->first)) return false;
      if (!(i->second == j->second)) return false;
    }
    return true;
  }

  LinComb specialize(const Assignment& asg) const {
    LinComb r;
    for (const auto& [k, c] : terms_) r.add(k, c.specialize(asg));
    return r;
  }

  /// Applies a linear map given on keys.
  template <class K2, class Cmp2 = std::less<K2>, class F>
  LinComb<K2, Cmp2> map_linear(F&& f) const {
    LinComb<K2, Cmp2> r;
    for (const auto& [k, c] : terms_) r.add_scaled(f(k), c);
    return r;
  }

 private:
  Map terms_;
};

/// Formats a coefficient in front of a basis word: "", "-", "3*", "(mu + 1)*".
std::string coeff_prefix(const ParamPoly& c, bool first);

}  // namespace tor

#endif  // TOROIDAL_LINCOMB_HPP
