#ifndef TOROIDAL_FORMAL_HPP
#define TOROIDAL_FORMAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "toroidal/scalar.hpp"

namespace tor {

/// Raised when a windowed computation needs coefficients outside the data it
/// was given.
class WindowError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

namespace detail {
inline bool is_zero(const ParamPoly& p) { return p.is_zero(); }
template <class V>
bool is_zero(const V& v) {
  return v.is_zero();
}
inline ParamPoly scaled(const ParamPoly& v, const ParamPoly& s) { return v * s; }
template <class V>
V scaled(V v, const ParamPoly& s) {
  v *= s;
  return v;
}
}  // namespace detail

/// @brief Univariate windowed series sum_{q=lo..hi} c_q w^q + (log w) L.
///
/// Coefficients outside [lo, hi] are unknown, not zero.  Every operation
/// shrinks the window to where its result is fully determined.
template <class V>
class Series {
 public:
  Series() = default;
  Series(int lo, int hi) : lo_(lo), c_(hi >= lo ? hi - lo + 1 : 0) {}

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  bool contains(int q) const { return q >= lo() && q <= hi(); }

  const V& at(int q) const {
    if (!contains(q)) {
      throw WindowError("series coefficient w^" + std::to_string(q) + " outside [" +
                        std::to_string(lo()) + "," + std::to_string(hi()) + "]");
    }
    return c_[q - lo_];
  }
  V& at(int q) {
    if (!contains(q)) {
      throw WindowError("series coefficient w^" + std::to_string(q) + " outside window");
    }
    return c_[q - lo_];
  }
  const V& log() const { return log_; }
  V& log() { return log_; }

  bool is_zero() const {
    if (!detail::is_zero(log_)) return false;
    return std::all_of(c_.begin(), c_.end(), [](const V& v) { return detail::is_zero(v); });
  }

  /// w d/dw; the log term differentiates to a constant.
  Series theta() const {
    Series r(lo(), hi());
    for (int q = lo(); q <= hi(); ++q) r.at(q) = detail::scaled(at(q), ParamPoly(q));
    if (r.contains(0)) r.at(0) += log_;
    return r;
  }

  /// d/dw; the log term differentiates to w^{-1}.
  Series deriv() const {
    Series r(lo() - 1, hi() - 1);
    for (int q = lo(); q <= hi(); ++q) r.at(q - 1) = detail::scaled(at(q), ParamPoly(q));
    if (r.contains(-1)) r.at(-1) += log_;
    return r;
  }

  Series scale(const ParamPoly& s) const {
    Series r(*this);
    for (auto& v : r.c_) v = detail::scaled(v, s);
    r.log_ = detail::scaled(r.log_, s);
    return r;
  }

  /// Sum on the intersection of the two windows.
  Series operator+(const Series& o) const {
    const int a = std::max(lo(), o.lo());
    const int b = std::min(hi(), o.hi());
    Series r(a, b);
    for (int q = a; q <= b; ++q) {
      r.at(q) = at(q);
      r.at(q) += o.at(q);
    }
    r.log_ = log_;
    r.log_ += o.log_;
    return r;
  }

 private:
  int lo_ = 0;
  std::vector<V> c_;
  V log_{};
};

/// Key of a bivariate coefficient: z^p w^q (log z)^lz (log w)^lw.
struct DistKey {
  int p = 0;
  int q = 0;
  int lz = 0;
  int lw = 0;
  friend auto operator<=>(const DistKey&, const DistKey&) = default;
  std::string str() const;
};

/// @brief Bivariate windowed formal distribution in z and w.
///
/// Stores coefficients of z^p w^q with p in [zlo, zhi] and q in [wlo, whi],
/// together with log-slot terms.  Zero coefficients are not stored.
template <class V>
class DistWindow {
 public:
  DistWindow() = default;
  DistWindow(int zlo, int zhi, int wlo, int whi) : zlo_(zlo), zhi_(zhi), wlo_(wlo), whi_(whi) {}

  int zlo() const { return zlo_; }
  int zhi() const { return zhi_; }
  int wlo() const { return wlo_; }
  int whi() const { return whi_; }
  bool in_window(int p, int q) const { return p >= zlo_ && p <= zhi_ && q >= wlo_ && q <= whi_; }

  /// Adds v at the key; silently drops keys outside the window.
  void add(const DistKey& k, const V& v) {
    if (!in_window(k.p, k.q) || detail::is_zero(v)) return;
    auto [it, inserted] = c_.try_emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (detail::is_zero(it->second)) c_.erase(it);
    }
  }

  V get(const DistKey& k) const {
    auto it = c_.find(k);
    return it == c_.end() ? V{} : it->second;
  }

  const std::map<DistKey, V>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  DistWindow restrict(int zlo, int zhi, int wlo, int whi) const {
    DistWindow r(std::max(zlo, zlo_), std::min(zhi, zhi_), std::max(wlo, wlo_), std::min(whi, whi_));
    for (const auto& [k, v] : c_) r.add(k, v);
    return r;
  }

  /// Sum restricted to the intersection of the windows.
  DistWindow operator+(const DistWindow& o) const {
    DistWindow r = restrict(o.zlo_, o.zhi_, o.wlo_, o.whi_);
    for (const auto& [k, v] : o.c_) r.add(k, v);
    return r;
  }
  DistWindow operator-(const DistWindow& o) const { return *this + o.scale(ParamPoly(-1)); }
  DistWindow& operator+=(const DistWindow& o) { return *this = *this + o; }

  DistWindow scale(const ParamPoly& s) const {
    DistWindow r(zlo_, zhi_, wlo_, whi_);
    for (const auto& [k, v] : c_) r.add(k, detail::scaled(v, s));
    return r;
  }

  /// Smallest key with a nonzero coefficient.
  std::optional<std::pair<DistKey, V>> first_nonzero() const {
    if (c_.empty()) return std::nullopt;
    return *c_.begin();
  }

  friend bool operator==(const DistWindow& a, const DistWindow& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (auto i = a.c_.begin(), j = b.c_.begin(); i != a.c_.end(); ++i, ++j) {
      if (!(i->first == j->first) || !(i->second == j->second)) return false;
    }
    return true;
  }

 private:
  int zlo_ = 0;
  int zhi_ = -1;
  int wlo_ = 0;
  int whi_ = -1;
  std::map<DistKey, V> c_;
};

enum class DeltaStyle { square, round };

/// (-p)^r and (-p-1)^{(r)}, with 0^0 = 1.
Rational delta_factor(DeltaStyle style, int p, unsigned r);

/// @brief Expands A(w) * Op^r delta on a window.
///
/// square: A(w) (w d/dw)^r delta(w/z), delta(w/z) = sum_i w^i z^{-i};
/// round:  A(w) (d/dw)^r z^{-1} delta(w/z).
/// A's log term contributes (log w)-slot coefficients.  Throws WindowError if
/// A's window does not cover the requested output window.
template <class V>
DistWindow<V> delta_term(DeltaStyle style, const Series<V>& A, unsigned r, int zlo, int zhi, int wlo,
                         int whi) {
  DistWindow<V> out(zlo, zhi, wlo, whi);
  const int shift = style == DeltaStyle::square ? 0 : 1 + static_cast<int>(r);
  for (int p = zlo; p <= zhi; ++p) {
    const Rational f = delta_factor(style, p, r);
    if (f.is_zero()) continue;
    const ParamPoly fp(f);
    for (int q = wlo; q <= whi; ++q) {
      out.add({p, q, 0, 0}, detail::scaled(A.at(q + p + shift), fp));
    }
    const int qlog = -p - shift;
    if (qlog >= wlo && qlog <= whi) out.add({p, qlog, 0, 1}, detail::scaled(A.log(), fp));
  }
  return out;
}

/// Scalar version: A = 1.
DistWindow<ParamPoly> delta_term(DeltaStyle style, unsigned r, int zlo, int zhi, int wlo, int whi);

enum class DiffOp { d_dz, z_d_dz };

/// Differentiates a univariate series including its log slot.
template <class V>
Series<V> diff_log(const Series<V>& s, DiffOp op) {
  return op == DiffOp::d_dz ? s.deriv() : s.theta();
}

/// @brief Truncated Laurent series z^lo (c_0 + c_1 z + ...) + O(z^order).
class LaurentSeries {
 public:
  LaurentSeries() = default;
  /// Coefficients c[k] of z^{lo+k}; terms at or past `order` are dropped.
  LaurentSeries(int lo, std::vector<ParamPoly> c, int order);

  static LaurentSeries monomial(int e, const ParamPoly& c, int order);
  /// log(1+z) = z - z^2/2 + z^3/3 - ... + O(z^order).
  static LaurentSeries log1p(int order);
  /// (1+z)^a for an integer a, + O(z^order).
  static LaurentSeries one_plus_z_pow(long long a, int order);

  int lo() const { return lo_; }
  int order() const { return order_; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of z^e; throws WindowError at or past the truncation order.
  ParamPoly coeff(int e) const;

  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries operator+(const LaurentSeries& o) const;
  /// Multiplicative inverse; the leading coefficient must be a nonzero constant.
  LaurentSeries invert() const;
  /// Integer power, negative exponents through invert().
  LaurentSeries pow(int k) const;
  LaurentSeries truncate(int order) const;

  std::string str() const;

 private:
  void normalize();
  int lo_ = 0;
  std::vector<ParamPoly> c_;  // c_[k] is the coefficient of z^{lo_+k}
  int order_ = 0;
};

/// Convenience wrapper matching the named operation.
LaurentSeries series_invert(const LaurentSeries& s, int order);

/// @brief One displayed expansion: name, computed leading exponent and
/// coefficients, expected values, and whether they agree.
struct ExpansionCheck {
  std::string name;
  int lo = 0;
  std::vector<Rational> expected;
  std::vector<ParamPoly> computed;
  bool pass = false;
};

/// Recomputes the log(1+z) expansions used for square-bracket modes.
std::vector<ExpansionCheck> series_product_suite();

}  // namespace tor

#endif  // TOROIDAL_FORMAL_HPP
