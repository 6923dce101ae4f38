#include "toroidal/formal.hpp"

#include <sstream>

namespace tor {

std::string DistKey::str() const {
  std::ostringstream os;
  os << "z^" << p << " w^" << q;
  if (lz != 0) os << " log(z)";
  if (lw != 0) os << " log(w)";
  return os.str();
}

Rational delta_factor(DeltaStyle style, int p, unsigned r) {
  if (style == DeltaStyle::square) {
    Rational f(1);
    for (unsigned k = 0; k < r; ++k) f *= Rational(-p);
    return f;
  }
  return ffact(static_cast<long long>(-p) - 1, r);
}

DistWindow<ParamPoly> delta_term(DeltaStyle style, unsigned r, int zlo, int zhi, int wlo, int whi) {
  const int shift = style == DeltaStyle::square ? 0 : 1 + static_cast<int>(r);
  // A = 1 only has a w^0 coefficient, which sits at q + p + shift = 0.
  DistWindow<ParamPoly> out(zlo, zhi, wlo, whi);
  for (int p = zlo; p <= zhi; ++p) {
    const int q = -p - shift;
    if (q < wlo || q > whi) continue;
    out.add({p, q, 0, 0}, ParamPoly(delta_factor(style, p, r)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// LaurentSeries

LaurentSeries::LaurentSeries(int lo, std::vector<ParamPoly> c, int order)
    : lo_(lo), c_(std::move(c)), order_(order) {
  normalize();
}

void LaurentSeries::normalize() {
  const int keep = std::max(0, order_ - lo_);
  if (static_cast<int>(c_.size()) > keep) c_.resize(keep);
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    lo_ = order_;
    return;
  }
  c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
  lo_ += static_cast<int>(lead);
  // pad so every exponent below the order is explicit
  c_.resize(order_ - lo_);
}

LaurentSeries LaurentSeries::monomial(int e, const ParamPoly& c, int order) {
  return LaurentSeries(e, {c}, order);
}

LaurentSeries LaurentSeries::log1p(int order) {
  std::vector<ParamPoly> c;
  for (int k = 1; k < order; ++k) c.emplace_back(Rational(k % 2 == 1 ? 1 : -1, k));
  return LaurentSeries(1, std::move(c), order);
}

LaurentSeries LaurentSeries::one_plus_z_pow(long long a, int order) {
  std::vector<ParamPoly> c;
  for (int k = 0; k < order; ++k) c.emplace_back(binom(a, k));
  return LaurentSeries(0, std::move(c), order);
}

ParamPoly LaurentSeries::coeff(int e) const {
  if (e >= order_) {
    throw WindowError("coefficient z^" + std::to_string(e) + " beyond truncation order " +
                      std::to_string(order_));
  }
  if (e < lo_) return ParamPoly();
  return c_[e - lo_];
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  if (is_zero() || o.is_zero()) {
    return LaurentSeries(0, {}, std::min(order_ + o.lo_, o.order_ + lo_));
  }
  const int order = std::min(lo_ + o.order_, o.lo_ + order_);
  const int lo = lo_ + o.lo_;
  std::vector<ParamPoly> c(std::max(0, order - lo));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size() && i + j < c.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return LaurentSeries(lo, std::move(c), order);
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  const int order = std::min(order_, o.order_);
  const int lo = std::min(lo_, o.lo_);
  std::vector<ParamPoly> c(std::max(0, order - lo));
  for (int e = lo; e < order; ++e) c[e - lo] = coeff(e) + o.coeff(e);
  return LaurentSeries(lo, std::move(c), order);
}

LaurentSeries LaurentSeries::invert() const {
  if (is_zero()) throw std::domain_error("series_invert: zero series");
  const ParamPoly& a0 = c_[0];
  if (!a0.is_constant()) throw std::domain_error("series_invert: leading coefficient not a constant");
  const Rational inv0 = Rational(1) / a0.constant_term();
  const int n = order_ - lo_;  // relative precision
  std::vector<ParamPoly> b(n);
  b[0] = ParamPoly(inv0);
  for (int k = 1; k < n; ++k) {
    ParamPoly s;
    for (int i = 1; i <= k; ++i) s += c_[i] * b[k - i];
    s *= -inv0;
    b[k] = s;
  }
  return LaurentSeries(-lo_, std::move(b), n - lo_);
}

LaurentSeries LaurentSeries::pow(int k) const {
  if (k < 0) return invert().pow(-k);
  if (k == 0) return monomial(0, ParamPoly(1), order_ - lo_);
  LaurentSeries r = *this;
  for (int i = 1; i < k; ++i) r = r * *this;
  return r;
}

LaurentSeries LaurentSeries::truncate(int order) const {
  return LaurentSeries(lo_, c_, std::min(order, order_));
}

std::string LaurentSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].str() << ")*z^" << lo_ + static_cast<int>(i);
  }
  if (!first) os << " + ";
  os << "O(z^" << order_ << ")";
  return os.str();
}

LaurentSeries series_invert(const LaurentSeries& s, int order) { return s.invert().truncate(order); }

std::vector<ExpansionCheck> series_product_suite() {
  // Enough precision for four coefficients past the leading z^{-2}.
  const int prec = 8;
  const LaurentSeries L = LaurentSeries::log1p(prec);
  const LaurentSeries Linv = L.invert();
  const LaurentSeries Linv2 = L.pow(-2);
  const LaurentSeries opz_inv = LaurentSeries::one_plus_z_pow(-1, prec);

  auto make = [](std::string name, const LaurentSeries& s, int lo, std::vector<Rational> expected) {
    ExpansionCheck c;
    c.name = std::move(name);
    c.lo = lo;
    c.expected = std::move(expected);
    c.pass = true;
    for (std::size_t k = 0; k < c.expected.size(); ++k) {
      ParamPoly v = s.coeff(lo + static_cast<int>(k));
      c.computed.push_back(v);
      if (!(v == ParamPoly(c.expected[k]))) c.pass = false;
    }
    return c;
  };

  std::vector<ExpansionCheck> out;
  out.push_back(make("log(1+z)", L, 1, {1, Rational(-1, 2), Rational(1, 3), Rational(-1, 4)}));
  out.push_back(make("(log(1+z))^-1", Linv, -1, {1, Rational(1, 2), Rational(-1, 12), Rational(1, 24)}));
  // Displayed only through z^2 relative order, followed by O(z^4): the z^3
  // term relative to the leading power vanishes.
  out.push_back(make("(log(1+z))^-2", Linv2, -2, {1, 1, Rational(1, 12), 0}));
  out.push_back(make("(log(1+z))^-1 (1+z)^-1", Linv * opz_inv, -1,
                     {1, Rational(-1, 2), Rational(5, 12), Rational(-3, 8)}));
  out.push_back(make("(log(1+z))^-2 (1+z)^-1", Linv2 * opz_inv, -2,
                     {1, 0, Rational(1, 12), Rational(-1, 12)}));
  LaurentSeries one = L * Linv;
  out.push_back(make("log(1+z) (log(1+z))^-1", one, 0, {1, 0, 0}));
  return out;
}

}  // namespace tor
