#include "toroidal/scalar.hpp"

#include "toroidal/lincomb.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace tor {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

mpz_class mpz_from_i128(i128 v) {
  u128 a = abs128(v);
  mpz_class hi(static_cast<unsigned long>(a >> 64));
  mpz_class lo(static_cast<unsigned long>(a & 0xffffffffffffffffULL));
  mpz_class r = (hi << 64) + lo;
  if (v < 0) r = -r;
  return r;
}

bool fits_ll(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z != LONG_MIN;
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  set_from_i128(n, d);
}

Rational::Rational(const mpq_class& q) { set_from_mpq(q); }

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  if (o.big_) {
    big_ = std::make_unique<mpq_class>(*o.big_);
  } else {
    big_.reset();
  }
  return *this;
}

void Rational::set_from_mpq(const mpq_class& q) {
  if (fits_ll(q.get_num()) && fits_ll(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
    return;
  }
  big_ = std::make_unique<mpq_class>(q);
  num_ = 0;
  den_ = 1;
}

void Rational::set_from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  u128 g = gcd128(abs128(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (n > LLONG_MIN && n <= LLONG_MAX && d <= LLONG_MAX) {
    num_ = static_cast<long long>(n);
    den_ = static_cast<long long>(d);
    big_.reset();
    return;
  }
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  big_ = std::make_unique<mpq_class>(q);
  num_ = 0;
  den_ = 1;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(static_cast<long>(num_), static_cast<unsigned long>(den_));
  q.canonicalize();
  return q;
}

bool Rational::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r(*this);
  if (r.big_) {
    *r.big_ = -*r.big_;
    r.set_from_mpq(*r.big_);
  } else {
    r.num_ = -r.num_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      long long s;
      if (!__builtin_add_overflow(num_, o.num_, &s) && s != LLONG_MIN) {
        num_ = s;
        return *this;
      }
    }
    i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
    i128 d = static_cast<i128>(den_) * o.den_;
    set_from_i128(n, d);
    return *this;
  }
  set_from_mpq(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      long long p;
      if (!__builtin_mul_overflow(num_, o.num_, &p) && p != LLONG_MIN) {
        num_ = p;
        return *this;
      }
    }
    set_from_i128(static_cast<i128>(num_) * o.num_,
                  static_cast<i128>(den_) * o.den_);
    return *this;
  }
  set_from_mpq(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!big_ && !o.big_) {
    set_from_i128(static_cast<i128>(num_) * o.den_,
                  static_cast<i128>(den_) * o.num_);
    return *this;
  }
  set_from_mpq(to_mpq() / o.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical forms differ in size class
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

// ---------------------------------------------------------------------------

namespace {
constexpr std::array<const char*, kNumVars> kVarNames = {
    "mu", "ell", "alpha", "beta", "c", "a", "b", "a0",
    "a1", "b0", "b1", "i", "j", "m", "n", "iota"};
}

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(std::string_view s) {
  for (int k = 0; k < kNumVars; ++k) {
    if (s == kVarNames[k]) return static_cast<Var>(k);
  }
  return std::nullopt;
}

ParamPoly::ParamPoly(const Rational& r) {
  if (!r.is_zero()) terms_.push_back(Term{Exps{}, r});
}

ParamPoly ParamPoly::var(Var v) {
  ParamPoly p;
  Term t{Exps{}, Rational(1)};
  t.e[static_cast<int>(v)] = 1;
  p.terms_.push_back(std::move(t));
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].e == Exps{});
}

Rational ParamPoly::constant_term() const {
  if (!terms_.empty() && terms_[0].e == Exps{}) return terms_[0].c;
  return Rational(0);
}

int ParamPoly::total_degree() const {
  int best = 0;
  for (const auto& t : terms_) {
    int d = 0;
    for (auto x : t.e) d += x;
    best = std::max(best, d);
  }
  return best;
}

int ParamPoly::degree_in(Var v) const {
  int best = 0;
  for (const auto& t : terms_) best = std::max<int>(best, t.e[static_cast<int>(v)]);
  return best;
}

void ParamPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& x, const Term& y) { return x.e < y.e; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().e == t.e) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && out.back().c.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().c.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r(*this);
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].e < o.terms_[j].e)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].e < terms_[i].e) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].c + o.terms_[j].c;
      if (!c.is_zero()) out.push_back(Term{terms_[i].e, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) { return *this += -o; }

ParamPoly& ParamPoly::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (r.is_one()) return *this;
  for (auto& t : terms_) t.c *= r;
  return *this;
}

void ParamPoly::add_scaled(const ParamPoly& x, const Rational& c) {
  if (c.is_zero() || x.is_zero()) return;
  if (c.is_one()) {
    *this += x;
    return;
  }
  ParamPoly t(x);
  t *= c;
  *this += t;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return ParamPoly();
  if (b.is_constant()) {
    ParamPoly r(a);
    r *= b.terms_[0].c;
    return r;
  }
  if (a.is_constant()) {
    ParamPoly r(b);
    r *= a.terms_[0].c;
    return r;
  }
  ParamPoly r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      ParamPoly::Term t{x.e, x.c * y.c};
      for (int k = 0; k < kNumVars; ++k) {
        int s = t.e[k] + y.e[k];
        if (s > 255) throw std::overflow_error("ParamPoly: exponent overflow");
        t.e[k] = static_cast<std::uint8_t>(s);
      }
      r.terms_.push_back(std::move(t));
    }
  }
  r.normalize();
  return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].e != b.terms_[k].e || !(a.terms_[k].c == b.terms_[k].c)) return false;
  }
  return true;
}

ParamPoly ParamPoly::pow(unsigned k) const {
  ParamPoly r(1);
  ParamPoly base(*this);
  while (k > 0) {
    if (k & 1U) r *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return r;
}

ParamPoly ParamPoly::specialize(const Assignment& asg) const {
  if (asg.empty()) return *this;
  ParamPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term nt{t.e, t.c};
    for (const auto& [v, val] : asg) {
      int k = static_cast<int>(v);
      for (int p = 0; p < t.e[k]; ++p) nt.c *= val;
      nt.e[k] = 0;
    }
    if (!nt.c.is_zero()) r.terms_.push_back(std::move(nt));
  }
  r.normalize();
  return r;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  auto deg = [](const Term* t) {
    int d = 0;
    for (auto x : t->e) d += x;
    return d;
  };
  std::stable_sort(order.begin(), order.end(), [&](const Term* x, const Term* y) {
    int dx = deg(x);
    int dy = deg(y);
    if (dx != dy) return dx > dy;
    return x->e > y->e;
  });
  std::string out;
  bool first = true;
  for (const Term* t : order) {
    std::string mono;
    for (int k = 0; k < kNumVars; ++k) {
      if (t->e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kVarNames[k];
      if (t->e[k] > 1) mono += "^" + std::to_string(t->e[k]);
    }
    bool neg = t->c.sign() < 0;
    Rational mag = neg ? -t->c : t->c;
    std::string body;
    if (mono.empty()) {
      body = mag.str();
    } else if (mag.is_one()) {
      body = mono;
    } else {
      body = mag.str() + "*" + mono;
    }
    if (first) {
      out = neg ? "-" + body : body;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

ParamPoly ffact(const ParamPoly& a, unsigned r) {
  ParamPoly out(1);
  for (unsigned k = 0; k < r; ++k) out *= a - ParamPoly(static_cast<long long>(k));
  return out;
}

Rational ffact(long long a, unsigned r) {
  Rational out(1);
  for (unsigned k = 0; k < r; ++k) out *= Rational(a - static_cast<long long>(k));
  return out;
}

Rational factorial(unsigned k) { return ffact(static_cast<long long>(k), k); }

Rational binom(long long n, long long k) {
  if (k < 0) return Rational(0);
  return ffact(n, static_cast<unsigned>(k)) / factorial(static_cast<unsigned>(k));
}

std::string coeff_prefix(const ParamPoly& c, bool first) {
  std::string sep;
  std::string body;
  if (c.terms().size() == 1) {
    bool neg = c.terms()[0].c.sign() < 0;
    ParamPoly mag = neg ? -c : c;
    if (first) {
      sep = neg ? "-" : "";
    } else {
      sep = neg ? " - " : " + ";
    }
    if (!(mag == ParamPoly(1))) body = mag.str() + "*";
  } else {
    sep = first ? "" : " + ";
    body = "(" + c.str() + ")*";
  }
  return sep + body;
}

}  // namespace tor
