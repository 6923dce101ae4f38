#ifndef TOROIDAL_SCALAR_HPP
#define TOROIDAL_SCALAR_HPP

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tor {

/// @brief Exact rational number.
///
/// Values that fit in a reduced int64 fraction stay on the fast path; any
/// overflow promotes the value to a GMP rational.  The representation is
/// always canonical: reduced, positive denominator, and small whenever the
/// reduced value fits.
class Rational {
 public:
  Rational() = default;
  Rational(long long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : num_(v) {}        // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&&) noexcept = default;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;
  bool is_small() const { return !big_; }
  /// Numerator/denominator of a small value; undefined for big ones.
  long long small_num() const { return num_; }
  long long small_den() const { return den_; }

  mpq_class to_mpq() const;
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  void set_from_mpq(const mpq_class& q);
  void set_from_i128(__int128 n, __int128 d);

  long long num_ = 0;
  long long den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

/// Formal parameters.  The set is fixed so a monomial fits in 16 bytes.
enum class Var : std::uint8_t {
  mu, ell, alpha, beta, c, a, b, a0, a1, b0, b1, i, j, m, n, iota
};
inline constexpr int kNumVars = 16;

const char* var_name(Var v);
std::optional<Var> var_from_name(std::string_view s);

using Assignment = std::map<Var, Rational>;

/// @brief Polynomial in the formal parameters with exact rational coefficients.
class ParamPoly {
 public:
  using Exps = std::array<std::uint8_t, kNumVars>;
  struct Term {
    Exps e;
    Rational c;
  };

  ParamPoly() = default;
  ParamPoly(const Rational& r);  // NOLINT(google-explicit-constructor)
  ParamPoly(long long v) : ParamPoly(Rational(v)) {}  // NOLINT
  ParamPoly(int v) : ParamPoly(Rational(v)) {}        // NOLINT

  static ParamPoly var(Var v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant coefficient (the value when is_constant()).
  Rational constant_term() const;
  const std::vector<Term>& terms() const { return terms_; }
  int total_degree() const;
  int degree_in(Var v) const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const Rational& r);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b);

  ParamPoly pow(unsigned k) const;
  ParamPoly specialize(const Assignment& asg) const;

  /// Adds c * x to *this without building a temporary when x is constant.
  void add_scaled(const ParamPoly& x, const Rational& c);

  std::string str() const;

 private:
  void normalize();
  std::vector<Term> terms_;  // sorted by exponent vector, no zero coefficients
};

/// Falling factorial a(a-1)...(a-r+1).
ParamPoly ffact(const ParamPoly& a, unsigned r);
/// Falling factorial of an integer.
Rational ffact(long long a, unsigned r);
/// Binomial coefficient C(n, k) for any integer n and k >= 0.
Rational binom(long long n, long long k);
Rational factorial(unsigned k);

}  // namespace tor

#endif  // TOROIDAL_SCALAR_HPP
