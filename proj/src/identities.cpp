#include "toroidal/identities.hpp"

namespace tor {

ParamPoly falling_binomial_residual(unsigned p, const ParamPoly& a, const ParamPoly& b, const ParamPoly& alpha,
                                    const ParamPoly& beta) {
  ParamPoly lhs;
  for (unsigned r = 0; r <= p; ++r) {
    ParamPoly t = alpha.pow(p - r) * ffact(a, p - r) * (-beta).pow(r) * ffact(b, r);
    lhs.add_scaled(t, binom(p, r));
  }
  const ParamPoly shifted = -a - b + ParamPoly(static_cast<long long>(p) - 1);
  const ParamPoly ab = alpha + beta;
  ParamPoly rhs;
  for (unsigned t = 0; t <= p; ++t) {
    ParamPoly x = ab.pow(p - t) * ffact(a, p - t) * beta.pow(t) * ffact(shifted, t);
    rhs.add_scaled(x, binom(p, t));
  }
  return lhs - rhs;
}

ParamPoly falling_binomial_residual(unsigned p) {
  return falling_binomial_residual(p, ParamPoly::var(Var::a), ParamPoly::var(Var::b), ParamPoly::var(Var::alpha),
                                   ParamPoly::var(Var::beta));
}

ParamPoly newton_residual(unsigned q) {
  const ParamPoly a = ParamPoly::var(Var::a);
  const ParamPoly b = ParamPoly::var(Var::b);
  ParamPoly r = ffact(a + b, q);
  for (unsigned i = 0; i <= q; ++i) r.add_scaled(ffact(a, i) * ffact(b, q - i), -binom(q, i));
  return r;
}

ParamPoly cubic_coefficient_residual(const ParamPoly& i, const ParamPoly& j, const ParamPoly& m,
                                     const ParamPoly& n) {
  const ParamPoly one(1);
  ParamPoly lhs;
  for (unsigned r = 0; r <= 3; ++r) {
    lhs.add_scaled(n.pow(3 - r) * ffact(i + one, 3 - r) * (-m).pow(r) * ffact(j + one, r), binom(3, r));
  }
  ParamPoly rhs;
  for (unsigned s = 0; s <= 3; ++s) {
    rhs.add_scaled((m + n).pow(3 - s) * ffact(i + one, 3 - s) * m.pow(s) * ffact(-i - j, s), binom(3, s));
  }
  return lhs - rhs;
}

ParamPoly cubic_coefficient_residual() {
  return cubic_coefficient_residual(ParamPoly::var(Var::i), ParamPoly::var(Var::j), ParamPoly::var(Var::m),
                                    ParamPoly::var(Var::n));
}

}  // namespace tor
