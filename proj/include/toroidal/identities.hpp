#ifndef TOROIDAL_IDENTITIES_HPP
#define TOROIDAL_IDENTITIES_HPP

#include "toroidal/scalar.hpp"

namespace tor {

/// @brief Difference of the two sides of the falling-factorial binomial
/// identity
///   sum_r C(p,r) alpha^{p-r} a^{(p-r)} (-beta)^r b^{(r)}
///   = sum_t C(p,t) (alpha+beta)^{p-t} a^{(p-t)} beta^t (-a-b-1+p)^{(t)}
/// as a polynomial in the formal a, b, alpha, beta.  Zero for every p.
ParamPoly falling_binomial_residual(unsigned p);

/// Same identity with the four symbols replaced by given polynomials.
ParamPoly falling_binomial_residual(unsigned p, const ParamPoly& a, const ParamPoly& b, const ParamPoly& alpha,
                                    const ParamPoly& beta);

/// (a+b)^{(q)} - sum_i C(q,i) a^{(i)} b^{(q-i)} in formal a, b.
ParamPoly newton_residual(unsigned q);

/// @brief Cubic coefficient identity behind the [D_m(z), D_n(w)] relation:
///   sum_r C(3,r) n^{3-r} (i+1)^{(3-r)} (-m)^r (j+1)^{(r)}
///   - sum_s C(3,s) (m+n)^{3-s} (i+1)^{(3-s)} m^s (-i-j)^{(s)}.
ParamPoly cubic_coefficient_residual(const ParamPoly& i, const ParamPoly& j, const ParamPoly& m,
                                     const ParamPoly& n);
/// Fully formal version in the parameters i, j, m, n.
ParamPoly cubic_coefficient_residual();

}  // namespace tor

#endif  // TOROIDAL_IDENTITIES_HPP
