#ifndef TOROIDAL_ORACLES_HPP
#define TOROIDAL_ORACLES_HPP

// Closed-form bracket formulas transcribed independently of the bracket
// engine.  Each function returns the right-hand side of a displayed relation;
// the engine's bracket of the corresponding left-hand side must agree.

#include "toroidal/liealg.hpp"

namespace tor::oracle {

/// [a t^m d0 + b t^m d1, k_n]
TorElem der_k(const ParamPoly& a, const ParamPoly& b, int m0, int m1, int n0, int n1);
/// [a0 t^m d0 + a1 t^m d1, b0 t^n d0 + b1 t^n d1]
TorElem der_der(const ParamPoly& mu, const ParamPoly& a0, const ParamPoly& a1, const ParamPoly& b0,
                const ParamPoly& b1, int m0, int m1, int n0, int n1);

TorElem loop_loop(const SimpleAlgebra& g, int m0, int m1, int n0, int n1, int u, int v);
/// [dtilde_{i,m}, t0^j t1^n u]
TorElem dtilde_loop(int i, int m, int j, int n, int u);
/// [dtilde_{i,m}, t0^j k1]
TorElem dtilde_t0k1(int i, int m, int j);
/// [t0^i d1, t0^j t1^n u]
TorElem t0d1_loop(int i, int j, int n, int u);
/// [t0^i d1, k_{j,n}]
TorElem t0d1_kmn(int i, int j, int n);
/// [dtilde_{i,m}, k_{j,n}]
TorElem dtilde_kmn(int i, int m, int j, int n);
/// [t0^i d1, t0^j k1]
TorElem t0d1_t0k1(int i, int j);
/// [t0^i d1, t0^j d1]
TorElem t0d1_t0d1(int i, int j);
/// [dtilde_{i,m}, dtilde_{j,n}]
TorElem dtilde_dtilde(const ParamPoly& mu, int i, int m, int j, int n);
/// [t0^i d1, dtilde_{j,n}]
TorElem t0d1_dtilde(const ParamPoly& mu, int i, int j, int n);

/// [d_i, dtilde_m]
TorElem d_dtilde(int i, int m0, int m1);
/// [dtilde_m, dtilde_n] without central term
TorElem dtilde_dtilde_mod_centre(int m0, int m1, int n0, int n1);

/// [dbar_m, dbar_n] with central terms
TorElem dbar_dbar(const ParamPoly& mu, int m0, int m1, int n0, int n1);
/// [t0^{-1} d0, dbar_m] and [t0^{-1} d1, dbar_m], modulo the centre
TorElem t0inv_d0_dbar(int m0, int m1);
TorElem t0inv_d1_dbar(int m0, int m1);
/// [dbar_m, dbar_n] modulo the centre
TorElem dbar_dbar_mod_centre(int m0, int m1, int n0, int n1);

TorElem dvar_loop(const ParamPoly& mu, int i, int m, int j, int n, int u);
TorElem dvar_kmn(const ParamPoly& mu, int i, int m, int j, int n);
TorElem dvar_t0k1(const ParamPoly& mu, int i, int m, int j);
TorElem dvar_dvar(const ParamPoly& mu, int i, int m, int j, int n);
TorElem t0d1_dvar(const ParamPoly& mu, int i, int j, int n);

/// Drops K-components (comparison modulo the centre).
TorElem drop_centre(const TorElem& x);

}  // namespace tor::oracle

#endif  // TOROIDAL_ORACLES_HPP
