#include "toroidal/oracles.hpp"

namespace tor::oracle {

namespace {

ParamPoly I(long long v) { return ParamPoly(v); }
int dd(int a, int b) { return a == 0 && b == 0 ? 1 : 0; }

TorElem scaled(TorElem x, const ParamPoly& c) { return x *= c; }

}  // namespace

TorElem der_k(const ParamPoly& a, const ParamPoly& b, int m0, int m1, int n0, int n1) {
  const int M0 = m0 + n0;
  const int M1 = m1 + n1;
  TorElem r = scaled(kmn(M0, M1), a * I(M0) + b * I(M1));
  if (dd(M0, M1) != 0) {
    r += scaled(k0(), b);
    r += scaled(k1(), -a);
  }
  return r;
}

TorElem der_der(const ParamPoly& mu, const ParamPoly& a0, const ParamPoly& a1, const ParamPoly& b0,
                const ParamPoly& b1, int m0, int m1, int n0, int n1) {
  const int M0 = m0 + n0;
  const int M1 = m1 + n1;
  ParamPoly A = a0 * I(n0) + a1 * I(n1);
  ParamPoly B = b0 * I(m0) + b1 * I(m1);
  TorElem r = scaled(der(M0, M1, 0), b0 * A - a0 * B);
  r += scaled(der(M0, M1, 1), b1 * A - a1 * B);
  ParamPoly muab = mu * A * B;
  r += scaled(kmn(M0, M1), -muab * I(static_cast<long long>(m0) * n1 - static_cast<long long>(m1) * n0));
  if (dd(M0, M1) != 0) {
    r += scaled(k0(), -muab * I(m0));
    r += scaled(k1(), -muab * I(m1));
  }
  return r;
}

TorElem loop_loop(const SimpleAlgebra& g, int m0, int m1, int n0, int n1, int u, int v) {
  const int M0 = m0 + n0;
  const int M1 = m1 + n1;
  TorElem r;
  for (const auto& [k, c] : g.bracket(u, v)) r += loop(M0, M1, k, ParamPoly(c));
  ParamPoly f(g.form(u, v));
  r += scaled(kmn(M0, M1), f * I(static_cast<long long>(m0) * n1 - static_cast<long long>(m1) * n0));
  if (dd(M0, M1) != 0) {
    r += scaled(k0(), f * I(m0));
    r += scaled(k1(), f * I(m1));
  }
  return r;
}

TorElem dtilde_loop(int i, int m, int j, int n, int u) {
  return loop(i + j, m + n, u, I(static_cast<long long>(n) * i - static_cast<long long>(m) * j));
}

TorElem dtilde_t0k1(int i, int m, int j) { return scaled(kmn(i + j, m), I(static_cast<long long>(m) * j * j)); }

TorElem t0d1_loop(int i, int j, int n, int u) { return loop(i + j, n, u, I(n)); }

TorElem t0d1_kmn(int i, int j, int n) { return scaled(kmn(i + j, n), I(n)); }

TorElem dtilde_kmn(int i, int m, int j, int n) {
  TorElem r = scaled(kmn(i + j, m + n), I(static_cast<long long>(i) * n - static_cast<long long>(m) * j));
  if (dd(m + n, i + j) != 0) {
    r += scaled(k0(), I(i));
    r += scaled(k1(), I(m));
  }
  return r;
}

TorElem t0d1_t0k1(int i, int j) { return i + j == 0 ? scaled(k0(), I(i)) : TorElem(); }

TorElem t0d1_t0d1(int /*i*/, int /*j*/) { return TorElem(); }

TorElem dtilde_dtilde(const ParamPoly& mu, int i, int m, int j, int n) {
  const long long c = static_cast<long long>(i) * n - static_cast<long long>(m) * j;
  TorElem r = scaled(dtilde(i + j, m + n), I(c));
  r += scaled(kmn(i + j, m + n), mu * I(c * c * c));
  return r;
}

TorElem t0d1_dtilde(const ParamPoly& mu, int i, int j, int n) {
  TorElem r = scaled(dtilde(i + j, n), I(n));
  r += scaled(kmn(i + j, n), mu * I(static_cast<long long>(n) * n * n * i * i));
  return r;
}

TorElem d_dtilde(int i, int m0, int m1) { return scaled(dtilde(m0, m1), I(i == 0 ? m0 : m1)); }

TorElem dtilde_dtilde_mod_centre(int m0, int m1, int n0, int n1) {
  return scaled(dtilde(m0 + n0, m1 + n1), I(static_cast<long long>(m0) * n1 - static_cast<long long>(m1) * n0));
}

TorElem dbar_dbar(const ParamPoly& mu, int m0, int m1, int n0, int n1) {
  const int M0 = m0 + n0;
  const int M1 = m1 + n1;
  const long long lead = static_cast<long long>(m0 + 1) * n1 - static_cast<long long>(m1) * (n0 + 1);
  TorElem r = scaled(dbar(M0, M1), I(lead));
  const long long f1 = static_cast<long long>(m1) * n0 - static_cast<long long>(n1) * (m0 + 1);
  const long long f2 = static_cast<long long>(m1) * (n0 + 1) - static_cast<long long>(m0) * n1;
  const long long f3 = static_cast<long long>(m0) * n1 - static_cast<long long>(m1) * n0;
  r += scaled(kmn(M0, M1), mu * I(f1 * f2 * f3));
  if (dd(M0, M1) != 0) {
    r += scaled(k0(), mu * I(static_cast<long long>(m1) * m1 * m0));
    r += scaled(k1(), mu * I(static_cast<long long>(m1) * m1 * m1));
  }
  return r;
}

TorElem t0inv_d0_dbar(int m0, int m1) { return scaled(dbar(m0 - 1, m1), I(m0 + 1)); }

TorElem t0inv_d1_dbar(int m0, int m1) { return scaled(dbar(m0 - 1, m1), I(m1)); }

TorElem dbar_dbar_mod_centre(int m0, int m1, int n0, int n1) {
  const long long lead = static_cast<long long>(m0 + 1) * n1 - static_cast<long long>(m1) * (n0 + 1);
  return scaled(dbar(m0 + n0, m1 + n1), I(lead));
}

TorElem dvar_loop(const ParamPoly& /*mu*/, int i, int m, int j, int n, int u) {
  return loop(i + j, m + n, u, I(static_cast<long long>(i + 1) * n - static_cast<long long>(m) * j));
}

TorElem dvar_kmn(const ParamPoly& /*mu*/, int i, int m, int j, int n) {
  const long long c = static_cast<long long>(i + 1) * (m + n) - static_cast<long long>(m) * (i + j);
  TorElem r = scaled(kmn(i + j, m + n), I(c));
  if (dd(m + n, i + j) != 0) {
    r += scaled(k0(), I(i + 1));
    r += scaled(k1(), I(m));
  }
  return r;
}

TorElem dvar_t0k1(const ParamPoly& /*mu*/, int i, int m, int j) {
  return scaled(kmn(i + j, m), I(static_cast<long long>(m) * j * (j - 1)));
}

TorElem dvar_dvar(const ParamPoly& mu, int i, int m, int j, int n) {
  const long long lead = static_cast<long long>(i + 1) * n - static_cast<long long>(j + 1) * m;
  TorElem r = scaled(dvar(i + j, m + n, mu), I(lead));
  if (dd(i + j, m + n) != 0) r += scaled(k1(), mu * I(2LL * m * m * m));
  Rational sum(0);
  for (unsigned rr = 0; rr <= 3; ++rr) {
    Rational term = binom(3, rr);
    for (unsigned p = 0; p < 3 - rr; ++p) term *= Rational(n);
    term *= ffact(i + 1, 3 - rr);
    for (unsigned p = 0; p < rr; ++p) term *= Rational(-m);
    term *= ffact(j + 1, rr);
    sum += term;
  }
  r += scaled(kmn(i + j, m + n), mu * ParamPoly(sum));
  return r;
}

TorElem t0d1_dvar(const ParamPoly& mu, int i, int j, int n) {
  TorElem r = scaled(dvar(i + j, n, mu), I(n));
  r += scaled(kmn(i + j, n), mu * I(static_cast<long long>(n) * n * n * i * (i - 1)));
  return r;
}

TorElem drop_centre(const TorElem& x) {
  TorElem r;
  for (const auto& [s, c] : x) {
    if (s.kind == Sym::Loop || s.kind == Sym::Der) r.add(s, c);
  }
  return r;
}

}  // namespace tor::oracle
