#pragma once

#include <complex>
#include <optional>

#include "torus_zeta/bigint.hpp"

namespace tzeta::special {

using cplx = std::complex<double>;

/// Principal-branch log Gamma: real on the positive axis, analytic off
/// (-inf, 0], computed by upward recurrence into the Stirling regime.
/// On the negative real axis the value is the limit from the upper half
/// plane. Absolute error < 1e-12 for |s| <= 50. Throws PoleError at
/// non-positive integers.
cplx log_gamma(cplx s);

/// Hurwitz zeta sum_{n>=0} (s+n)^{-z} continued in z by Euler-Maclaurin
/// (30 direct terms, Bernoulli corrections through B_24; valid for
/// Re z > -23). Requires Re s > 0; throws PoleError at z = 1.
cplx hurwitz_zeta(cplx z, cplx s);

struct DzAtZero {
  /// -log(eta) (1/2 - s) + logGamma(s) - (1/2) log 2pi.
  cplx closed_form;
  /// Central difference of eta^{-z} hurwitz_zeta(z, s) at z = +-1e-5;
  /// available only where the series route applies (Re s > 0).
  std::optional<cplx> finite_difference;
};

/// d/dz of the scaled Hurwitz zeta at z = 0 for the scale eta != 0.
DzAtZero hurwitz_dz_at_zero(cplx s, cplx eta);

struct TwoRoute {
  cplx closed_form;   // the Arg(eta) case-split formula
  cplx definitional;  // exp(-dz(0,s;eta) - dz(0,-s;-eta)) / (eta s)
};

/// Zeta-regularized product prod_{v in Z} eta (s + v).
///
/// Closed form by the principal-branch case split:
///   Arg eta in (0, pi]  ->  1 - exp(-2 pi i s)
///   Arg eta in (-pi, 0] ->  1 - exp(+2 pi i s)
/// (the case boundary is where -eta crosses the log branch cut; this keys
/// both routes to the same branch, so they agree everywhere).
/// Both routes must agree to 1e-9 or an InconsistencyError is thrown.
/// Inputs with s within 1e-8 of a real integer are rejected: the product
/// vanishes there.
TwoRoute regularized_product(cplx eta, cplx s);

/// Regularized determinant factor prod_v (s - (log alpha + 2 pi i v)/log r)
/// via the regularized product at eta = 2 pi i / log r,
/// s_alpha = (s log r - log alpha)/(2 pi i). The result is checked against
/// the closed form 1 - alpha exp(-s log r) to 1e-9 (InconsistencyError on
/// mismatch). alpha = 0 is rejected.
cplx regdet_factor(cplx alpha, cplx s, double log_r);

/// Exact Bernoulli number B_{2k} for 2k <= 30 (B_1 = -1/2 not included).
const Rational& bernoulli_even(unsigned k);

}  // namespace tzeta::special
