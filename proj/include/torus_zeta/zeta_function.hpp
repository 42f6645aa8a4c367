#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "torus_zeta/cohomology.hpp"
#include "torus_zeta/dynamics.hpp"
#include "torus_zeta/int_polynomial.hpp"

namespace tzeta::zeta {

using cplx = std::complex<double>;

struct ZetaFactor {
  int degree = 0;                // cohomological degree i
  linalg::IntPolynomial poly;    // P_i(u) = det(1 - phi*_i u)
  int exponent = 0;              // (-1)^(i+1)
};

/// The dynamical zeta function as an exact rational function of u = r^{-s}.
/// Factors are kept verbatim per degree (no cancellation), so order
/// bookkeeping stays degree-attributed; numerator/denominator are the
/// combined exact products.
class ZetaRational {
 public:
  explicit ZetaRational(std::vector<ZetaFactor> factors);

  const std::vector<ZetaFactor>& factors() const { return factors_; }
  const linalg::IntPolynomial& numerator() const { return numerator_; }
  const linalg::IntPolynomial& denominator() const { return denominator_; }

 private:
  std::vector<ZetaFactor> factors_;
  linalg::IntPolynomial numerator_;
  linalg::IntPolynomial denominator_;
};

/// P_i(u) = reversed characteristic polynomial of phi*_i, exponents
/// alternating (-1)^(i+1).
ZetaRational build_zeta(const cohomology::CohomologyAction& action);

/// Product of the factor values at u = r^{-s}. Throws PoleError when a
/// denominator factor vanishes (relative tolerance 1e-12) and
/// OverflowError when the result leaves double range.
cplx evaluate(const ZetaRational& z, cplx s,
              const dynamics::FlowParams& params);

struct OrderInfo {
  int order = 0;        // the agreed value
  int order_eigen = 0;  // route (a): per-degree eigenvalue multiplicities
  int order_rational = 0;  // route (b): numerator/denominator vanishing
  bool exact = false;   // both routes ran on exact arithmetic
  double margin = 0.0;  // closest non-resonant distance seen (numeric)
};

/// Vanishing order of zeta at s = k, computed two independent ways and
/// cross-checked; disagreement is an InconsistencyError.
OrderInfo order_at(const ZetaRational& z,
                   const cohomology::CohomologyAction& action, cplx k,
                   const dynamics::FlowParams& params, int precision = 12);

struct SpecialValue {
  cplx value;
  int order = 0;
  /// Exact rational value when every factor admitted exact arithmetic and
  /// no transcendental Jacobian factor remains (log r = 1 or order 0).
  std::optional<Rational> exact;
};

/// lim_{s->k} (s-k)^{-ord} zeta(s), assembled factor-wise from deflated
/// polynomial values times (log r)^mult Jacobian factors.
SpecialValue special_value(const ZetaRational& z,
                           const cohomology::CohomologyAction& action, cplx k,
                           const dynamics::FlowParams& params,
                           int precision = 12);

struct SeriesEvaluation {
  bool accepted = false;  // false: refusal, see `refusal`
  cplx value;
  int order = 0;
  double tail_bound = 0.0;
  std::string refusal;
};

/// The Lefschetz-series route to the special value:
/// (log r)^ord exp(sum_{m>=1} (r^{-km} Lambda(phi^m) + ord)/m), truncated
/// at m_max with a geometric tail bound. Refused (with the violated bound
/// named) when some non-resonant eigenvalue has |alpha| >= r^Re(k).
SeriesEvaluation special_value_series(
    const cohomology::CohomologyAction& action, cplx k,
    const dynamics::FlowParams& params, unsigned m_max, int precision = 12);

/// zeta(s) - (-r^s)^chi zeta(-s) with (-r^s)^chi = (-1)^chi r^(s chi) for
/// the integer chi = chi(S). Throws DualityError unless the action is
/// duality-enabled.
cplx functional_equation_residual(const ZetaRational& z,
                                  const cohomology::CohomologyAction& action,
                                  cplx s, const dynamics::FlowParams& params);

/// The functional equation as an exact polynomial identity: returns
/// N(u) rev(D)(u) u^max(K,0) - sign (-1)^chi rev(N)(u) D(u) u^max(-K,0)
/// with K = chi + deg N - deg D; the zero polynomial iff the identity
/// holds. `sign` defaults to the stated form; pass det(phi*_{d/2}) to
/// absorb a middle-degree determinant of -1 (even d only).
linalg::IntPolynomial functional_equation_residual_poly(
    const ZetaRational& z, const cohomology::CohomologyAction& action,
    int sign = 1);

/// For odd-dimensional fibers the duality identities invert the product:
/// the symmetry reads zeta(s) zeta(-s) = 1. This is that identity as an
/// exact polynomial residual,
/// N(u) rev(N)(u) u^deg(D) - D(u) rev(D)(u) u^deg(N).
linalg::IntPolynomial reciprocal_symmetry_residual_poly(const ZetaRational& z);

/// zeta(s) zeta(-s) - 1, the numeric form of the odd-dimensional symmetry.
cplx reciprocal_symmetry_residual(const ZetaRational& z, cplx s,
                                  const dynamics::FlowParams& params);

struct ThetaEigenvalue {
  int degree = 0;
  cplx alpha;
  long v = 0;
  cplx theta;  // (log alpha + 2 pi i v) / log r, principal branch
};

struct SpectrumResult {
  std::vector<ThetaEigenvalue> entries;
  std::vector<std::string> warnings;
};

/// Theta-spectrum window for one cohomological degree: for each eigenvalue
/// alpha of phi*_i and each v in [v_min, v_max], the lattice point
/// (log alpha + 2 pi i v)/log r. Consecutive v-entries are built by
/// repeated addition of one precomputed 2 pi i / log r value, so their
/// differences reproduce the spacing to within a unit of machine rounding.
/// Zero eigenvalues are excluded with a warning.
SpectrumResult theta_spectrum(const cohomology::CohomologyAction& action,
                              int degree, const dynamics::FlowParams& params,
                              long v_min, long v_max, int precision = 12);

/// |exp(theta log r) - alpha|, the defining-relation residual of an entry.
double theta_residual(const ThetaEigenvalue& entry,
                      const dynamics::FlowParams& params);

}  // namespace tzeta::zeta
