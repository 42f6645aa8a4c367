#include "torus_zeta/zeta_function.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "torus_zeta/errors.hpp"
#include "torus_zeta/poly_roots.hpp"

namespace tzeta::zeta {

using cohomology::CohomologyAction;
using dynamics::FlowParams;
using linalg::IntPolynomial;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string fmt(cplx z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag())
     << "i";
  return os.str();
}

/// Classification of the evaluation point s = k: the resonance target
/// r^k and u0 = r^{-k}, exact rationals when k is an integer and either
/// k = 0 or r itself is an exact integer.
struct Resonance {
  cplx target;
  cplx u0;
  bool exact = false;
  Rational target_rat;
  Rational u0_rat;
};

Resonance classify(cplx k, const FlowParams& params) {
  Resonance res;
  res.target = std::exp(k * params.log_r);
  res.u0 = std::exp(-k * params.log_r);
  if (std::abs(k.imag()) > 1e-12) return res;
  const double rounded = std::round(k.real());
  if (std::abs(k.real() - rounded) > 1e-12 || std::abs(rounded) > 64) return res;
  const long k_int = static_cast<long>(rounded);
  if (k_int == 0) {
    res.exact = true;
    res.target_rat = 1;
    res.u0_rat = 1;
    return res;
  }
  const double r_rounded = std::round(params.r);
  if (params.r == r_rounded && r_rounded > 1.0 && r_rounded < 9.0e15) {
    Int power = 1;
    const Int base(static_cast<long long>(r_rounded));
    for (long i = 0; i < std::labs(k_int); ++i) power *= base;
    res.exact = true;
    if (k_int > 0) {
      res.target_rat = power;
      res.u0_rat = Rational(1, power);
    } else {
      res.target_rat = Rational(1, power);
      res.u0_rat = power;
    }
  }
  return res;
}

int exact_multiplicity(const IntPolynomial& p, const Rational& root) {
  return linalg::rational_root_multiplicity(
      p, boost::multiprecision::numerator(root),
      boost::multiprecision::denominator(root));
}

/// Count roots within tol of target; tracks the closest excluded root.
int numeric_multiplicity(const std::vector<cplx>& roots, cplx target,
                         double tol, double& margin) {
  int count = 0;
  for (const cplx& root : roots) {
    const double dist = std::abs(root - target);
    if (dist <= tol)
      ++count;
    else
      margin = std::min(margin, dist);
  }
  return count;
}

/// Deflate a complex-coefficient copy of p by (u - u0) `mult` times and
/// evaluate the quotient at u0 (synthetic division).
cplx deflated_value(const IntPolynomial& p, cplx u0, int mult) {
  std::vector<cplx> c;
  c.reserve(p.coeffs().size());
  for (const Int& coefficient : p.coeffs()) c.push_back(to_double(coefficient));
  for (int round = 0; round < mult; ++round) {
    std::vector<cplx> q(c.size() - 1);
    cplx acc = c.back();
    for (std::size_t j = c.size() - 1; j-- > 0;) {
      q[j] = acc;
      acc = c[j] + acc * u0;
    }
    c = std::move(q);
  }
  cplx val = 0.0;
  for (std::size_t j = c.size(); j-- > 0;) val = val * u0 + c[j];
  return val;
}

double pow_int(double base, int e) {
  return std::pow(base, static_cast<double>(e));
}

}  // namespace

ZetaRational::ZetaRational(std::vector<ZetaFactor> factors)
    : factors_(std::move(factors)) {
  numerator_ = IntPolynomial::constant(1);
  denominator_ = IntPolynomial::constant(1);
  for (const ZetaFactor& f : factors_) {
    if (f.poly.coeff(0) != 1)
      throw std::invalid_argument(
          "ZetaRational: every factor must have constant term 1");
    if (f.exponent == 1)
      numerator_ = numerator_ * f.poly;
    else if (f.exponent == -1)
      denominator_ = denominator_ * f.poly;
    else
      throw std::invalid_argument("ZetaRational: exponents must be +-1");
  }
}

ZetaRational build_zeta(const CohomologyAction& action) {
  std::vector<ZetaFactor> factors;
  for (int i = 0; i <= action.fiber_dim(); ++i) {
    ZetaFactor f;
    f.degree = i;
    f.poly = linalg::char_poly(action.pullback(i)).reversed();
    f.exponent = (i % 2 == 0) ? -1 : 1;
    factors.push_back(std::move(f));
  }
  return ZetaRational(std::move(factors));
}

cplx evaluate(const ZetaRational& z, cplx s, const FlowParams& params) {
  const cplx u = std::exp(-s * params.log_r);
  cplx value = 1.0;
  for (const ZetaFactor& f : z.factors()) {
    const cplx w = f.poly.eval(u);
    if (f.exponent == -1) {
      double scale = 0.0;
      const double u_mag = std::max(1.0, std::abs(u));
      double u_pow = 1.0;
      for (const Int& c : f.poly.coeffs()) {
        scale += std::abs(to_double(c)) * u_pow;
        u_pow *= u_mag;
      }
      if (std::abs(w) < 1e-12 * scale)
        throw PoleError("evaluate: denominator factor P_" +
                        std::to_string(f.degree) + " vanishes at u = " +
                        fmt(u) + " (pole of zeta)");
      value /= w;
    } else {
      value *= w;
    }
  }
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    throw OverflowError("evaluate: value left double range at s = " + fmt(s));
  return value;
}

OrderInfo order_at(const ZetaRational& z, const CohomologyAction& action,
                   cplx k, const FlowParams& params, int precision) {
  const Resonance res = classify(k, params);
  OrderInfo info;
  info.exact = res.exact;
  info.margin = std::numeric_limits<double>::infinity();

  const double tol_eigen = 1e-8 * std::max(1.0, std::abs(res.target));
  const auto eigen = cohomology::eigen_degrees(action, precision);

  // Route (a): per-degree multiplicity of r^k among the eigenvalues.
  int order_eigen = 0;
  for (int i = 0; i <= action.fiber_dim(); ++i) {
    int mult;
    if (res.exact) {
      mult = exact_multiplicity(linalg::char_poly(action.pullback(i)),
                                res.target_rat);
      // Margin is still worth reporting in the exact case.
      numeric_multiplicity(eigen[static_cast<std::size_t>(i)], res.target,
                           tol_eigen, info.margin);
    } else {
      mult = numeric_multiplicity(eigen[static_cast<std::size_t>(i)],
                                  res.target, tol_eigen, info.margin);
    }
    order_eigen += (i % 2 == 0) ? -mult : mult;
  }

  // Route (b): vanishing order of numerator minus denominator at u0.
  const double tol_u = 1e-8 * std::max(1.0, std::abs(res.u0));
  int mult_num, mult_den;
  if (res.exact) {
    mult_num = exact_multiplicity(z.numerator(), res.u0_rat);
    mult_den = exact_multiplicity(z.denominator(), res.u0_rat);
  } else {
    double unused = std::numeric_limits<double>::infinity();
    mult_num = z.numerator().degree() >= 1
                   ? numeric_multiplicity(linalg::poly_roots(z.numerator(),
                                                             precision),
                                          res.u0, tol_u, unused)
                   : 0;
    mult_den = z.denominator().degree() >= 1
                   ? numeric_multiplicity(linalg::poly_roots(z.denominator(),
                                                             precision),
                                          res.u0, tol_u, unused)
                   : 0;
  }
  const int order_rational = mult_num - mult_den;

  if (order_eigen != order_rational)
    throw InconsistencyError(
        "order_at: eigenvalue route gives " + std::to_string(order_eigen) +
        " but the rational-function route gives " +
        std::to_string(order_rational) + " at k = " + fmt(k) +
        " (internal inconsistency)");

  info.order = order_eigen;
  info.order_eigen = order_eigen;
  info.order_rational = order_rational;
  return info;
}

SpecialValue special_value(const ZetaRational& z,
                           const CohomologyAction& /*action*/, cplx k,
                           const FlowParams& params, int precision) {
  const Resonance res = classify(k, params);
  const double tol_u = 1e-8 * std::max(1.0, std::abs(res.u0));

  SpecialValue out;
  out.value = 1.0;
  Rational exact_product = 1;
  int order = 0;

  for (const ZetaFactor& f : z.factors()) {
    int mult = 0;
    cplx factor_value;
    Rational factor_exact;

    if (res.exact) {
      // P = (den u - num)^mult * T exactly; the deflated value at u0 is
      // den^mult * T(u0).
      const Int num = boost::multiprecision::numerator(res.u0_rat);
      const Int den = boost::multiprecision::denominator(res.u0_rat);
      IntPolynomial rest = f.poly;
      const IntPolynomial divisor({-num, den});
      while (true) {
        auto quotient = rest.divide_exact(divisor);
        if (!quotient) break;
        rest = std::move(*quotient);
        ++mult;
      }
      Rational value = rest.eval(res.u0_rat);
      for (int j = 0; j < mult; ++j) value *= Rational(den) * (-res.u0_rat);
      factor_exact = value;
      factor_value = to_double(value) * pow_int(params.log_r, mult);
    } else {
      if (f.poly.degree() >= 1) {
        double unused = std::numeric_limits<double>::infinity();
        mult = numeric_multiplicity(linalg::poly_roots(f.poly, precision),
                                    res.u0, tol_u, unused);
      }
      const cplx deflated = deflated_value(f.poly, res.u0, mult);
      factor_value = deflated;
      for (int j = 0; j < mult; ++j) factor_value *= -params.log_r * res.u0;
    }

    order += f.exponent * mult;
    if (f.exponent == 1) {
      out.value *= factor_value;
      if (res.exact) exact_product *= factor_exact;
    } else {
      if (factor_value == cplx(0.0, 0.0))
        throw InconsistencyError(
            "special_value: deflated denominator factor vanished (degree " +
            std::to_string(f.degree) + ")");
      out.value /= factor_value;
      if (res.exact) exact_product /= factor_exact;
    }
  }

  out.order = order;
  if (res.exact && (order == 0 || params.log_r == 1.0)) {
    out.exact = exact_product;
    out.value = to_double(exact_product);
  }
  return out;
}

SeriesEvaluation special_value_series(const CohomologyAction& action, cplx k,
                                      const FlowParams& params,
                                      unsigned m_max, int precision) {
  SeriesEvaluation out;
  const auto eigen = cohomology::eigen_degrees(action, precision);
  const cplx target = std::exp(k * params.log_r);
  const double tol = 1e-8 * std::max(1.0, std::abs(target));
  const double r_pow = std::exp(k.real() * params.log_r);

  int order = 0;
  double rho_nonresonant = 0.0;
  double total_betti = 0.0;
  for (int i = 0; i <= action.fiber_dim(); ++i) {
    int mult = 0;
    for (const cplx& alpha : eigen[static_cast<std::size_t>(i)]) {
      if (std::abs(alpha - target) <= tol)
        ++mult;
      else
        rho_nonresonant = std::max(rho_nonresonant, std::abs(alpha));
    }
    order += (i % 2 == 0) ? -mult : mult;
    total_betti += action.betti_number(i);
  }
  out.order = order;

  if (rho_nonresonant >= r_pow) {
    std::ostringstream msg;
    msg << "series diverges: max non-resonant eigenvalue modulus "
        << rho_nonresonant << " >= r^Re(k) = " << r_pow
        << "; the Lefschetz series has no sum here";
    out.refusal = msg.str();
    return out;
  }

  cplx sum = 0.0;
  for (unsigned m = 1; m <= m_max; ++m) {
    const double lambda =
        to_double(cohomology::lefschetz_number(action, m));
    const cplx weight = std::exp(-k * (static_cast<double>(m) * params.log_r));
    sum += (lambda * weight + static_cast<double>(order)) /
           static_cast<double>(m);
  }
  out.value = pow_int(params.log_r, order) * std::exp(sum);
  out.accepted = true;

  const double q = rho_nonresonant / r_pow;
  out.tail_bound =
      q > 0.0 ? total_betti * std::pow(q, m_max + 1) /
                    ((m_max + 1) * (1.0 - q))
              : 0.0;
  if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag()))
    throw OverflowError("special_value_series: sum left double range");
  return out;
}

cplx functional_equation_residual(const ZetaRational& z,
                                  const CohomologyAction& action, cplx s,
                                  const FlowParams& params) {
  if (!action.duality_enabled())
    throw DualityError(
        "functional_equation_residual: the action is not duality-enabled");
  const long long chi = cohomology::euler_characteristic(action);
  const double sign = (chi % 2 == 0) ? 1.0 : -1.0;
  const cplx factor =
      sign * std::exp(s * (static_cast<double>(chi) * params.log_r));
  return evaluate(z, s, params) - factor * evaluate(z, -s, params);
}

IntPolynomial functional_equation_residual_poly(const ZetaRational& z,
                                                const CohomologyAction& action,
                                                int sign) {
  if (!action.duality_enabled())
    throw DualityError(
        "functional_equation_residual_poly: the action is not "
        "duality-enabled");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("functional_equation_residual_poly: sign");
  const long long chi = cohomology::euler_characteristic(action);
  const IntPolynomial& num = z.numerator();
  const IntPolynomial& den = z.denominator();
  const long long k =
      chi + static_cast<long long>(num.degree()) - den.degree();

  IntPolynomial lhs = num * den.reversed();
  IntPolynomial rhs = num.reversed() * den;
  if ((chi % 2 != 0) != (sign == -1)) rhs = -rhs;
  if (k >= 0)
    lhs = lhs * IntPolynomial::monomial(1, static_cast<std::size_t>(k));
  else
    rhs = rhs * IntPolynomial::monomial(1, static_cast<std::size_t>(-k));
  return lhs - rhs;
}

IntPolynomial reciprocal_symmetry_residual_poly(const ZetaRational& z) {
  const IntPolynomial& num = z.numerator();
  const IntPolynomial& den = z.denominator();
  const IntPolynomial lhs =
      num * num.reversed() *
      IntPolynomial::monomial(1, static_cast<std::size_t>(den.degree()));
  const IntPolynomial rhs =
      den * den.reversed() *
      IntPolynomial::monomial(1, static_cast<std::size_t>(num.degree()));
  return lhs - rhs;
}

cplx reciprocal_symmetry_residual(const ZetaRational& z, cplx s,
                                  const FlowParams& params) {
  return evaluate(z, s, params) * evaluate(z, -s, params) - 1.0;
}

SpectrumResult theta_spectrum(const CohomologyAction& action, int degree,
                              const FlowParams& params, long v_min, long v_max,
                              int precision) {
  if (degree < 0 || degree > action.fiber_dim())
    throw std::invalid_argument("theta_spectrum: degree out of range");
  if (v_min > v_max)
    throw std::invalid_argument("theta_spectrum: empty v window");
  if (!(params.log_r > 0.0))
    throw std::invalid_argument("theta_spectrum: needs log r > 0");

  SpectrumResult out;
  const auto eigen = cohomology::eigen_degrees(action, precision);
  const cplx spacing(0.0, kTwoPi / params.log_r);
  for (const cplx& alpha : eigen[static_cast<std::size_t>(degree)]) {
    if (std::abs(alpha) < 1e-15) {
      out.warnings.push_back(
          "degree " + std::to_string(degree) +
          ": zero eigenvalue excluded (log 0 undefined; the pullback is "
          "singular)");
      continue;
    }
    // Built by repeated addition of one spacing value, so consecutive
    // entries differ by exactly spacing.
    cplx theta =
        (std::log(alpha) + cplx(0.0, kTwoPi * static_cast<double>(v_min))) /
        params.log_r;
    for (long v = v_min; v <= v_max; ++v) {
      out.entries.push_back(ThetaEigenvalue{degree, alpha, v, theta});
      theta += spacing;
    }
  }
  return out;
}

double theta_residual(const ThetaEigenvalue& entry, const FlowParams& params) {
  return std::abs(std::exp(entry.theta * params.log_r) - entry.alpha);
}

}  // namespace tzeta::zeta
