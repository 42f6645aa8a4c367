#include "torus_zeta/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "torus_zeta/errors.hpp"

namespace tzeta::special {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLogTwoPi = std::log(2.0 * kPi);

// Euler-Maclaurin configuration: 30 direct terms and Bernoulli pairs
// through B_24 reach ~1e-12 at desk-scale arguments.
constexpr int kDirectTerms = 30;
constexpr int kBernoulliPairs = 12;

// Stirling regime: |s| and Re s at least this large.
constexpr double kStirlingEdge = 14.0;

std::string fmt(cplx z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag())
     << "i";
  return os.str();
}

bool near_nonpositive_integer(cplx s, double tol = 1e-12) {
  if (std::abs(s.imag()) > tol) return false;
  const double rounded = std::round(s.real());
  return rounded <= 0.0 && std::abs(s.real() - rounded) <= tol;
}

// Negative-zero components flip the side of the log branch cut that
// principal-branch arithmetic sees; the formulas here key branches off
// Arg, so zeros are normalized to +0.0 first.
cplx canonical(cplx z) { return {z.real() + 0.0, z.imag() + 0.0}; }

}  // namespace

const Rational& bernoulli_even(unsigned k) {
  // B_0, B_2, ..., B_30 by the defining recurrence, computed once.
  static const std::vector<Rational> table = [] {
    constexpr unsigned max_index = 30;
    std::vector<Rational> all(max_index + 1);
    std::vector<Int> binom(max_index + 2);
    all[0] = 1;
    for (unsigned m = 1; m <= max_index; ++m) {
      // binomial coefficients C(m+1, j)
      binom[0] = 1;
      for (unsigned j = 1; j <= m + 1; ++j)
        binom[j] = binom[j - 1] * Int(m + 2 - j) / Int(j);
      Rational sum = 0;
      for (unsigned j = 0; j < m; ++j) sum += Rational(binom[j]) * all[j];
      all[m] = -sum / Rational(binom[m]);
    }
    std::vector<Rational> even;
    for (unsigned m = 0; m <= max_index; m += 2) even.push_back(all[m]);
    return even;
  }();
  if (k >= table.size())
    throw std::out_of_range("bernoulli_even: index beyond the table");
  return table[k];
}

cplx log_gamma(cplx s) {
  s = canonical(s);
  if (near_nonpositive_integer(s))
    throw PoleError("log_gamma: pole at non-positive integer s = " + fmt(s));

  // March s upward until Stirling applies; principal logs keep the branch
  // canonical on both half planes (and continuous from above on the cut).
  cplx shift = 0.0;
  cplx w = s;
  while (w.real() < kStirlingEdge || std::abs(w) < kStirlingEdge) {
    shift += std::log(w);
    w += 1.0;
  }

  cplx result = (w - 0.5) * std::log(w) - w + 0.5 * kLogTwoPi;
  const cplx w2 = w * w;
  cplx w_odd = w;  // w^(2k-1)
  for (int k = 1; k <= kBernoulliPairs; ++k) {
    const double b2k = to_double(bernoulli_even(static_cast<unsigned>(k)));
    result += b2k / (2.0 * k * (2.0 * k - 1.0)) / w_odd;
    w_odd *= w2;
  }
  return result - shift;
}

cplx hurwitz_zeta(cplx z, cplx s) {
  if (!(s.real() > 0.0))
    throw std::invalid_argument(
        "hurwitz_zeta: the base series needs Re(s) > 0, got s = " + fmt(s));
  if (std::abs(z - cplx(1.0, 0.0)) < 1e-12)
    throw PoleError("hurwitz_zeta: pole at z = 1");

  cplx direct = 0.0;
  for (int n = kDirectTerms - 1; n >= 0; --n)
    direct += std::exp(-z * std::log(s + static_cast<double>(n)));

  const cplx a = s + static_cast<double>(kDirectTerms);
  const cplx log_a = std::log(a);
  cplx tail = std::exp((1.0 - z) * log_a) / (z - 1.0) +
              0.5 * std::exp(-z * log_a);

  // Bernoulli corrections: B_2k/(2k)! * (z)_{2k-1} * a^{-(z+2k-1)}.
  cplx pochhammer = 1.0;
  double factorial = 1.0;
  for (int k = 1; k <= kBernoulliPairs; ++k) {
    pochhammer *= (k == 1) ? z : (z + cplx(2.0 * k - 3.0)) *
                                     (z + cplx(2.0 * k - 2.0));
    factorial *= (k == 1) ? 2.0 : (2.0 * k - 1.0) * (2.0 * k);
    const double b2k = to_double(bernoulli_even(static_cast<unsigned>(k)));
    tail += b2k / factorial * pochhammer *
            std::exp(-(z + cplx(2.0 * k - 1.0)) * log_a);
  }
  return direct + tail;
}

DzAtZero hurwitz_dz_at_zero(cplx s, cplx eta) {
  s = canonical(s);
  eta = canonical(eta);
  if (eta == cplx(0.0, 0.0))
    throw std::invalid_argument("hurwitz_dz_at_zero: eta must be nonzero");
  if (near_nonpositive_integer(s))
    throw PoleError(
        "hurwitz_dz_at_zero: s at a non-positive integer (Gamma pole)");

  DzAtZero out;
  out.closed_form =
      -std::log(eta) * (0.5 - s) + log_gamma(s) - 0.5 * kLogTwoPi;

  if (s.real() > 0.0) {
    const double h = 1e-5;
    const cplx log_eta = std::log(eta);
    const cplx plus = std::exp(-h * log_eta) * hurwitz_zeta(cplx(h, 0.0), s);
    const cplx minus = std::exp(h * log_eta) * hurwitz_zeta(cplx(-h, 0.0), s);
    out.finite_difference = (plus - minus) / (2.0 * h);
  }
  return out;
}

TwoRoute regularized_product(cplx eta, cplx s) {
  eta = canonical(eta);
  s = canonical(s);
  if (eta == cplx(0.0, 0.0))
    throw std::invalid_argument("regularized_product: eta must be nonzero");
  if (std::abs(s.imag()) < 1e-8 &&
      std::abs(s.real() - std::round(s.real())) < 1e-8)
    throw PoleError(
        "regularized_product: s = " + fmt(s) +
        " is within 1e-8 of an integer, where the product vanishes");

  TwoRoute out;
  const double arg_eta = std::arg(eta);
  const cplx two_pi_i_s = cplx(0.0, 2.0 * kPi) * s;
  out.closed_form =
      arg_eta > 0.0 ? 1.0 - std::exp(-two_pi_i_s) : 1.0 - std::exp(two_pi_i_s);

  const cplx dz_plus = hurwitz_dz_at_zero(s, eta).closed_form;
  const cplx dz_minus =
      hurwitz_dz_at_zero(canonical(-s), canonical(-eta)).closed_form;
  out.definitional = std::exp(-dz_plus - dz_minus) / (eta * s);

  if (std::abs(out.closed_form - out.definitional) >= 1e-9)
    throw InconsistencyError(
        "regularized_product: closed form " + fmt(out.closed_form) +
        " and Hurwitz-definitional route " + fmt(out.definitional) +
        " disagree beyond 1e-9 at eta = " + fmt(eta) + ", s = " + fmt(s));
  return out;
}

cplx regdet_factor(cplx alpha, cplx s, double log_r) {
  if (alpha == cplx(0.0, 0.0))
    throw std::invalid_argument("regdet_factor: alpha must be nonzero");
  if (!(log_r > 0.0))
    throw std::invalid_argument("regdet_factor: needs log r > 0");

  const cplx eta = cplx(0.0, 2.0 * kPi / log_r);
  const cplx s_alpha =
      (s * log_r - std::log(alpha)) / cplx(0.0, 2.0 * kPi);
  const cplx product = regularized_product(eta, s_alpha).closed_form;

  const cplx direct = 1.0 - alpha * std::exp(-s * log_r);
  if (std::abs(product - direct) >= 1e-9)
    throw InconsistencyError(
        "regdet_factor: regularized product " + fmt(product) +
        " does not match 1 - alpha r^-s = " + fmt(direct) +
        " at alpha = " + fmt(alpha) + ", s = " + fmt(s));
  return product;
}

}  // namespace tzeta::special
