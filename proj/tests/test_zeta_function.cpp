#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "torus_zeta/cohomology.hpp"
#include "torus_zeta/errors.hpp"
#include "torus_zeta/poly_roots.hpp"
#include "torus_zeta/special_functions.hpp"
#include "torus_zeta/zeta_function.hpp"

using namespace tzeta;
using cohomology::CohomologyAction;
using dynamics::FlowParams;
using linalg::IntMatrix;
using linalg::IntPolynomial;
using cplx = std::complex<double>;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const IntMatrix kCat{{2, 1}, {1, 1}};

CohomologyAction cat_action() { return CohomologyAction::from_toral(kCat); }

CohomologyAction genus2_action() {
  return CohomologyAction::from_explicit(
      2, {1, 4, 1},
      {IntMatrix{{1}}, IntMatrix::block_diag({kCat, kCat}), IntMatrix{{1}}});
}

CohomologyAction circle_action() {
  return CohomologyAction::from_explicit(1, {1, 1},
                                         {IntMatrix{{1}}, IntMatrix{{1}}});
}

IntMatrix random_hyperbolic(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  while (true) {
    IntMatrix a = IntMatrix::identity(n);
    for (int ops = 0; ops < 12; ++ops) {
      int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      const int sign = coin(rng) ? 1 : -1;
      for (std::size_t c = 0; c < n; ++c)
        a.at(static_cast<std::size_t>(i), c) +=
            sign * a.at(static_cast<std::size_t>(j), c);
    }
    if (cohomology::anosov_check(a).all_passed()) return a;
  }
}

}  // namespace

TEST_CASE("build_zeta factor polynomials") {
  const auto z = zeta::build_zeta(cat_action());
  REQUIRE(z.factors().size() == 3);
  CHECK(z.factors()[0].poly == IntPolynomial{1, -1});
  CHECK(z.factors()[0].exponent == -1);
  CHECK(z.factors()[1].poly == IntPolynomial{1, -3, 1});
  CHECK(z.factors()[1].exponent == 1);
  CHECK(z.factors()[2].poly == IntPolynomial{1, -1});
  CHECK(z.factors()[2].exponent == -1);
  CHECK(z.numerator() == IntPolynomial{1, -3, 1});
  CHECK(z.denominator() == IntPolynomial{1, -2, 1});

  const auto circle = zeta::build_zeta(circle_action());
  CHECK(circle.numerator() == circle.denominator());

  const auto g2 = zeta::build_zeta(genus2_action());
  CHECK(g2.numerator() == IntPolynomial{1, -6, 11, -6, 1});
  CHECK(g2.denominator() == IntPolynomial{1, -2, 1});
}

TEST_CASE("evaluate at the frozen reference points") {
  const auto z = zeta::build_zeta(cat_action());
  const auto at_e = FlowParams::euler_scale();
  // high-precision references for (1 - 3u + u^2)/(1 - u)^2 at u = e^{-s}
  CHECK(std::abs(zeta::evaluate(z, cplx(3, 0), at_e) -
                 cplx(0.9448589944979402368, 0)) < 1e-12);
  CHECK(std::abs(zeta::evaluate(z, cplx(2, 0), at_e) -
                 cplx(0.8189845847584223834, 0)) < 1e-12);
  CHECK(std::abs(zeta::evaluate(z, cplx(2, 1), at_e) -
                 cplx(0.9502570512831402008, 0.1470001100783207813)) < 1e-12);

  // exact rational point: r = 10, s = 1 gives 71/81
  const auto at_10 = FlowParams::from_scale(10.0);
  CHECK(std::abs(zeta::evaluate(z, cplx(1, 0), at_10) -
                 cplx(71.0 / 81.0, 0)) < 1e-12);

  const auto g2 = zeta::build_zeta(genus2_action());
  CHECK(std::abs(zeta::evaluate(g2, cplx(3, 0), at_e) -
                 cplx(0.8060757877160143978, 0)) < 1e-12);
}

TEST_CASE("evaluate signals poles and stays periodic") {
  const auto z = zeta::build_zeta(cat_action());
  const auto at_e = FlowParams::euler_scale();
  CHECK_THROWS_AS(zeta::evaluate(z, cplx(0, 0), at_e), PoleError);

  const auto at_2 = FlowParams::from_scale(2.0);
  const cplx s(1.3, 0.4);
  const cplx period(0.0, kTwoPi / at_2.log_r);
  CHECK(std::abs(zeta::evaluate(z, s, at_2) -
                 zeta::evaluate(z, s + period, at_2)) < 1e-12);
}

TEST_CASE("order_at the named points") {
  const auto act = cat_action();
  const auto z = zeta::build_zeta(act);

  const auto at_e = FlowParams::euler_scale();
  const auto ord0 = zeta::order_at(z, act, cplx(0, 0), at_e);
  CHECK(ord0.order == -2);
  CHECK(ord0.exact);

  // r = lambda makes k = 1 resonate with the expanding eigenvalue
  const auto at_lambda = FlowParams::from_scale(2.618033988749895);
  const auto ord1 = zeta::order_at(z, act, cplx(1, 0), at_lambda);
  CHECK(ord1.order == 1);
  CHECK(!ord1.exact);

  CHECK(zeta::order_at(z, act, cplx(5, 0), at_e).order == 0);
}

TEST_CASE("order_at: both routes agree on random actions and points") {
  std::mt19937 rng(60601);
  std::uniform_real_distribution<double> real_dist(-2.0, 2.0);
  int resonant_seen = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const IntMatrix a = random_hyperbolic(rng, n);
    const auto act = CohomologyAction::from_toral(a);
    const auto z = zeta::build_zeta(act);
    const auto params = (trial % 2 == 0) ? FlowParams::euler_scale()
                                         : FlowParams::from_scale(2.0);

    cplx k;
    switch (trial % 4) {
      case 0:
        k = cplx(0, 0);  // always resonant: eigenvalue 1 in degrees 0 and d
        break;
      case 1: {
        // aim r^k exactly at an eigenvalue: k = log|alpha| / log r
        const auto eigen = cohomology::eigen_degrees(act);
        double best = 1.0;
        for (const auto& degree_eigen : eigen)
          for (const cplx& alpha : degree_eigen)
            if (std::abs(alpha.imag()) < 1e-12 && alpha.real() > 1e-6)
              best = std::max(best, alpha.real());
        k = cplx(std::log(best) / params.log_r, 0);
        break;
      }
      case 2:
        k = cplx(1, 0);
        break;
      default:
        k = cplx(real_dist(rng), real_dist(rng));
        break;
    }
    const auto info = zeta::order_at(z, act, k, params);
    CHECK(info.order_eigen == info.order_rational);
    if (info.order != 0) ++resonant_seen;
  }
  CHECK(resonant_seen > 25);  // the resonant cases actually hit resonances
}

TEST_CASE("special_value at the named points") {
  const auto act = cat_action();
  const auto z = zeta::build_zeta(act);

  // k = 0, r = e: (log r)-normalized limit is exactly -1
  const auto at_e = FlowParams::euler_scale();
  const auto v0 = zeta::special_value(z, act, cplx(0, 0), at_e);
  CHECK(v0.order == -2);
  REQUIRE(v0.exact.has_value());
  CHECK(*v0.exact == Rational(-1));
  CHECK(std::abs(v0.value - cplx(-1, 0)) < 1e-12);

  // k = 1, r = 10: plain value 71/81, exactly
  const auto at_10 = FlowParams::from_scale(10.0);
  const auto v1 = zeta::special_value(z, act, cplx(1, 0), at_10);
  CHECK(v1.order == 0);
  REQUIRE(v1.exact.has_value());
  CHECK(*v1.exact == Rational(71, 81));

  // identity circle fiber: 1 at any k
  const auto circle = circle_action();
  const auto zc = zeta::build_zeta(circle);
  for (double k : {0.0, 1.0, 3.5}) {
    const auto v = zeta::special_value(zc, circle, cplx(k, 0), at_e);
    CHECK(v.order == 0);
    CHECK(std::abs(v.value - cplx(1, 0)) < 1e-12);
  }
}

TEST_CASE("special_value_series matches the direct value where it converges") {
  const auto act = cat_action();
  const auto z = zeta::build_zeta(act);
  const auto at_10 = FlowParams::from_scale(10.0);

  const auto series =
      zeta::special_value_series(act, cplx(1, 0), at_10, 60);
  REQUIRE(series.accepted);
  CHECK(series.order == 0);
  CHECK(std::abs(series.value - cplx(71.0 / 81.0, 0)) < 1e-8);
  CHECK(series.tail_bound < 1e-8);

  // identity circle fiber at k = 1, r = e: Lambda = 0, series = exp(0) = 1
  const auto circle = circle_action();
  const auto s1 =
      zeta::special_value_series(circle, cplx(1, 0), FlowParams::euler_scale(),
                                 40);
  REQUIRE(s1.accepted);
  CHECK(s1.order == 0);
  CHECK(std::abs(s1.value - cplx(1, 0)) < 1e-12);
}

TEST_CASE("series and direct special values agree on random actions") {
  std::mt19937 rng(987654);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto act =
        CohomologyAction::from_toral(random_hyperbolic(rng, n));
    const auto z = zeta::build_zeta(act);
    const auto params = FlowParams::from_scale(3.0);

    double rho = 0.0;
    for (const auto& degree_eigen : cohomology::eigen_degrees(act))
      for (const cplx& alpha : degree_eigen)
        rho = std::max(rho, std::abs(alpha));
    // first integer k with r^k comfortably above the spectral radius
    const double k = std::ceil(std::log(rho * 2.0) / params.log_r);

    const auto direct = zeta::special_value(z, act, cplx(k, 0), params);
    const auto series =
        zeta::special_value_series(act, cplx(k, 0), params, 60);
    REQUIRE(series.accepted);
    CHECK(series.order == direct.order);
    CHECK(std::abs(series.value - direct.value) < 1e-6);
  }
}

TEST_CASE("six-torus special value at k = 0: high-multiplicity resonance") {
  // Three cat-map blocks. The resonance target r^0 = 1 is an eigenvalue
  // of multiplicity 9 in degrees 2 and 4 and 1 in degrees 0 and 6, so
  // ord = -(1 + 9 + 9 + 1) = -20. Factor limits, worked by hand:
  //   P_1(1) = P_5(1) = ((1-lambda)(1-1/lambda))^3 = (-1)^3 = -1
  //   P_3(1) = (2 - tr A^3) ((1-lambda)(1-1/lambda))^9 = (-16)(-1) = 16
  //   C_0 = C_6 = 1,  C_2 = C_4 = (2 - tr A^2)^3 (-1)^9 ... = -125
  // zeta* = (-1)(16)(-1) / ((1)(-125)(-125)(1)) = 16/15625.
  const auto act = CohomologyAction::from_toral(
      IntMatrix::block_diag({kCat, kCat, kCat}));
  const auto z = zeta::build_zeta(act);
  const auto params = FlowParams::euler_scale();

  const auto info = zeta::order_at(z, act, cplx(0, 0), params);
  CHECK(info.order == -20);
  CHECK(info.exact);

  const auto value = zeta::special_value(z, act, cplx(0, 0), params);
  CHECK(value.order == -20);
  REQUIRE(value.exact.has_value());
  CHECK(*value.exact == Rational(16, 15625));
}

TEST_CASE("special_value_series refuses the divergent cat-map point") {
  const auto act = cat_action();
  const auto series = zeta::special_value_series(
      act, cplx(0, 0), FlowParams::euler_scale(), 60);
  CHECK(!series.accepted);
  CHECK(series.order == -2);
  CHECK(series.refusal.find(">=") != std::string::npos);
  CHECK(series.refusal.find("2.618") != std::string::npos);
}

TEST_CASE("functional equation: exact symbolic zero and numeric residuals") {
  const auto at_e = FlowParams::euler_scale();

  const auto act = cat_action();
  const auto z = zeta::build_zeta(act);
  CHECK(zeta::functional_equation_residual_poly(z, act).is_zero());

  const auto g2 = genus2_action();
  const auto zg = zeta::build_zeta(g2);
  CHECK(zeta::functional_equation_residual_poly(zg, g2).is_zero());

  const auto circle = circle_action();
  const auto zc = zeta::build_zeta(circle);
  CHECK(zeta::functional_equation_residual_poly(zc, circle).is_zero());

  // chi = 0: zeta(s) = zeta(-s) directly
  for (cplx s : {cplx(0.8, 0.3), cplx(-1.2, 0.9), cplx(0.4, -1.1)})
    CHECK(std::abs(zeta::functional_equation_residual(z, act, s, at_e)) <
          1e-10);

  // chi = -2 at r = 2, s = 1 + i
  const auto at_2 = FlowParams::from_scale(2.0);
  CHECK(std::abs(zeta::functional_equation_residual(zg, g2, cplx(1, 1),
                                                    at_2)) < 1e-10);
}

TEST_CASE("odd-dimensional fibers invert the zeta under duality") {
  // companion matrix of x^3 - x - 1, an Anosov automorphism of T^3
  const IntMatrix a{{0, 1, 0}, {0, 0, 1}, {1, 1, 0}};
  const auto act = CohomologyAction::from_toral(a);
  REQUIRE(act.duality_enabled());
  const auto z = zeta::build_zeta(act);

  // the even-dimensional form genuinely fails here...
  CHECK(!zeta::functional_equation_residual_poly(z, act).is_zero());
  // ...and the reciprocal symmetry zeta(s) zeta(-s) = 1 holds exactly
  CHECK(zeta::reciprocal_symmetry_residual_poly(z).is_zero());
  for (cplx s : {cplx(0.7, 0.2), cplx(-1.1, 0.8)})
    CHECK(std::abs(zeta::reciprocal_symmetry_residual(
              z, s, FlowParams::from_scale(2.0))) < 1e-10);

  // even-dimensional actions do not satisfy the inverted form
  const auto cat = cat_action();
  CHECK(!zeta::reciprocal_symmetry_residual_poly(zeta::build_zeta(cat))
             .is_zero());
}

TEST_CASE("even-dimensional middle-degree determinant sign") {
  // beta = (1,1,1) with phi*_1 = [-1]: duality checks pass, and the
  // symmetry holds with the sign det(phi*_1) = -1 absorbed.
  const auto act = CohomologyAction::from_explicit(
      2, {1, 1, 1}, {IntMatrix{{1}}, IntMatrix{{-1}}, IntMatrix{{1}}});
  REQUIRE(act.duality_enabled());
  const auto z = zeta::build_zeta(act);
  CHECK(!zeta::functional_equation_residual_poly(z, act).is_zero());
  CHECK(zeta::functional_equation_residual_poly(z, act, -1).is_zero());
}

TEST_CASE("functional equation refuses duality-disabled actions") {
  const auto act = CohomologyAction::from_toral(IntMatrix{{0, 1}, {1, 0}});
  const auto z = zeta::build_zeta(act);
  CHECK_THROWS_AS(zeta::functional_equation_residual(
                      z, act, cplx(1, 0), FlowParams::euler_scale()),
                  DualityError);
}

TEST_CASE("log-derivative identity against the Lefschetz series") {
  const auto act = cat_action();
  const auto z = zeta::build_zeta(act);
  const auto params = FlowParams::euler_scale();
  const cplx s(3, 0);
  const cplx u = std::exp(-s * params.log_r);

  cplx rational = 0.0;  // -(d/ds) log zeta = log r * u * sum e_i P_i'/P_i
  for (const auto& f : z.factors())
    rational += static_cast<double>(f.exponent) * f.poly.derivative().eval(u) /
                f.poly.eval(u);
  rational *= params.log_r * u;

  cplx series = 0.0;  // log r * sum_{m<=40} Lambda(phi^m) u^m
  cplx u_pow = 1.0;
  for (unsigned m = 1; m <= 40; ++m) {
    u_pow *= u;
    series += to_double(cohomology::lefschetz_number(act, m)) * u_pow;
  }
  series *= params.log_r;

  CHECK(std::abs(rational - series) < 1e-6);
}

TEST_CASE("theta spectrum windows") {
  const auto act = cat_action();
  const auto params = FlowParams::euler_scale();

  const auto h0 = zeta::theta_spectrum(act, 0, params, -1, 1);
  REQUIRE(h0.entries.size() == 3);
  CHECK(std::abs(h0.entries[0].theta - cplx(0, -kTwoPi)) < 1e-12);
  CHECK(std::abs(h0.entries[1].theta - cplx(0, 0)) < 1e-12);
  CHECK(std::abs(h0.entries[2].theta - cplx(0, kTwoPi)) < 1e-12);

  const auto h1 = zeta::theta_spectrum(act, 1, params, 0, 0);
  REQUIRE(h1.entries.size() == 2);
  // the expanding eigenvalue's line at v = 0 is log(lambda)
  CHECK(std::abs(h1.entries[1].theta - cplx(0.9624236501192069, 0)) < 1e-10);

  for (const auto& entry : h0.entries)
    CHECK(zeta::theta_residual(entry, params) < 1e-10);
  for (const auto& entry : h1.entries)
    CHECK(zeta::theta_residual(entry, params) < 1e-10);
}

TEST_CASE("theta spectrum lattice spacing at machine rounding") {
  const auto act = cat_action();
  const auto params = FlowParams::from_scale(3.0);
  const auto window = zeta::theta_spectrum(act, 1, params, -3, 3);
  const cplx spacing(0.0, kTwoPi / params.log_r);
  REQUIRE(window.entries.size() == 14);
  for (std::size_t i = 0; i + 1 < window.entries.size(); ++i) {
    if (window.entries[i + 1].v != window.entries[i].v + 1) continue;
    const cplx diff = window.entries[i + 1].theta - window.entries[i].theta;
    // one rounding of the repeated addition is the only slack
    const double ulps = 1e-15 * (std::abs(spacing) +
                                 std::abs(window.entries[i + 1].theta));
    CHECK(std::abs(diff - spacing) <= ulps);
  }
}

TEST_CASE("theta spectrum periodicity across r") {
  // exp(theta log r) = alpha for every entry, r != e
  const auto act = genus2_action();
  const auto params = FlowParams::from_scale(7.5);
  const auto window = zeta::theta_spectrum(act, 1, params, -2, 2);
  for (const auto& entry : window.entries)
    CHECK(zeta::theta_residual(entry, params) < 1e-10);
}

TEST_CASE("evaluate overflows distinctly from poles") {
  // genus-2 has numerator degree 4 over denominator degree 2, so the value
  // grows like u^2 and leaves double range far to the left.
  const auto g2 = genus2_action();
  const auto zg = zeta::build_zeta(g2);
  CHECK_THROWS_AS(zeta::evaluate(zg, cplx(-400, 0), FlowParams::euler_scale()),
                  OverflowError);
}

TEST_CASE("doubling m_max tightens the Euler product monotonically") {
  const auto act = cat_action();
  const auto z = zeta::build_zeta(act);
  const auto params = FlowParams::euler_scale();
  const cplx s(2, 0);
  const cplx reference = zeta::evaluate(z, s, params);
  double previous = 1e300;
  for (unsigned m_max : {5u, 10u, 20u, 40u}) {
    const auto table = dynamics::orbit_table(kCat, m_max, params);
    const double err = std::abs(
        dynamics::euler_product_partial(table, s, params) - reference);
    CHECK(err < previous);
    previous = err;
  }
  CHECK(previous < 1e-8);
}

TEST_CASE("theta spectrum excludes singular pullback eigenvalues") {
  // structurally valid action whose degree-1 pullback is the zero map
  const auto act = CohomologyAction::from_explicit(
      1, {1, 1}, {IntMatrix{{1}}, IntMatrix{{0}}});
  const auto window =
      zeta::theta_spectrum(act, 1, FlowParams::euler_scale(), -1, 1);
  CHECK(window.entries.empty());
  REQUIRE(window.warnings.size() == 1);
  CHECK(window.warnings[0].find("zero eigenvalue") != std::string::npos);
}

TEST_CASE("regdet factors assemble the zeta value end to end") {
  const auto act = cat_action();
  const auto z = zeta::build_zeta(act);
  const auto params = FlowParams::euler_scale();
  const auto eigen = cohomology::eigen_degrees(act);

  for (cplx s : {cplx(2, 0), cplx(3, 0), cplx(2, 1)}) {
    cplx product = 1.0;
    for (int i = 0; i <= act.fiber_dim(); ++i)
      for (const cplx& alpha : eigen[static_cast<std::size_t>(i)]) {
        const cplx factor = special::regdet_factor(alpha, s, params.log_r);
        if (i % 2 == 0)
          product /= factor;
        else
          product *= factor;
      }
    CHECK(std::abs(product - zeta::evaluate(z, s, params)) < 1e-8);
  }
}
