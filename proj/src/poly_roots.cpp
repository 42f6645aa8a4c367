#include "torus_zeta/poly_roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "torus_zeta/errors.hpp"

namespace tzeta::linalg {

namespace {

using cplx = std::complex<double>;

cplx eval_monic(const std::vector<double>& c, cplx x) {
  // c holds the non-leading coefficients, ascending; the lead is 1.
  cplx acc = 1.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

std::vector<double> derivative(const std::vector<double>& full) {
  std::vector<double> out;
  for (std::size_t i = 1; i < full.size(); ++i)
    out.push_back(full[i] * static_cast<double>(i));
  return out;
}

cplx eval_full(const std::vector<double>& full, cplx x) {
  cplx acc = 0.0;
  for (std::size_t i = full.size(); i-- > 0;) acc = acc * x + full[i];
  return acc;
}

/// A cluster centroid sits within half precision of an m-fold root; Newton
/// on the (m-1)-th derivative (where the root is simple) recovers full
/// precision.
cplx refine_multiple(const std::vector<double>& full, cplx z,
                     std::size_t mult) {
  std::vector<double> d = full;
  for (std::size_t k = 1; k < mult; ++k) d = derivative(d);
  const std::vector<double> dp = derivative(d);
  for (int it = 0; it < 60; ++it) {
    const cplx fp = eval_full(dp, z);
    if (fp == cplx(0.0, 0.0)) break;
    const cplx step = eval_full(d, z) / fp;
    z -= step;
    if (std::abs(step) < 1e-16 * (1.0 + std::abs(z))) break;
  }
  return z;
}

bool before(const cplx& a, const cplx& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

/// Weierstrass/Durand-Kerner on one square-free polynomial; every root is
/// simple here, so the iteration reaches full double accuracy. The
/// clustering pass stays as a safety net for pathologically close roots.
std::vector<cplx> simultaneous_roots(const IntPolynomial& p, int precision) {
  const std::size_t n = static_cast<std::size_t>(p.degree());
  std::vector<cplx> roots;

  const double lead = to_double(p.leading());
  std::vector<double> c(n);
  double max_coeff = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = to_double(p.coeff(i)) / lead;
    max_coeff = std::max(max_coeff, std::abs(c[i]));
  }

  if (n == 1) {
    roots.push_back(cplx(-c[0], 0.0));
    return roots;
  }

  const double step_tol = std::pow(10.0, -(precision + 2));
  const double cluster_tol = std::pow(10.0, -precision / 2.0);
  const int max_iter = 1000;

  // Initial points on a circle of radius 1 + max|coeff|, angles offset to
  // avoid symmetry locking.
  const double radius = 1.0 + max_coeff;
  std::vector<cplx> z(n);
  for (std::size_t j = 0; j < n; ++j) {
    double angle = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.25) /
                       static_cast<double>(n) +
                   0.5;
    z[j] = radius * cplx(std::cos(angle), std::sin(angle));
  }

  bool step_converged = false;
  for (int iter = 0; iter < max_iter && !step_converged; ++iter) {
    double max_step = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      cplx denom = 1.0;
      for (std::size_t l = 0; l < n; ++l)
        if (l != j) denom *= z[j] - z[l];
      if (denom == cplx(0.0, 0.0)) {
        // Two approximants collided exactly; nudge and carry on.
        z[j] += cplx(1e-8, 1e-8);
        max_step = radius;
        continue;
      }
      cplx w = eval_monic(c, z[j]) / denom;
      z[j] -= w;
      max_step = std::max(max_step, std::abs(w));
    }
    step_converged = max_step < step_tol;
  }

  // Cluster approximants; repeated roots stall above the step criterion in
  // double precision but their centroid recovers full accuracy.
  std::vector<bool> used(n, false);
  std::vector<std::pair<cplx, std::size_t>> reps;
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j]) continue;
    std::vector<std::size_t> members{j};
    used[j] = true;
    for (std::size_t l = j + 1; l < n; ++l)
      if (!used[l] && std::abs(z[l] - z[j]) < cluster_tol) {
        members.push_back(l);
        used[l] = true;
      }
    cplx centroid = 0.0;
    for (std::size_t m : members) centroid += z[m];
    centroid /= static_cast<double>(members.size());
    if (members.size() > 1) {
      std::vector<double> full = c;
      full.push_back(1.0);
      const cplx refined = refine_multiple(full, centroid, members.size());
      if (std::abs(refined - centroid) < cluster_tol) centroid = refined;
    }
    reps.emplace_back(centroid, members.size());
  }

  const double residual_bound =
      std::pow(10.0, -(precision - 2)) * (1.0 + max_coeff);
  for (const auto& [rep, mult] : reps) {
    if (std::abs(eval_monic(c, rep)) > residual_bound)
      throw ConvergenceError(
          "poly_roots: root iteration did not converge within budget "
          "(residual " +
          std::to_string(std::abs(eval_monic(c, rep))) + " at |z| = " +
          std::to_string(std::abs(rep)) + ")");
    for (std::size_t m = 0; m < mult; ++m) roots.push_back(rep);
  }
  return roots;
}

}  // namespace

std::vector<cplx> poly_roots(const IntPolynomial& p, int precision) {
  if (p.is_zero())
    throw std::invalid_argument("poly_roots: zero polynomial has no root set");
  std::vector<cplx> roots;
  if (p.degree() == 0) return roots;

  // Roots at the origin come out exactly.
  std::size_t zero_count = 0;
  while (p.coeff(zero_count) == 0) ++zero_count;
  roots.assign(zero_count, cplx(0.0, 0.0));
  if (static_cast<std::size_t>(p.degree()) == zero_count) return roots;

  IntPolynomial rest = p;
  if (zero_count > 0) {
    std::vector<Int> shifted(p.coeffs().begin() +
                                 static_cast<std::ptrdiff_t>(zero_count),
                             p.coeffs().end());
    rest = IntPolynomial(std::move(shifted));
  }

  // Repeated roots stall the simultaneous iteration at a fraction of the
  // working precision, so the multiplicity structure is split off exactly
  // first; the iteration then only ever sees simple roots.
  for (const auto& [factor, mult] : square_free_decomposition(rest)) {
    const auto factor_roots = simultaneous_roots(factor, precision);
    for (const cplx& root : factor_roots)
      roots.insert(roots.end(), static_cast<std::size_t>(mult), root);
  }

  std::sort(roots.begin(), roots.end(), before);
  return roots;
}

IntegerRootSplit extract_integer_roots(const IntPolynomial& p) {
  if (p.is_zero())
    throw std::invalid_argument("extract_integer_roots: zero polynomial");
  IntegerRootSplit out;
  IntPolynomial rest = p;

  int zero_mult = 0;
  while (!rest.is_zero() && rest.degree() >= 1 && rest.coeff(0) == 0) {
    rest = *rest.divide_exact(IntPolynomial{0, 1});
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(Int(0), zero_mult);

  if (rest.degree() >= 1) {
    // Any integer root divides the constant term.
    Int constant = rest.coeff(0);
    if (constant < 0) constant = -constant;
    std::vector<Int> divisors;
    Int remaining = constant;
    std::vector<std::pair<Int, int>> prime_factors;
    for (Int f = 2; f * f <= remaining && f <= 1000000; ++f) {
      int e = 0;
      while (remaining % f == 0) {
        remaining /= f;
        ++e;
      }
      if (e > 0) prime_factors.emplace_back(f, e);
    }
    if (remaining > 1) prime_factors.emplace_back(remaining, 1);
    divisors.push_back(1);
    for (const auto& [prime, exponent] : prime_factors) {
      const std::size_t old = divisors.size();
      Int pw = 1;
      for (int e = 1; e <= exponent; ++e) {
        pw *= prime;
        for (std::size_t i = 0; i < old; ++i) divisors.push_back(divisors[i] * pw);
      }
    }
    std::sort(divisors.begin(), divisors.end());

    for (const Int& d : divisors) {
      for (const Int& candidate : {d, Int(-d)}) {
        int mult = 0;
        while (rest.degree() >= 1 && rest.eval(candidate) == 0) {
          rest = *rest.divide_exact(IntPolynomial({-candidate, Int(1)}));
          ++mult;
        }
        if (mult > 0) out.roots.emplace_back(candidate, mult);
      }
    }
  }

  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.rest = std::move(rest);
  return out;
}

int rational_root_multiplicity(const IntPolynomial& p, const Int& num,
                               const Int& den) {
  if (den == 0) throw std::invalid_argument("rational root: zero denominator");
  if (p.is_zero())
    throw std::invalid_argument("rational root: zero polynomial");
  // By Gauss's lemma, (den*x - num) divides p over Z whenever num/den is a
  // root (gcd(num, den) = 1 assumed by the rational type).
  IntPolynomial divisor({-num, den});
  int mult = 0;
  IntPolynomial rest = p;
  while (true) {
    auto q = rest.divide_exact(divisor);
    if (!q) break;
    rest = std::move(*q);
    ++mult;
  }
  return mult;
}

}  // namespace tzeta::linalg
