#include "torus_zeta/dynamics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "torus_zeta/errors.hpp"
#include "torus_zeta/int_polynomial.hpp"
#include "torus_zeta/parallel.hpp"
#include "torus_zeta/poly_roots.hpp"

namespace tzeta::dynamics {

using cplx = std::complex<double>;

FlowParams FlowParams::from_scale(double r, Convention c) {
  if (!(r > 1.0))
    throw std::invalid_argument("FlowParams: the suspension scale needs r > 1");
  return FlowParams{r, std::log(r), c};
}

FlowParams FlowParams::euler_scale(Convention c) {
  // log r = 1 exactly, so norms and exponents come out clean.
  return FlowParams{std::exp(1.0), 1.0, c};
}

int mobius(unsigned long n) {
  if (n == 0) throw std::invalid_argument("mobius: n must be positive");
  int sign = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::pair<Int, Int> fixed_point_count(const linalg::IntMatrix& a,
                                      unsigned long m) {
  if (m == 0)
    throw std::invalid_argument("fixed_point_count: m must be positive");
  const Int det = linalg::det_exact(
      linalg::IntMatrix::identity(a.dim()) - linalg::mat_pow(a, m));
  if (det == 0)
    throw HyperbolicityError(
        "fixed_point_count: det(A^m - I) = 0 at m = " + std::to_string(m) +
        "; fixed points of phi^m are not isolated (non-hyperbolic input)");
  return {det, det < 0 ? Int(-det) : det};
}

OrbitTable orbit_table(const linalg::IntMatrix& a, unsigned m_max,
                       const FlowParams& params) {
  OrbitTable table;
  table.log_r = params.log_r;

  double rho = 0.0;
  for (const cplx& root : linalg::poly_roots(linalg::char_poly(a)))
    rho = std::max(rho, std::abs(root));
  table.spectral_radius = rho;

  table.rows.assign(m_max, OrbitRow{});
  parallel_for(m_max, [&](std::size_t idx) {
    const unsigned m = static_cast<unsigned>(idx) + 1;
    auto [fs, fu] = fixed_point_count(a, m);
    OrbitRow& row = table.rows[idx];
    row.m = m;
    row.fix_signed = std::move(fs);
    row.fix_unsigned = std::move(fu);
    row.log_norm = static_cast<double>(m) * params.log_r;
  });

  for (unsigned m = 1; m <= m_max; ++m) {
    Int points = 0;
    for (unsigned k = 1; k <= m; ++k) {
      if (m % k != 0) continue;
      points += Int(mobius(m / k)) * table.rows[k - 1].fix_unsigned;
    }
    if (points % Int(m) != 0)
      throw InconsistencyError(
          "orbit_table: exact-period count not divisible by the period at "
          "m = " + std::to_string(m));
    table.rows[m - 1].exact_period_points = points;
    table.rows[m - 1].orbit_count = points / Int(m);
  }
  return table;
}

cplx euler_product_partial(const OrbitTable& table, cplx s,
                           const FlowParams& params) {
  const double r_pow = std::exp(s.real() * params.log_r);
  const double threshold = table.spectral_radius * (1.0 + 1e-9);
  if (!(r_pow > threshold)) {
    std::ostringstream msg;
    msg << "euler_product_partial: outside the convergence domain, partial "
           "products are meaningless: r^Re(s) = " << r_pow
        << " <= rho(A)*(1+1e-9) = " << threshold;
    throw DivergenceError(msg.str());
  }

  const cplx u = std::exp(-s * params.log_r);
  cplx log_sum = 0.0;
  cplx u_pow = 1.0;
  for (const OrbitRow& row : table.rows) {
    u_pow *= u;
    if (params.convention == Convention::Signed) {
      log_sum += to_double(row.fix_signed) * u_pow /
                 static_cast<double>(row.m);
    } else {
      // |u^m| < 1 inside the domain, so 1 - u^m stays in the right half
      // plane and the principal log matches the orbit-factor product.
      log_sum -= to_double(row.orbit_count) * std::log(1.0 - u_pow);
    }
  }
  return std::exp(log_sum);
}

}  // namespace tzeta::dynamics
