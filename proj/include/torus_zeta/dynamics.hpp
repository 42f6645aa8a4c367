#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "torus_zeta/int_matrix.hpp"

namespace tzeta::dynamics {

/// Which orbit-counting convention the Euler product uses. The signed
/// (Lefschetz-weighted) product provably matches the determinant
/// expression; the literal unsigned product is its reciprocal whenever all
/// fixed-point indices are -1, as for the cat map.
enum class Convention { Signed, Unsigned };

/// Suspension parameters of the mapping torus: the scale r > 1 and the
/// counting convention. log_r is kept separately so that the sentinel
/// r = e carries log_r = 1 exactly.
struct FlowParams {
  double r = 0.0;
  double log_r = 0.0;
  Convention convention = Convention::Signed;

  static FlowParams from_scale(double r, Convention c = Convention::Signed);
  static FlowParams euler_scale(Convention c = Convention::Signed);
};

struct OrbitRow {
  unsigned m = 0;
  Int fix_signed;          // det(I - A^m)
  Int fix_unsigned;        // |det(I - A^m)|
  Int exact_period_points; // points of exact period m (Mobius inversion)
  Int orbit_count;         // exact_period_points / m
  double log_norm = 0.0;   // m * log r
};

struct OrbitTable {
  std::vector<OrbitRow> rows;  // m = 1 .. m_max
  double spectral_radius = 0.0;
  double log_r = 0.0;
};

/// Mobius function by trial-division factorization.
int mobius(unsigned long n);

/// (det(I - A^m), |det(I - A^m)|), exact. Throws HyperbolicityError if the
/// determinant vanishes (fixed points not isolated).
std::pair<Int, Int> fixed_point_count(const linalg::IntMatrix& a,
                                      unsigned long m);

/// Rows m = 1..m_max with exact-period counts via Mobius inversion and
/// orbit norms log N = m log r. Rows are computed in parallel when workers
/// are available; assembly is deterministic. m_max = 0 gives an empty
/// table.
OrbitTable orbit_table(const linalg::IntMatrix& a, unsigned m_max,
                       const FlowParams& params);

/// Truncated Euler product over orbits of period <= m_max at u = r^{-s}.
/// Unsigned convention: prod_m (1 - u^m)^{-orbit_count(m)}. Signed
/// convention: exp(sum_m fix_signed(m) u^m / m), the Lefschetz-weighted
/// product matching the determinant expression. Outside the convergence
/// domain r^{Re s} > rho(A)(1+1e-9) the partial product is meaningless and
/// a DivergenceError is thrown.
std::complex<double> euler_product_partial(const OrbitTable& table,
                                           std::complex<double> s,
                                           const FlowParams& params);

}  // namespace tzeta::dynamics
