#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "torus_zeta/int_polynomial.hpp"

namespace tzeta::linalg {

/// All complex roots of a nonzero integer polynomial, with multiplicity,
/// each within 10^-precision of a true root, ordered by (real, imag).
///
/// Simultaneous (Weierstrass/Durand-Kerner) iteration on the monic
/// normalization, started on a circle of radius 1 + max|coeff|, capped at
/// 1000 sweeps, step criterion 10^-(precision+2). Approximants within
/// 10^-(precision/2) of each other are clustered into one root whose value
/// is the cluster centroid and whose multiplicity is the cluster size.
/// Every returned root is verified against the residual bound
/// |p(root)| <= 10^-(precision-2) * (1 + max|coeff|); failure throws
/// ConvergenceError rather than returning silently.
std::vector<std::complex<double>> poly_roots(const IntPolynomial& p,
                                             int precision = 12);

struct IntegerRootSplit {
  /// (root, multiplicity) pairs, ordered by value.
  std::vector<std::pair<Int, int>> roots;
  /// What is left of the polynomial after exact division.
  IntPolynomial rest;
};

/// Exact pre-extraction of integer roots by repeated polynomial division.
/// Candidates are the divisors of the constant term (roots at the origin
/// are extracted first). Divisor enumeration is by trial division; a
/// residual cofactor beyond 10^12 is treated as prime, which can only make
/// the extraction less complete, never wrong.
IntegerRootSplit extract_integer_roots(const IntPolynomial& p);

/// Multiplicity of the exact rational x = num/den as a root of p, by
/// repeated exact division by (den*x - num).
int rational_root_multiplicity(const IntPolynomial& p, const Int& num,
                               const Int& den);

}  // namespace tzeta::linalg
