#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "torus_zeta/bigint.hpp"

namespace tzeta::linalg {

/// Square matrix over arbitrary-precision integers, row-major storage.
/// A 0x0 matrix is legal and stands for the action on a zero-dimensional
/// space (trace 0, determinant 1).
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n) : n_(n), e_(n * n) {}
  IntMatrix(std::size_t n, std::vector<Int> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }

  const Int& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  Int& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  Int trace() const;
  IntMatrix transpose() const;
  bool is_identity() const;

  /// Block-diagonal assembly, in the order given.
  static IntMatrix block_diag(const std::vector<IntMatrix>& blocks);

 private:
  std::size_t n_;
  std::vector<Int> e_;
};

/// Exact A^m by binary exponentiation; A^0 is the identity.
IntMatrix mat_pow(const IntMatrix& a, unsigned long m);

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting. No floating point anywhere.
Int det_exact(const IntMatrix& a);

/// The C(n,k) x C(n,k) matrix of k x k minors of `a`, rows and columns
/// indexed by the k-subsets of {0,...,n-1} in lexicographic order.
/// exterior_power(a, 0) = [1], exterior_power(a, n) = [det a].
/// Throws std::invalid_argument for k > n.
IntMatrix exterior_power(const IntMatrix& a, std::size_t k);

/// The k-subsets of {0,...,n-1} in lexicographic order; the index basis
/// used by exterior_power.
std::vector<std::vector<std::size_t>> subsets_lex(std::size_t n,
                                                  std::size_t k);

}  // namespace tzeta::linalg
