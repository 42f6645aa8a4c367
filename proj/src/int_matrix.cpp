#include "torus_zeta/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace tzeta::linalg {

IntMatrix::IntMatrix(std::size_t n, std::vector<Int> entries)
    : n_(n), e_(std::move(entries)) {
  if (e_.size() != n * n)
    throw std::invalid_argument("IntMatrix: entry count does not match n*n");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : n_(rows.size()) {
  e_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_)
      throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long long v : row) e_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix out(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + rhs.e_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix out(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - rhs.e_[i];
  return out;
}

Int IntMatrix::trace() const {
  Int t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

IntMatrix IntMatrix::block_diag(const std::vector<IntMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.dim();
  IntMatrix out(n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j)
        out.at(off + i, off + j) = b.at(i, j);
    off += b.dim();
  }
  return out;
}

IntMatrix mat_pow(const IntMatrix& a, unsigned long m) {
  IntMatrix result = IntMatrix::identity(a.dim());
  IntMatrix base = a;
  while (m > 0) {
    if (m & 1UL) result = result * base;
    m >>= 1UL;
    if (m > 0) base = base * base;
  }
  return result;
}

Int det_exact(const IntMatrix& a) {
  const std::size_t n = a.dim();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t pivot_row = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          pivot_row = i;
          break;
        }
      if (m.at(pivot_row, k) == 0) return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m.at(k, j), m.at(pivot_row, j));
      sign = -sign;
    }
    const Int pivot = m.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Fraction-free update: the division by the previous pivot is exact.
        m.at(i, j) = (m.at(i, j) * pivot - m.at(i, k) * m.at(k, j)) / prev_pivot;
      }
      m.at(i, k) = 0;
    }
    prev_pivot = pivot;
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::vector<std::vector<std::size_t>> subsets_lex(std::size_t n,
                                                  std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    if (k == 0) break;
    // Advance to the next k-subset in lexicographic order.
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

IntMatrix exterior_power(const IntMatrix& a, std::size_t k) {
  const std::size_t n = a.dim();
  if (k > n)
    throw std::invalid_argument("exterior_power: k exceeds the dimension");
  const auto subsets = subsets_lex(n, k);
  const std::size_t m = subsets.size();
  IntMatrix out(m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      IntMatrix minor(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          minor.at(i, j) = a.at(subsets[r][i], subsets[c][j]);
      out.at(r, c) = det_exact(minor);
    }
  return out;
}

}  // namespace tzeta::linalg
