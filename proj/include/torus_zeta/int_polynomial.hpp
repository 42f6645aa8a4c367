#pragma once

#include <complex>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torus_zeta/bigint.hpp"
#include "torus_zeta/int_matrix.hpp"

namespace tzeta::linalg {

/// Polynomial with exact integer coefficients, stored ascending by degree
/// with no trailing zeros. The zero polynomial has an empty coefficient
/// vector and degree() == -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(Int c);
  /// x^k with coefficient c.
  static IntPolynomial monomial(Int c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of x^k; zero beyond the degree.
  const Int& coeff(std::size_t k) const;
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& leading() const { return c_.back(); }

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial& rhs) const = default;

  Int eval(const Int& x) const;
  Rational eval(const Rational& x) const;
  std::complex<double> eval(std::complex<double> x) const;

  IntPolynomial derivative() const;

  /// x^degree * p(1/x): the coefficient vector reversed (then trimmed).
  IntPolynomial reversed() const;

  /// Quotient if `divisor` divides this exactly in Z[x], nullopt otherwise.
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;

  /// Human-readable form, ascending: e.g. "1 - 3u + u^2".
  std::string pretty(const std::string& var = "x") const;

  /// gcd of the coefficients (non-negative); 0 for the zero polynomial.
  Int content() const;
  /// The polynomial divided by its content, normalized to positive lead.
  IntPolynomial primitive_part() const;

 private:
  std::vector<Int> c_;
  void trim();
};

/// Primitive gcd over Z[x] (positive leading coefficient); gcd(p, 0) = p.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Exact square-free decomposition (Yun): p = c * prod factor^multiplicity
/// with each factor primitive, square-free and pairwise coprime.
/// Multiplicities come out ascending.
std::vector<std::pair<IntPolynomial, int>> square_free_decomposition(
    const IntPolynomial& p);

/// Exact characteristic polynomial det(xI - A), monic of degree n, by the
/// Faddeev-LeVerrier recurrence (every internal division is exact over Z).
IntPolynomial char_poly(const IntMatrix& a);

/// The n-th cyclotomic polynomial, exact.
IntPolynomial cyclotomic(unsigned n);

/// All n with phi(n) <= max_degree, ascending: the complete list of
/// cyclotomic polynomials that could divide an integer polynomial of the
/// given degree.
std::vector<unsigned> cyclotomic_indices(unsigned max_degree);

/// Euler's totient.
unsigned euler_phi(unsigned n);

}  // namespace tzeta::linalg
