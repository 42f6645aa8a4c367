#include "torus_zeta/int_polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tzeta::linalg {

namespace {
const Int kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  c_.reserve(coeffs.size());
  for (long long v : coeffs) c_.emplace_back(v);
  trim();
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(Int c) {
  IntPolynomial p;
  p.c_.push_back(std::move(c));
  p.trim();
  return p;
}

IntPolynomial IntPolynomial::monomial(Int c, std::size_t k) {
  IntPolynomial p;
  p.c_.assign(k + 1, Int(0));
  p.c_[k] = std::move(c);
  p.trim();
  return p;
}

const Int& IntPolynomial::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : kZero;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<Int> out(std::max(c_.size(), rhs.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + rhs.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<Int> out(std::max(c_.size(), rhs.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - rhs.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Int> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPolynomial();
  std::vector<Int> out(c_.size() + rhs.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j)
      out[i + j] += c_[i] * rhs.c_[j];
  }
  return IntPolynomial(std::move(out));
}

Int IntPolynomial::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> IntPolynomial::eval(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + to_double(*it);
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return IntPolynomial();
  std::vector<Int> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Int(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<Int> out(c_.rbegin(), c_.rend());
  return IntPolynomial(std::move(out));
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(
    const IntPolynomial& divisor) const {
  if (divisor.is_zero())
    throw std::invalid_argument("divide_exact: division by zero polynomial");
  if (is_zero()) return IntPolynomial();
  if (degree() < divisor.degree()) return std::nullopt;

  std::vector<Int> rem = c_;
  std::vector<Int> quot(c_.size() - divisor.c_.size() + 1);
  const Int& lead = divisor.leading();
  for (std::size_t step = quot.size(); step-- > 0;) {
    const Int& top = rem[step + divisor.c_.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    Int q = top / lead;
    for (std::size_t j = 0; j < divisor.c_.size(); ++j)
      rem[step + j] -= q * divisor.c_[j];
    quot[step] = std::move(q);
  }
  for (const Int& r : rem)
    if (r != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::pretty(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const bool neg = c_[i] < 0;
    Int mag = neg ? Int(-c_[i]) : c_[i];
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const bool unit = (mag == 1) && i > 0;
    if (!unit) out += mag.str();
    if (i >= 1) {
      out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Int IntPolynomial::content() const {
  Int g = 0;
  for (const Int& c : c_) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? Int(-g) : g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return IntPolynomial();
  Int g = content();
  if (leading() < 0) g = -g;
  std::vector<Int> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / g;
  return IntPolynomial(std::move(out));
}

namespace {

/// Pseudo-remainder: prem(a, b) = (lead b)^(deg a - deg b + 1) a mod b,
/// fraction-free.
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const Int& lead = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const std::size_t shift =
        static_cast<std::size_t>(a.degree() - b.degree());
    const Int top = a.leading();
    std::vector<Int> next(static_cast<std::size_t>(a.degree()));
    for (int i = 0; i < a.degree(); ++i) {
      Int v = a.coeff(static_cast<std::size_t>(i)) * lead;
      if (static_cast<std::size_t>(i) >= shift)
        v -= top * b.coeff(static_cast<std::size_t>(i) - shift);
      next[static_cast<std::size_t>(i)] = std::move(v);
    }
    a = IntPolynomial(std::move(next));
  }
  return a;
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  // Primitive-PRS Euclid: coefficient growth is tamed by taking primitive
  // parts after every pseudo-remainder.
  IntPolynomial r0 = a.primitive_part();
  IntPolynomial r1 = b.primitive_part();
  if (r0.degree() < r1.degree()) std::swap(r0, r1);
  while (!r1.is_zero()) {
    IntPolynomial r2 = pseudo_remainder(r0, r1).primitive_part();
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0;
}

std::vector<std::pair<IntPolynomial, int>> square_free_decomposition(
    const IntPolynomial& p) {
  if (p.is_zero())
    throw std::invalid_argument("square_free_decomposition: zero polynomial");
  std::vector<std::pair<IntPolynomial, int>> out;
  const IntPolynomial f = p.primitive_part();
  if (f.degree() < 1) return out;

  // Yun's algorithm; every division below is exact over Z[x] because the
  // divisors are primitive.
  const IntPolynomial g = poly_gcd(f, f.derivative());
  if (g.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  IntPolynomial b = *f.divide_exact(g);
  IntPolynomial d = *f.derivative().divide_exact(g) - b.derivative();
  for (int mult = 1; b.degree() > 0; ++mult) {
    const IntPolynomial factor = poly_gcd(b, d);
    if (factor.degree() > 0) out.emplace_back(factor, mult);
    b = *b.divide_exact(factor);
    d = *d.divide_exact(factor) - b.derivative();
  }
  return out;
}

IntPolynomial char_poly(const IntMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Int> coeffs(n + 1);
  coeffs[n] = 1;
  if (n == 0) return IntPolynomial(std::move(coeffs));
  // Faddeev-LeVerrier: B_1 = A, c_k = -tr(B_k)/k, B_{k+1} = A(B_k + c_k I).
  IntMatrix b = a;
  for (std::size_t k = 1; k <= n; ++k) {
    Int t = b.trace();
    if (t % Int(k) != 0)
      throw std::logic_error("char_poly: non-exact division (cannot happen)");
    Int c = -t / Int(k);
    coeffs[n - k] = c;
    if (k < n) {
      IntMatrix shifted = b;
      for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += c;
      b = a * shifted;
    }
  }
  return IntPolynomial(std::move(coeffs));
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPolynomial cyclotomic(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic: n must be positive");
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, exact division throughout.
  std::vector<Int> xn(n + 1);
  xn[0] = -1;
  xn[n] = 1;
  IntPolynomial p(std::move(xn));
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto q = p.divide_exact(cyclotomic(d));
    if (!q) throw std::logic_error("cyclotomic: exact division failed");
    p = std::move(*q);
  }
  return p;
}

std::vector<unsigned> cyclotomic_indices(unsigned max_degree) {
  // phi(n) >= sqrt(n/2), so phi(n) <= D forces n <= 2 D^2.
  std::vector<unsigned> out;
  for (unsigned n = 1; n <= 2 * max_degree * max_degree + 1; ++n)
    if (euler_phi(n) <= max_degree) out.push_back(n);
  return out;
}

}  // namespace tzeta::linalg
