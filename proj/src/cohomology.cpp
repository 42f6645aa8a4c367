#include "torus_zeta/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

#include "torus_zeta/errors.hpp"
#include "torus_zeta/poly_roots.hpp"

namespace tzeta::cohomology {

using linalg::IntMatrix;
using linalg::IntPolynomial;

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

CohomologyAction CohomologyAction::from_toral(const IntMatrix& a,
                                              bool require_duality) {
  if (a.dim() > 12)
    throw std::invalid_argument(
        "from_toral: fiber dimension " + std::to_string(a.dim()) +
        " exceeds the supported 12 (the middle exterior power has C(d, d/2) "
        "rows and grows too fast beyond that)");
  const Int det = linalg::det_exact(a);
  if (det != 1 && det != -1)
    throw std::invalid_argument(
        "from_toral: det(A) = " + det.str() +
        "; a torus diffeomorphism needs det(A) = +-1");
  const bool orientation_preserving = det == 1;
  if (require_duality && !orientation_preserving)
    throw DualityError(
        "from_toral: duality requested but det(A) = -1 "
        "(orientation-reversing monodromy)");

  CohomologyAction act;
  act.d_ = static_cast<int>(a.dim());
  act.source_ = Source::toral;
  act.monodromy_ = a;
  for (int i = 0; i <= act.d_; ++i) {
    act.phi_.push_back(linalg::exterior_power(a, static_cast<std::size_t>(i)));
    act.betti_.push_back(static_cast<int>(act.phi_.back().dim()));
  }
  act.duality_enabled_ = orientation_preserving;
  act.checks_.push_back(
      {"orientation_preserving", orientation_preserving,
       "det(A) = " + det.str()});
  if (orientation_preserving) {
    act.notes_.push_back(
        "toral action: duality holds by construction (wedge pairing on "
        "H^*(T^d))");
  } else {
    act.notes_.push_back(
        "orientation-reversing monodromy: zeta and orbit data are available, "
        "duality features are disabled");
  }
  return act;
}

CohomologyAction CohomologyAction::from_explicit(int d, std::vector<int> betti,
                                                 std::vector<IntMatrix> phi,
                                                 bool require_duality) {
  if (d < 0) throw std::invalid_argument("from_explicit: negative dimension");
  const auto expected = static_cast<std::size_t>(d) + 1;
  if (betti.size() != expected || phi.size() != expected)
    throw std::invalid_argument(
        "from_explicit: need exactly d+1 Betti numbers and matrices");
  for (std::size_t i = 0; i < expected; ++i) {
    if (betti[i] < 0)
      throw std::invalid_argument("from_explicit: negative Betti number");
    if (phi[i].dim() != static_cast<std::size_t>(betti[i]))
      throw std::invalid_argument(
          "from_explicit: matrix for degree " + std::to_string(i) +
          " is " + std::to_string(phi[i].dim()) + "x" +
          std::to_string(phi[i].dim()) + ", expected beta(" +
          std::to_string(i) + ") = " + std::to_string(betti[i]));
  }
  if (betti[0] != 1)
    throw std::invalid_argument("from_explicit: beta(0) must be 1 "
                                "(connected fiber)");
  if (!(phi[0] == IntMatrix::identity(1)))
    throw std::invalid_argument(
        "from_explicit: phi*_0 must be [1] (pullback fixes constants)");

  CohomologyAction act;
  act.d_ = d;
  act.betti_ = std::move(betti);
  act.phi_ = std::move(phi);
  act.source_ = Source::explicit_matrices;

  // Necessary duality conditions; cup-product compatibility itself is not
  // decidable from matrix data.
  bool betti_symmetric = true;
  std::string betti_detail = "beta(i) = beta(d-i) for all i";
  for (int i = 0; i <= d; ++i)
    if (act.betti_[static_cast<std::size_t>(i)] !=
        act.betti_[static_cast<std::size_t>(d - i)]) {
      betti_symmetric = false;
      betti_detail = "beta(" + std::to_string(i) + ") = " +
                     std::to_string(act.betti_[static_cast<std::size_t>(i)]) +
                     " != beta(" + std::to_string(d - i) + ") = " +
                     std::to_string(act.betti_[static_cast<std::size_t>(d - i)]);
      break;
    }
  act.checks_.push_back({"betti_symmetry", betti_symmetric, betti_detail});

  const bool top_identity =
      act.betti_.back() == 1 &&
      act.phi_.back() == IntMatrix::identity(1);
  act.checks_.push_back(
      {"top_degree_identity", top_identity,
       top_identity ? "beta(d) = 1 and phi*_d = [1]"
                    : "phi* must act on H^d as the identity of a "
                      "one-dimensional space"});

  bool reciprocity = true;
  std::string reciprocity_detail =
      "det(phi*_i) * det(phi*_{d-i}) = 1 for all i";
  if (betti_symmetric) {
    for (int i = 0; i <= d; ++i) {
      const Int prod =
          linalg::det_exact(act.phi_[static_cast<std::size_t>(i)]) *
          linalg::det_exact(act.phi_[static_cast<std::size_t>(d - i)]);
      if (prod != 1) {
        reciprocity = false;
        reciprocity_detail = "det(phi*_" + std::to_string(i) +
                             ") * det(phi*_" + std::to_string(d - i) +
                             ") = " + prod.str() + " != 1";
        break;
      }
    }
  } else {
    reciprocity = false;
    reciprocity_detail = "not evaluated: Betti symmetry already fails";
  }
  act.checks_.push_back(
      {"determinant_reciprocity", reciprocity, reciprocity_detail});

  act.duality_enabled_ = betti_symmetric && top_identity && reciprocity;
  if (require_duality && !act.duality_enabled_) {
    for (const auto& c : act.checks_)
      if (!c.pass)
        throw DualityError("from_explicit: duality requested but check '" +
                           c.name + "' failed: " + c.detail);
  }

  act.notes_.push_back(
      "explicit action: countability of periodic orbits cannot be verified "
      "from matrix data; it is an assumption on the underlying map");
  act.notes_.push_back(
      "duality checks are necessary conditions only; cup-product "
      "compatibility is assumed when they pass");
  return act;
}

Int lefschetz_number(const CohomologyAction& action, unsigned long m) {
  if (m == 0)
    throw std::invalid_argument("lefschetz_number: m must be positive");
  Int sum = 0;
  for (int i = 0; i <= action.fiber_dim(); ++i) {
    Int t = linalg::mat_pow(action.pullback(i), m).trace();
    if (i % 2 == 0)
      sum += t;
    else
      sum -= t;
  }
  return sum;
}

long long euler_characteristic(const CohomologyAction& action) {
  long long chi = 0;
  for (int i = 0; i <= action.fiber_dim(); ++i)
    chi += (i % 2 == 0) ? action.betti_number(i) : -action.betti_number(i);
  return chi;
}

ValidationReport anosov_check(const IntMatrix& a) {
  ValidationReport report;
  const Int det = linalg::det_exact(a);
  const bool unimodular = det == 1 || det == -1;
  report.checks.push_back(
      {"unimodular", unimodular, "det(A) = " + det.str()});
  if (!unimodular) {
    report.notes.push_back(
        "A is not invertible over Z; hyperbolicity screen not applicable");
    return report;
  }

  const IntPolynomial p = linalg::char_poly(a);
  const unsigned n = static_cast<unsigned>(a.dim());
  bool clean = true;
  std::string detail = "char poly " + p.pretty() + " has no cyclotomic factor";
  for (unsigned k : linalg::cyclotomic_indices(n)) {
    const IntPolynomial phi_k = linalg::cyclotomic(k);
    if (p.divide_exact(phi_k)) {
      clean = false;
      detail = "char poly " + p.pretty() + " is divisible by Phi_" +
               std::to_string(k) + " = " + phi_k.pretty() +
               " (eigenvalue on the unit circle)";
      break;
    }
  }
  report.checks.push_back({"no_cyclotomic_factor", clean, detail});
  if (clean) {
    report.anosov_certificate =
        "char_poly(A) is free of cyclotomic factors, so det(A^m - I) != 0 "
        "for every m >= 1 and all fixed-point counts are finite";
  }
  return report;
}

std::vector<std::vector<std::complex<double>>> eigen_degrees(
    const CohomologyAction& action, int precision) {
  std::vector<std::vector<std::complex<double>>> out;
  out.reserve(static_cast<std::size_t>(action.fiber_dim()) + 1);
  for (int i = 0; i <= action.fiber_dim(); ++i) {
    const IntPolynomial p = linalg::char_poly(action.pullback(i));
    auto split = linalg::extract_integer_roots(p);
    std::vector<std::complex<double>> eig;
    for (const auto& [root, mult] : split.roots)
      eig.insert(eig.end(), static_cast<std::size_t>(mult),
                 std::complex<double>(to_double(root), 0.0));
    if (split.rest.degree() >= 1) {
      auto numeric = linalg::poly_roots(split.rest, precision);
      eig.insert(eig.end(), numeric.begin(), numeric.end());
    }
    std::sort(eig.begin(), eig.end(), [](const auto& a, const auto& b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
    out.push_back(std::move(eig));
  }
  return out;
}

}  // namespace tzeta::cohomology
