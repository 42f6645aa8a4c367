#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "torus_zeta/int_matrix.hpp"
#include "torus_zeta/int_polynomial.hpp"

namespace tzeta::cohomology {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<Check> checks;
  std::optional<std::string> anosov_certificate;
  std::vector<std::string> notes;
  bool all_passed() const;
};

enum class Source { toral, explicit_matrices };

/// The cohomology action of a monodromy: per-degree pullback matrices on
/// H^i of the fiber plus Betti numbers. Immutable after construction.
class CohomologyAction {
 public:
  /// Action of the toral automorphism x -> Ax on H^i(T^d) realized by
  /// exterior powers of A; requires det A = +-1. Duality features are
  /// enabled exactly when det A = 1 (orientation preserving); passing
  /// require_duality rejects det A = -1 outright.
  static CohomologyAction from_toral(const linalg::IntMatrix& a,
                                     bool require_duality = false);

  /// User-supplied action: betti[i] and a betti[i] x betti[i] matrix per
  /// degree. beta(0) = 1 with pullback [1] is required (connected fiber).
  /// Duality is enabled iff Betti symmetry, the top-degree identity and
  /// determinant reciprocity all hold; with require_duality a failure
  /// throws instead of disabling.
  static CohomologyAction from_explicit(int d, std::vector<int> betti,
                                        std::vector<linalg::IntMatrix> phi,
                                        bool require_duality = false);

  int fiber_dim() const { return d_; }
  const std::vector<int>& betti() const { return betti_; }
  int betti_number(int i) const { return betti_[static_cast<std::size_t>(i)]; }
  const linalg::IntMatrix& pullback(int i) const {
    return phi_[static_cast<std::size_t>(i)];
  }
  Source source() const { return source_; }
  bool duality_enabled() const { return duality_enabled_; }
  const std::vector<Check>& structure_checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }
  /// The defining matrix A for toral actions; nullopt for explicit ones.
  const std::optional<linalg::IntMatrix>& monodromy() const {
    return monodromy_;
  }

 private:
  CohomologyAction() = default;
  int d_ = 0;
  std::vector<int> betti_;
  std::vector<linalg::IntMatrix> phi_;
  Source source_ = Source::toral;
  bool duality_enabled_ = false;
  std::vector<Check> checks_;
  std::vector<std::string> notes_;
  std::optional<linalg::IntMatrix> monodromy_;
};

/// m-th Lefschetz number: sum_i (-1)^i tr(phi*_i^m), exact.
Int lefschetz_number(const CohomologyAction& action, unsigned long m);

/// Alternating sum of Betti numbers.
long long euler_characteristic(const CohomologyAction& action);

/// Exact hyperbolicity screen for a toral monodromy: |det A| = 1 and no
/// cyclotomic polynomial divides char_poly(A). Passing guarantees
/// det(A^m - I) != 0 for every m >= 1, i.e. all fixed-point counts of the
/// suspension are finite.
ValidationReport anosov_check(const linalg::IntMatrix& a);

/// Eigenvalues of each phi*_i with multiplicity, ordered by (re, im);
/// integer eigenvalues are pre-extracted exactly by polynomial division
/// before the numeric root finder runs.
std::vector<std::vector<std::complex<double>>> eigen_degrees(
    const CohomologyAction& action, int precision = 12);

}  // namespace tzeta::cohomology
