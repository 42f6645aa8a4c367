#pragma once

#include <stdexcept>

namespace tzeta {

// Iterative solver exceeded its budget without meeting its criterion.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation requested at (or numerically indistinguishable from) a pole.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Result left the range of double arithmetic; distinct from a pole.
struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two supposedly equivalent computation routes disagreed beyond tolerance.
struct InconsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

// Input lies outside the convergence domain of a series or partial product.
struct DivergenceError : std::domain_error {
  using std::domain_error::domain_error;
};

// An operation that needs Poincare duality was called on an action whose
// duality checks failed or were never enabled.
struct DualityError : std::domain_error {
  using std::domain_error::domain_error;
};

// A map advertised as hyperbolic turned out to have a periodic point count
// that is not finite (det(A^m - I) = 0 for some m).
struct HyperbolicityError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace tzeta
