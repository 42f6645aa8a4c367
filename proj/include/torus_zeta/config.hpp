#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "torus_zeta/cohomology.hpp"
#include "torus_zeta/dynamics.hpp"
#include "torus_zeta/int_matrix.hpp"

namespace tzeta::cli {

/// A malformed or self-inconsistent system description file.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FiberConfig {
  enum class Kind { toral, explicit_matrices };
  Kind kind = Kind::toral;
  // toral
  linalg::IntMatrix matrix{0};
  // explicit
  int d = 0;
  std::vector<int> betti;
  std::vector<linalg::IntMatrix> matrices;
};

/// Parsed system description: the fiber data, the suspension scale r
/// (the literal "e" selects r = exp(1) with log r = 1 exactly), the
/// counting convention and the working precision in digits.
struct SystemConfig {
  FiberConfig fiber;
  double r = 0.0;
  bool r_is_e = false;
  dynamics::Convention convention = dynamics::Convention::Signed;
  int precision = 12;

  dynamics::FlowParams flow() const;
  cohomology::CohomologyAction make_action() const;
  /// Canonical echo of the parsed configuration (exact integers as
  /// decimal strings).
  nlohmann::ordered_json echo() const;
};

SystemConfig parse_config(const nlohmann::json& j);
SystemConfig load_config_file(const std::string& path);

/// Complex literals of the forms "2", "-1.5", "2+i", "2-0.5i", "3i", "i".
std::complex<double> parse_complex(const std::string& text);

/// Comma-separated complex values; a token "a:b:n" expands to n real
/// points evenly spaced from a to b.
std::vector<std::complex<double>> parse_complex_list(const std::string& text);

}  // namespace tzeta::cli
