#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <vector>

#include <json.hpp>

#include "torus_zeta/config.hpp"

namespace tzeta::cli {

using Report = nlohmann::ordered_json;

/// Structural validation: action construction checks, the hyperbolicity
/// screen for toral monodromies, duality status.
Report cmd_validate(const SystemConfig& cfg);

/// Orbit table up to m_max (toral monodromies only; gated on the
/// hyperbolicity screen).
Report cmd_orbits(const SystemConfig& cfg, unsigned m_max);

/// Exact factor polynomials plus evaluations at each s; optionally an
/// Euler-product comparison with the given truncation.
Report cmd_zeta(const SystemConfig& cfg,
                const std::vector<std::complex<double>>& s_values,
                std::optional<unsigned> compare_euler);

/// Order, direct special value, and the Lefschetz-series route (or its
/// divergence refusal) at s = k.
Report cmd_special(const SystemConfig& cfg, std::complex<double> k,
                   unsigned series_m_max);

/// Theta-spectrum window for one degree with defining-relation residuals.
Report cmd_spectrum(const SystemConfig& cfg, int degree, long v_min,
                    long v_max);

/// The full identity suite; every check lands in the report with its
/// residual and tolerance.
Report cmd_check(const SystemConfig& cfg);

/// True iff every executed check in the report passed.
bool report_passed(const Report& report);

void render_text(const Report& report, std::ostream& os);
void render_csv(const Report& report, std::ostream& os);
void render_json(const Report& report, std::ostream& os);

}  // namespace tzeta::cli
