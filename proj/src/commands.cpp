#include "torus_zeta/commands.hpp"

#include <cmath>
#include <complex>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "torus_zeta/errors.hpp"
#include "torus_zeta/parallel.hpp"
#include "torus_zeta/special_functions.hpp"
#include "torus_zeta/zeta_function.hpp"

namespace tzeta::cli {

using cplx = std::complex<double>;
using cohomology::CohomologyAction;
using nlohmann::ordered_json;

namespace {

ordered_json complex_json(cplx z) {
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

ordered_json check_json(const std::string& name, bool pass,
                        const std::string& detail) {
  return ordered_json{{"name", name}, {"pass", pass}, {"detail", detail}};
}

ordered_json check_json(const std::string& name, bool pass,
                        const std::string& detail, double residual,
                        double tolerance) {
  ordered_json c = check_json(name, pass, detail);
  c["residual"] = residual;
  c["tolerance"] = tolerance;
  return c;
}

ordered_json base_report(const char* command, const SystemConfig& cfg) {
  ordered_json r;
  r["command"] = command;
  r["config"] = cfg.echo();
  r["checks"] = ordered_json::array();
  r["notes"] = ordered_json::array();
  return r;
}

void append_action_checks(ordered_json& report, const CohomologyAction& act) {
  for (const auto& c : act.structure_checks())
    report["checks"].push_back(check_json(c.name, c.pass, c.detail));
  for (const auto& n : act.notes()) report["notes"].push_back(n);
  report["duality_enabled"] = act.duality_enabled();
}

void append_validation(ordered_json& report,
                       const cohomology::ValidationReport& v) {
  for (const auto& c : v.checks)
    report["checks"].push_back(check_json(c.name, c.pass, c.detail));
  for (const auto& n : v.notes) report["notes"].push_back(n);
  if (v.anosov_certificate) report["anosov_certificate"] = *v.anosov_certificate;
}

bool checks_passed(const ordered_json& report) {
  for (const auto& c : report["checks"])
    if (!c.at("pass").get<bool>()) return false;
  return true;
}

ordered_json factors_json(const zeta::ZetaRational& z) {
  ordered_json factors = ordered_json::array();
  for (const auto& f : z.factors()) {
    ordered_json coeffs = ordered_json::array();
    for (const Int& c : f.poly.coeffs()) coeffs.push_back(c.str());
    factors.push_back(ordered_json{{"degree", f.degree},
                                   {"exponent", f.exponent},
                                   {"coefficients", coeffs},
                                   {"poly", f.poly.pretty("u")}});
  }
  return factors;
}

ordered_json poly_json(const linalg::IntPolynomial& p) {
  ordered_json coeffs = ordered_json::array();
  for (const Int& c : p.coeffs()) coeffs.push_back(c.str());
  return coeffs;
}

/// Truncated Euler product under both conventions plus the comparison
/// against the rational value; used by cmd_zeta and cmd_check.
ordered_json euler_comparison(const dynamics::OrbitTable& table, cplx s,
                              const dynamics::FlowParams& params, cplx rational,
                              double tolerance) {
  ordered_json out;
  out["m_max"] = table.rows.size();
  dynamics::FlowParams signed_params = params;
  signed_params.convention = dynamics::Convention::Signed;
  dynamics::FlowParams unsigned_params = params;
  unsigned_params.convention = dynamics::Convention::Unsigned;
  const cplx prod_signed =
      dynamics::euler_product_partial(table, s, signed_params);
  const cplx prod_unsigned =
      dynamics::euler_product_partial(table, s, unsigned_params);
  out["signed"] = complex_json(prod_signed);
  out["unsigned"] = complex_json(prod_unsigned);
  out["conventions_differ"] =
      std::abs(prod_signed - prod_unsigned) > tolerance;
  // The signed (Lefschetz-weighted) product is the route the determinant
  // expression proves; the literal unsigned product is only its reciprocal
  // when every fixed-point index is -1, so it is reported, not gated.
  out["residual"] = std::abs(prod_signed - rational);
  out["unsigned_vs_reciprocal"] = std::abs(prod_unsigned - 1.0 / rational);
  out["tolerance"] = tolerance;
  out["pass"] = std::abs(prod_signed - rational) < tolerance;
  return out;
}

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string fmt_complex(cplx z, int precision) {
  std::ostringstream os;
  os << std::setprecision(precision) << z.real();
  if (z.imag() != 0.0)
    os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

Report cmd_validate(const SystemConfig& cfg) {
  Report report = base_report("validate", cfg);
  const CohomologyAction act = cfg.make_action();
  append_action_checks(report, act);
  if (cfg.fiber.kind == FiberConfig::Kind::toral)
    append_validation(report, cohomology::anosov_check(cfg.fiber.matrix));
  report["euler_characteristic"] = cohomology::euler_characteristic(act);
  report["betti"] = act.betti();
  report["passed"] = checks_passed(report);
  return report;
}

Report cmd_orbits(const SystemConfig& cfg, unsigned m_max) {
  Report report = base_report("orbits", cfg);
  if (cfg.fiber.kind != FiberConfig::Kind::toral)
    throw std::invalid_argument(
        "orbits: periodic-point counting needs a toral monodromy matrix");
  const auto screen = cohomology::anosov_check(cfg.fiber.matrix);
  append_validation(report, screen);
  if (!screen.all_passed()) {
    report["notes"].push_back(
        "orbit table refused: the hyperbolicity screen failed, fixed-point "
        "counts may be infinite");
    report["passed"] = false;
    return report;
  }

  const auto params = cfg.flow();
  const auto table = dynamics::orbit_table(cfg.fiber.matrix, m_max, params);
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    rows.push_back(ordered_json{{"m", row.m},
                                {"fix_signed", row.fix_signed.str()},
                                {"fix_unsigned", row.fix_unsigned.str()},
                                {"exact_period_points",
                                 row.exact_period_points.str()},
                                {"orbit_count", row.orbit_count.str()},
                                {"log_norm", row.log_norm}});
  }
  report["orbit_table"] = ordered_json{{"m_max", m_max},
                                       {"spectral_radius",
                                        table.spectral_radius},
                                       {"rows", rows}};
  report["passed"] = checks_passed(report);
  return report;
}

Report cmd_zeta(const SystemConfig& cfg, const std::vector<cplx>& s_values,
                std::optional<unsigned> compare_euler) {
  Report report = base_report("zeta", cfg);
  const CohomologyAction act = cfg.make_action();
  append_action_checks(report, act);
  const auto params = cfg.flow();
  const auto z = zeta::build_zeta(act);

  report["factors"] = factors_json(z);
  report["numerator"] = poly_json(z.numerator());
  report["denominator"] = poly_json(z.denominator());

  std::optional<dynamics::OrbitTable> table;
  if (compare_euler) {
    if (cfg.fiber.kind == FiberConfig::Kind::toral) {
      table = dynamics::orbit_table(cfg.fiber.matrix, *compare_euler, params);
    } else {
      report["notes"].push_back(
          "euler-product comparison unavailable: explicit actions carry no "
          "monodromy to count fixed points with");
    }
  }

  std::vector<ordered_json> slots(s_values.size());
  parallel_for(s_values.size(), [&](std::size_t idx) {
    const cplx s = s_values[idx];
    ordered_json entry;
    entry["s"] = complex_json(s);
    entry["u"] = complex_json(std::exp(-s * params.log_r));
    try {
      const cplx value = zeta::evaluate(z, s, params);
      entry["value"] = complex_json(value);
      entry["status"] = "ok";
      if (table) {
        try {
          entry["euler_product"] =
              euler_comparison(*table, s, params, value, 1e-8);
        } catch (const DivergenceError& e) {
          entry["euler_product"] = ordered_json{{"refused", e.what()}};
        }
      }
    } catch (const PoleError&) {
      const auto info = zeta::order_at(z, act, s, params, cfg.precision);
      entry["status"] = "pole";
      entry["order"] = info.order;
      entry["pole_tolerance"] = 1e-12;
    }
    slots[idx] = std::move(entry);
  });

  ordered_json evaluations = ordered_json::array();
  for (auto& slot : slots) evaluations.push_back(std::move(slot));
  report["evaluations"] = std::move(evaluations);

  bool euler_ok = true;
  for (const auto& entry : report["evaluations"])
    if (entry.contains("euler_product") &&
        entry["euler_product"].contains("pass") &&
        !entry["euler_product"]["pass"].get<bool>())
      euler_ok = false;
  report["passed"] = checks_passed(report) && euler_ok;
  return report;
}

Report cmd_special(const SystemConfig& cfg, cplx k, unsigned series_m_max) {
  Report report = base_report("special", cfg);
  const CohomologyAction act = cfg.make_action();
  append_action_checks(report, act);
  const auto params = cfg.flow();
  const auto z = zeta::build_zeta(act);

  report["k"] = complex_json(k);
  const auto info = zeta::order_at(z, act, k, params, cfg.precision);
  report["order"] = info.order;
  report["order_routes"] =
      ordered_json{{"eigen", info.order_eigen},
                   {"rational_function", info.order_rational},
                   {"exact", info.exact},
                   {"resonance_margin", info.margin}};

  const auto direct = zeta::special_value(z, act, k, params, cfg.precision);
  ordered_json direct_json;
  direct_json["value"] = complex_json(direct.value);
  if (direct.exact) direct_json["exact"] = to_string(*direct.exact);
  report["direct"] = std::move(direct_json);

  const auto series =
      zeta::special_value_series(act, k, params, series_m_max, cfg.precision);
  ordered_json series_json;
  series_json["accepted"] = series.accepted;
  series_json["m_max"] = series_m_max;
  if (series.accepted) {
    series_json["value"] = complex_json(series.value);
    series_json["tail_bound"] = series.tail_bound;
    const double resid = std::abs(series.value - direct.value);
    report["checks"].push_back(check_json(
        "special_value_series_vs_direct", resid < 1e-6,
        "Lefschetz series against the factor-wise limit", resid, 1e-6));
  } else {
    series_json["refusal"] = series.refusal;
    report["notes"].push_back("series refused: " + series.refusal);
  }
  report["series"] = std::move(series_json);
  report["passed"] = checks_passed(report);
  return report;
}

Report cmd_spectrum(const SystemConfig& cfg, int degree, long v_min,
                    long v_max) {
  Report report = base_report("spectrum", cfg);
  const CohomologyAction act = cfg.make_action();
  append_action_checks(report, act);
  const auto params = cfg.flow();

  const auto spectrum =
      zeta::theta_spectrum(act, degree, params, v_min, v_max, cfg.precision);
  for (const auto& w : spectrum.warnings) report["notes"].push_back(w);

  report["degree"] = degree;
  report["v_min"] = v_min;
  report["v_max"] = v_max;
  report["lattice_spacing"] =
      complex_json(cplx(0.0, 2.0 * 3.14159265358979323846 / params.log_r));

  ordered_json entries = ordered_json::array();
  double worst = 0.0;
  for (const auto& entry : spectrum.entries) {
    const double resid = zeta::theta_residual(entry, params);
    worst = std::max(worst, resid);
    entries.push_back(ordered_json{{"degree", entry.degree},
                                   {"alpha", complex_json(entry.alpha)},
                                   {"v", entry.v},
                                   {"theta", complex_json(entry.theta)},
                                   {"exp_residual", resid},
                                   {"tolerance", 1e-10}});
  }
  report["entries"] = std::move(entries);
  report["checks"].push_back(check_json(
      "spectrum_defining_relation", worst < 1e-10,
      "exp(theta log r) reproduces alpha for every entry", worst, 1e-10));
  report["passed"] = checks_passed(report);
  return report;
}

Report cmd_check(const SystemConfig& cfg) {
  Report report = base_report("check", cfg);
  const CohomologyAction act = cfg.make_action();
  append_action_checks(report, act);
  const auto params = cfg.flow();
  const auto z = zeta::build_zeta(act);
  const auto eigen = cohomology::eigen_degrees(act, cfg.precision);

  double rho = 0.0;
  for (const auto& degree_eigen : eigen)
    for (const cplx& alpha : degree_eigen) rho = std::max(rho, std::abs(alpha));
  // A real base point comfortably inside the convergence domain.
  const double s_conv = std::log(std::max(rho, 1.0)) / params.log_r + 2.0;

  // Lefschetz numbers against exact determinants (toral only).
  if (cfg.fiber.kind == FiberConfig::Kind::toral) {
    const auto& a = cfg.fiber.matrix;
    bool ok = true;
    std::string detail = "Lambda(phi^m) = det(I - A^m) exactly for m <= 12";
    for (unsigned m = 1; m <= 12 && ok; ++m) {
      const Int lhs = cohomology::lefschetz_number(act, m);
      const Int rhs = linalg::det_exact(
          linalg::IntMatrix::identity(a.dim()) - linalg::mat_pow(a, m));
      if (lhs != rhs) {
        ok = false;
        detail = "mismatch at m = " + std::to_string(m) + ": " + lhs.str() +
                 " vs " + rhs.str();
      }
    }
    report["checks"].push_back(check_json("lefschetz_equals_det", ok, detail));

    const auto screen = cohomology::anosov_check(a);
    if (screen.all_passed()) {
      const auto table = dynamics::orbit_table(a, 40, params);
      const cplx reference = zeta::evaluate(z, s_conv, params);
      auto cmp = euler_comparison(table, s_conv, params, reference, 1e-8);
      report["checks"].push_back(check_json(
          "euler_product_vs_rational", cmp["pass"].get<bool>(),
          "truncated Euler product (m_max 40) against the rational value "
          "at s = " + fmt_double(s_conv),
          cmp["residual"].get<double>(), 1e-8));
      report["euler_product"] = std::move(cmp);
    } else {
      report["notes"].push_back(
          "euler product check skipped: hyperbolicity screen failed");
    }
  } else {
    report["notes"].push_back(
        "lefschetz/euler-product checks skipped: explicit actions carry no "
        "monodromy");
  }

  // Regularized-product kernel: two-route agreement on the standard grid.
  {
    const double log2 = std::log(2.0);
    const std::vector<cplx> etas{{0.0, 1.0},
                                 {0.0, 2.0 * 3.14159265358979323846 / log2},
                                 {0.0, -1.0},
                                 {1.0, 1.0}};
    const std::vector<double> ss{0.1, 0.25, 0.5, 0.75, 0.9};
    double worst = 0.0;
    bool ok = true;
    std::string detail = "closed form vs Hurwitz-definitional route, 20 grid "
                         "points";
    try {
      for (const cplx& eta : etas)
        for (double s : ss) {
          const auto routes = special::regularized_product(eta, cplx(s, 0.0));
          worst = std::max(worst,
                           std::abs(routes.closed_form - routes.definitional));
        }
    } catch (const InconsistencyError& e) {
      ok = false;
      detail = e.what();
      worst = 1.0;
    }
    report["checks"].push_back(
        check_json("regularized_product_two_route", ok && worst < 1e-9,
                   detail, worst, 1e-9));
  }

  // Regularized-determinant product against the rational function.
  {
    const std::vector<cplx> points{s_conv, s_conv + 1.0, {s_conv, 1.0}};
    double worst = 0.0;
    bool ok = true;
    std::string detail =
        "prod regdet_factor^(+-1) against evaluate at 3 sample points";
    try {
      for (const cplx& s : points) {
        cplx product = 1.0;
        for (int i = 0; i <= act.fiber_dim(); ++i) {
          for (const cplx& alpha : eigen[static_cast<std::size_t>(i)]) {
            const cplx factor = special::regdet_factor(alpha, s, params.log_r);
            if (i % 2 == 0)
              product /= factor;
            else
              product *= factor;
          }
        }
        worst = std::max(worst,
                         std::abs(product - zeta::evaluate(z, s, params)));
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
      worst = 1.0;
    }
    report["checks"].push_back(check_json(
        "regdet_product_vs_rational", ok && worst < 1e-8, detail, worst,
        1e-8));
  }

  // Functional equation, symbolic and numeric. The stated form holds for
  // even-dimensional fibers (up to the middle-degree determinant sign);
  // for odd d the duality identities invert the product and the symmetry
  // reads zeta(s) zeta(-s) = 1.
  if (act.duality_enabled()) {
    const std::vector<cplx> points{
        {0.7, 0.3}, {1.2, -0.4}, {-0.9, 0.8}, {0.3, 1.7}, {1.1, 1.1},
        {-1.3, -0.2}};
    enum class Form { stated, middle_sign, reciprocal };
    Form form = Form::stated;
    bool symbolic_ok =
        zeta::functional_equation_residual_poly(z, act).is_zero();
    if (!symbolic_ok && act.fiber_dim() % 2 == 0) {
      const Int middle = linalg::det_exact(act.pullback(act.fiber_dim() / 2));
      if (middle == -1 &&
          zeta::functional_equation_residual_poly(z, act, -1).is_zero()) {
        symbolic_ok = true;
        form = Form::middle_sign;
      }
    }
    if (!symbolic_ok && act.fiber_dim() % 2 == 1 &&
        zeta::reciprocal_symmetry_residual_poly(z).is_zero()) {
      symbolic_ok = true;
      form = Form::reciprocal;
    }
    std::string detail;
    switch (form) {
      case Form::stated:
        detail = symbolic_ok
                     ? "u -> 1/u substitution yields the exact zero polynomial"
                     : "nonzero residual polynomial: " +
                           zeta::functional_equation_residual_poly(z, act)
                               .pretty("u");
        break;
      case Form::middle_sign:
        detail = "holds with det(phi*_{d/2}) = -1 absorbed into the sign";
        break;
      case Form::reciprocal:
        detail = "odd-dimensional fiber: duality inverts the product; "
                 "zeta(s) zeta(-s) = 1 verified exactly";
        break;
    }
    report["checks"].push_back(
        check_json("functional_equation_symbolic", symbolic_ok, detail));

    const long long chi = cohomology::euler_characteristic(act);
    const auto signed_residual = [&](cplx s, double sign) {
      const double parity = (chi % 2 == 0) ? 1.0 : -1.0;
      const cplx factor = sign * parity *
                          std::exp(s * (static_cast<double>(chi) *
                                        params.log_r));
      return std::abs(zeta::evaluate(z, s, params) -
                      factor * zeta::evaluate(z, -s, params));
    };
    double worst = 0.0;
    for (const cplx& s : points) {
      double resid;
      if (form == Form::reciprocal)
        resid = std::abs(zeta::reciprocal_symmetry_residual(z, s, params));
      else if (form == Form::middle_sign)
        resid = signed_residual(s, -1.0);
      else
        resid =
            std::abs(zeta::functional_equation_residual(z, act, s, params));
      worst = std::max(worst, resid);
    }
    report["checks"].push_back(check_json(
        "functional_equation_numeric", worst < 1e-10,
        form == Form::reciprocal
            ? "zeta(s) zeta(-s) - 1 at 6 sample points"
            : "zeta(s) - (-r^s)^chi zeta(-s) at 6 sample points",
        worst, 1e-10));
  } else {
    report["notes"].push_back(
        "functional equation skipped: action is not duality-enabled");
  }

  // Special-value series against the direct value at a convergent k.
  {
    const double k_conv = std::ceil(std::log(std::max(rho, 1.0) * 2.0) /
                                    params.log_r);
    const cplx k(k_conv, 0.0);
    const auto direct = zeta::special_value(z, act, k, params, cfg.precision);
    const auto series =
        zeta::special_value_series(act, k, params, 60, cfg.precision);
    if (series.accepted) {
      const double resid = std::abs(series.value - direct.value);
      report["checks"].push_back(check_json(
          "special_value_series_vs_direct", resid < 1e-6,
          "Lefschetz series (m_max 60) against the factor-wise limit at "
          "k = " + fmt_double(k_conv),
          resid, 1e-6));
    } else {
      report["checks"].push_back(check_json(
          "special_value_series_vs_direct", false,
          "series unexpectedly refused at k = " + fmt_double(k_conv) +
              ": " + series.refusal));
    }
  }

  report["passed"] = checks_passed(report);
  return report;
}

bool report_passed(const Report& report) {
  return report.contains("passed") && report["passed"].get<bool>();
}

void render_json(const Report& report, std::ostream& os) {
  os << report.dump(2) << "\n";
}

namespace {

int report_precision(const Report& report) {
  if (report.contains("config") && report["config"].contains("precision"))
    return report["config"]["precision"].get<int>();
  return 12;
}

std::string cell(const ordered_json& v, int precision) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_number_integer())
    return std::to_string(v.get<long long>());
  if (v.is_number_float()) {
    std::ostringstream os;
    os << std::setprecision(precision) << v.get<double>();
    return os.str();
  }
  if (v.is_object() && v.contains("re"))
    return fmt_complex(cplx(v["re"].get<double>(), v["im"].get<double>()),
                       precision);
  return v.dump();
}

void render_table(std::ostream& os, const std::vector<std::string>& columns,
                  const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) widths[c] = columns[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  os << "  ";
  for (std::size_t c = 0; c < columns.size(); ++c)
    os << std::left << std::setw(static_cast<int>(widths[c]) + 2) << columns[c];
  os << "\n";
  for (const auto& row : rows) {
    os << "  ";
    for (std::size_t c = 0; c < row.size(); ++c)
      os << std::left << std::setw(static_cast<int>(widths[c]) + 2) << row[c];
    os << "\n";
  }
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// The primary table of each command, shared by the text and CSV writers.
Table primary_table(const Report& report) {
  const int precision = report_precision(report);
  const std::string command = report["command"].get<std::string>();
  Table t;
  if (command == "orbits" && report.contains("orbit_table")) {
    t.columns = {"m", "fix_signed", "fix_unsigned", "exact_period_points",
                 "orbit_count", "log_norm"};
    for (const auto& row : report["orbit_table"]["rows"])
      t.rows.push_back({cell(row["m"], precision),
                        cell(row["fix_signed"], precision),
                        cell(row["fix_unsigned"], precision),
                        cell(row["exact_period_points"], precision),
                        cell(row["orbit_count"], precision),
                        cell(row["log_norm"], precision)});
  } else if (command == "zeta" && report.contains("evaluations")) {
    t.columns = {"s", "status", "value", "euler_residual"};
    for (const auto& e : report["evaluations"]) {
      std::string value = e.contains("value") ? cell(e["value"], precision)
                          : e.contains("order")
                              ? "pole (order " + cell(e["order"], precision) +
                                    ")"
                              : "-";
      std::string euler = "-";
      if (e.contains("euler_product")) {
        const auto& ep = e["euler_product"];
        euler = ep.contains("residual") ? cell(ep["residual"], 3)
                                        : "refused";
      }
      t.rows.push_back({cell(e["s"], precision),
                        e["status"].get<std::string>(), value, euler});
    }
  } else if (command == "spectrum" && report.contains("entries")) {
    t.columns = {"degree", "alpha", "v", "theta", "exp_residual"};
    for (const auto& e : report["entries"])
      t.rows.push_back({cell(e["degree"], precision),
                        cell(e["alpha"], precision), cell(e["v"], precision),
                        cell(e["theta"], precision),
                        cell(e["exp_residual"], 3)});
  } else if (command == "special") {
    t.columns = {"k", "order", "direct", "exact", "series", "series_status"};
    const auto& direct = report["direct"];
    std::string series_value = "-";
    std::string series_status = "-";
    if (report.contains("series")) {
      const auto& s = report["series"];
      series_status = s["accepted"].get<bool>() ? "accepted" : "refused";
      if (s.contains("value")) series_value = cell(s["value"], precision);
    }
    t.rows.push_back({cell(report["k"], precision),
                      cell(report["order"], precision),
                      cell(direct["value"], precision),
                      direct.contains("exact")
                          ? direct["exact"].get<std::string>()
                          : "-",
                      series_value, series_status});
  } else {
    t.columns = {"check", "pass", "detail"};
    for (const auto& c : report["checks"])
      t.rows.push_back({c["name"].get<std::string>(),
                        c["pass"].get<bool>() ? "PASS" : "FAIL",
                        c["detail"].get<std::string>()});
  }
  return t;
}

}  // namespace

void render_text(const Report& report, std::ostream& os) {
  const int precision = report_precision(report);
  os << "torus-zeta " << report["command"].get<std::string>() << "\n";

  if (report.contains("config")) {
    const auto& cfg = report["config"];
    os << "system: fiber " << cfg["fiber"]["kind"].get<std::string>()
       << ", r = " << cell(cfg["r"], precision)
       << ", convention = " << cfg["convention"].get<std::string>() << "\n";
  }
  if (report.contains("duality_enabled"))
    os << "duality: "
       << (report["duality_enabled"].get<bool>() ? "enabled" : "disabled")
       << "\n";
  if (report.contains("euler_characteristic"))
    os << "euler characteristic: "
       << report["euler_characteristic"].get<long long>() << "\n";

  if (report.contains("factors")) {
    os << "zeta factors (u = r^-s):\n";
    for (const auto& f : report["factors"])
      os << "  degree " << f["degree"].get<int>() << ": ("
         << f["poly"].get<std::string>() << ")^"
         << (f["exponent"].get<int>() > 0 ? "+1" : "-1") << "\n";
  }

  if (!report["checks"].empty()) {
    os << "checks:\n";
    for (const auto& c : report["checks"]) {
      os << "  [" << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "] "
         << c["name"].get<std::string>() << ": "
         << c["detail"].get<std::string>();
      if (c.contains("residual"))
        os << " (residual " << cell(c["residual"], 3) << ", tolerance "
           << cell(c["tolerance"], 3) << ")";
      os << "\n";
    }
  }
  if (report.contains("anosov_certificate"))
    os << "certificate: " << report["anosov_certificate"].get<std::string>()
       << "\n";

  const Table t = primary_table(report);
  if (!t.rows.empty() &&
      !(report["command"] == "validate" || report["command"] == "check")) {
    os << "results:\n";
    render_table(os, t.columns, t.rows);
  }

  if (report.contains("notes") && !report["notes"].empty()) {
    os << "notes:\n";
    for (const auto& n : report["notes"])
      os << "  - " << n.get<std::string>() << "\n";
  }
  if (report.contains("passed"))
    os << (report["passed"].get<bool>() ? "all checks passed"
                                        : "SOME CHECKS FAILED")
       << "\n";
}

void render_csv(const Report& report, std::ostream& os) {
  const Table t = primary_table(report);
  auto escape = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += "\"\"";
      else out.push_back(ch);
    }
    out += "\"";
    return out;
  };
  for (std::size_t c = 0; c < t.columns.size(); ++c)
    os << (c ? "," : "") << escape(t.columns[c]);
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << (c ? "," : "") << escape(row[c]);
    os << "\n";
  }
}

}  // namespace tzeta::cli
