// torus-zeta: dynamical zeta functions of mapping tori over the circle.
//
// Subcommands: validate | orbits | zeta | special | spectrum | check.
// Exit codes: 0 success, 1 validation/check failure, 2 usage/parse error.

#include <complex>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "torus_zeta/commands.hpp"
#include "torus_zeta/config.hpp"
#include "torus_zeta/errors.hpp"

namespace {

using tzeta::cli::Report;

void emit(const Report& report, const std::string& format) {
  if (format == "json")
    tzeta::cli::render_json(report, std::cout);
  else if (format == "csv")
    tzeta::cli::render_csv(report, std::cout);
  else
    tzeta::cli::render_text(report, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynamical zeta function of a fiber bundle over the circle"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format = "text";
  std::string s_list = "2,3";
  std::string k_text = "0";
  std::string convention_override;
  int precision_override = -1;
  unsigned m_max = 10;
  unsigned compare_euler = 0;
  unsigned series_m_max = 60;
  int degree = 1;
  long v_min = -2, v_max = 2;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "system description file (JSON)")
        ->required();
    sub->add_option("--format", format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--convention", convention_override,
                    "signed | unsigned (overrides the config)")
        ->check(CLI::IsMember({"signed", "unsigned"}));
    sub->add_option("--precision", precision_override,
                    "working precision in digits (overrides the config)");
  };

  CLI::App* validate = app.add_subcommand("validate", "structural checks");
  add_common(validate);

  CLI::App* orbits =
      app.add_subcommand("orbits", "exact periodic-orbit table");
  add_common(orbits);
  orbits->add_option("--mmax", m_max, "largest period");

  CLI::App* zeta = app.add_subcommand("zeta", "factor polynomials and values");
  add_common(zeta);
  zeta->add_option("--s", s_list,
                   "comma-separated s values (a+bi); a:b:n is a real grid");
  zeta->add_option("--compare-euler", compare_euler,
                   "compare against the truncated Euler product (m_max)");

  CLI::App* special =
      app.add_subcommand("special", "order and special value at s = k");
  add_common(special);
  special->add_option("--k", k_text, "the point k (a+bi)");
  special->add_option("--mmax", series_m_max, "series truncation");

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "Theta-spectrum window for one degree");
  add_common(spectrum);
  spectrum->add_option("--degree", degree, "cohomological degree i");
  spectrum->add_option("--vmin", v_min, "window start");
  spectrum->add_option("--vmax", v_max, "window end");

  CLI::App* check = app.add_subcommand("check", "run the full identity suite");
  add_common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    tzeta::cli::SystemConfig cfg = tzeta::cli::load_config_file(config_path);
    if (!convention_override.empty())
      cfg.convention = convention_override == "signed"
                           ? tzeta::dynamics::Convention::Signed
                           : tzeta::dynamics::Convention::Unsigned;
    if (precision_override > 0) cfg.precision = precision_override;

    Report report;
    if (validate->parsed()) {
      report = tzeta::cli::cmd_validate(cfg);
    } else if (orbits->parsed()) {
      report = tzeta::cli::cmd_orbits(cfg, m_max);
    } else if (zeta->parsed()) {
      report = tzeta::cli::cmd_zeta(
          cfg, tzeta::cli::parse_complex_list(s_list),
          compare_euler > 0 ? std::optional<unsigned>(compare_euler)
                            : std::nullopt);
    } else if (special->parsed()) {
      report = tzeta::cli::cmd_special(cfg, tzeta::cli::parse_complex(k_text),
                                       series_m_max);
    } else if (spectrum->parsed()) {
      report = tzeta::cli::cmd_spectrum(cfg, degree, v_min, v_max);
    } else if (check->parsed()) {
      report = tzeta::cli::cmd_check(cfg);
    }

    emit(report, format);
    return tzeta::cli::report_passed(report) ? 0 : 1;
  } catch (const tzeta::cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
