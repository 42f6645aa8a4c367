#include <doctest.h>

#include <complex>
#include <sstream>

#include "torus_zeta/commands.hpp"
#include "torus_zeta/config.hpp"
#include "torus_zeta/errors.hpp"

using namespace tzeta;
using cli::SystemConfig;
using nlohmann::json;

namespace {

SystemConfig cat_config(const std::string& r = "\"e\"") {
  return cli::parse_config(json::parse(
      R"({"fiber": {"kind": "toral", "matrix": [[2,1],[1,1]]}, "r": )" + r +
      "}"));
}

}  // namespace

TEST_CASE("config parsing: toral") {
  const SystemConfig cfg = cat_config();
  CHECK(cfg.fiber.kind == cli::FiberConfig::Kind::toral);
  CHECK(cfg.fiber.matrix == linalg::IntMatrix{{2, 1}, {1, 1}});
  CHECK(cfg.r_is_e);
  CHECK(cfg.flow().log_r == 1.0);
  CHECK(cfg.convention == dynamics::Convention::Signed);
  CHECK(cfg.precision == 12);
}

TEST_CASE("config parsing: explicit fiber with big-integer strings") {
  const auto cfg = cli::parse_config(json::parse(R"({
    "fiber": {"kind": "explicit", "d": 1, "betti": [1, 1],
              "matrices": [[["1"]], [["123456789012345678901234567890"]]]},
    "r": 2.5, "convention": "unsigned", "precision": 9})"));
  CHECK(cfg.fiber.kind == cli::FiberConfig::Kind::explicit_matrices);
  CHECK(cfg.fiber.matrices[1].at(0, 0) ==
        Int("123456789012345678901234567890"));
  CHECK(cfg.convention == dynamics::Convention::Unsigned);
  CHECK(cfg.precision == 9);
}

TEST_CASE("config parsing rejects bad input") {
  CHECK_THROWS_AS(cli::parse_config(json::parse(
                      R"({"fiber": {"kind": "toral",
                          "matrix": [[1,0],[0,1]]}, "r": 0.5})")),
                  cli::ConfigError);
  CHECK_THROWS_AS(cli::parse_config(json::parse(
                      R"({"fiber": {"kind": "toral",
                          "matrix": [[1,0]]}, "r": 2})")),
                  cli::ConfigError);
  CHECK_THROWS_AS(cli::parse_config(json::parse(R"({"r": 2})")),
                  cli::ConfigError);
  CHECK_THROWS_AS(cli::parse_config(json::parse(
                      R"({"fiber": {"kind": "toral",
                          "matrix": [[2,1],[1,1]]}, "r": "pi"})")),
                  cli::ConfigError);
}

TEST_CASE("complex literal parsing") {
  using cli::parse_complex;
  CHECK(parse_complex("3") == std::complex<double>(3, 0));
  CHECK(parse_complex("-1.5") == std::complex<double>(-1.5, 0));
  CHECK(parse_complex("2+1i") == std::complex<double>(2, 1));
  CHECK(parse_complex("2-0.5i") == std::complex<double>(2, -0.5));
  CHECK(parse_complex("3i") == std::complex<double>(0, 3));
  CHECK(parse_complex("i") == std::complex<double>(0, 1));
  CHECK(parse_complex("-i") == std::complex<double>(0, -1));
  CHECK(parse_complex("2+i") == std::complex<double>(2, 1));
  CHECK(parse_complex("1e-3+2e2i") == std::complex<double>(1e-3, 2e2));
  CHECK_THROWS_AS(parse_complex("spam"), cli::ConfigError);

  const auto list = cli::parse_complex_list("2,3,2+1i");
  REQUIRE(list.size() == 3);
  CHECK(list[2] == std::complex<double>(2, 1));

  const auto grid = cli::parse_complex_list("0:1:5");
  REQUIRE(grid.size() == 5);
  CHECK(grid[0] == std::complex<double>(0, 0));
  CHECK(grid[4] == std::complex<double>(1, 0));
  CHECK(grid[2] == std::complex<double>(0.5, 0));
}

TEST_CASE("cmd_validate on the cat map") {
  const auto report = cli::cmd_validate(cat_config());
  CHECK(report["passed"].get<bool>());
  CHECK(report["duality_enabled"].get<bool>());
  CHECK(report.contains("anosov_certificate"));
  CHECK(cli::report_passed(report));
}

TEST_CASE("cmd_validate fails the shear") {
  const auto cfg = cli::parse_config(json::parse(
      R"({"fiber": {"kind": "toral", "matrix": [[1,1],[0,1]]}, "r": 2})"));
  const auto report = cli::cmd_validate(cfg);
  CHECK(!report["passed"].get<bool>());
  CHECK(!cli::report_passed(report));
}

TEST_CASE("cmd_orbits emits the exact cat-map rows") {
  const auto report = cli::cmd_orbits(cat_config(), 3);
  REQUIRE(report["orbit_table"]["rows"].size() == 3);
  const auto& rows = report["orbit_table"]["rows"];
  CHECK(rows[0]["fix_signed"] == "-1");
  CHECK(rows[0]["fix_unsigned"] == "1");
  CHECK(rows[0]["exact_period_points"] == "1");
  CHECK(rows[0]["orbit_count"] == "1");
  CHECK(rows[1]["fix_signed"] == "-5");
  CHECK(rows[1]["orbit_count"] == "2");
  CHECK(rows[2]["fix_signed"] == "-16");
  CHECK(rows[2]["exact_period_points"] == "15");
  CHECK(rows[2]["orbit_count"] == "5");
  CHECK(report["passed"].get<bool>());
}

TEST_CASE("cmd_orbits refuses non-hyperbolic monodromy") {
  const auto cfg = cli::parse_config(json::parse(
      R"({"fiber": {"kind": "toral", "matrix": [[1,1],[0,1]]}, "r": 2})"));
  const auto report = cli::cmd_orbits(cfg, 5);
  CHECK(!report["passed"].get<bool>());
  CHECK(!report.contains("orbit_table"));
}

TEST_CASE("cmd_zeta evaluations with the Euler comparison") {
  const auto report =
      cli::cmd_zeta(cat_config(), {std::complex<double>(3, 0)}, 40u);
  CHECK(report["passed"].get<bool>());
  const auto& entry = report["evaluations"][0];
  CHECK(entry["status"] == "ok");
  CHECK(entry["value"]["re"].get<double>() ==
        doctest::Approx(0.9448589944979402).epsilon(1e-12));
  REQUIRE(entry.contains("euler_product"));
  CHECK(entry["euler_product"]["pass"].get<bool>());
  CHECK(entry["euler_product"]["residual"].get<double>() < 1e-8);
  CHECK(entry["euler_product"]["tolerance"].get<double>() == 1e-8);
}

TEST_CASE("cmd_zeta records an Euler refusal outside the convergence domain") {
  const auto report =
      cli::cmd_zeta(cat_config(), {std::complex<double>(0.5, 0)}, 10u);
  const auto& entry = report["evaluations"][0];
  CHECK(entry["status"] == "ok");
  REQUIRE(entry.contains("euler_product"));
  CHECK(entry["euler_product"].contains("refused"));
  CHECK(report["passed"].get<bool>());
}

TEST_CASE("cmd_zeta reports poles with their order") {
  const auto report =
      cli::cmd_zeta(cat_config(), {std::complex<double>(0, 0)}, std::nullopt);
  const auto& entry = report["evaluations"][0];
  CHECK(entry["status"] == "pole");
  CHECK(entry["order"].get<int>() == -2);
  CHECK(report["passed"].get<bool>());  // a pole report is not a failure
}

TEST_CASE("cmd_special at r = 10, k = 1") {
  const auto report = cli::cmd_special(cat_config("10"),
                                       std::complex<double>(1, 0), 60);
  CHECK(report["passed"].get<bool>());
  CHECK(report["order"].get<int>() == 0);
  CHECK(report["direct"]["exact"] == "71/81");
  CHECK(report["series"]["accepted"].get<bool>());
}

TEST_CASE("cmd_special refuses the divergent series at k = 0") {
  const auto report =
      cli::cmd_special(cat_config(), std::complex<double>(0, 0), 60);
  CHECK(report["order"].get<int>() == -2);
  CHECK(report["direct"]["exact"] == "-1");
  CHECK(!report["series"]["accepted"].get<bool>());
  CHECK(report["series"]["refusal"].get<std::string>().find(">=") !=
        std::string::npos);
  CHECK(report["passed"].get<bool>());  // the refusal is the correct outcome
}

TEST_CASE("cmd_spectrum entries satisfy the defining relation") {
  const auto report = cli::cmd_spectrum(cat_config(), 1, -1, 1);
  CHECK(report["passed"].get<bool>());
  REQUIRE(report["entries"].size() == 6);
  for (const auto& e : report["entries"]) {
    CHECK(e["exp_residual"].get<double>() < 1e-10);
    CHECK(e["tolerance"].get<double>() == 1e-10);
  }
}

TEST_CASE("cmd_check passes for the cat map and the genus-2 action") {
  CHECK(cli::cmd_check(cat_config())["passed"].get<bool>());

  const auto g2 = cli::parse_config(json::parse(R"({
    "fiber": {"kind": "explicit", "d": 2, "betti": [1, 4, 1],
              "matrices": [[[1]],
                           [[2,1,0,0],[1,1,0,0],[0,0,2,1],[0,0,1,1]],
                           [[1]]]},
    "r": 2})"));
  CHECK(cli::cmd_check(g2)["passed"].get<bool>());
}

TEST_CASE("report JSON round-trip preserves exact fields bit-for-bit") {
  const auto report = cli::cmd_zeta(cat_config(),
                                    {std::complex<double>(2, 0),
                                     std::complex<double>(3, 0)},
                                    30u);
  const std::string dumped = report.dump();
  const auto reread = nlohmann::ordered_json::parse(dumped);
  CHECK(reread == report);
  CHECK(reread["numerator"] == report["numerator"]);
  CHECK(reread["factors"][1]["coefficients"][1].get<std::string>() == "-3");
  CHECK(reread.dump() == dumped);

  const auto orbit_report = cli::cmd_orbits(cat_config(), 8);
  const auto orbit_reread =
      nlohmann::ordered_json::parse(orbit_report.dump());
  for (std::size_t m = 0; m < 8; ++m)
    CHECK(orbit_reread["orbit_table"]["rows"][m]["fix_unsigned"] ==
          orbit_report["orbit_table"]["rows"][m]["fix_unsigned"]);
}

TEST_CASE("text and csv renderers produce the primary table") {
  const auto report = cli::cmd_orbits(cat_config(), 3);
  std::ostringstream text;
  cli::render_text(report, text);
  CHECK(text.str().find("fix_signed") != std::string::npos);
  CHECK(text.str().find("-16") != std::string::npos);

  std::ostringstream csv;
  cli::render_csv(report, csv);
  CHECK(csv.str().rfind("m,fix_signed,fix_unsigned", 0) == 0);
  CHECK(csv.str().find("3,-16,16,15,5,") != std::string::npos);
}
