#include "torus_zeta/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace tzeta::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Int parse_int_entry(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::exception&) {
      throw ConfigError(where + ": '" + v.get<std::string>() +
                        "' is not a decimal integer");
    }
  }
  throw ConfigError(where + ": matrix entries must be integers or decimal "
                            "strings");
}

linalg::IntMatrix parse_matrix(const json& rows, const std::string& where) {
  if (!rows.is_array())
    throw ConfigError(where + ": expected an array of rows");
  const std::size_t n = rows.size();
  std::vector<Int> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n)
      throw ConfigError(where + ": matrix must be square");
    for (const auto& v : row) entries.push_back(parse_int_entry(v, where));
  }
  return linalg::IntMatrix(n, std::move(entries));
}

ordered_json matrix_echo(const linalg::IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

dynamics::FlowParams SystemConfig::flow() const {
  return r_is_e ? dynamics::FlowParams::euler_scale(convention)
                : dynamics::FlowParams::from_scale(r, convention);
}

cohomology::CohomologyAction SystemConfig::make_action() const {
  if (fiber.kind == FiberConfig::Kind::toral)
    return cohomology::CohomologyAction::from_toral(fiber.matrix);
  return cohomology::CohomologyAction::from_explicit(fiber.d, fiber.betti,
                                                     fiber.matrices);
}

ordered_json SystemConfig::echo() const {
  ordered_json out;
  if (fiber.kind == FiberConfig::Kind::toral) {
    out["fiber"] = {{"kind", "toral"}, {"matrix", matrix_echo(fiber.matrix)}};
  } else {
    ordered_json mats = ordered_json::array();
    for (const auto& m : fiber.matrices) mats.push_back(matrix_echo(m));
    out["fiber"] = {{"kind", "explicit"},
                    {"d", fiber.d},
                    {"betti", fiber.betti},
                    {"matrices", std::move(mats)}};
  }
  if (r_is_e)
    out["r"] = "e";
  else
    out["r"] = r;
  out["convention"] =
      convention == dynamics::Convention::Signed ? "signed" : "unsigned";
  out["precision"] = precision;
  return out;
}

SystemConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  if (!j.contains("fiber")) throw ConfigError("config: missing 'fiber'");
  const json& fiber = j.at("fiber");
  if (!fiber.is_object() || !fiber.contains("kind"))
    throw ConfigError("config: fiber needs a 'kind'");

  SystemConfig cfg;
  const std::string kind = fiber.at("kind").get<std::string>();
  if (kind == "toral") {
    if (!fiber.contains("matrix"))
      throw ConfigError("config: toral fiber needs 'matrix'");
    cfg.fiber.kind = FiberConfig::Kind::toral;
    cfg.fiber.matrix = parse_matrix(fiber.at("matrix"), "fiber.matrix");
    if (cfg.fiber.matrix.dim() == 0)
      throw ConfigError("config: toral matrix must be non-empty");
  } else if (kind == "explicit") {
    cfg.fiber.kind = FiberConfig::Kind::explicit_matrices;
    if (!fiber.contains("d") || !fiber.contains("betti") ||
        !fiber.contains("matrices"))
      throw ConfigError("config: explicit fiber needs 'd', 'betti', "
                        "'matrices'");
    cfg.fiber.d = fiber.at("d").get<int>();
    cfg.fiber.betti = fiber.at("betti").get<std::vector<int>>();
    for (std::size_t i = 0; i < fiber.at("matrices").size(); ++i)
      cfg.fiber.matrices.push_back(
          parse_matrix(fiber.at("matrices")[i],
                       "fiber.matrices[" + std::to_string(i) + "]"));
  } else {
    throw ConfigError("config: fiber kind must be 'toral' or 'explicit'");
  }

  if (!j.contains("r")) throw ConfigError("config: missing 'r'");
  const json& r = j.at("r");
  if (r.is_string()) {
    if (r.get<std::string>() != "e")
      throw ConfigError("config: the only symbolic r is the literal \"e\"");
    cfg.r_is_e = true;
    cfg.r = std::exp(1.0);
  } else if (r.is_number()) {
    cfg.r = r.get<double>();
    if (!(cfg.r > 1.0))
      throw ConfigError("config: the suspension scale needs r > 1");
  } else {
    throw ConfigError("config: 'r' must be a number > 1 or \"e\"");
  }

  if (j.contains("convention")) {
    const std::string c = j.at("convention").get<std::string>();
    if (c == "signed")
      cfg.convention = dynamics::Convention::Signed;
    else if (c == "unsigned")
      cfg.convention = dynamics::Convention::Unsigned;
    else
      throw ConfigError("config: convention must be 'signed' or 'unsigned'");
  }
  if (j.contains("precision")) {
    cfg.precision = j.at("precision").get<int>();
    if (cfg.precision < 1 || cfg.precision > 15)
      throw ConfigError("config: precision must be between 1 and 15 digits");
  }
  return cfg;
}

SystemConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error in " + path + ": " + e.what());
  }
  return parse_config(j);
}

std::complex<double> parse_complex(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw ConfigError("empty complex literal");

  // Split into a real part and an optional trailing imaginary part.
  const bool has_i = t.back() == 'i' || t.back() == 'I';
  if (!has_i) {
    std::size_t pos = 0;
    double re = 0.0;
    try {
      re = std::stod(t, &pos);
    } catch (const std::exception&) {
      throw ConfigError("bad complex literal: '" + text + "'");
    }
    if (pos != t.size())
      throw ConfigError("bad complex literal: '" + text + "'");
    return {re, 0.0};
  }

  t.pop_back();  // drop 'i'
  // Find the split point: the last +/- not in an exponent and not leading.
  std::size_t split = std::string::npos;
  for (std::size_t p = t.size(); p-- > 1;) {
    if ((t[p] == '+' || t[p] == '-') && t[p - 1] != 'e' && t[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  double re = 0.0;
  std::string imag_text;
  if (split == std::string::npos) {
    imag_text = t;
  } else {
    std::size_t pos = 0;
    const std::string real_text = t.substr(0, split);
    try {
      re = std::stod(real_text, &pos);
    } catch (const std::exception&) {
      throw ConfigError("bad complex literal: '" + text + "'");
    }
    if (pos != real_text.size())
      throw ConfigError("bad complex literal: '" + text + "'");
    imag_text = t.substr(split);
  }
  if (imag_text.empty() || imag_text == "+")
    return {re, 1.0};
  if (imag_text == "-") return {re, -1.0};
  std::size_t pos = 0;
  double im = 0.0;
  try {
    im = std::stod(imag_text, &pos);
  } catch (const std::exception&) {
    throw ConfigError("bad complex literal: '" + text + "'");
  }
  if (pos != imag_text.size())
    throw ConfigError("bad complex literal: '" + text + "'");
  return {re, im};
}

std::vector<std::complex<double>> parse_complex_list(const std::string& text) {
  std::vector<std::complex<double>> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    const auto colon = token.find(':');
    if (colon != std::string::npos) {
      // Real grid a:b:n.
      const auto colon2 = token.find(':', colon + 1);
      if (colon2 == std::string::npos)
        throw ConfigError("grid token needs the form start:stop:count");
      const double a = std::stod(token.substr(0, colon));
      const double b = std::stod(token.substr(colon + 1, colon2 - colon - 1));
      const long n = std::stol(token.substr(colon2 + 1));
      if (n < 2) throw ConfigError("grid count must be at least 2");
      for (long i = 0; i < n; ++i)
        out.emplace_back(a + (b - a) * static_cast<double>(i) /
                                 static_cast<double>(n - 1),
                         0.0);
    } else {
      out.push_back(parse_complex(token));
    }
  }
  if (out.empty()) throw ConfigError("empty s-list");
  return out;
}

}  // namespace tzeta::cli
