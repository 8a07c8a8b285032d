#include "config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "magws/serialize.hpp"

namespace magws::wb {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  const std::string t = trim(v);
  char* end = nullptr;
  errno = 0;
  const double d = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || errno != 0 || !std::isfinite(d))
    throw ConfigError("invalid number for " + key + ": '" + v + "'");
  return d;
}

long long to_integer(const std::string& key, const std::string& v) {
  const std::string t = trim(v);
  char* end = nullptr;
  errno = 0;
  const long long n = std::strtoll(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size() || errno != 0)
    throw ConfigError("invalid integer for " + key + ": '" + v + "'");
  return n;
}

double positive(const std::string& key, double d) {
  if (!(d > 0.0)) throw ConfigError(key + " must be positive");
  return d;
}

}  // namespace

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double("epsilon_list", item));
  if (out.empty()) throw ConfigError("epsilon_list is empty");
  return out;
}

void set_value(Config& c, const std::string& key, const std::string& value) {
  if (key == "ell_B") {
    c.params.ell_B = positive(key, to_double(key, value));
  } else if (key == "energy_B") {
    c.params.energy_B = positive(key, to_double(key, value));
  } else if (key == "epsilon_list") {
    c.epsilon_list = parse_double_list(value);
    // |D_eps| needs eps > 0 on the varpi = -1 component
    for (double e : c.epsilon_list)
      if (!(e > 0.0)) throw ConfigError("epsilon_list entries must be positive");
  } else if (key == "block_cutoff_J") {
    const long long j = to_integer(key, value);
    if (j < 1 || j > 400) throw ConfigError("block_cutoff_J must lie in [1, 400]");
    c.block_cutoff_J = int(j);
  } else if (key == "rect_cutoff") {
    c.rect_cutoff = to_integer(key, value);
    if (c.rect_cutoff < 64) throw ConfigError("rect_cutoff must be at least 64");
  } else if (key == "nmax_dixmier") {
    c.nmax_dixmier = to_integer(key, value);
    if (c.nmax_dixmier < 64) throw ConfigError("nmax_dixmier must be at least 64");
  } else if (key == "quad_degree") {
    const long long d = to_integer(key, value);
    if (d < 4 || d > 120) throw ConfigError("quad_degree must lie in [4, 120]");
    c.quad_degree = int(d);
  } else if (key == "tol_quadrature") {
    c.tol_quadrature = positive(key, to_double(key, value));
  } else if (key == "tol_dixmier_analytic") {
    c.tol_dixmier_analytic = positive(key, to_double(key, value));
  } else if (key == "tol_dixmier_matrix") {
    c.tol_dixmier_matrix = positive(key, to_double(key, value));
  } else if (key == "out_dir") {
    if (trim(value).empty()) throw ConfigError("out_dir is empty");
    c.out_dir = trim(value);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

Config parse_config(const std::string& text, Config base) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    try {
      set_value(base, key, trim(line.substr(eq + 1)));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return base;
}

Config load_config(const std::string& path, Config base) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config file " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

std::vector<std::pair<std::string, std::string>> config_echo(const Config& c) {
  std::string eps;
  for (std::size_t i = 0; i < c.epsilon_list.size(); ++i)
    eps += (i ? "," : "") + format_json_number(c.epsilon_list[i]);
  return {
      {"ell_B", format_json_number(c.params.ell_B)},
      {"energy_B", format_json_number(c.params.energy_B)},
      {"epsilon_list", eps},
      {"block_cutoff_J", std::to_string(c.block_cutoff_J)},
      {"rect_cutoff", std::to_string(c.rect_cutoff)},
      {"nmax_dixmier", std::to_string(c.nmax_dixmier)},
      {"quad_degree", std::to_string(c.quad_degree)},
      {"tol_quadrature", format_json_number(c.tol_quadrature)},
      {"tol_dixmier_analytic", format_json_number(c.tol_dixmier_analytic)},
      {"tol_dixmier_matrix", format_json_number(c.tol_dixmier_matrix)},
      {"out_dir", c.out_dir},
  };
}

}  // namespace magws::wb
