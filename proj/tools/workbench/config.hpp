#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "magws/params.hpp"

namespace magws::wb {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  MagneticParams params;
  std::vector<double> epsilon_list{0.5, 1.0, 2.0};
  int block_cutoff_J = 12;
  long long rect_cutoff = 65536;       // singular values materialised on the matrix path
  long long nmax_dixmier = 1000000;    // N_max of the analytic spectra
  int quad_degree = 24;
  double tol_quadrature = 1e-7;
  double tol_dixmier_analytic = 0.01;
  double tol_dixmier_matrix = 0.05;
  std::string out_dir = "magws_out";
};

// Flat "key = value" text, '#' starts a comment. Unknown keys and malformed
// values raise ConfigError.
Config parse_config(const std::string& text, Config base = {});
Config load_config(const std::string& path, Config base = {});
void set_value(Config& c, const std::string& key, const std::string& value);

// Keys in fixed order with canonical formatting.
std::vector<std::pair<std::string, std::string>> config_echo(const Config& c);

std::vector<double> parse_double_list(const std::string& text);

}  // namespace magws::wb
