#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace magws::wb {

SuiteResult run_convolution(const Config& cfg);
SuiteResult run_algebra(const Config& cfg);
SuiteResult run_calculus(const Config& cfg);
SuiteResult run_spectrum(const Config& cfg);
SuiteResult run_traces(const Config& cfg);
// pairs from connes_pair_names(); empty selects all
SuiteResult run_connes(const Config& cfg, const std::vector<std::string>& pairs = {});

const std::vector<std::string>& suite_names();
const std::vector<std::string>& connes_pair_names();
SuiteResult run_suite(const std::string& name, const Config& cfg, const std::vector<std::string>& pairs = {});

// Tables written by the laguerre and gamma-table commands.
struct LaguerreTables {
  std::string orthonormality_csv;  // n, m, max residual against every (n', m')
  std::string samples_csv;         // n, m, x1, x2, re, im
  double max_residual = 0.0;
};

LaguerreTables laguerre_tables(const Config& cfg, int max_index);

const std::vector<std::string>& gamma_case_names();
// rows N = 2^4 .. 2^20; throws std::invalid_argument for an unknown case
std::vector<GammaRow> gamma_table(const std::string& name, const Config& cfg, double eps);

}  // namespace magws::wb
