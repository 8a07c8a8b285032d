#pragma once

#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "magws/params.hpp"

namespace magws::wb {

enum class CaseKind { equal, at_most, at_least };

struct Detail {
  std::string key;
  double number = 0.0;
  std::string text;  // used when non-empty
};

struct Case {
  std::string name;
  std::string identity;  // what is being checked, in words
  CaseKind kind = CaseKind::equal;
  cplx expected;
  cplx estimate;
  double residual = 0.0;   // numerical residual of the estimate itself
  double tolerance = 0.0;
  bool pass = false;
  std::vector<Detail> details;

  double deviation() const { return std::abs(estimate - expected); }
  Case& detail(std::string key, double v);
  Case& detail(std::string key, std::string text);
};

// |estimate - expected| <= tol
Case equal_case(std::string name, std::string identity, cplx expected, cplx estimate, double tol,
                double residual = 0.0);
// estimate <= bound
Case at_most_case(std::string name, std::string identity, double bound, double estimate, double residual = 0.0);
Case at_least_case(std::string name, std::string identity, double bound, double estimate, double residual = 0.0);

struct GammaRow {
  std::string name;
  double eps = 0.0;
  long long N = 0;
  double gamma = 0.0;
};

struct SuiteResult {
  std::string suite;
  std::vector<Case> cases;
  std::vector<GammaRow> gamma_rows;

  bool all_pass() const;
  void add(Case c) { cases.push_back(std::move(c)); }
};

// Single JSON document; suites are flattened into "suite/case" names.
std::string report_json(const std::string& command, const Config& cfg, const std::vector<SuiteResult>& suites);
std::string gamma_csv(const std::vector<SuiteResult>& suites);
// One "PASS name" / "FAIL name" line per case.
std::string report_text(const std::vector<SuiteResult>& suites);

}  // namespace magws::wb
