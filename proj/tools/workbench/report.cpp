#include "report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "magws/serialize.hpp"

namespace magws::wb {

using ojson = nlohmann::ordered_json;

Case& Case::detail(std::string key, double v) {
  details.push_back({std::move(key), v, {}});
  return *this;
}

Case& Case::detail(std::string key, std::string text) {
  details.push_back({std::move(key), 0.0, std::move(text)});
  return *this;
}

Case equal_case(std::string name, std::string identity, cplx expected, cplx estimate, double tol,
                double residual) {
  Case c;
  c.name = std::move(name);
  c.identity = std::move(identity);
  c.kind = CaseKind::equal;
  c.expected = expected;
  c.estimate = estimate;
  c.tolerance = tol;
  c.residual = residual;
  c.pass = std::isfinite(std::abs(estimate)) && std::abs(estimate - expected) <= tol;
  return c;
}

Case at_most_case(std::string name, std::string identity, double bound, double estimate, double residual) {
  Case c;
  c.name = std::move(name);
  c.identity = std::move(identity);
  c.kind = CaseKind::at_most;
  c.expected = bound;
  c.estimate = estimate;
  c.residual = residual;
  c.pass = std::isfinite(estimate) && estimate <= bound;
  return c;
}

Case at_least_case(std::string name, std::string identity, double bound, double estimate, double residual) {
  Case c = at_most_case(std::move(name), std::move(identity), bound, estimate, residual);
  c.kind = CaseKind::at_least;
  c.pass = std::isfinite(estimate) && estimate >= bound;
  return c;
}

bool SuiteResult::all_pass() const {
  for (const auto& c : cases)
    if (!c.pass) return false;
  return true;
}

namespace {

const char* kind_name(CaseKind k) {
  switch (k) {
    case CaseKind::equal: return "equal";
    case CaseKind::at_most: return "at_most";
    case CaseKind::at_least: return "at_least";
  }
  return "equal";
}

// non-finite numbers become null
ojson num(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

ojson case_json(const std::string& prefix, const Case& c) {
  ojson j;
  j["name"] = prefix + c.name;
  j["identity"] = c.identity;
  j["kind"] = kind_name(c.kind);
  j["expected"] = num(c.expected.real());
  if (c.expected.imag() != 0.0) j["expected_imag"] = num(c.expected.imag());
  j["estimate"] = num(c.estimate.real());
  if (c.estimate.imag() != 0.0) j["estimate_imag"] = num(c.estimate.imag());
  j["deviation"] = num(c.kind == CaseKind::equal ? c.deviation() : 0.0);
  j["residual"] = num(c.residual);
  j["tolerance"] = num(c.tolerance);
  j["pass"] = c.pass;
  ojson d = ojson::object();
  for (const auto& x : c.details) {
    if (x.text.empty())
      d[x.key] = num(x.number);
    else
      d[x.key] = x.text;
  }
  j["details"] = d;
  return j;
}

}  // namespace

std::string report_json(const std::string& command, const Config& cfg, const std::vector<SuiteResult>& suites) {
  ojson root;
  root["schema_version"] = 1;
  root["command"] = command;
  ojson echo = ojson::object();
  for (const auto& [k, v] : config_echo(cfg)) echo[k] = v;
  root["config_echo"] = echo;
  ojson cases = ojson::array();
  long n = 0, passed = 0;
  const bool prefixed = suites.size() > 1;
  for (const auto& s : suites) {
    for (const auto& c : s.cases) {
      cases.push_back(case_json(prefixed ? s.suite + "/" : "", c));
      ++n;
      passed += c.pass ? 1 : 0;
    }
  }
  root["cases"] = cases;
  ojson summary;
  summary["cases"] = n;
  summary["passed"] = passed;
  summary["failed"] = n - passed;
  summary["pass"] = n == passed;
  root["summary"] = summary;
  return root.dump(2) + "\n";
}

std::string gamma_csv(const std::vector<SuiteResult>& suites) {
  CsvTable t;
  t.header = {"case", "eps", "N", "gamma_N"};
  const bool prefixed = suites.size() > 1;
  for (const auto& s : suites)
    for (const auto& r : s.gamma_rows)
      t.rows.push_back({(prefixed ? s.suite + "/" : "") + r.name, format_csv_number(r.eps), std::to_string(r.N),
                        format_csv_number(r.gamma)});
  return t.str();
}

std::string report_text(const std::vector<SuiteResult>& suites) {
  std::string out;
  char buf[64];
  for (const auto& s : suites) {
    for (const auto& c : s.cases) {
      out += c.pass ? "PASS " : "FAIL ";
      out += s.suite + "/" + c.name;
      std::snprintf(buf, sizeof buf, "  estimate=%.10g", c.estimate.real());
      out += buf;
      if (c.estimate.imag() != 0.0) {
        std::snprintf(buf, sizeof buf, "%+.3gi", c.estimate.imag());
        out += buf;
      }
      std::snprintf(buf, sizeof buf, " expected=%.10g", c.expected.real());
      out += buf;
      if (c.expected.imag() != 0.0) {
        std::snprintf(buf, sizeof buf, "%+.3gi", c.expected.imag());
        out += buf;
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace magws::wb
