// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Usage: magws_acceptance <path to magws> <scratch dir>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "magws/dirac.hpp"
#include "suites.hpp"

using namespace magws;
using namespace magws::wb;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Timed {
  SuiteResult result;
  double seconds = 0.0;
};

Timed timed_suite(const std::string& name, const Config& cfg) {
  const auto t0 = Clock::now();
  Timed t{run_suite(name, cfg), 0.0};
  t.seconds = seconds_since(t0);
  return t;
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

// all cases whose name satisfies sel pass; count of matched cases goes to n
bool all_pass(const SuiteResult& s, const std::function<bool(const std::string&)>& sel, int& n,
              std::string& failed) {
  bool ok = true;
  n = 0;
  for (const auto& c : s.cases) {
    if (!sel(c.name)) continue;
    ++n;
    if (!c.pass) {
      ok = false;
      failed += (failed.empty() ? "" : " ") + c.name;
    }
  }
  return ok && n > 0;
}

bool named(const SuiteResult& s, const std::vector<std::string>& names, std::string& failed) {
  int n = 0;
  bool ok = all_pass(
      s, [&](const std::string& c) { return std::find(names.begin(), names.end(), c) != names.end(); }, n, failed);
  if (n != int(names.size())) {
    failed += " (missing cases)";
    ok = false;
  }
  return ok;
}

int failures = 0;

void report(const std::string& id, bool pass, const std::string& what, const std::string& detail) {
  if (!pass) ++failures;
  std::cout << (pass ? "PASS " : "FAIL ") << id << "  " << what;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: magws_acceptance <magws> <scratch dir>\n";
    return 2;
  }
  const std::string exe = argv[1];
  const std::filesystem::path scratch = argv[2];
  std::filesystem::create_directories(scratch);

  Config cfg;  // defaults pin every tolerance
  cfg.out_dir = (scratch / "suites").string();

  const Timed conv = timed_suite("convolution", cfg);
  {
    std::string failed;
    const bool ok = named(conv.result, {"product_lemma"}, failed) && conv.seconds < 30.0;
    report("product_rule", ok, "product lemma, indices <= 3, 200 points, residual < " + fmt("%g", cfg.tol_quadrature) + ", < 30 s",
           fmt("%.2f s", conv.seconds) + (failed.empty() ? "" : "; failed: " + failed));
  }

  const Timed alg = timed_suite("algebra", cfg);
  {
    std::string failed;
    const bool ok = named(alg.result,
                          {"product_oracle", "associativity", "adjoint_antimultiplicative", "adjoint_involutive",
                           "trace_cyclic", "trace_positive", "upsilon_product"},
                          failed);
    report("algebra_oracle", ok, "algebra product matches quadrature convolution on 16 pairs; product, adjoint, trace identities",
           failed.empty() ? "" : "failed: " + failed);
  }
  {
    std::string failed;
    const bool ok = named(alg.result, {"projection_trace", "heat_trace"}, failed);
    report("trace_values", ok, "trace(Pi_n) = 1 for n <= 8; trace(heat(s)) = 1/(2 sinh(s/2)) to 1e-10",
           failed.empty() ? "" : "failed: " + failed);
  }
  {
    std::string failed;
    const bool ok = named(conv.result, {"tuv_disk_average"}, failed);
    report("trace_per_unit_volume", ok, "disk-average trace per unit volume equals <f,g>_B to 1e-6 for R in {1,2,4}",
           failed.empty() ? "" : "failed: " + failed);
  }

  {
    const auto t0 = Clock::now();
    const DiracBlocks blocks = build_dirac(12, cfg.params);
    const DiracSpectrum sp = spectrum(blocks);
    const int kdim = kernel_dimension(blocks);
    const double secs = seconds_since(t0);
    Config c12 = cfg;
    c12.block_cutoff_J = 12;
    const SuiteResult s = run_spectrum(c12);
    std::string failed;
    const bool ok = named(s, {"census_multiplicity", "census_deviation", "kernel_dimension"}, failed) && kdim == 1 &&
                    sp.max_deviation < 1e-10 && secs < 10.0;
    report("dirac_spectrum", ok, "J = 12: eigenvalues +-sqrt(j) with multiplicity 2j, dim ker D = 1, deviation < 1e-10, < 10 s",
           fmt("deviation %.2e", sp.max_deviation) + fmt(", %.3f s", secs) + (failed.empty() ? "" : "; failed: " + failed));
  }

  const Timed tr = timed_suite("traces", cfg);
  {
    std::string failed;
    int n = 0;
    const bool ok = all_pass(
                        tr.result,
                        [](const std::string& c) {
                          return starts_with(c, "q_inv_sq") || starts_with(c, "q_inv_pi") ||
                                 starts_with(c, "dirac_inv_4") || starts_with(c, "q_inv_ups_");
                        },
                        n, failed) &&
                    tr.seconds < 60.0;
    report("dixmier_analytic", ok, "analytic Dixmier traces at N_max = 1e6 for eps in {0.5,1,2}, with eps agreement, < 60 s",
           std::to_string(n) + fmt(" cases, %.2f s", tr.seconds) + (failed.empty() ? "" : "; failed: " + failed));
  }
  {
    std::string failed;
    int n = 0;
    const bool ok =
        all_pass(tr.result, [](const std::string& c) { return starts_with(c, "identity/"); }, n, failed) && n >= 36;
    report("trace_identities", ok, "trace and trace per unit volume against Dixmier traces with |D_eps|^-2, within 2%",
           std::to_string(n) + " cases" + (failed.empty() ? "" : "; failed: " + failed));
  }

  const Timed con = timed_suite("connes", cfg);
  {
    bool ok = true;
    std::string detail;
    int n_trace = 0, n_chi = 0, n_norm = 0;
    for (const auto& c : con.result.cases) {
      const bool pi0 = starts_with(c.name, "pi0_pi0/");
      if (c.name.find("/trace") != std::string::npos) {
        ++n_trace;
        if (!c.pass) ok = false;
        if (pi0) {
          const double v = c.estimate.real();
          if (!(v >= 3.8 && v <= 4.2)) ok = false;
          detail += fmt("%.4f ", v);
        }
      } else if (c.name.find("/chi_trace") != std::string::npos) {
        ++n_chi;
        if (!(std::abs(c.estimate) < 0.05)) ok = false;
      } else if (c.name.find("/normalization") != std::string::npos) {
        ++n_norm;
        std::string supported;
        for (const auto& d : c.details)
          if (d.key == "supported") supported = d.text;
        if (supported != "1/(4pi)") ok = false;
      }
      if (!c.pass) {
        ok = false;
        detail += "failed " + c.name + " ";
      }
    }
    if (n_trace == 0 || n_chi != n_trace || n_norm != n_trace) ok = false;
    report("connes_formula", ok,
           "(Pi0,Pi0) lhs in [3.8,4.2]; chi trace < 0.05; other pairs within 5%; data support the 2/l^2 constant",
           "Pi0 lhs " + detail + "over " + std::to_string(n_trace) + " pair/eps runs");
  }

  {
    const Timed calc = timed_suite("calculus", cfg);
    const Timed spec = timed_suite("spectrum", cfg);
    std::string failed;
    int n1 = 0, n2 = 0, n3 = 0;
    bool ok = all_pass(calc.result, [](const std::string&) { return true; }, n1, failed);
    ok = all_pass(
             spec.result,
             [](const std::string& c) {
               return starts_with(c, "phase_") || starts_with(c, "chirality_") || c == "clifford" ||
                      c == "graded_square" || c == "bounded_commutator";
             },
             n2, failed) &&
         ok;
    ok = all_pass(
             tr.result,
             [](const std::string& c) { return c == "sandwich_norm_2plus" || starts_with(c, "vanishing_"); }, n3,
             failed) &&
         ok;
    report("property_suites", ok, "CCR, Leibniz, star compatibility, trace of derivatives, integration by parts, F^2, chirality, "
                      "2+ norm < 2, vanishing probe < 0.02",
           std::to_string(n1 + n2 + n3) + " cases" + (failed.empty() ? "" : "; failed: " + failed));
  }

  {
    const std::filesystem::path out = scratch / "determinism";
    std::filesystem::remove_all(out);
    const std::vector<std::string> files = {"verify_all.json", "gamma_all.csv"};
    std::vector<std::string> first, second;
    const std::string cmd = quote(exe) + " verify all --out " + quote(out.string()) + " > " +
                            quote((scratch / "determinism.log").string()) + " 2>&1";
    const int rc1 = std::system(cmd.c_str());
    for (const auto& f : files) first.push_back(slurp(out / f));
    const int rc2 = std::system(cmd.c_str());
    for (const auto& f : files) second.push_back(slurp(out / f));
    bool ok = true;
    std::size_t bytes = 0;
    for (std::size_t i = 0; i < files.size(); ++i) {
      ok = ok && !first[i].empty() && first[i] == second[i];
      bytes += first[i].size();
    }
    report("determinism", ok, "two consecutive `verify all` runs give byte-identical JSON and CSV",
           std::to_string(bytes) + " bytes compared" + (rc1 || rc2 ? "; verify reported failing cases" : ""));
  }

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
