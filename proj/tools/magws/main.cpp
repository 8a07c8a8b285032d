#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "config.hpp"
#include "magws/serialize.hpp"
#include "report.hpp"
#include "suites.hpp"

namespace wb = magws::wb;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Overrides {
  std::optional<int> J;
  std::string eps;
  std::optional<long long> nmax;
  std::optional<long long> rect;
  std::optional<int> quad_degree;
};

void apply(wb::Config& cfg, const Overrides& o) {
  if (o.J) wb::set_value(cfg, "block_cutoff_J", std::to_string(*o.J));
  if (!o.eps.empty()) wb::set_value(cfg, "epsilon_list", o.eps);
  if (o.nmax) wb::set_value(cfg, "nmax_dixmier", std::to_string(*o.nmax));
  if (o.rect) wb::set_value(cfg, "rect_cutoff", std::to_string(*o.rect));
  if (o.quad_degree) wb::set_value(cfg, "quad_degree", std::to_string(*o.quad_degree));
}

// "pi0,pi1" or "pi0_pi1" -> "pi0_pi1"
std::string pair_name(std::string s) {
  for (char& c : s)
    if (c == ',') c = '_';
  return s;
}

std::string join(const std::string& dir, const std::string& file) { return dir.empty() ? file : dir + "/" + file; }

wb::SuiteResult run_guarded(const std::string& suite, const wb::Config& cfg, const std::vector<std::string>& pairs) {
  try {
    return wb::run_suite(suite, cfg, pairs);
  } catch (const std::exception& e) {
    wb::SuiteResult r;
    r.suite = suite;
    wb::Case c;
    c.name = "error";
    c.identity = "suite completed without an exception";
    c.pass = false;
    c.detail("message", std::string(e.what()));
    r.add(c);
    return r;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical workbench for the magnetic operator algebra of the Landau Hamiltonian", "magws"};
  app.require_subcommand(1);
  std::string config_path, out_dir;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--out", out_dir, "output directory (overrides out_dir)");

  Overrides over;
  auto add_common = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("--quad-degree", over.quad_degree, "quadrature degree");
  };

  int max_index = 8;
  CLI::App* lag = app.add_subcommand("laguerre", "orthonormality residuals and psi samples as CSV");
  add_common(lag);
  lag->add_option("--max-index", max_index, "largest Laguerre index")->check(CLI::Range(0, 40));

  std::string suite;
  std::vector<std::string> pairs;
  CLI::App* ver = app.add_subcommand("verify", "run a verification suite and write a JSON report");
  add_common(ver);
  std::vector<std::string> suites = wb::suite_names();
  suites.push_back("all");
  ver->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suites));
  ver->add_option("--J", over.J, "Dirac block cutoff");
  ver->add_option("--eps", over.eps, "comma separated epsilon list");
  ver->add_option("--nmax", over.nmax, "N_max of the analytic spectra");
  ver->add_option("--rect", over.rect, "singular values on the matrix path");
  ver->add_option("--pair", pairs, "Connes pair, e.g. pi0,pi1 (repeatable)");

  std::string gamma_case;
  std::optional<double> gamma_eps;
  CLI::App* gam = app.add_subcommand("gamma-table", "gamma_N for N = 2^4 .. 2^20 as CSV");
  add_common(gam);
  gam->add_option("--case", gamma_case, "case name")->required();
  gam->add_option("--eps", gamma_eps, "shift (default: first entry of epsilon_list)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  wb::Config cfg;
  try {
    if (!config_path.empty()) cfg = wb::load_config(config_path);
    apply(cfg, over);
    if (!out_dir.empty()) wb::set_value(cfg, "out_dir", out_dir);
  } catch (const wb::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitUsage;
  }

  try {
    if (*lag) {
      const wb::LaguerreTables t = wb::laguerre_tables(cfg, max_index);
      magws::write_file_atomic(join(cfg.out_dir, "laguerre_orthonormality.csv"), t.orthonormality_csv);
      magws::write_file_atomic(join(cfg.out_dir, "laguerre_samples.csv"), t.samples_csv);
      const bool ok = t.max_residual < 1e-9;
      std::printf("%s laguerre/orthonormality max_residual=%.3e (max-index %d)\n", ok ? "PASS" : "FAIL", t.max_residual,
                  max_index);
      return ok ? 0 : kExitFail;
    }
    if (*ver) {
      std::vector<std::string> pair_names;
      for (const auto& p : pairs) {
        const std::string n = pair_name(p);
        bool known = false;
        for (const auto& k : wb::connes_pair_names()) known = known || k == n;
        if (!known) {
          std::fprintf(stderr, "unknown pair '%s'\n", p.c_str());
          return kExitUsage;
        }
        pair_names.push_back(n);
      }
      std::vector<wb::SuiteResult> results;
      if (suite == "all") {
        for (const auto& s : wb::suite_names()) results.push_back(run_guarded(s, cfg, pair_names));
      } else {
        results.push_back(run_guarded(suite, cfg, pair_names));
      }
      const std::string command = "verify " + suite;
      magws::write_file_atomic(join(cfg.out_dir, "verify_" + suite + ".json"), wb::report_json(command, cfg, results));
      bool any_rows = false;
      for (const auto& r : results) any_rows = any_rows || !r.gamma_rows.empty();
      if (any_rows) magws::write_file_atomic(join(cfg.out_dir, "gamma_" + suite + ".csv"), wb::gamma_csv(results));
      std::fputs(wb::report_text(results).c_str(), stdout);
      bool ok = true;
      for (const auto& r : results) ok = ok && r.all_pass();
      return ok ? 0 : kExitFail;
    }
    if (*gam) {
      bool known = false;
      for (const auto& k : wb::gamma_case_names()) known = known || k == gamma_case;
      if (!known) {
        std::fprintf(stderr, "unknown case '%s'; known cases:", gamma_case.c_str());
        for (const auto& k : wb::gamma_case_names()) std::fprintf(stderr, " %s", k.c_str());
        std::fprintf(stderr, "\n");
        return kExitUsage;
      }
      const double eps = gamma_eps ? *gamma_eps : cfg.epsilon_list.front();
      if (!(eps > 0.0)) {
        std::fprintf(stderr, "--eps must be positive\n");
        return kExitUsage;
      }
      wb::SuiteResult r;
      r.suite = "gamma";
      r.gamma_rows = wb::gamma_table(gamma_case, cfg, eps);
      const std::string csv = wb::gamma_csv({r});
      magws::write_file_atomic(join(cfg.out_dir, "gamma_table_" + gamma_case + ".csv"), csv);
      std::fputs(csv.c_str(), stdout);
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFail;
  }
  return kExitUsage;
}
