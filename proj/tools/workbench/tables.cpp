#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "magws/dixmier.hpp"
#include "magws/quadrature.hpp"
#include "magws/serialize.hpp"
#include "suites.hpp"

namespace magws::wb {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"convolution", "algebra", "calculus", "spectrum", "traces", "connes"};
  return names;
}

SuiteResult run_suite(const std::string& name, const Config& cfg, const std::vector<std::string>& pairs) {
  if (name == "convolution") return run_convolution(cfg);
  if (name == "algebra") return run_algebra(cfg);
  if (name == "calculus") return run_calculus(cfg);
  if (name == "spectrum") return run_spectrum(cfg);
  if (name == "traces") return run_traces(cfg);
  if (name == "connes") return run_connes(cfg, pairs);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

LaguerreTables laguerre_tables(const Config& cfg, int max_index) {
  if (max_index < 0 || max_index > 40) throw std::invalid_argument("max-index must lie in [0, 40]");
  const MagneticParams& p = cfg.params;
  const QuadGrid grid = polar_grid(std::max(cfg.quad_degree, max_index + 4), p);
  std::vector<LagIndex> idx;
  for (int n = 0; n <= max_index; ++n)
    for (int m = 0; m <= max_index; ++m) idx.push_back({n, m});
  std::vector<std::vector<cplx>> vals(idx.size(), std::vector<cplx>(grid.nodes.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) vals[a][i] = laguerre_fn(idx[a], grid.nodes[i], p);

  LaguerreTables t;
  CsvTable ortho;
  ortho.header = {"n", "m", "max_residual"};
  for (std::size_t a = 0; a < idx.size(); ++a) {
    double worst = 0.0;
    for (std::size_t b = 0; b < idx.size(); ++b) {
      cplx s = 0.0;
      for (std::size_t i = 0; i < grid.nodes.size(); ++i) s += grid.weights[i] * std::conj(vals[a][i]) * vals[b][i];
      worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
    }
    t.max_residual = std::max(t.max_residual, worst);
    ortho.rows.push_back({std::to_string(idx[a].n), std::to_string(idx[a].m), format_csv_number(worst)});
  }
  t.orthonormality_csv = ortho.str();

  CsvTable samples;
  samples.header = {"n", "m", "x1", "x2", "re", "im"};
  const double l = p.ell_B;
  const std::vector<Vec2> pts = {{0.0, 0.0}, {0.5 * l, 0.0}, {0.0, 0.5 * l}, {l, l}, {-1.5 * l, 0.7 * l}};
  for (const LagIndex a : idx)
    for (const Vec2 x : pts) {
      const cplx v = laguerre_fn(a, x, p);
      samples.rows.push_back({std::to_string(a.n), std::to_string(a.m), format_csv_number(x.x1), format_csv_number(x.x2),
                              format_csv_number(v.real()), format_csv_number(v.imag())});
    }
  t.samples_csv = samples.str();
  return t;
}

const std::vector<std::string>& gamma_case_names() {
  static const std::vector<std::string> names = {"q2",      "d4",      "qpi0",
                                                 "qpi3",     "sandwich01", "resolvent_pi0",
                                                 "connes_pi0",    "vanishing01"};
  return names;
}

std::vector<GammaRow> gamma_table(const std::string& name, const Config& cfg, double eps) {
  const MagneticParams& p = cfg.params;
  const long long top = 1LL << 20;
  SingularSpectrum spec;
  if (name == "q2") {
    spec = analytic_spectrum(AnalyticKind::q_power, {2.0, eps, eps, 0, 0}, top);
  } else if (name == "d4") {
    spec = analytic_spectrum(AnalyticKind::dirac_power, {4.0, eps, eps, 0, 0}, top);
  } else if (name == "qpi0") {
    spec = analytic_spectrum(AnalyticKind::q_inv_projection, {1.0, eps, eps, 0, 0}, top);
  } else if (name == "qpi3") {
    spec = analytic_spectrum(AnalyticKind::q_inv_projection, {1.0, eps, eps, 3, 0}, top);
  } else if (name == "sandwich01") {
    spec = analytic_spectrum(AnalyticKind::q_sandwich_upsilon, {1.0, eps, eps, 0, 1}, top);
  } else if (name == "resolvent_pi0") {
    spec = resolvent_spectrum(landau_projection(0, 0, p), {eps}, top);
  } else if (name == "connes_pi0") {
    spec = connes_spectrum(landau_projection(0, 1, p), eps, top);
  } else if (name == "vanishing01") {
    spec = vanishing_spectrum(upsilon(0, 1, 1, p), eps, eps, top);
  } else {
    throw std::invalid_argument("unknown gamma case '" + name + "'");
  }
  std::vector<GammaRow> rows;
  for (long long N = 16; N <= top; N *= 2) rows.push_back({name, eps, N, gamma_N(spec, N)});
  return rows;
}

}  // namespace magws::wb
