#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "magws/dixmier.hpp"
#include "suites.hpp"

namespace magws::wb {

const std::vector<std::string>& connes_pair_names() {
  static const std::vector<std::string> names = {"pi0_pi0", "pi0_pi1", "ups_ups"};
  return names;
}

namespace {

std::pair<AlgebraElement, AlgebraElement> make_pair_elements(const std::string& name, const MagneticParams& p) {
  const AlgebraElement pi0 = landau_projection(0, 1, p);
  const AlgebraElement pi1 = landau_projection(1, 1, p);
  const AlgebraElement ups = upsilon(0, 1, 1, p) + upsilon(1, 0, 1, p);
  if (name == "pi0_pi0") return {pi0, pi0};
  if (name == "pi0_pi1") return {pi0, pi1};
  if (name == "ups_ups") return {ups, ups};
  throw std::invalid_argument("unknown pair '" + name + "'");
}

std::string tag(const std::string& base, double eps) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "[eps=%g]", eps);
  return base + buf;
}

}  // namespace

SuiteResult run_connes(const Config& cfg, const std::vector<std::string>& pairs) {
  const MagneticParams& p = cfg.params;
  const std::vector<std::string>& names = pairs.empty() ? connes_pair_names() : pairs;
  const double tol = cfg.tol_dixmier_matrix;
  SuiteResult out;
  out.suite = "connes";
  for (const auto& name : names) {
    const auto [a1, a2] = make_pair_elements(name, p);
    for (double eps : cfg.epsilon_list) {
      const ConnesRecord r = connes_formula(a1, a2, eps, cfg.rect_cutoff);
      out.add(equal_case(tag(name + "/trace", eps), "Tr_Dix(d(rho A1)^* d(rho A2)) = (2 / l^2) trace(grad A1^* . grad A2)",
                         r.rhs_exact, r.lhs, tol * std::max(1.0, std::abs(r.rhs_exact)), r.lhs_residual)
                  .detail("poor_fit", r.poor_fit ? 1.0 : 0.0));
      out.add(equal_case(tag(name + "/chi_trace", eps), "Tr_Dix(chi d(rho A1)^* d(rho A2)) = 0", 0.0, r.chi_lhs, tol,
                         r.chi_residual));
      if (std::abs(r.tuv_pairing) > 0.0) {
        // ratio against the per-unit-volume form: 2 pi supports 1/(4 pi), pi supports 1/(2 pi)
        const cplx ratio = r.lhs / r.tuv_pairing;
        out.add(equal_case(tag(name + "/normalization", eps),
                           "Tr_Dix(d(rho A1)^* d(rho A2)) / T_B(grad A1^* . grad A2) = 4 pi", 4.0 * pi, ratio,
                           tol * 4.0 * pi)
                    .detail("supported", r.supported)
                    .detail("rhs_exact", r.rhs_exact.real())
                    .detail("rhs_alternative", r.rhs_alternative.real()));
      }
      if (name == "pi0_pi0") {
        const DixmierEstimate e = dixmier_estimate(connes_spectrum(a1, eps, cfg.rect_cutoff), cfg.rect_cutoff);
        for (const auto& [N, g] : e.gamma_samples) out.gamma_rows.push_back({name, eps, N, g});
      }
    }
  }
  return out;
}

}  // namespace magws::wb
