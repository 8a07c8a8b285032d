#include <algorithm>
#include <cmath>
#include <cstdio>

#include "magws/dixmier.hpp"
#include "suites.hpp"

namespace magws::wb {

namespace {

std::string tag(const std::string& base, double eps) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "[eps=%g]", eps);
  return base + buf;
}

// Uncertainty of an extrapolation: fit residual plus the largest shift of the
// constant when the one or two smallest samples are dropped from the window.
double uncertainty(const DixmierEstimate& e, const FitOptions& fit) {
  double shift = 0.0;
  for (std::size_t drop : {1, 2}) {
    if (e.gamma_samples.size() < drop + 3) break;
    std::vector<std::pair<long long, double>> tail(e.gamma_samples.begin() + std::ptrdiff_t(drop), e.gamma_samples.end());
    shift = std::max(shift, std::abs(fit_gamma_samples(std::move(tail), e.n_max, fit).extrapolated - e.extrapolated));
  }
  return e.model_residual + shift;
}

Case estimate_case(const std::string& name, const std::string& identity, double expected, const DixmierEstimate& e,
                   double tol) {
  Case c = equal_case(name, identity, expected, e.extrapolated, tol, e.model_residual);
  c.detail("model", model_name(e.model))
      .detail("alternate_model_value", e.alternate)
      .detail("n_max", double(e.n_max))
      .detail("poor_fit", e.poor_fit ? 1.0 : 0.0);
  return c;
}

void add_rows(SuiteResult& out, const std::string& name, double eps, const DixmierEstimate& e) {
  for (const auto& [N, g] : e.gamma_samples) out.gamma_rows.push_back({name, eps, N, g});
}

struct Agreement {
  std::vector<double> values;
  double sigma = 0.0;

  void add(double v, double u) {
    values.push_back(v);
    sigma = std::max(sigma, u);
  }
  double spread() const {
    if (values.empty()) return 0.0;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return *hi - *lo;
  }
};

}  // namespace

SuiteResult run_traces(const Config& cfg) {
  const MagneticParams& p = cfg.params;
  const long long nmax = cfg.nmax_dixmier;
  const double tol_a = cfg.tol_dixmier_analytic;
  const FitOptions fit;
  SuiteResult out;
  out.suite = "traces";

  struct Analytic {
    std::string name;
    std::string identity;
    AnalyticKind kind;
    AnalyticArgs args;
    double expected;
  };
  std::vector<Analytic> analytic = {
      {"q_inv_sq", "Tr_Dix(Q_eps^-2) = 1/2", AnalyticKind::q_power, {2.0, 0, 0, 0, 0}, 0.5},
      {"q_inv_pi0", "Tr_Dix(Q_eps^-1 Pi_0) = 1", AnalyticKind::q_inv_projection, {1.0, 0, 0, 0, 0}, 1.0},
      {"q_inv_pi3", "Tr_Dix(Q_eps^-1 Pi_3) = 1", AnalyticKind::q_inv_projection, {1.0, 0, 0, 3, 0}, 1.0},
      {"dirac_inv_4", "Tr_Dix(|D_eps|^-4) = 2", AnalyticKind::dirac_power, {4.0, 0, 0, 0, 0}, 2.0},
  };
  for (auto& a : analytic) {
    Agreement agree;
    for (double eps : cfg.epsilon_list) {
      AnalyticArgs args = a.args;
      args.eps = args.eps2 = eps;
      const DixmierEstimate e = dixmier_estimate(analytic_spectrum(a.kind, args, nmax), nmax, fit);
      out.add(estimate_case(tag(a.name, eps), a.identity, a.expected, e, tol_a * std::max(1.0, a.expected)));
      add_rows(out, a.name, eps, e);
      agree.add(e.extrapolated, uncertainty(e, fit));
    }
    if (agree.values.size() > 1)
      out.add(at_most_case(a.name + "[eps_agreement]", "estimates for all eps agree within twice the fit uncertainty",
                           2.0 * agree.sigma, agree.spread())
                  .detail("sigma", agree.sigma));
  }
  {
    // Q_eps^{-1} Ups_{j->k}: positive for j = k, polarized otherwise
    const std::vector<std::pair<int, int>> pairs = {{0, 0}, {0, 1}, {2, 3}, {3, 3}};
    for (const auto& [j, k] : pairs) {
      char name[48];
      std::snprintf(name, sizeof name, "q_inv_ups_%d_%d", j, k);
      const double expected = j == k ? 1.0 : 0.0;
      for (double eps : cfg.epsilon_list) {
        const TraceEstimate t = tr_dix_resolvent(upsilon(j, k, 3, p), {eps}, nmax, fit);
        out.add(equal_case(tag(name, eps), "Tr_Dix(Q_eps^-1 Ups_{j->k}) = delta_jk", expected, t.value, tol_a, t.residual)
                    .detail("mu_reached", double(t.mu_reached))
                    .detail("monotone_violations", double(t.monotone_violations)));
      }
    }
  }
  {
    // trace identities on the matrix path; fixed 2% relative tolerance
    const TraceIdentityReport rep = trace_identity_suite(p, cfg.epsilon_list, cfg.rect_cutoff, 0.02, fit);
    for (const auto& c : rep.cases) {
      const std::string name = c.name.find("eps_independence") != std::string::npos ? "identity/" + c.name
                                                                                      : tag("identity/" + c.name, c.eps);
      Case x = equal_case(name, c.identity, c.expected, c.estimate, c.tolerance, c.residual);
      if (c.name.find("eps_independence") != std::string::npos) x = at_most_case(name, c.identity, c.tolerance, c.estimate.real());
      out.add(x);
    }
  }
  {
    // Calderon norms of the sandwiched Upsilon; 2+ bound everywhere, 1+ bound for shifts >= 3
    struct Sw {
      int j, k;
      double e1, e2;
    };
    const std::vector<Sw> cases = {{0, 1, 0.5, 0.5}, {0, 0, 1.0, 1.0}, {1, 3, 1.0, 2.0}, {3, 0, 2.0, 0.5}};
    double worst2 = 0.0;
    bool divergent = false;
    for (const auto& s : cases) {
      const SingularSpectrum sp = analytic_spectrum(AnalyticKind::q_sandwich_upsilon, {1.0, s.e1, s.e2, s.j, s.k}, 1 << 16);
      const CalderonNorm n = calderon_norm(sp, CalderonOrder::two_plus);
      worst2 = std::max(worst2, n.value);
      divergent = divergent || n.divergent;
    }
    out.add(at_most_case("sandwich_norm_2plus", "||Q_eps^-1/2 Ups_{j->k} Q_eps'^-1/2||_{2+} < 2", 2.0, worst2)
                .detail("divergent", divergent ? 1.0 : 0.0));
    const SingularSpectrum sp = analytic_spectrum(AnalyticKind::q_sandwich_upsilon, {1.0, 1.0, 1.0, 2, 2}, 1 << 16);
    const SingularSpectrum sq = analytic_spectrum(AnalyticKind::q_inv_projection, {1.0, 1.0, 1.0, 2, 0}, 1 << 16);
    const CalderonNorm n1 = calderon_norm(sp, CalderonOrder::one_plus);
    const CalderonNorm nq = calderon_norm(sq, CalderonOrder::one_plus);
    out.add(at_most_case("resolvent_norm_1plus", "||Q_eps^-1 Pi_j||_{1+} <= 1 for j + 1 + eps >= 3", 1.0,
                         std::max(n1.value, nq.value))
                .detail("attained_at", double(std::max(n1.attained_at, nq.attained_at))));
  }
  {
    for (double eps : cfg.epsilon_list) {
      const DixmierEstimate e = vanishing_probe(upsilon(0, 1, 1, p), eps, eps, cfg.rect_cutoff, fit);
      out.add(estimate_case(tag("vanishing_ups_0_1", eps), "Tr_Dix|Q_eps^-1 A - A Q_eps^-1| = 0", 0.0, e, 0.02));
      add_rows(out, "vanishing_ups_0_1", eps, e);
    }
    const DixmierEstimate z = vanishing_probe(landau_projection(0, 1, p), 1.0, 1.0, cfg.rect_cutoff, fit);
    out.add(equal_case("vanishing_pi0", "Q commutes with Pi_0", 0.0, z.extrapolated, 1e-15));
  }
  return out;
}

}  // namespace magws::wb
