#include <cmath>

#include "doctest.h"
#include "magws/calculus.hpp"
#include "magws/dixmier.hpp"

using namespace magws;

namespace {

SingularSpectrum harmonic(long long n) {
  AnalyticArgs a;
  a.j = 0;
  a.eps = 0.0;
  return analytic_spectrum(AnalyticKind::q_inv_projection, a, n);
}

}  // namespace

TEST_CASE("gamma_N against a direct partial sum") {
  const SingularSpectrum h = harmonic(5000);
  for (long long N : {2LL, 10LL, 1000LL, 4096LL}) {
    double s = 0.0;
    for (long long k = 1; k <= N; ++k) s += 1.0 / double(k);
    CHECK(gamma_N(h, N) == doctest::Approx(s / std::log(double(N))).epsilon(1e-13));
    CHECK(sigma_over_sqrt(h, N) == doctest::Approx(s / std::sqrt(double(N))).epsilon(1e-13));
  }
  CHECK_THROWS(gamma_N(h, 1));
  CHECK_THROWS(gamma_N(h, 6000));
}

TEST_CASE("fits recover the constant of synthetic data") {
  std::vector<std::pair<long long, double>> sq, lp;
  for (int k = 10; k <= 20; ++k) {
    const double N = std::ldexp(1.0, k), L = std::log(N);
    sq.emplace_back((long long)N, 2.5 - 0.7 / L + 3.0 / (std::sqrt(N) * L));
    lp.emplace_back((long long)N, 2.5 + 0.4 / L - 1.2 / (L * L));
  }
  FitOptions f;
  CHECK(fit_gamma_samples(sq, 1 << 20, f).extrapolated == doctest::Approx(2.5).epsilon(1e-10));
  f.model = FitModel::log_poly;
  const DixmierEstimate e = fit_gamma_samples(lp, 1 << 20, f);
  CHECK(e.extrapolated == doctest::Approx(2.5).epsilon(1e-10));
  CHECK(e.model_residual < 1e-12);
  CHECK(fit_gamma_samples({{4, 1.0}}, 4, f).poor_fit);
  CHECK_THROWS(fit_gamma_samples({}, 4, f));
}

TEST_CASE("harmonic spectrum has Dixmier trace one") {
  const DixmierEstimate e = dixmier_estimate(harmonic(1 << 20), 1 << 20);
  CHECK(e.extrapolated == doctest::Approx(1.0).epsilon(1e-3));
  CHECK_FALSE(e.poor_fit);
}

TEST_CASE("dense positive operator path") {
  const int dim = 1280;
  Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<double> vals;
  for (int n = 0; n < dim; ++n) {
    T(n, n) = 1.0 / (n + 1.0);
    vals.push_back(1.0 / (n + 1.0));
  }
  FitOptions f;
  f.k_min = 3;
  const DixmierEstimate e = dixmier_positive_operator(T, 128, f);
  const DixmierEstimate ref = dixmier_estimate(SingularSpectrum::from_values(vals), 128, f);
  CHECK(e.extrapolated == doctest::Approx(ref.extrapolated).epsilon(1e-12));
  CHECK(e.extrapolated == doctest::Approx(1.0).epsilon(0.02));
  CHECK_THROWS(dixmier_positive_operator(T, 1000, f));
  Eigen::MatrixXcd U = T;
  U(0, 1) = 0.1;
  CHECK_THROWS(dixmier_positive_operator(U, 128, f));
  Eigen::MatrixXcd V = T;
  V(3, 3) = -0.5;
  CHECK_THROWS(dixmier_positive_operator(V, 128, f));
}

TEST_CASE("Calderon norms") {
  const CalderonNorm c = calderon_norm(harmonic(4096), CalderonOrder::one_plus);
  CHECK(c.value == doctest::Approx(1.5 / std::log(2.0)));
  CHECK(c.attained_at == 2);
  CHECK_FALSE(c.divergent);
  // 1/sqrt(m+1) is not in the 1+ ideal
  const SingularSpectrum r = SingularSpectrum::from_values([] {
    std::vector<double> v;
    for (int m = 0; m < 1 << 16; ++m) v.push_back(1.0 / std::sqrt(m + 1.0));
    return v;
  }());
  CHECK(calderon_norm(r, CalderonOrder::one_plus).divergent);
  CHECK(calderon_norm(r, CalderonOrder::two_plus).value < 2.0);
}

TEST_CASE("resolvent traces") {
  const MagneticParams p{};
  const long long n = 1 << 18;
  // Q_eps^{-1} Pi_0 has eigenvalues 1/(m+1+eps): trace one
  const TraceEstimate t = tr_dix_resolvent(landau_projection(0, 1, p), {1.0}, n);
  CHECK(std::abs(t.value - 1.0) < 0.01);
  // non-positive T goes through polarization: Ups_{0->1} + Ups_{1->0} has zero trace
  const TraceEstimate o = tr_dix_resolvent(upsilon(0, 1, 1, p) + upsilon(1, 0, 1, p), {1.0}, n);
  CHECK(std::abs(o.value) < 0.01);
  CHECK_THROWS(resolvent_spectrum(upsilon(0, 1, 1, p), {1.0}, 10));
}

TEST_CASE("commutator with the resolvent") {
  const MagneticParams p{};
  const double eps = 0.5;
  // per m the block is (1/(m+2+eps) - 1/(m+1+eps)) on a single entry
  const SingularSpectrum s = vanishing_spectrum(upsilon(0, 1, 1, p), eps, eps, 50);
  const std::vector<double> v = s.flat(50);
  for (int m = 0; m < 50; ++m)
    CHECK(v[std::size_t(m)] == doctest::Approx(1.0 / ((m + 1.0 + eps) * (m + 2.0 + eps))).epsilon(1e-13));
  CHECK(vanishing_probe(landau_projection(0, 1, p), 1.0, 1.0, 4096).extrapolated == 0.0);
}

TEST_CASE("first Connes formula on the lowest projection") {
  // sum_j |||nabla_j Pi_0|||^2 = 2 l^2, so the right-hand side is 2 / l^2 * 2 l^2 = 4
  const MagneticParams p{};
  const AlgebraElement pi0 = landau_projection(0, 1, p);
  const AlgebraElement g = gradient_pairing(pi0, pi0);
  CHECK(std::abs(trace_B(g) - 2.0) < 1e-14);
  const ConnesRecord r = connes_formula(pi0, pi0, 1.0, 1 << 16);
  CHECK(std::abs(r.rhs_exact - 4.0) < 1e-13);
  CHECK(std::abs(r.lhs - 4.0) < 0.1);
  CHECK(std::abs(r.chi_lhs) < 0.05);
  CHECK(r.supported == "1/(4pi)");
}
