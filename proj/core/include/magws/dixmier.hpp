#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "magws/algebra.hpp"
#include "magws/spectrum.hpp"

namespace magws {

// (sum_{n<N} mu_n) / log N; throws when N <= 1 or the spectrum is too short.
double gamma_N(const SingularSpectrum& spec, long long N);
// sum_{n<N} mu_n / sqrt N
double sigma_over_sqrt(const SingularSpectrum& spec, long long N);

enum class CalderonOrder { one_plus, two_plus };

struct CalderonNorm {
  double value = 0.0;
  long long attained_at = 0;
  bool divergent = false;  // the sampled ratio was still growing at the last sample
};

// Sup over N = 2..min(length, 1024) and N = 2^k beyond.
CalderonNorm calderon_norm(const SingularSpectrum& spec, CalderonOrder order);

// Extrapolation models for gamma_N with L = log N:
//   log_poly: c + a/L + b/L^2
//   log_sqrt: c + a/L + d/(sqrt(N) L)
enum class FitModel { log_poly, log_sqrt };

const char* model_name(FitModel m);

struct FitOptions {
  FitModel model = FitModel::log_sqrt;
  int k_min = 12;              // first sample N = 2^k_min
  double residual_tol = 2e-3;  // rms of the fit above which poor_fit is set
};

struct DixmierEstimate {
  std::vector<std::pair<long long, double>> gamma_samples;
  double extrapolated = 0.0;
  double model_residual = 0.0;
  long long n_max = 0;
  bool poor_fit = false;
  FitModel model = FitModel::log_sqrt;
  // the other model on the same samples, reported for comparison
  double alternate = 0.0;
  double alternate_residual = 0.0;
};

// Least squares fit of gamma_N over N = 2^k <= n_max; returns the constant c.
DixmierEstimate dixmier_estimate(const SingularSpectrum& spec, long long n_max, const FitOptions& fit = {});
// Fit of arbitrary (N, gamma_N) samples.
DixmierEstimate fit_gamma_samples(std::vector<std::pair<long long, double>> samples, long long n_max,
                                  const FitOptions& fit = {});

// Dense Hermitian PSD operator on a truncated space; requires dim >= ratio * n_max.
DixmierEstimate dixmier_positive_operator(const Eigen::MatrixXcd& T, long long n_max, const FitOptions& fit = {},
                                          double min_ratio = 10.0);

// Complex Dixmier trace assembled from several positive estimates.
struct TraceEstimate {
  cplx value;
  double residual = 0.0;  // combined fit residual
  bool poor_fit = false;
  long mu_reached = 0;
  long monotone_violations = 0;
};

// Tr_Dix(sum_r Q_{alpha_r}^{-1} T) for T in the algebra acting on the Landau
// index, Q_alpha = Q + alpha. Non-positive T goes through polarization with the
// support projection: Tr(W X* Y W) = (1/4) sum_k i^{-k} Tr(W |X + i^k Y|^2 W).
TraceEstimate tr_dix_resolvent(const AlgebraElement& T, const std::vector<double>& alphas, long long n_needed,
                               const FitOptions& fit = {});
// Spectra behind the estimates above, for tables of gamma_N.
// Q_alpha^{-1/2} T Q_alpha^{-1/2} summed over alphas; T must be PSD.
SingularSpectrum resolvent_spectrum(const AlgebraElement& T, const std::vector<double>& alphas, long long n_needed);
// |d(rho A)|^2
SingularSpectrum connes_spectrum(const AlgebraElement& a, double eps, long long n_needed);
// |Q_eps^{-1} A - A Q_eps2^{-1}|
SingularSpectrum vanishing_spectrum(const AlgebraElement& a, double eps, double eps2, long long n_needed);

// alphas of |D_eps|^{-2} on the four spinor components: eps + varpi
std::vector<double> dirac_alphas(double eps);

// Tr_Dix(d(rho A1)* d(rho A2)) and its chi-graded version.
struct SesquilinearEstimate {
  TraceEstimate plain;
  TraceEstimate chi;
};

SesquilinearEstimate dixmier_sesquilinear(const AlgebraElement& a1, const AlgebraElement& a2, double eps,
                                          long long n_needed, const FitOptions& fit = {});

// sum_j (nabla_j A1)* (nabla_j A2)
AlgebraElement gradient_pairing(const AlgebraElement& a1, const AlgebraElement& a2);

struct ConnesRecord {
  cplx lhs;
  double lhs_residual = 0.0;
  cplx chi_lhs;
  double chi_residual = 0.0;
  cplx rhs_exact;        // (2/l^2) trace_B(grad A1* . grad A2)
  cplx rhs_alternative;  // 2 pi T_B(grad A1* . grad A2), the 1/(2 pi) normalization
  cplx tuv_pairing;      // T_B(grad A1* . grad A2)
  std::string supported;  // "1/(4pi)" or "1/(2pi)"
  bool poor_fit = false;
};

ConnesRecord connes_formula(const AlgebraElement& a1, const AlgebraElement& a2, double eps, long long n_needed,
                            const FitOptions& fit = {});

// gamma_N of |Q_eps^{-1} A - A Q_eps2^{-1}|.
DixmierEstimate vanishing_probe(const AlgebraElement& a, double eps, double eps2, long long n_needed,
                                const FitOptions& fit = {});

struct IdentityCase {
  std::string name;
  std::string identity;
  double eps = 0.0;
  cplx expected;
  cplx estimate;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct TraceIdentityReport {
  std::vector<IdentityCase> cases;
  double max_deviation = 0.0;
};

// Tr_Dix(Q_eps^{-1} T), (1/4) Tr_Dix(|D_eps|^{-2} rho T) against trace_B(T) and
// (1/8 Lambda_B) Tr_Dix(|D_eps|^{-2} rho T) against T_B(T) for T in
// {Pi_0, Pi_1, Ups_{0->1} + Ups_{1->0}, heat(1)} and every eps.
TraceIdentityReport trace_identity_suite(const MagneticParams& p, const std::vector<double>& eps_list,
                                         long long n_needed, double rel_tol, const FitOptions& fit = {});

}  // namespace magws
