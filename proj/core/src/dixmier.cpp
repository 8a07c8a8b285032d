#include "magws/dixmier.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <tuple>

#include "magws/calculus.hpp"
#include "magws/dirac.hpp"

namespace magws {

namespace {

// Partial sums at increasing N in one pass over the runs.
std::vector<double> partial_sums(const SingularSpectrum& spec, const std::vector<long long>& Ns) {
  std::vector<double> out;
  out.reserve(Ns.size());
  std::size_t r = 0;
  long long used = 0;  // values consumed from run r
  long long count = 0;
  double sum = 0.0;
  for (long long N : Ns) {
    while (count < N && r < spec.runs.size()) {
      const long long take = std::min(N - count, spec.runs[r].mult - used);
      sum += spec.runs[r].value * double(take);
      count += take;
      used += take;
      if (used == spec.runs[r].mult) {
        ++r;
        used = 0;
      }
    }
    if (count < N && !spec.complete) throw std::out_of_range("spectrum shorter than requested N");
    out.push_back(sum);
  }
  return out;
}

long long usable_length(const SingularSpectrum& spec, long long cap) {
  return spec.complete ? cap : std::min(cap, spec.total());
}

const cplx I(0.0, 1.0);

cplx ipow(int k) {
  static const cplx t[4] = {1.0, I, -1.0, -I};
  return t[((k % 4) + 4) % 4];
}

bool is_zero(const AlgebraElement& x) { return x.support() < 0; }

// Hermitian positive semidefinite up to roundoff.
bool is_psd(const Eigen::MatrixXcd& a) {
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-13 * scale) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -1e-12 * scale;
}

struct PositivePart {
  double value = 0.0;
  double residual = 0.0;
  bool poor_fit = false;
  long mu = 0;
  long violations = 0;
};

PositivePart estimate_sectors(const std::vector<SectorFamilyPtr>& fams, long long n_needed, const FitOptions& fit) {
  SectorOptions opt;
  opt.n_needed = n_needed;
  SectorDiagnostics diag;
  const SingularSpectrum spec = sector_spectrum(fams, opt, &diag);
  const DixmierEstimate est = dixmier_estimate(spec, n_needed, fit);
  return {est.extrapolated, est.model_residual, est.poor_fit || diag.capped, diag.mu_reached,
          diag.monotone_violations};
}

void accumulate(TraceEstimate& t, cplx weight, const PositivePart& p) {
  t.value += weight * p.value;
  t.residual += std::abs(weight) * p.residual;
  t.poor_fit = t.poor_fit || p.poor_fit;
  t.mu_reached = std::max(t.mu_reached, p.mu);
  t.monotone_violations += p.violations;
}

}  // namespace

double gamma_N(const SingularSpectrum& spec, long long N) {
  if (N <= 1) throw std::invalid_argument("gamma_N: N must exceed 1");
  return partial_sums(spec, {N})[0] / std::log(double(N));
}

double sigma_over_sqrt(const SingularSpectrum& spec, long long N) {
  if (N < 1) throw std::invalid_argument("sigma_over_sqrt: N must be positive");
  return partial_sums(spec, {N})[0] / std::sqrt(double(N));
}

CalderonNorm calderon_norm(const SingularSpectrum& spec, CalderonOrder order) {
  const long long L = spec.complete ? std::max<long long>(2, spec.total() * 2) : spec.total();
  if (L < 2) throw std::invalid_argument("calderon_norm: spectrum too short");
  std::vector<long long> Ns;
  for (long long N = 2; N <= std::min<long long>(L, 1024); ++N) Ns.push_back(N);
  for (long long N = 2048; N <= L; N *= 2) Ns.push_back(N);
  const std::vector<double> sums = partial_sums(spec, Ns);
  std::vector<double> ratio(Ns.size());
  CalderonNorm c;
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    const double den = order == CalderonOrder::one_plus ? std::log(double(Ns[i])) : std::sqrt(double(Ns[i]));
    ratio[i] = sums[i] / den;
    if (ratio[i] > c.value) {
      c.value = ratio[i];
      c.attained_at = Ns[i];
    }
  }
  // growth along the last doublings that does not slow down signals divergence
  const std::size_t n = ratio.size();
  if (!spec.complete && n >= 3 && c.attained_at == Ns.back()) {
    auto at = [&](long long N) {
      const auto it = std::lower_bound(Ns.begin(), Ns.end(), N);
      return ratio[std::size_t(it - Ns.begin())];
    };
    const long long last = Ns.back();
    if (last >= 8) {
      const double d1 = at(last) - at(last / 2), d2 = at(last / 2) - at(last / 4);
      c.divergent = d1 > 0.0 && d1 >= d2;
    }
  }
  return c;
}

const char* model_name(FitModel m) { return m == FitModel::log_poly ? "log_poly" : "log_sqrt"; }

namespace {

std::pair<double, double> least_squares(const std::vector<std::pair<long long, double>>& s, FitModel model) {
  const auto m = Eigen::Index(s.size());
  Eigen::MatrixXd A(m, 3);
  Eigen::VectorXd y(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double N = double(s[std::size_t(i)].first);
    const double inv = 1.0 / std::log(N);
    A(i, 0) = 1.0;
    A(i, 1) = inv;
    A(i, 2) = model == FitModel::log_poly ? inv * inv : inv / std::sqrt(N);
    y(i) = s[std::size_t(i)].second;
  }
  const Eigen::VectorXd coef = A.colPivHouseholderQr().solve(y);
  return {coef(0), std::sqrt((A * coef - y).squaredNorm() / double(m))};
}

}  // namespace

DixmierEstimate fit_gamma_samples(std::vector<std::pair<long long, double>> samples, long long n_max,
                                  const FitOptions& fit) {
  DixmierEstimate e;
  e.n_max = n_max;
  e.model = fit.model;
  e.gamma_samples = std::move(samples);
  if (e.gamma_samples.empty()) throw std::invalid_argument("fit_gamma_samples: no samples");
  if (e.gamma_samples.size() < 3) {
    e.extrapolated = e.alternate = e.gamma_samples.back().second;
    e.poor_fit = true;
    return e;
  }
  std::tie(e.extrapolated, e.model_residual) = least_squares(e.gamma_samples, fit.model);
  const FitModel other = fit.model == FitModel::log_poly ? FitModel::log_sqrt : FitModel::log_poly;
  std::tie(e.alternate, e.alternate_residual) = least_squares(e.gamma_samples, other);
  e.poor_fit = !std::isfinite(e.extrapolated) || e.model_residual > fit.residual_tol;
  return e;
}

DixmierEstimate dixmier_estimate(const SingularSpectrum& spec, long long n_max, const FitOptions& fit) {
  const long long L = usable_length(spec, n_max);
  std::vector<long long> Ns;
  for (long long N = 1LL << std::max(1, fit.k_min); N <= L; N *= 2) Ns.push_back(N);
  if (Ns.empty()) {
    if (L < 2) throw std::invalid_argument("dixmier_estimate: spectrum too short");
    Ns.push_back(L);
  }
  const std::vector<double> sums = partial_sums(spec, Ns);
  std::vector<std::pair<long long, double>> samples;
  for (std::size_t i = 0; i < Ns.size(); ++i) samples.emplace_back(Ns[i], sums[i] / std::log(double(Ns[i])));
  return fit_gamma_samples(std::move(samples), n_max, fit);
}

DixmierEstimate dixmier_positive_operator(const Eigen::MatrixXcd& T, long long n_max, const FitOptions& fit,
                                          double min_ratio) {
  if (T.rows() != T.cols()) throw std::invalid_argument("dixmier_positive_operator: square matrix required");
  if (double(T.rows()) < min_ratio * double(n_max))
    throw std::invalid_argument("dixmier_positive_operator: truncation dimension below ratio * n_max");
  const double scale = T.size() ? T.cwiseAbs().maxCoeff() : 0.0;
  if ((T - T.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, scale))
    throw std::invalid_argument("dixmier_positive_operator: operator is not Hermitian");
  std::vector<double> ev;
  hermitian_eigenvalues(T, ev);
  double top = 0.0;
  for (double v : ev) top = std::max(top, v);
  std::vector<double> pos;
  for (double v : ev) {
    if (v < -1e-10 * std::max(1.0, top)) throw std::invalid_argument("dixmier_positive_operator: operator is not PSD");
    if (v > 1e-13 * top) pos.push_back(v);
  }
  SingularSpectrum spec = SingularSpectrum::from_values(std::move(pos));
  spec.complete = true;
  return dixmier_estimate(spec, n_max, fit);
}

std::vector<double> dirac_alphas(double eps) {
  std::vector<double> a;
  for (int r = 0; r < 4; ++r) a.push_back(eps + varpi[r]);
  return a;
}

TraceEstimate tr_dix_resolvent(const AlgebraElement& T, const std::vector<double>& alphas, long long n_needed,
                               const FitOptions& fit) {
  TraceEstimate t;
  if (is_zero(T)) return t;
  auto quadratic = [&](const Eigen::MatrixXcd& M) {
    std::vector<SectorFamilyPtr> fams;
    for (double a : alphas) fams.push_back(resolvent_sandwich_family(M, a));
    return estimate_sectors(fams, n_needed, fit);
  };
  if (is_psd(T.a)) {
    accumulate(t, 1.0, quadratic(T.a));
    return t;
  }
  const Eigen::Index d = T.a.rows();
  Eigen::MatrixXcd X = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    if (T.a.row(i).cwiseAbs().maxCoeff() > 0.0 || T.a.col(i).cwiseAbs().maxCoeff() > 0.0) X(i, i) = 1.0;
  for (int k = 0; k < 4; ++k) {
    const Eigen::MatrixXcd Z = X + ipow(k) * T.a;
    accumulate(t, 0.25 * ipow(-k), quadratic(Z.adjoint() * Z));
  }
  return t;
}

namespace {

// Eigenvalues of d(rho A)* d(rho A) per dual sector, split by chirality. The
// operator is chi-even, so the full block spectrum is the union of both halves.
class ChiralBlocks {
 public:
  ChiralBlocks(AlgebraElement a, double eps) : a_(std::move(a)), eps_(eps), nmax_(std::max(0, a_.support()) + 2) {}

  const std::vector<double>& values(long mu, int chi) const {
    while (long(cache_.size()) <= mu) compute(long(cache_.size()));
    return chi > 0 ? cache_[std::size_t(mu)].first : cache_[std::size_t(mu)].second;
  }

 private:
  void compute(long mu) const {
    const Sector s = dual_sector(mu, nmax_);
    const Eigen::MatrixXcd B = sector_quasi_differential(a_, s, eps_);
    std::pair<std::vector<double>, std::vector<double>> v;
    for (int chi : {1, -1}) {
      // P B^* B P = (B P)^* (B P), restricted to the nonzero columns of B P
      std::vector<Eigen::Index> keep;
      for (std::size_t i = 0; i < s.basis.size(); ++i)
        if (chirality[s.basis[i].r] == chi && B.col(Eigen::Index(i)).squaredNorm() > 0.0) keep.push_back(Eigen::Index(i));
      Eigen::MatrixXcd BP(B.rows(), Eigen::Index(keep.size()));
      for (std::size_t j = 0; j < keep.size(); ++j) BP.col(Eigen::Index(j)) = B.col(keep[j]);
      hermitian_eigenvalues(BP.adjoint() * BP, chi > 0 ? v.first : v.second);
    }
    cache_.push_back(std::move(v));
  }

  AlgebraElement a_;
  double eps_;
  int nmax_;
  mutable std::vector<std::pair<std::vector<double>, std::vector<double>>> cache_;
};

class ChiralFamily final : public SectorFamily {
 public:
  ChiralFamily(std::shared_ptr<const ChiralBlocks> blocks, int chi) : blocks_(std::move(blocks)), chi_(chi) {}

  void eigenvalues(long mu, std::vector<double>& out) const override {
    for (int c : {1, -1})
      if (chi_ == 0 || chi_ == c) {
        const auto& v = blocks_->values(mu, c);
        out.insert(out.end(), v.begin(), v.end());
      }
  }

 private:
  std::shared_ptr<const ChiralBlocks> blocks_;
  int chi_;
};

void quadratic_connes(const AlgebraElement& a, double eps, long long n_needed, const FitOptions& fit, cplx weight,
                      SesquilinearEstimate& out) {
  if (is_zero(a)) return;
  const auto blocks = std::make_shared<const ChiralBlocks>(a, eps);
  const auto plain = estimate_sectors({std::make_shared<ChiralFamily>(blocks, 0)}, n_needed, fit);
  const auto plus = estimate_sectors({std::make_shared<ChiralFamily>(blocks, 1)}, n_needed, fit);
  const auto minus = estimate_sectors({std::make_shared<ChiralFamily>(blocks, -1)}, n_needed, fit);
  accumulate(out.plain, weight, plain);
  accumulate(out.chi, weight, plus);
  accumulate(out.chi, -weight, minus);
}

}  // namespace

SesquilinearEstimate dixmier_sesquilinear(const AlgebraElement& a1, const AlgebraElement& a2, double eps,
                                          long long n_needed, const FitOptions& fit) {
  SesquilinearEstimate out;
  if (is_zero(a1) || is_zero(a2)) return out;
  const int n = std::max(a1.cutoff, a2.cutoff);
  const AlgebraElement x = a1.resized(n), y = a2.resized(n);
  if (x.a == y.a) {
    quadratic_connes(x, eps, n_needed, fit, 1.0, out);
    return out;
  }
  for (int k = 0; k < 4; ++k) quadratic_connes(x + ipow(k) * y, eps, n_needed, fit, 0.25 * ipow(-k), out);
  return out;
}

AlgebraElement gradient_pairing(const AlgebraElement& a1, const AlgebraElement& a2) {
  return multiply(adjoint(nabla(a1, 1)), nabla(a2, 1)) + multiply(adjoint(nabla(a1, 2)), nabla(a2, 2));
}

ConnesRecord connes_formula(const AlgebraElement& a1, const AlgebraElement& a2, double eps, long long n_needed,
                            const FitOptions& fit) {
  ConnesRecord r;
  const SesquilinearEstimate s = dixmier_sesquilinear(a1, a2, eps, n_needed, fit);
  r.lhs = s.plain.value;
  r.lhs_residual = s.plain.residual;
  r.chi_lhs = s.chi.value;
  r.chi_residual = s.chi.residual;
  r.poor_fit = s.plain.poor_fit || s.chi.poor_fit;
  const AlgebraElement g = gradient_pairing(a1, a2);
  const double l2 = a1.params.ell_B * a1.params.ell_B;
  r.rhs_exact = 2.0 / l2 * trace_B(g);
  r.tuv_pairing = trace_per_unit_volume(g);
  r.rhs_alternative = 2.0 * pi * r.tuv_pairing;
  r.supported = std::abs(r.lhs - r.rhs_exact) <= std::abs(r.lhs - r.rhs_alternative) ? "1/(4pi)" : "1/(2pi)";
  return r;
}

SingularSpectrum vanishing_spectrum(const AlgebraElement& a, double eps, double eps2, long long n_needed) {
  if (!(1.0 + eps > 0.0 && 1.0 + eps2 > 0.0)) throw std::invalid_argument("vanishing_probe: shifts must exceed -1");
  const int K = std::max(0, a.support());
  const Eigen::MatrixXcd A = a.resized(K).a;
  auto block = [A, K, eps, eps2](long m) {
    Eigen::VectorXd w1(K + 1), w2(K + 1);
    for (int n = 0; n <= K; ++n) {
      w1(n) = 1.0 / (double(m) + n + 1.0 + eps);
      w2(n) = 1.0 / (double(m) + n + 1.0 + eps2);
    }
    return Eigen::MatrixXcd(w1.asDiagonal() * A - A * w2.asDiagonal());
  };
  SectorOptions opt;
  opt.n_needed = n_needed;
  return sector_spectrum({singular_callback_family(block)}, opt);
}

DixmierEstimate vanishing_probe(const AlgebraElement& a, double eps, double eps2, long long n_needed,
                                const FitOptions& fit) {
  return dixmier_estimate(vanishing_spectrum(a, eps, eps2, n_needed), n_needed, fit);
}

SingularSpectrum resolvent_spectrum(const AlgebraElement& T, const std::vector<double>& alphas, long long n_needed) {
  if (!is_psd(T.a)) throw std::invalid_argument("resolvent_spectrum: T must be positive semidefinite");
  std::vector<SectorFamilyPtr> fams;
  for (double a : alphas) fams.push_back(resolvent_sandwich_family(T.a, a));
  SectorOptions opt;
  opt.n_needed = n_needed;
  return sector_spectrum(fams, opt);
}

SingularSpectrum connes_spectrum(const AlgebraElement& a, double eps, long long n_needed) {
  SectorOptions opt;
  opt.n_needed = n_needed;
  if (is_zero(a)) return sector_spectrum({}, opt);
  const auto blocks = std::make_shared<const ChiralBlocks>(a, eps);
  return sector_spectrum({std::make_shared<ChiralFamily>(blocks, 0)}, opt);
}

TraceIdentityReport trace_identity_suite(const MagneticParams& p, const std::vector<double>& eps_list,
                                         long long n_needed, double rel_tol, const FitOptions& fit) {
  struct Op {
    std::string name;
    AlgebraElement t;
  };
  const std::vector<Op> ops = {
      {"pi0", landau_projection(0, 1, p)},
      {"pi1", landau_projection(1, 1, p)},
      {"ups01+ups10", upsilon(0, 1, 1, p) + upsilon(1, 0, 1, p)},
      {"heat1", heat_element(1.0, 40, p)},
  };
  TraceIdentityReport rep;
  auto add = [&](const std::string& name, const std::string& identity, double eps, cplx expected,
                 const TraceEstimate& est, double factor) {
    IdentityCase c;
    c.name = name;
    c.identity = identity;
    c.eps = eps;
    c.expected = expected;
    c.estimate = factor * est.value;
    c.residual = factor * est.residual;
    c.tolerance = rel_tol * std::max(std::abs(expected), 1.0);
    c.pass = std::abs(c.estimate - expected) <= c.tolerance;
    rep.max_deviation = std::max(rep.max_deviation, std::abs(c.estimate - expected) / std::max(std::abs(expected), 1.0));
    rep.cases.push_back(c);
  };
  for (const auto& op : ops) {
    const cplx tr = trace_B(op.t);
    const cplx tuv = trace_per_unit_volume(op.t);
    std::vector<cplx> per_eps;
    for (double eps : eps_list) {
      const TraceEstimate q = tr_dix_resolvent(op.t, {eps}, n_needed, fit);
      add(op.name + "/q_inv", "Tr_Dix(Q_eps^-1 T) = trace_B(T)", eps, tr, q, 1.0);
      const TraceEstimate d = tr_dix_resolvent(op.t, dirac_alphas(eps), n_needed, fit);
      add(op.name + "/dirac", "Tr_Dix(|D_eps|^-2 rho T)/4 = trace_B(T)", eps, tr, d, 0.25);
      add(op.name + "/tuv", "Tr_Dix(|D_eps|^-2 rho T)/(8 Lambda_B) = T_B(T)", eps, tuv, d,
          1.0 / (8.0 * p.lambda_B()));
      per_eps.push_back(q.value);
    }
    if (per_eps.size() > 1) {
      double spread = 0.0;
      for (const auto& v : per_eps) spread = std::max(spread, std::abs(v - per_eps.front()));
      IdentityCase c;
      c.name = op.name + "/eps_independence";
      c.identity = "Tr_Dix(Q_eps^-1 T) independent of eps";
      c.expected = 0.0;
      c.estimate = spread;
      c.tolerance = rel_tol * std::max(std::abs(tr), 1.0);
      c.pass = spread <= c.tolerance;
      rep.cases.push_back(c);
    }
  }
  return rep;
}

}  // namespace magws
