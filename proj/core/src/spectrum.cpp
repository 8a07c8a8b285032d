#include "magws/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "magws/dirac.hpp"

namespace magws {

namespace {

bool nearly_equal(double a, double b) { return std::abs(a - b) <= 1e-13 * std::max(std::abs(a), std::abs(b)); }

void push_run(std::vector<Run>& runs, Run r) {
  if (r.mult <= 0 || !(r.value > 0.0)) return;
  if (!runs.empty() && nearly_equal(runs.back().value, r.value))
    runs.back().mult += r.mult;
  else
    runs.push_back(r);
}

}  // namespace

long long SingularSpectrum::total() const {
  long long t = 0;
  for (const auto& r : runs) t += r.mult;
  return t;
}

double SingularSpectrum::partial_sum(long long N) const {
  double s = 0.0;
  long long left = N;
  for (const auto& r : runs) {
    if (left <= 0) break;
    const long long take = std::min(left, r.mult);
    s += r.value * double(take);
    left -= take;
  }
  return s;
}

std::vector<double> SingularSpectrum::flat(long long N) const {
  std::vector<double> out;
  out.reserve(std::size_t(std::max(0LL, std::min(N, total()))));
  for (const auto& r : runs)
    for (long long i = 0; i < r.mult && (long long)out.size() < N; ++i) out.push_back(r.value);
  return out;
}

bool SingularSpectrum::monotone() const {
  for (std::size_t i = 1; i < runs.size(); ++i)
    if (!(runs[i].value < runs[i - 1].value)) return false;
  return true;
}

SingularSpectrum SingularSpectrum::from_values(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  SingularSpectrum s;
  for (double v : values) push_run(s.runs, {v, 1});
  return s;
}

SingularSpectrum SingularSpectrum::from_runs(std::vector<Run> runs) {
  std::stable_sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) { return a.value > b.value; });
  SingularSpectrum s;
  for (const auto& r : runs) push_run(s.runs, r);
  return s;
}

SingularSpectrum merge_families(const std::vector<RunFamily>& families, long long n_needed) {
  struct Head {
    Run run;
    std::size_t fam;
    long long idx;
  };
  auto cmp = [](const Head& a, const Head& b) {
    if (a.run.value != b.run.value) return a.run.value < b.run.value;
    return a.fam > b.fam;
  };
  std::priority_queue<Head, std::vector<Head>, decltype(cmp)> pq(cmp);
  for (std::size_t f = 0; f < families.size(); ++f) pq.push({families[f].run(0), f, 0});
  SingularSpectrum s;
  long long count = 0;
  double last = std::numeric_limits<double>::infinity();
  while (count < n_needed && !pq.empty()) {
    Head h = pq.top();
    pq.pop();
    if (!(h.run.value > 0.0) || h.run.mult <= 0) continue;
    if (h.run.value > last * (1.0 + 1e-12)) throw std::logic_error("merge_families: family is not decreasing");
    last = h.run.value;
    push_run(s.runs, h.run);
    count += h.run.mult;
    pq.push({families[h.fam].run(h.idx + 1), h.fam, h.idx + 1});
  }
  return s;
}

SingularSpectrum analytic_spectrum(AnalyticKind kind, const AnalyticArgs& a, long long n_needed) {
  std::vector<RunFamily> fams;
  auto q_family = [](double shift, double s) {
    if (!(shift > -1.0)) throw std::invalid_argument("analytic_spectrum: Q shift must exceed -1");
    return RunFamily{[shift, s](long long j) { return Run{std::pow(double(j) + 1.0 + shift, -s), j + 1}; }};
  };
  switch (kind) {
    case AnalyticKind::q_power:
      fams.push_back(q_family(a.eps, a.s));
      break;
    case AnalyticKind::q_inv_projection: {
      if (a.j < 0 || !(a.j + 1.0 + a.eps > 0.0)) throw std::invalid_argument("analytic_spectrum: bad level");
      const double base = a.j + 1.0 + a.eps;
      fams.push_back({[base](long long m) { return Run{1.0 / (double(m) + base), 1}; }});
      break;
    }
    case AnalyticKind::q_sandwich_upsilon: {
      const double b1 = a.k + 1.0 + a.eps, b2 = a.j + 1.0 + a.eps2;
      if (!(b1 > 0.0 && b2 > 0.0)) throw std::invalid_argument("analytic_spectrum: bad shifts");
      fams.push_back({[b1, b2](long long m) {
        return Run{1.0 / std::sqrt((double(m) + b1) * (double(m) + b2)), 1};
      }});
      break;
    }
    case AnalyticKind::dirac_power:
      if (!(a.eps > 0.0)) throw std::invalid_argument("analytic_spectrum: |D_eps| needs eps > 0");
      // |D_eps|^2 = Q + eps + varpi
      for (int r = 0; r < 4; ++r) fams.push_back(q_family(a.eps + varpi[r], 0.5 * a.s));
      break;
  }
  return merge_families(fams, n_needed);
}

namespace {

void hermitian2(double a, double b, double c, std::vector<double>& out) {
  const double mid = 0.5 * (a + c), rad = std::hypot(0.5 * (a - c), b);
  const double big = mid + rad;
  out.push_back(big);
  // the smaller root through the determinant keeps relative accuracy
  out.push_back(big != 0.0 ? (a * c - b * b) / big : 0.0);
}

}  // namespace

void hermitian_eigenvalues(const Eigen::MatrixXcd& H, std::vector<double>& out) {
  const Eigen::Index d = H.rows();
  if (d == 0) return;
  if (d == 1) {
    out.push_back(H(0, 0).real());
    return;
  }
  if (d == 2) {
    hermitian2(H(0, 0).real(), std::abs(H(0, 1)), H(1, 1).real(), out);
    return;
  }
  bool diagonal = true;
  for (Eigen::Index i = 0; i < d && diagonal; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      if (i != j && H(i, j) != cplx(0.0)) {
        diagonal = false;
        break;
      }
  if (diagonal) {
    for (Eigen::Index i = 0; i < d; ++i) out.push_back(H(i, i).real());
    return;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("hermitian_eigenvalues: no convergence");
  for (Eigen::Index i = 0; i < d; ++i) out.push_back(es.eigenvalues()(i));
}

namespace {

class ResolventSandwich final : public SectorFamily {
 public:
  ResolventSandwich(const Eigen::MatrixXcd& M, double alpha) : alpha_(alpha) {
    if (M.rows() != M.cols()) throw std::invalid_argument("resolvent_sandwich_family: square matrix required");
    if (!(1.0 + alpha > 0.0)) throw std::invalid_argument("resolvent_sandwich_family: shift must exceed -1");
    for (Eigen::Index i = 0; i < M.rows(); ++i)
      if (M.row(i).cwiseAbs().maxCoeff() > 0.0 || M.col(i).cwiseAbs().maxCoeff() > 0.0) support_.push_back(int(i));
    const Eigen::Index d = Eigen::Index(support_.size());
    M_.resize(d, d);
    diagonal_ = true;
    for (Eigen::Index a = 0; a < d; ++a)
      for (Eigen::Index b = 0; b < d; ++b) {
        M_(a, b) = M(support_[a], support_[b]);
        if (a != b && M_(a, b) != cplx(0.0)) diagonal_ = false;
      }
  }

  void eigenvalues(long mu, std::vector<double>& out) const override {
    const Eigen::Index d = M_.rows();
    if (diagonal_) {
      for (Eigen::Index a = 0; a < d; ++a) out.push_back(M_(a, a).real() / (double(mu) + support_[a] + 1.0 + alpha_));
      return;
    }
    if (d == 2) {
      const double w0 = 1.0 / (double(mu) + support_[0] + 1.0 + alpha_);
      const double w1 = 1.0 / (double(mu) + support_[1] + 1.0 + alpha_);
      hermitian2(M_(0, 0).real() * w0, std::abs(M_(0, 1)) * std::sqrt(w0 * w1), M_(1, 1).real() * w1, out);
      return;
    }
    Eigen::VectorXd w(d);
    for (Eigen::Index a = 0; a < d; ++a) w(a) = 1.0 / std::sqrt(double(mu) + support_[a] + 1.0 + alpha_);
    const Eigen::MatrixXcd S = w.asDiagonal() * M_ * w.asDiagonal();
    hermitian_eigenvalues(S, out);
  }

 private:
  double alpha_;
  std::vector<int> support_;
  Eigen::MatrixXcd M_;
  bool diagonal_ = true;
};

class Callback final : public SectorFamily {
 public:
  explicit Callback(std::function<Eigen::MatrixXcd(long)> f) : f_(std::move(f)) {}
  void eigenvalues(long mu, std::vector<double>& out) const override { hermitian_eigenvalues(f_(mu), out); }

 private:
  std::function<Eigen::MatrixXcd(long)> f_;
};

class SingularCallback final : public SectorFamily {
 public:
  explicit SingularCallback(std::function<Eigen::MatrixXcd(long)> f) : f_(std::move(f)) {}
  void eigenvalues(long mu, std::vector<double>& out) const override {
    const Eigen::MatrixXcd B = f_(mu);
    if (B.size() == 0) return;
    if (B.size() == 1) {
      out.push_back(std::abs(B(0, 0)));
      return;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(B);
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) out.push_back(svd.singularValues()(i));
  }

 private:
  std::function<Eigen::MatrixXcd(long)> f_;
};

}  // namespace

SectorFamilyPtr resolvent_sandwich_family(const Eigen::MatrixXcd& M, double alpha) {
  return std::make_shared<ResolventSandwich>(M, alpha);
}

SectorFamilyPtr callback_family(std::function<Eigen::MatrixXcd(long)> block) {
  return std::make_shared<Callback>(std::move(block));
}

SectorFamilyPtr singular_callback_family(std::function<Eigen::MatrixXcd(long)> block) {
  return std::make_shared<SingularCallback>(std::move(block));
}

SingularSpectrum sector_spectrum(const std::vector<SectorFamilyPtr>& families, const SectorOptions& opt,
                                 SectorDiagnostics* diag) {
  std::vector<double> values;
  std::vector<double> buf;
  SectorDiagnostics d;
  double prev_max = std::numeric_limits<double>::infinity();
  double floor = 0.0;  // n_needed-th largest so far; smaller values never enter the result
  long next_check = 16;
  long zero_run = 0;
  long mu = 0;
  bool complete = false;
  const auto n = std::size_t(std::max<long long>(opt.n_needed, 1));
  for (;; ++mu) {
    if (mu >= opt.mu_cap) {
      d.capped = true;
      break;
    }
    double smax = 0.0;
    for (const auto& f : families) {
      buf.clear();
      f->eigenvalues(mu, buf);
      double fmax = 0.0;
      for (double v : buf) fmax = std::max(fmax, v);
      for (double v : buf)
        if (v > 1e-13 * fmax && v >= floor) values.push_back(v);
      smax = std::max(smax, fmax);
    }
    if (smax > prev_max * (1.0 + 1e-12)) ++d.monotone_violations;
    prev_max = smax;
    zero_run = smax > 0.0 ? 0 : zero_run + 1;
    if (zero_run >= 1024) {  // finite rank: nothing left to find
      complete = true;
      break;
    }
    if (values.size() >= n && (mu >= next_check || values.size() >= 4 * n)) {
      next_check = mu + std::max(16L, mu / 4);
      std::nth_element(values.begin(), values.begin() + std::ptrdiff_t(n - 1), values.end(), std::greater<>());
      floor = values[n - 1];
      values.resize(n);
      if (smax < floor) break;
    }
  }
  d.mu_reached = mu;
  if (diag) *diag = d;
  std::sort(values.begin(), values.end(), std::greater<>());
  if ((long long)values.size() > opt.n_needed) values.resize(std::size_t(opt.n_needed));
  SingularSpectrum s;
  s.complete = complete;
  for (double v : values) push_run(s.runs, {v, 1});
  return s;
}

}  // namespace magws
