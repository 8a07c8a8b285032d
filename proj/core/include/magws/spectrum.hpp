#pragma once

#include <functional>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "magws/params.hpp"

namespace magws {

struct Run {
  double value = 0.0;
  long long mult = 0;
};

// Decreasing singular values mu_0 >= mu_1 >= ... stored as runs with strictly
// decreasing values. Only the materialised prefix is held.
struct SingularSpectrum {
  std::vector<Run> runs;
  bool complete = false;  // every nonzero value is present; the rest are 0

  long long total() const;
  double partial_sum(long long N) const;  // sum_{n<N} mu_n
  std::vector<double> flat(long long N) const;
  bool monotone() const;

  static SingularSpectrum from_values(std::vector<double> values);
  static SingularSpectrum from_runs(std::vector<Run> runs);
};

// Decreasing families of runs, merged lazily; run(i) must be nonincreasing in i.
struct RunFamily {
  std::function<Run(long long)> run;
};

SingularSpectrum merge_families(const std::vector<RunFamily>& families, long long n_needed);

enum class AnalyticKind {
  q_power,             // Q_eps^{-s}: (j+1+eps)^{-s}, mult j+1
  q_inv_projection,    // Q_eps^{-1} Pi_j: (m+j+1+eps)^{-1}
  q_sandwich_upsilon,  // Q_eps^{-1/2} Ups_{j->k} Q_eps2^{-1/2}: ((m+k+1+eps)(m+j+1+eps2))^{-1/2}
  dirac_power,         // |D_eps|^{-s}: Q-families shifted by eps + varpi, power s/2
};

struct AnalyticArgs {
  double s = 1.0;
  double eps = 1.0;
  double eps2 = 1.0;
  int j = 0;
  int k = 0;
};

SingularSpectrum analytic_spectrum(AnalyticKind kind, const AnalyticArgs& args, long long n_needed);

// A positive operator that splits into finite Hermitian blocks labelled by an
// integer mu = 0, 1, ...; eigenvalues of block mu are appended to out.
class SectorFamily {
 public:
  virtual ~SectorFamily() = default;
  virtual void eigenvalues(long mu, std::vector<double>& out) const = 0;
};

using SectorFamilyPtr = std::shared_ptr<const SectorFamily>;

// W^{1/2} M W^{1/2} on n = 0..K with W = diag(1/(mu+n+1+alpha)); M Hermitian PSD.
SectorFamilyPtr resolvent_sandwich_family(const Eigen::MatrixXcd& M, double alpha);
// Arbitrary Hermitian PSD blocks.
SectorFamilyPtr callback_family(std::function<Eigen::MatrixXcd(long)> block);
// Singular values of arbitrary blocks.
SectorFamilyPtr singular_callback_family(std::function<Eigen::MatrixXcd(long)> block);

struct SectorOptions {
  long long n_needed = 0;
  long mu_cap = 100'000'000;
};

struct SectorDiagnostics {
  long mu_reached = 0;
  long monotone_violations = 0;  // sector maxima that increased along mu
  bool capped = false;
};

// Enumerates blocks until at least n_needed values are known and the largest
// value of the current block is below the n_needed-th largest found so far.
SingularSpectrum sector_spectrum(const std::vector<SectorFamilyPtr>& families, const SectorOptions& opt,
                                 SectorDiagnostics* diag = nullptr);

void hermitian_eigenvalues(const Eigen::MatrixXcd& H, std::vector<double>& out);

}  // namespace magws
