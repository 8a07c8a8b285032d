#pragma once

#include <array>
#include <map>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "magws/algebra.hpp"

namespace magws {

struct GammaSet {
  std::array<Eigen::Matrix4cd, 4> gamma;
  Eigen::Matrix4cd chi;  // gamma_1 gamma_2 gamma_3 gamma_4

  static GammaSet standard();
};

// D^2 = Q (x) 1 + 1 (x) diag(varpi)
inline constexpr std::array<int, 4> varpi{0, 0, 1, -1};
// D conserves m + dual_shift[r]
inline constexpr std::array<int, 4> dual_shift{0, 1, 1, 0};
inline constexpr std::array<int, 4> chirality{1, 1, -1, -1};

struct SpinorIndex {
  int n = 0;
  int m = 0;
  int r = 0;  // spinor component 0..3
};

inline int d2_eigenvalue(SpinorIndex s) { return s.n + s.m + 1 + varpi[s.r]; }
inline long dual_charge(SpinorIndex s) { return long(s.m) + dual_shift[s.r]; }

struct DiracTerm {
  SpinorIndex idx;
  cplx coeff;
};

// D psi_{n,m} (x) e_r expanded on the basis.
std::vector<DiracTerm> dirac_apply(SpinorIndex s);

struct DiracBlock {
  int j = 0;
  std::vector<SpinorIndex> basis;
  Eigen::MatrixXcd M;
};

// Exact restriction of D to the D^2 eigenspaces j = 0..J.
struct DiracBlocks {
  int J = 0;
  MagneticParams params;
  std::vector<DiracBlock> blocks;
};

DiracBlocks build_dirac(int J, const MagneticParams& p);

struct SpectrumEntry {
  int j = 0;
  double eigenvalue = 0.0;
  int multiplicity = 0;
};

struct DiracSpectrum {
  std::vector<SpectrumEntry> entries;
  double max_deviation = 0.0;  // max |lambda| - sqrt(j)
};

DiracSpectrum spectrum(const DiracBlocks& blocks);
int kernel_dimension(const DiracBlocks& blocks, double tol = 1e-10);

// delta_B(A) = g1 (x) gamma_1 + g2 (x) gamma_2 with
// g2 = nabla_1(A)/(sqrt2 l), g1 = -nabla_2(A)/(sqrt2 l).
struct SpinorElement {
  AlgebraElement g1;
  AlgebraElement g2;
};

SpinorElement delta_B(const AlgebraElement& x);

// sqrt(s+1+alpha_i+m) - sqrt(r+1+alpha_k+m), alpha = eps + varpi[spinor]
double regularity_coeff(int i, int k, int s, int r, long m, double eps);
// sup_m |coeff|, attained at m = 0
double regularity_bound(int i, int k, int s, int r, double eps);

// F = D / |D_eps| per block: M / sqrt(j + eps)
std::vector<Eigen::MatrixXcd> dirac_phase(const DiracBlocks& blocks, double eps);

// Truncation to the complete D^2 blocks j <= J; dense operators on it.
struct TruncatedSpace {
  int J = 0;
  std::vector<SpinorIndex> basis;
  std::map<std::tuple<int, int, int>, int> index;

  static TruncatedSpace complete_blocks(int J);
  int find(SpinorIndex s) const;  // -1 if outside
  int size() const { return int(basis.size()); }
};

Eigen::MatrixXcd dirac_matrix(const TruncatedSpace& h);
Eigen::MatrixXcd phase_matrix(const TruncatedSpace& h, double eps);
Eigen::MatrixXcd chirality_matrix(const TruncatedSpace& h);
// |D_eps|^{-s}
Eigen::MatrixXcd resolvent_power(const TruncatedSpace& h, double eps, double s);
// compression of A (x) 1 (x) 1
Eigen::MatrixXcd rho_matrix(const AlgebraElement& x, const TruncatedSpace& h);
Eigen::MatrixXcd spinor_matrix(const SpinorElement& x, const TruncatedSpace& h);

// [F, T]_chi: T is split into chi-even and chi-odd parts.
Eigen::MatrixXcd graded_quasi_differential(const Eigen::MatrixXcd& T, const Eigen::MatrixXcd& F,
                                           const Eigen::MatrixXcd& chi);

// Invariant subspace of D and rho(A) (support of A <= nmax - 2): fixed dual
// charge mu, Landau index n <= nmax.
struct Sector {
  long mu = 0;
  int nmax = 0;
  std::vector<SpinorIndex> basis;
};

Sector dual_sector(long mu, int nmax);
Eigen::MatrixXcd sector_phase(const Sector& s, double eps);
Eigen::MatrixXcd sector_rho(const AlgebraElement& x, const Sector& s);
// d(rho A) = [F, rho A] restricted to the sector (rho A is chi-even)
Eigen::MatrixXcd sector_quasi_differential(const AlgebraElement& x, const Sector& s, double eps);

}  // namespace magws
