#include <algorithm>
#include <cmath>

#include "magws/dirac.hpp"
#include "suites.hpp"

namespace magws::wb {

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

SuiteResult run_spectrum(const Config& cfg) {
  const MagneticParams& p = cfg.params;
  const int J = cfg.block_cutoff_J;
  const double exact_tol = 1e-10;
  SuiteResult out;
  out.suite = "spectrum";

  {
    const DiracBlocks blocks = build_dirac(J, p);
    const DiracSpectrum sp = spectrum(blocks);
    // each block j >= 1 carries +-sqrt(j) with multiplicity 2j; j = 0 is the kernel
    int bad = 0;
    for (int j = 0; j <= J; ++j) {
      int pos = 0, neg = 0, zero = 0;
      for (const auto& e : sp.entries) {
        if (e.j != j) continue;
        if (e.eigenvalue > 0) pos += e.multiplicity;
        else if (e.eigenvalue < 0) neg += e.multiplicity;
        else zero += e.multiplicity;
      }
      if (j == 0) bad += (zero != 1 || pos || neg) ? 1 : 0;
      else bad += (pos != 2 * j || neg != 2 * j || zero) ? 1 : 0;
    }
    out.add(equal_case("census_multiplicity", "eigenvalues +-sqrt(j) with multiplicity 2j each, j <= J", 0.0, bad, 0.0)
                .detail("J", J));
    out.add(equal_case("census_deviation", "max | |lambda| - sqrt(j) |", 0.0, sp.max_deviation, exact_tol));
    out.add(equal_case("kernel_dimension", "dim ker D = 1", 1.0, kernel_dimension(blocks), 0.0));
    double sq = 0.0;
    for (const auto& b : blocks.blocks) {
      const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(b.M.rows(), b.M.cols());
      sq = std::max(sq, max_abs(b.M * b.M - double(b.j) * I));
    }
    out.add(equal_case("block_square", "D^2 = j on block j", 0.0, sq, exact_tol));
  }
  {
    const GammaSet G = GammaSet::standard();
    const Eigen::Matrix4cd I = Eigen::Matrix4cd::Identity();
    double cl = 0.0, anti = 0.0;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b)
        cl = std::max(cl, max_abs(G.gamma[a] * G.gamma[b] + G.gamma[b] * G.gamma[a] - (a == b ? 2.0 : 0.0) * I));
      anti = std::max(anti, max_abs(G.chi * G.gamma[a] + G.gamma[a] * G.chi));
    }
    Eigen::Matrix4cd chi_expect = Eigen::Matrix4cd::Zero();
    for (int r = 0; r < 4; ++r) chi_expect(r, r) = double(chirality[r]);
    out.add(equal_case("clifford", "{gamma_a, gamma_b} = 2 delta_ab", 0.0, cl, 1e-14));
    out.add(equal_case("chirality_gamma", "chi gamma_a = -gamma_a chi, chi = diag(1,1,-1,-1)", 0.0,
                       std::max(anti, max_abs(G.chi - chi_expect)), 1e-14));
  }
  const int Jt = std::min(J, 8);
  const TruncatedSpace h = TruncatedSpace::complete_blocks(Jt);
  const Eigen::MatrixXcd D = dirac_matrix(h);
  const Eigen::MatrixXcd chi = chirality_matrix(h);
  out.add(equal_case("chirality_odd", "chi D chi = -D", 0.0, max_abs(chi * D * chi + D), exact_tol));
  {
    double f2 = 0.0, fsa = 0.0, fodd = 0.0, fnorm = 0.0;
    for (double eps : cfg.epsilon_list) {
      const Eigen::MatrixXcd F = phase_matrix(h, eps);
      const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(h.size(), h.size());
      f2 = std::max(f2, max_abs(F * F - (I - eps * resolvent_power(h, eps, 2.0))));
      fsa = std::max(fsa, max_abs(F - F.adjoint()));
      fodd = std::max(fodd, max_abs(chi * F * chi + F));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(F, Eigen::EigenvaluesOnly);
      const double top = es.eigenvalues().cwiseAbs().maxCoeff();
      fnorm = std::max(fnorm, std::abs(top - std::sqrt(Jt / (Jt + eps))));
    }
    out.add(equal_case("phase_square", "F^2 = 1 - eps |D_eps|^{-2}", 0.0, f2, exact_tol));
    out.add(equal_case("phase_selfadjoint", "F^* = F", 0.0, fsa, exact_tol));
    out.add(equal_case("phase_odd", "chi F chi = -F", 0.0, fodd, exact_tol));
    out.add(equal_case("phase_norm", "||F|| = sqrt(J / (J + eps)) on blocks j <= J", 0.0, fnorm, exact_tol));
  }
  {
    double worst = 0.0;
    for (const AlgebraElement& a : {landau_projection(0, 3, p), upsilon(0, 1, 3, p), upsilon(2, 1, 3, p)}) {
      const Eigen::MatrixXcd R = rho_matrix(a, h);
      const Eigen::MatrixXcd comm = cplx(0.0, -1.0) * (D * R - R * D);
      worst = std::max(worst, max_abs(comm - spinor_matrix(delta_B(a), h)));
    }
    out.add(equal_case("bounded_commutator", "delta_B(A) = -i [D, rho(A)]", 0.0, worst, exact_tol));
  }
  {
    const double eps = cfg.epsilon_list.front();
    const Eigen::MatrixXcd F = phase_matrix(h, eps);
    const Eigen::MatrixXcd R = rho_matrix(upsilon(0, 1, 3, p), h);
    const Eigen::MatrixXcd dR = graded_quasi_differential(R, F, chi);
    const Eigen::MatrixXcd lhs = graded_quasi_differential(dR, F, chi);
    out.add(equal_case("graded_square", "[F, [F, T]_chi]_chi = [F^2, T] for even T", 0.0,
                       max_abs(lhs - (F * F * R - R * F * F)), exact_tol));
  }
  {
    // sectors of fixed dual charge are invariant blocks of d(rho A)
    const double eps = cfg.epsilon_list.front();
    const AlgebraElement a = upsilon(0, 1, 2, p) + landau_projection(2, 2, p);
    const int nmax = a.support() + 2;
    const Eigen::MatrixXcd F = phase_matrix(h, eps);
    const Eigen::MatrixXcd R = rho_matrix(a, h);
    const Eigen::MatrixXcd d = F * R - R * F;
    double worst = 0.0, leak = 0.0;
    for (long mu = 0; mu + nmax + 2 <= Jt; ++mu) {
      const Sector s = dual_sector(mu, nmax);
      const Eigen::MatrixXcd block = sector_quasi_differential(a, s, eps);
      std::vector<int> idx;
      for (const auto& b : s.basis) idx.push_back(h.find(b));
      for (std::size_t c = 0; c < idx.size(); ++c) {
        double col = 0.0;
        for (std::size_t r = 0; r < idx.size(); ++r) {
          worst = std::max(worst, std::abs(d(idx[r], idx[c]) - block(r, c)));
          col += std::norm(d(idx[r], idx[c]));
        }
        leak = std::max(leak, std::abs(d.col(idx[c]).squaredNorm() - col));
      }
    }
    out.add(equal_case("sector_blocks", "d(rho A) restricted to a dual-charge sector matches the full operator", 0.0,
                       std::max(worst, leak), exact_tol));
  }
  {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k)
        for (int s = 0; s <= 2; ++s)
          for (int r = 0; r <= 2; ++r) {
            double sup = 0.0;
            for (long m = 0; m <= 2000; ++m) sup = std::max(sup, std::abs(regularity_coeff(i, k, s, r, m, 1.0)));
            worst = std::max(worst, std::abs(sup - regularity_bound(i, k, s, r, 1.0)));
          }
    out.add(equal_case("regularity_sup", "sup_m |c_m| attained at m = 0", 0.0, worst, 1e-14));
  }
  return out;
}

}  // namespace magws::wb
