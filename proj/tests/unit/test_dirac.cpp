#include <algorithm>
#include <cmath>
#include <map>

#include "doctest.h"
#include "magws/dirac.hpp"

using namespace magws;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

TEST_CASE("D maps each D^2 eigenspace and dual charge into itself") {
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 6; ++m)
      for (int r = 0; r < 4; ++r) {
        const SpinorIndex s{n, m, r};
        for (const auto& t : dirac_apply(s)) {
          CHECK(d2_eigenvalue(t.idx) == d2_eigenvalue(s));
          CHECK(dual_charge(t.idx) == dual_charge(s));
          CHECK(chirality[t.idx.r] == -chirality[r]);
        }
      }
}

TEST_CASE("D squared is diagonal with eigenvalue n + m + 1 + varpi") {
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= 5; ++m)
      for (int r = 0; r < 4; ++r) {
        const SpinorIndex s{n, m, r};
        std::map<std::tuple<int, int, int>, cplx> acc;
        for (const auto& t : dirac_apply(s))
          for (const auto& u : dirac_apply(t.idx)) acc[{u.idx.n, u.idx.m, u.idx.r}] += t.coeff * u.coeff;
        for (const auto& [key, v] : acc) {
          const bool self = key == std::tuple<int, int, int>{n, m, r};
          CHECK(std::abs(v - (self ? cplx(d2_eigenvalue(s)) : cplx(0.0))) < 1e-13);
        }
      }
}

TEST_CASE("dense spectrum on complete blocks") {
  const int J = 5;
  const TruncatedSpace h = TruncatedSpace::complete_blocks(J);
  const Eigen::MatrixXcd D = dirac_matrix(h);
  CHECK(max_abs(D - D.adjoint()) < 1e-14);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(D, Eigen::EigenvaluesOnly);
  std::map<long, int> count;  // keyed by round(lambda^2) with sign
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lam = es.eigenvalues()(i);
    const long j = std::lround(lam * lam);
    CHECK(std::abs(std::abs(lam) - std::sqrt(double(j))) < 1e-12);
    count[lam < -1e-9 ? -j : j] += 1;
  }
  CHECK(count[0] == 1);
  for (long j = 1; j <= J; ++j) {
    CHECK(count[j] == 2 * j);
    CHECK(count[-j] == 2 * j);
  }
  CHECK(h.size() == 1 + 4 * J * (J + 1) / 2);
}

TEST_CASE("phase and chirality") {
  const TruncatedSpace h = TruncatedSpace::complete_blocks(4);
  const Eigen::MatrixXcd chi = chirality_matrix(h);
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(h.size(), h.size());
  CHECK(max_abs(chi * chi - I) < 1e-15);
  const double eps = 0.7;
  const Eigen::MatrixXcd F = phase_matrix(h, eps);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(F, Eigen::EigenvaluesOnly);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double f = es.eigenvalues()(i);
    const double j = eps * f * f / (1.0 - f * f);  // f^2 = j / (j + eps)
    CHECK(std::abs(j - std::round(j)) < 1e-10);
  }
  CHECK_THROWS(phase_matrix(h, 0.0));
  CHECK_THROWS(build_dirac(-1, MagneticParams{}));
}

TEST_CASE("commutator with D is the spinor derivation") {
  const MagneticParams p{1.4, 1.0};
  const TruncatedSpace h = TruncatedSpace::complete_blocks(6);
  const Eigen::MatrixXcd D = dirac_matrix(h);
  AlgebraElement a(2, p);
  a.a(0, 1) = {0.3, -1.0};
  a.a(2, 0) = {1.1, 0.2};
  a.a(1, 1) = {0.4, 0.0};
  const Eigen::MatrixXcd R = rho_matrix(a, h);
  // compare away from the truncation edge only: rows with j <= J - 3
  const Eigen::MatrixXcd lhs = cplx(0.0, -1.0) * (D * R - R * D);
  const Eigen::MatrixXcd rhs = spinor_matrix(delta_B(a), h);
  double worst = 0.0;
  for (int i = 0; i < h.size(); ++i)
    if (d2_eigenvalue(h.basis[i]) <= 3)
      for (int k = 0; k < h.size(); ++k) worst = std::max(worst, std::abs(lhs(i, k) - rhs(i, k)));
  CHECK(worst < 1e-12);
}

TEST_CASE("sector blocks reproduce the dense quasi-differential") {
  const MagneticParams p{};
  const double eps = 1.0;
  const AlgebraElement a = upsilon(1, 0, 1, p);
  const int nmax = a.support() + 2;
  const TruncatedSpace h = TruncatedSpace::complete_blocks(9);
  const Eigen::MatrixXcd F = phase_matrix(h, eps);
  const Eigen::MatrixXcd R = rho_matrix(a, h);
  const Eigen::MatrixXcd d = F * R - R * F;
  for (long mu = 0; mu <= 3; ++mu) {
    const Sector s = dual_sector(mu, nmax);
    for (const auto& b : s.basis) CHECK(dual_charge(b) == mu);
    const Eigen::MatrixXcd blk = sector_quasi_differential(a, s, eps);
    for (std::size_t r = 0; r < s.basis.size(); ++r)
      for (std::size_t c = 0; c < s.basis.size(); ++c)
        CHECK(std::abs(blk(Eigen::Index(r), Eigen::Index(c)) - d(h.find(s.basis[r]), h.find(s.basis[c]))) < 1e-13);
  }
  CHECK_THROWS(sector_quasi_differential(landau_projection(3, 3, p), dual_sector(0, 3), eps));
}

TEST_CASE("regularity coefficients") {
  CHECK(regularity_coeff(0, 0, 3, 0, 0, 1.0) == doctest::Approx(std::sqrt(5.0) - std::sqrt(2.0)));
  CHECK(regularity_coeff(2, 3, 0, 0, 4, 1.0) == doctest::Approx(std::sqrt(7.0) - std::sqrt(5.0)));
  CHECK(regularity_bound(0, 0, 3, 0, 1.0) == doctest::Approx(std::sqrt(5.0) - std::sqrt(2.0)));
  CHECK_THROWS(regularity_coeff(4, 0, 0, 0, 0, 1.0));
}
