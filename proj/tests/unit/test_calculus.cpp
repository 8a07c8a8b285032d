#include <cmath>

#include "doctest.h"
#include "magws/calculus.hpp"

using namespace magws;

TEST_CASE("derivations on the lowest projection") {
  const MagneticParams p{1.3, 1.0};
  const double c = p.ell_B / std::sqrt(2.0);
  const AlgebraElement pi0 = landau_projection(0, 1, p);
  const AlgebraElement d1 = nabla(pi0, 1), d2 = nabla(pi0, 2);
  // nabla_1 Ups_{0->0} = -(l/sqrt2)(Ups_{0->1} + Ups_{1->0}); nabla_2 = i(l/sqrt2)(Ups_{0->1} - Ups_{1->0})
  CHECK(std::abs(d1.coeff(1, 0) + c) < 1e-15);
  CHECK(std::abs(d1.coeff(0, 1) + c) < 1e-15);
  CHECK(std::abs(d2.coeff(1, 0) - cplx(0.0, c)) < 1e-15);
  CHECK(std::abs(d2.coeff(0, 1) + cplx(0.0, c)) < 1e-15);
  CHECK(d1.cutoff == 2);
  CHECK_THROWS(nabla(pi0, 3));
}

TEST_CASE("kernel derivation is multiplication by i x_j") {
  const MagneticParams p{0.9, 1.0};
  KernelCoeffs f(3, p);
  f.c(0, 1) = {1.0, -0.5};
  f.c(2, 3) = {0.3, 0.8};
  f.c(1, 1) = {-0.2, 0.0};
  for (int j : {1, 2}) {
    const KernelCoeffs df = kernel_derivation(f, j);
    for (const Vec2 x : {Vec2{0.4, -0.6}, Vec2{1.2, 0.3}, Vec2{-0.8, 1.1}}) {
      const double xj = j == 1 ? x.x1 : x.x2;
      CHECK(std::abs(df(x) - cplx(0.0, xj) * f(x)) < 1e-13);
    }
  }
  CHECK_THROWS(kernel_derivation(f, 0));
}

TEST_CASE("norms") {
  const MagneticParams p{0.7, 1.0};
  CHECK(norm_B2(landau_projection(2, 3, p)) == doctest::Approx(1.0));
  CHECK(norm_B2(upsilon(0, 1, 1, p) + upsilon(1, 0, 1, p)) == doctest::Approx(std::sqrt(2.0)));
  const AlgebraElement pi0 = landau_projection(0, 1, p);
  CHECK(sobolev_norm(pi0, 0) == doctest::Approx(1.0));
  CHECK(sobolev_norm(pi0, 1) == doctest::Approx(std::sqrt(1.0 + 2.0 * p.ell_B * p.ell_B)));
  CHECK_THROWS(sobolev_norm(pi0, 1, 1));
  CHECK_THROWS(sobolev_norm(pi0, -1));
}

TEST_CASE("integration by parts residual vanishes") {
  const MagneticParams p{};
  AlgebraElement t(3, p), s(3, p);
  t.a(0, 2) = {1.0, 1.0};
  t.a(3, 1) = {0.5, 0.0};
  s.a(1, 0) = {0.0, 2.0};
  s.a(2, 3) = {-1.0, 0.3};
  CHECK(integration_by_parts_residual(t, s, 1) < 1e-14);
  CHECK(integration_by_parts_residual(t, s, 2) < 1e-14);
}
