#include <cmath>

#include "doctest.h"
#include "magws/algebra.hpp"

using namespace magws;

TEST_CASE("kernel to algebra carries the reflection sign") {
  const MagneticParams p{1.5, 1.0};
  const double c = 1.0 / (std::sqrt(2.0 * pi) * p.ell_B);
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      const AlgebraElement x = from_kernel(KernelCoeffs::basis({n, m}, 3, p));
      const double sign = ((m - n) % 2 == 0) ? 1.0 : -1.0;
      // L_{psi_nm} = sign c Ups_{m->n}, stored at a(n, m)
      CHECK(std::abs(x.coeff(n, m) - sign * c) < 1e-15);
      CHECK(x.a.cwiseAbs().sum() == doctest::Approx(c));
    }
}

TEST_CASE("matrix units multiply as Upsilon_{j->k} Upsilon_{m->n} = delta_jn Upsilon_{m->k}") {
  const MagneticParams p{};
  const AlgebraElement x = multiply(upsilon(1, 2, 3, p), upsilon(0, 1, 3, p));
  CHECK(x.coeff(2, 0) == cplx(1.0));
  CHECK(x.a.cwiseAbs().sum() == 1.0);
  CHECK(multiply(upsilon(1, 2, 3, p), upsilon(0, 2, 3, p)).support() == -1);
  CHECK_THROWS(upsilon(4, 0, 3, p));
  CHECK_THROWS(multiply(upsilon(0, 0, 1, p), upsilon(0, 0, 1, MagneticParams{2.0, 1.0})));
}

TEST_CASE("adjoint and traces") {
  const MagneticParams p{0.8, 1.0};
  AlgebraElement x(2, p);
  x.a(0, 1) = {1.0, 2.0};
  x.a(2, 2) = {0.5, 0.0};
  x.a(1, 1) = {0.0, -1.0};
  const AlgebraElement y = adjoint(x);
  CHECK(y.coeff(1, 0) == cplx(1.0, -2.0));
  CHECK(trace_B(x) == cplx(0.5, -1.0));
  CHECK(std::abs(trace_per_unit_volume(x) - trace_B(x) / (2.0 * pi * p.ell_B * p.ell_B)) < 1e-15);
  CHECK(hs_inner(x, x).real() == doctest::Approx(1.0 + 4.0 + 0.25 + 1.0));
  CHECK(std::abs(trace_B_via_kernel(x) - trace_B(x)) < 1e-14);
}

TEST_CASE("heat element") {
  const MagneticParams p{};
  for (double s : {0.5, 1.0, 2.0}) {
    const AlgebraElement h = heat_element(s, 200, p);
    CHECK(trace_B(h).real() == doctest::Approx(1.0 / (2.0 * std::sinh(0.5 * s))).epsilon(1e-13));
    CHECK(h.coeff(3, 3).real() == doctest::Approx(std::exp(-3.5 * s)));
  }
  CHECK_THROWS(heat_element(-1.0, 3, p));
}

TEST_CASE("action on states keeps the dual index") {
  const MagneticParams p{};
  const KernelCoeffs v = KernelCoeffs::basis({1, 3}, 3, p);
  const KernelCoeffs w = apply_to_state(upsilon(1, 2, 3, p), v);
  CHECK(w.at(2, 3) == cplx(1.0));
  CHECK(w.c.cwiseAbs().sum() == 1.0);
  CHECK(apply_to_state(upsilon(0, 2, 3, p), v).c.cwiseAbs().sum() == 0.0);
}

TEST_CASE("support and resizing") {
  const MagneticParams p{};
  AlgebraElement x(5, p);
  CHECK(x.support() == -1);
  x.a(1, 3) = 1.0;
  CHECK(x.support() == 3);
  CHECK(x.resized(8).coeff(1, 3) == cplx(1.0));
  CHECK(x.resized(2).support() == -1);
  CHECK(x.coeff(9, 9) == cplx(0.0));
}
