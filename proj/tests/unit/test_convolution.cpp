#include <cmath>

#include "doctest.h"
#include "magws/convolution.hpp"

using namespace magws;

namespace {

// (f*g)(x) by the trapezoid rule on a square; the integrand is Gaussian so the
// rule converges exponentially.
cplx brute_convolve(const Kernel& f, const Kernel& g, Vec2 x, const MagneticParams& p, double half, int n) {
  const double h = 2.0 * half / n;
  cplx s = 0.0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const Vec2 y{-half + i * h, -half + j * h};
      s += f(x - y) * g(y) * std::polar(1.0, wedge(x, y) / (2.0 * p.ell_B * p.ell_B));
    }
  return s * h * h / (2.0 * pi * p.ell_B * p.ell_B);
}

}  // namespace

TEST_CASE("polar rule against a brute force trapezoid") {
  const MagneticParams p{1.1, 1.0};
  const QuadGrid grid = polar_grid(24, p);
  const auto f = basis_kernel({1, 2}, p), g = basis_kernel({2, 0}, p);
  for (const Vec2 x : {Vec2{0.5, -0.3}, Vec2{-1.4, 0.9}}) {
    const cplx ref = brute_convolve(f, g, x, p, 14.0, 360);
    CHECK(std::abs(twisted_convolve(f, g, x, grid, p) - ref) < 1e-10);
  }
}

TEST_CASE("product lemma for a few indices, non-unit magnetic length") {
  const MagneticParams p{0.6, 2.0};
  const QuadGrid grid = polar_grid(24, p);
  const double c = 1.0 / (std::sqrt(2.0 * pi) * p.ell_B);
  const Vec2 x{0.2, 0.35};
  CHECK(std::abs(twisted_convolve(basis_kernel({2, 1}, p), basis_kernel({1, 3}, p), x, grid, p) -
                 c * laguerre_fn({2, 3}, x, p)) < 1e-12);
  CHECK(std::abs(twisted_convolve(basis_kernel({2, 1}, p), basis_kernel({0, 3}, p), x, grid, p)) < 1e-12);
}

TEST_CASE("projection and Mehler kernels against std::laguerre") {
  const MagneticParams p{1.4, 1.0};
  for (const Vec2 x : {Vec2{0.0, 0.0}, Vec2{0.7, -0.2}, Vec2{2.0, 1.5}}) {
    const double t = norm2(x) / (2.0 * p.ell_B * p.ell_B);
    for (unsigned n = 0; n <= 6; ++n)
      CHECK(projection_kernel(int(n), x, p) == doctest::Approx(std::exp(-0.5 * t) * std::laguerre(n, t)).epsilon(1e-12));
    for (double s : {0.5, 1.0, 3.0}) {
      double sum = 0.0;
      for (unsigned j = 0; j < 400; ++j) sum += std::exp(-s * (j + 0.5)) * std::exp(-0.5 * t) * std::laguerre(j, t);
      CHECK(mehler_kernel(s, x, p) == doctest::Approx(sum).epsilon(1e-11));
      int terms = 0;
      CHECK(mehler_series(s, x, p, &terms) == doctest::Approx(sum).epsilon(1e-11));
      CHECK(terms > 0);
    }
  }
  CHECK(mehler_kernel(1.0, {0.0, 0.0}, p) == doctest::Approx(1.0 / (2.0 * std::sinh(0.5))));
  CHECK_THROWS(mehler_kernel(0.0, {0.0, 0.0}, p));
  CHECK_THROWS(projection_kernel(-1, {0.0, 0.0}, p));
}

TEST_CASE("magnetic translations") {
  const MagneticParams p{};
  const Kernel f = basis_kernel({1, 0}, p);
  const Vec2 a{0.3, -0.4}, x{1.0, 0.25};
  const cplx u = magnetic_translate(Translation::U, a, f, p)(x);
  const cplx v = magnetic_translate(Translation::V, a, f, p)(x);
  const double phase = (a.x1 * x.x2 - a.x2 * x.x1) / 2.0;
  CHECK(std::abs(u - std::polar(1.0, phase) * f(x - a)) < 1e-15);
  CHECK(std::abs(v - std::polar(1.0, -phase) * f(x - a)) < 1e-15);
}

TEST_CASE("involution and reflection") {
  const MagneticParams p{};
  const Kernel f = basis_kernel({2, 1}, p);
  const Vec2 x{0.4, 0.9};
  CHECK(std::abs(kernel_involution(f)(x) - std::conj(f(-x))) == 0.0);
  CHECK(std::abs(kernel_reflection(f)(x) - f(-x)) == 0.0);
  // psi_nm(-x) = (-1)^{m-n} psi_nm(x)
  CHECK(std::abs(f(-x) + f(x)) < 1e-15);
}

TEST_CASE("L2 contraction") {
  const MagneticParams p{0.9, 1.0};
  const QuadGrid outer = polar_grid(12, p), inner = polar_grid(20, p);
  const ContractionCheck c = l2_contraction_check(basis_kernel({0, 1}, p), basis_kernel({1, 0}, p), outer, inner, p);
  CHECK(c.lhs == doctest::Approx(c.rhs).epsilon(1e-9));
  const ContractionCheck d = l2_contraction_check(basis_kernel({0, 1}, p), basis_kernel({0, 1}, p), outer, inner, p);
  CHECK(d.lhs < 1e-9);
}

TEST_CASE("trace per unit volume quadrature") {
  const MagneticParams p{1.3, 1.0};
  const KernelCoeffs f = KernelCoeffs::basis({1, 2}, 3, p);
  const KernelCoeffs g = KernelCoeffs::basis({0, 2}, 3, p);
  const QuadValue ff = tuv_quadrature(f, f, 1.5, p);
  CHECK_FALSE(ff.accuracy_warning);
  CHECK(std::abs(ff.value - inner_product_B(f, f)) < 1e-9);
  CHECK(std::abs(tuv_quadrature(f, g, 2.5, p).value) < 1e-9);
  CHECK(tuv_quadrature(f, f, 1.0, p, 2).accuracy_warning);
  CHECK_THROWS(tuv_quadrature(f, f, 0.0, p));
}
