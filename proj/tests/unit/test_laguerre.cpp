#include <cmath>

#include "doctest.h"
#include "magws/laguerre.hpp"
#include "magws/quadrature.hpp"

#ifdef MAGWS_HAVE_BOOST_MP
#include <boost/multiprecision/cpp_bin_float.hpp>
#endif

using namespace magws;

namespace {

// L_n^(a)(x) = sum_k (-1)^k C(n+a, n-k) x^k / k!
#ifdef MAGWS_HAVE_BOOST_MP
using Wide = boost::multiprecision::cpp_bin_float_50;
#else
using Wide = long double;
#endif

double laguerre_sum(int n, int a, double x) {
  Wide sum = 0, xk = 1, kfact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      xk *= Wide(x);
      kfact *= k;
    }
    // C(n+a, n-k)
    Wide c = 1;
    for (int i = 1; i <= n - k; ++i) c = c * Wide(a + k + i) / Wide(i);
    sum += ((k % 2) ? -1 : 1) * c * xk / kfact;
  }
  return static_cast<double>(sum);
}

// Wirtinger derivatives in w = (x2 + i x1)/(l sqrt 2) by central differences
struct Wirtinger {
  cplx f, dw, dwbar;
};

Wirtinger wirtinger(LagIndex idx, Vec2 x, const MagneticParams& p) {
  const double h = 1e-5;
  const cplx d1 = (laguerre_fn(idx, {x.x1 + h, x.x2}, p) - laguerre_fn(idx, {x.x1 - h, x.x2}, p)) / (2 * h);
  const cplx d2 = (laguerre_fn(idx, {x.x1, x.x2 + h}, p) - laguerre_fn(idx, {x.x1, x.x2 - h}, p)) / (2 * h);
  // w = u + i v with u = x2/(l sqrt2), v = x1/(l sqrt2)
  const double s = p.ell_B * std::sqrt(2.0);
  const cplx du = s * d2, dv = s * d1;
  const cplx I(0.0, 1.0);
  return {laguerre_fn(idx, x, p), 0.5 * (du - I * dv), 0.5 * (du + I * dv)};
}

}  // namespace

TEST_CASE("Laguerre recurrence matches the explicit sum") {
  for (int n = 0; n <= 30; ++n)
    for (int a : {0, 1, 3, 7})
      for (double x : {0.0, 0.3, 1.7, 6.5, 14.0}) {
        const double ref = laguerre_sum(n, a, x);
        CHECK(laguerre_poly(n, a, x) == doctest::Approx(ref).epsilon(1e-10).scale(1.0));
      }
}

TEST_CASE("closed forms of the first Laguerre functions") {
  const MagneticParams p{1.3, 1.0};
  const Vec2 x{0.4, -0.9};
  const double l = p.ell_B;
  const double psi0 = std::exp(-norm2(x) / (4 * l * l)) / (std::sqrt(2 * pi) * l);
  const cplx w(x.x2 / (l * std::sqrt(2.0)), x.x1 / (l * std::sqrt(2.0)));
  CHECK(std::abs(laguerre_fn({0, 0}, x, p) - psi0) < 1e-15);
  CHECK(std::abs(laguerre_fn({0, 1}, x, p) - psi0 * w) < 1e-15);
  CHECK(std::abs(laguerre_fn({1, 0}, x, p) + psi0 * std::conj(w)) < 1e-15);
  CHECK(std::abs(laguerre_fn({1, 1}, x, p) - psi0 * (1.0 - std::norm(w))) < 1e-15);
  CHECK(std::abs(laguerre_fn({0, 2}, x, p) - psi0 * w * w / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("ladder operators agree with their differential form") {
  // b+ = w/2 - d_wbar, b- = wbar/2 + d_w, a+ = -(wbar/2 - d_w), a- = -(w/2 + d_wbar)
  const MagneticParams p{0.8, 1.0};
  const std::vector<Vec2> pts = {{0.1, 0.2}, {-0.7, 0.4}, {1.1, -0.3}, {0.5, 1.5}};
  const double s = p.ell_B * std::sqrt(2.0);
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (const Vec2 x : pts) {
        const Wirtinger d = wirtinger({n, m}, x, p);
        const cplx w(x.x2 / s, x.x1 / s);
        const cplx bp = 0.5 * w * d.f - d.dwbar;
        const cplx bm = 0.5 * std::conj(w) * d.f + d.dw;
        const cplx ap = -(0.5 * std::conj(w) * d.f - d.dw);
        const cplx am = -(0.5 * w * d.f + d.dwbar);
        const KernelCoeffs f = KernelCoeffs::basis({n, m}, 5, p);
        CHECK(std::abs(ladder_apply(Ladder::b_plus, f)(x) - bp) < 1e-8);
        CHECK(std::abs(ladder_apply(Ladder::b_minus, f)(x) - bm) < 1e-8);
        CHECK(std::abs(ladder_apply(Ladder::a_plus, f)(x) - ap) < 1e-8);
        CHECK(std::abs(ladder_apply(Ladder::a_minus, f)(x) - am) < 1e-8);
      }
}

TEST_CASE("orthonormality on an independent disk rule") {
  const MagneticParams p{0.7, 1.0};
  const QuadGrid disk = disk_grid(14.0 * p.ell_B, 160, 96);
  double worst = 0.0;
  for (int a = 0; a < 36; ++a)
    for (int b = 0; b < 36; ++b) {
      const LagIndex ia{a / 6, a % 6}, ib{b / 6, b % 6};
      cplx s = 0.0;
      for (std::size_t i = 0; i < disk.nodes.size(); ++i)
        s += disk.weights[i] * std::conj(laguerre_fn(ia, disk.nodes[i], p)) * laguerre_fn(ib, disk.nodes[i], p);
      worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
    }
  CHECK(worst < 1e-10);
}

TEST_CASE("inner product: coefficients against quadrature") {
  const MagneticParams p{1.2, 1.0};
  KernelCoeffs f(3, p), g(3, p);
  f.c(0, 1) = {1.0, 0.5};
  f.c(2, 3) = {-0.3, 0.2};
  g.c(0, 1) = {0.25, -1.0};
  g.c(2, 3) = {2.0, 0.0};
  g.c(1, 1) = {0.7, 0.7};
  const QuadGrid grid = polar_grid(10, p);
  const QuadValue q = inner_product_B(f.as_kernel(), g.as_kernel(), grid, p, 3);
  CHECK_FALSE(q.accuracy_warning);
  CHECK(std::abs(q.value - inner_product_B(f, g)) < 1e-13);
  CHECK(inner_product_B(f.as_kernel(), g.as_kernel(), polar_grid(2, p), p, 3).accuracy_warning);
}

TEST_CASE("involution J swaps the indices") {
  const MagneticParams p{0.9, 1.0};
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      const Kernel j = involution_J(Kernel([n, m, p](Vec2 x) { return laguerre_fn({n, m}, x, p); }));
      const KernelCoeffs jc = involution_J(KernelCoeffs::basis({n, m}, 3, p));
      for (const Vec2 x : {Vec2{0.3, 0.1}, Vec2{-1.2, 0.8}}) {
        CHECK(std::abs(j(x) - laguerre_fn({m, n}, x, p)) < 1e-14);
        CHECK(std::abs(jc(x) - laguerre_fn({m, n}, x, p)) < 1e-14);
      }
    }
}

TEST_CASE("seminorm of a basis function") {
  const MagneticParams p{};
  const KernelCoeffs f = KernelCoeffs::basis({2, 1}, 3, p);
  CHECK(seminorm_r_k(f, 0) == doctest::Approx(1.0));
  CHECK(seminorm_r_k(f, 2) == doctest::Approx(15.0));
  CHECK_THROWS(seminorm_r_k(f, -1));
}

TEST_CASE("invalid arguments") {
  const MagneticParams p{};
  CHECK_THROWS(laguerre_poly(-1, 0.0, 1.0));
  CHECK_THROWS(laguerre_fn({-1, 0}, {0.0, 0.0}, p));
  CHECK_THROWS(KernelCoeffs(-1, p));
  CHECK_THROWS((MagneticParams{0.0, 1.0}).validate());
}
