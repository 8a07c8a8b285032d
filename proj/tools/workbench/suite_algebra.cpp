#include <algorithm>
#include <cmath>

#include "magws/algebra.hpp"
#include "magws/convolution.hpp"
#include "suite_util.hpp"
#include "suites.hpp"

namespace magws::wb {

namespace {

AlgebraElement random_element(std::mt19937_64& rng, int cutoff, const MagneticParams& p) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  AlgebraElement x(cutoff, p);
  for (int k = 0; k <= cutoff; ++k)
    for (int j = 0; j <= cutoff; ++j) x.a(k, j) = cplx(u(rng), u(rng));
  return x;
}

double dist(const AlgebraElement& x, const AlgebraElement& y) {
  const int c = std::max(x.cutoff, y.cutoff);
  return (x.resized(c).a - y.resized(c).a).cwiseAbs().maxCoeff();
}

}  // namespace

SuiteResult run_algebra(const Config& cfg) {
  const MagneticParams& p = cfg.params;
  const double tol = cfg.tol_quadrature;
  const QuadGrid grid = polar_grid(cfg.quad_degree, p);
  SuiteResult out;
  out.suite = "algebra";

  {
    const std::vector<LagIndex> left = {{0, 0}, {1, 3}, {4, 2}, {2, 4}};
    const std::vector<LagIndex> right = {{3, 1}, {0, 0}, {2, 2}, {4, 0}};
    const auto pts = sample_points(24, 2.5, p, kSeed + 10);
    double worst = 0.0;
    for (const Vec2 x : pts) {
      const ConvolutionPlan plan = twisted_plan(x, grid, p);
      for (const LagIndex a : left)
        for (const LagIndex b : right) {
          const KernelCoeffs fa = KernelCoeffs::basis(a, 4, p), gb = KernelCoeffs::basis(b, 4, p);
          const cplx quad = plan.apply(basis_kernel(a, p), basis_kernel(b, p));
          const cplx exact = to_kernel(multiply(from_kernel(fa), from_kernel(gb)))(x);
          worst = std::max(worst, std::abs(quad - exact));
        }
    }
    out.add(equal_case("product_oracle", "kernel of L_f L_g = f*g by quadrature, 16 basis pairs, 24 points", 0.0,
                       worst, tol));
  }
  std::mt19937_64 rng(kSeed + 11);
  {
    const KernelCoeffs g = random_kernel(rng, 3, 4, p);
    const KernelCoeffs v = random_kernel(rng, 3, 4, p);
    const KernelCoeffs lv = apply_to_state(from_kernel(g), v);
    const auto pts = sample_points(12, 2.5, p, kSeed + 12);
    double worst = 0.0;
    for (const Vec2 x : pts)
      worst = std::max(worst, std::abs(lv(x) - twisted_convolve(kernel_reflection(g.as_kernel()), v.as_kernel(), x, grid, p)));
    out.add(equal_case("state_action", "L_g v = g^- * v with g^-(x) = g(-x)", 0.0, worst, tol));
  }
  const AlgebraElement x = random_element(rng, 6, p);
  const AlgebraElement y = random_element(rng, 6, p);
  const AlgebraElement z = random_element(rng, 6, p);
  const double exact_tol = 1e-12;
  out.add(equal_case("associativity", "(xy)z = x(yz)", 0.0, dist(multiply(multiply(x, y), z), multiply(x, multiply(y, z))),
                     exact_tol));
  out.add(equal_case("adjoint_antimultiplicative", "(xy)^* = y^* x^*", 0.0,
                     dist(adjoint(multiply(x, y)), multiply(adjoint(y), adjoint(x))), exact_tol));
  out.add(equal_case("adjoint_involutive", "x^** = x", 0.0, dist(adjoint(adjoint(x)), x), 0.0));
  out.add(equal_case("trace_cyclic", "trace(xy) = trace(yx)", trace_B(multiply(y, x)), trace_B(multiply(x, y)), exact_tol));
  out.add(equal_case("trace_positive", "trace(x^* x) > 0 for x != 0", 0.0, std::abs(std::imag(hs_inner(x, x))), exact_tol)
              .detail("hs_norm_sq", std::real(hs_inner(x, x))));
  {
    double worst = 0.0;
    for (int j = 0; j <= 3; ++j)
      for (int k = 0; k <= 3; ++k)
        for (int m = 0; m <= 3; ++m)
          for (int n = 0; n <= 3; ++n) {
            const AlgebraElement lhs = multiply(upsilon(j, k, 3, p), upsilon(m, n, 3, p));
            const AlgebraElement rhs = j == n ? upsilon(m, k, 3, p) : AlgebraElement::zero(3, p);
            worst = std::max(worst, dist(lhs, rhs));
          }
    out.add(equal_case("upsilon_product", "Ups_{j->k} Ups_{m->n} = delta_jn Ups_{m->k}", 0.0, worst, 0.0));
  }
  {
    const KernelCoeffs f = random_kernel(rng, 4, 6, p), g = random_kernel(rng, 4, 6, p);
    out.add(equal_case("hs_kernel_inner", "trace(L_f^* L_g) = <f, g>_B", inner_product_B(f, g),
                       hs_inner(from_kernel(f), from_kernel(g)), exact_tol));
    out.add(equal_case("kernel_roundtrip", "from_kernel(to_kernel(x)) = x", 0.0, dist(from_kernel(to_kernel(x)), x),
                       exact_tol));
  }
  out.add(equal_case("trace_origin", "trace(x) = (kernel of x)(0)", trace_B(x), trace_B_via_kernel(x), exact_tol));
  {
    double worst = 0.0;
    for (int n = 0; n <= 8; ++n) worst = std::max(worst, std::abs(trace_B(landau_projection(n, 8, p)) - 1.0));
    out.add(equal_case("projection_trace", "trace(Pi_n) = 1, n <= 8", 0.0, worst, 0.0));
    double tw = 0.0;
    for (int n = 0; n <= 8; ++n)
      tw = std::max(tw, std::abs(trace_per_unit_volume(landau_projection(n, 8, p)) - 1.0 / (2.0 * p.lambda_B())));
    out.add(equal_case("projection_tuv", "T_B(Pi_n) = 1 / (2 Lambda_B)", 0.0, tw, 1e-15));
  }
  {
    double worst = 0.0, via_kernel = 0.0, pointwise = 0.0;
    const auto pts = sample_points(12, 2.5, p, kSeed + 13);
    for (double s : {0.5, 1.0, 2.0}) {
      // tail e^{-s(K+3/2)} / (1 - e^{-s}) below 1e-14
      const int K = int(std::ceil((32.0 * std::log(10.0) / s))) + 2;
      const AlgebraElement h = heat_element(s, K, p);
      worst = std::max(worst, std::abs(trace_B(h) - 1.0 / (2.0 * std::sinh(0.5 * s))));
      via_kernel = std::max(via_kernel, std::abs(trace_B_via_kernel(h) - trace_B(h)));
      const KernelCoeffs hk = to_kernel(h);
      for (const Vec2 q : pts) pointwise = std::max(pointwise, std::abs(hk(q) - mehler_kernel(s, q, p)));
    }
    out.add(equal_case("heat_trace", "trace(e^{-sQ}) = 1 / (2 sinh(s/2)), s in {0.5, 1, 2}", 0.0, worst, 1e-10));
    out.add(equal_case("heat_trace_kernel", "trace(e^{-sQ}) = g_s(0)", 0.0, via_kernel, 1e-10));
    out.add(equal_case("heat_kernel", "kernel of e^{-sQ} = Mehler kernel g_s", 0.0, pointwise, 1e-10));
  }
  {
    // the action keeps the dual index m and is a representation
    KernelCoeffs v(6, p);
    for (int n = 0; n <= 6; ++n) v.c(n, 2) = cplx(1.0 + n, -0.5 * n);
    const KernelCoeffs xv = apply_to_state(x, v);
    double leak = 0.0;
    for (int n = 0; n <= xv.cutoff; ++n)
      for (int m = 0; m <= xv.cutoff; ++m)
        if (m != 2) leak = std::max(leak, std::abs(xv.c(n, m)));
    out.add(equal_case("action_block_diagonal", "rho(x) never mixes the dual index", 0.0, leak, 0.0));
    const KernelCoeffs lhs = apply_to_state(multiply(x, y), v);
    const KernelCoeffs rhs = apply_to_state(x, apply_to_state(y, v));
    out.add(equal_case("action_homomorphism", "rho(xy) = rho(x) rho(y)", 0.0, (lhs - rhs).c.cwiseAbs().maxCoeff(),
                       exact_tol));
  }
  return out;
}

}  // namespace magws::wb
