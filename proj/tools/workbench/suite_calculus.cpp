#include <algorithm>
#include <cmath>

#include "magws/calculus.hpp"
#include "magws/convolution.hpp"
#include "suite_util.hpp"
#include "suites.hpp"

namespace magws::wb {

namespace {

double dist(const AlgebraElement& x, const AlgebraElement& y) {
  const int c = std::max(x.cutoff, y.cutoff);
  return (x.resized(c).a - y.resized(c).a).cwiseAbs().maxCoeff();
}

double dist(const KernelCoeffs& x, const KernelCoeffs& y) {
  const int c = std::max(x.cutoff, y.cutoff);
  return (x.resized(c).c - y.resized(c).c).cwiseAbs().maxCoeff();
}

// finite-support element with a(k,j) nonzero for k,j <= top
AlgebraElement random_element(std::mt19937_64& rng, int top, int cutoff, const MagneticParams& p) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  AlgebraElement x(cutoff, p);
  for (int k = 0; k <= top; ++k)
    for (int j = 0; j <= top; ++j) x.a(k, j) = cplx(u(rng), u(rng));
  return x;
}

// lowering matrix on the Landau index, A e_k = sqrt(k) e_{k-1}
Eigen::MatrixXcd lowering(int dim) {
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) A(k - 1, k) = std::sqrt(double(k));
  return A;
}

}  // namespace

SuiteResult run_calculus(const Config& cfg) {
  const MagneticParams& p = cfg.params;
  const double exact_tol = 1e-12;
  SuiteResult out;
  out.suite = "calculus";
  std::mt19937_64 rng(kSeed + 20);

  {
    const KernelCoeffs f = random_kernel(rng, 4, 8, p).resized(7);
    const KernelCoeffs one = f;
    double ccr_a = 0.0, ccr_b = 0.0, mixed = 0.0;
    ccr_a = dist(ladder_apply(Ladder::a_minus, ladder_apply(Ladder::a_plus, f)) -
                     ladder_apply(Ladder::a_plus, ladder_apply(Ladder::a_minus, f)),
                 one);
    ccr_b = dist(ladder_apply(Ladder::b_minus, ladder_apply(Ladder::b_plus, f)) -
                     ladder_apply(Ladder::b_plus, ladder_apply(Ladder::b_minus, f)),
                 one);
    for (Ladder a : {Ladder::a_plus, Ladder::a_minus})
      for (Ladder b : {Ladder::b_plus, Ladder::b_minus})
        mixed = std::max(mixed, dist(ladder_apply(a, ladder_apply(b, f)), ladder_apply(b, ladder_apply(a, f))));
    out.add(equal_case("ccr_a", "[a-, a+] = 1", 0.0, ccr_a, exact_tol));
    out.add(equal_case("ccr_b", "[b-, b+] = 1", 0.0, ccr_b, exact_tol));
    out.add(equal_case("ccr_mixed", "[a#, b#] = 0", 0.0, mixed, exact_tol));
  }
  const KernelCoeffs f = random_kernel(rng, 3, 5, p);
  const KernelCoeffs g = random_kernel(rng, 3, 5, p);
  {
    const auto pts = sample_points(16, 3.0, p, kSeed + 21);
    double worst = 0.0;
    for (int j : {1, 2}) {
      const KernelCoeffs df = kernel_derivation(f, j);
      for (const Vec2 x : pts) {
        const double xj = j == 1 ? x.x1 : x.x2;
        worst = std::max(worst, std::abs(df(x) - cplx(0.0, xj) * f(x)));
      }
    }
    out.add(equal_case("kernel_derivation", "(d_j f)(x) = i x_j f(x) on Laguerre coefficients", 0.0, worst, 1e-12));
  }
  {
    // Leibniz for the kernel product by quadrature
    const QuadGrid grid = polar_grid(cfg.quad_degree, p);
    const auto pts = sample_points(8, 2.5, p, kSeed + 22);
    double worst = 0.0;
    for (int j : {1, 2}) {
      const KernelCoeffs fg = to_kernel(multiply(from_kernel(f), from_kernel(g)));
      const KernelCoeffs lhs = kernel_derivation(fg, j);
      const Kernel df = kernel_derivation(f, j).as_kernel(), dg = kernel_derivation(g, j).as_kernel();
      for (const Vec2 x : pts) {
        const cplx rhs = twisted_convolve(df, g.as_kernel(), x, grid, p) + twisted_convolve(f.as_kernel(), dg, x, grid, p);
        worst = std::max(worst, std::abs(lhs(x) - rhs));
      }
    }
    out.add(equal_case("kernel_leibniz", "d_j(f*g) = d_j f * g + f * d_j g by quadrature", 0.0, worst, cfg.tol_quadrature));
  }
  {
    double worst = 0.0;
    for (int j : {1, 2})
      worst = std::max(worst, dist(from_kernel(kernel_derivation(f, j)), nabla(from_kernel(f), j)));
    out.add(equal_case("nabla_kernel", "L_{d_j f} = nabla_j(L_f)", 0.0, worst, exact_tol));
  }
  const AlgebraElement x = random_element(rng, 4, 7, p);
  const AlgebraElement y = random_element(rng, 4, 7, p);
  {
    double leib = 0.0, star = 0.0, trace0 = 0.0, ibp = 0.0;
    for (int j : {1, 2}) {
      const AlgebraElement lhs = nabla(multiply(x, y), j);
      const AlgebraElement rhs =
          multiply(nabla(x, j), y.resized(x.cutoff + 1)) + multiply(x.resized(x.cutoff + 1), nabla(y, j));
      leib = std::max(leib, dist(lhs, rhs));
      star = std::max(star, dist(nabla(adjoint(x), j), adjoint(nabla(x, j))));
      trace0 = std::max(trace0, std::abs(trace_B(nabla(x, j))));
      ibp = std::max(ibp, integration_by_parts_residual(x, y, j));
    }
    out.add(equal_case("nabla_leibniz", "nabla_j(xy) = nabla_j(x) y + x nabla_j(y)", 0.0, leib, exact_tol));
    out.add(equal_case("nabla_star", "nabla_j(x^*) = nabla_j(x)^*", 0.0, star, exact_tol));
    out.add(equal_case("nabla_commute", "nabla_1 nabla_2 = nabla_2 nabla_1", 0.0,
                       dist(nabla(nabla(x, 1), 2), nabla(nabla(x, 2), 1)), exact_tol));
    out.add(equal_case("trace_nabla", "trace(nabla_j x) = 0", 0.0, trace0, exact_tol));
    out.add(equal_case("integration_by_parts", "trace(x nabla_j y) = -trace(nabla_j(x) y)", 0.0, ibp, exact_tol));
  }
  {
    // nabla_1 = (l/sqrt2)[A - A^+, .], nabla_2 = (i l/sqrt2)[A + A^+, .] with A the Landau lowering matrix
    const int dim = x.cutoff + 2;
    const Eigen::MatrixXcd A = lowering(dim);
    const Eigen::MatrixXcd Ad = A.adjoint();
    const Eigen::MatrixXcd X = x.resized(dim - 1).a;
    const double c = p.ell_B / std::sqrt(2.0);
    const Eigen::MatrixXcd K1 = c * (A - Ad), K2 = cplx(0.0, c) * (A + Ad);
    // the boundary row and column of the truncated commutator are not exact
    const int inner = dim - 1;
    const Eigen::MatrixXcd d1 = (K1 * X - X * K1).topLeftCorner(inner, inner);
    const Eigen::MatrixXcd d2 = (K2 * X - X * K2).topLeftCorner(inner, inner);
    const double r1 = (d1 - nabla(x, 1).a.topLeftCorner(inner, inner)).cwiseAbs().maxCoeff();
    const double r2 = (d2 - nabla(x, 2).a.topLeftCorner(inner, inner)).cwiseAbs().maxCoeff();
    out.add(equal_case("commutator_realization", "nabla_j is the commutator with the ladder combinations", 0.0,
                       std::max(r1, r2), exact_tol));
  }
  {
    const AlgebraElement pi0 = landau_projection(0, 2, p);
    out.add(equal_case("norm_projection", "|||Pi_n|||_{B,2} = 1", 1.0, norm_B2(landau_projection(3, 4, p)), exact_tol));
    out.add(equal_case("sobolev_projection", "||Pi_0||_{W^{1,2}} = sqrt(1 + 2 l^2)",
                       std::sqrt(1.0 + 2.0 * p.ell_B * p.ell_B), sobolev_norm(pi0, 1), exact_tol));
  }
  return out;
}

}  // namespace magws::wb
