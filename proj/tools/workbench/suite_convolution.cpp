#include <algorithm>
#include <cmath>

#include "magws/algebra.hpp"
#include "magws/convolution.hpp"
#include "magws/quadrature.hpp"
#include "suite_util.hpp"
#include "suites.hpp"

namespace magws::wb {

namespace {

struct BasisValues {
  std::vector<LagIndex> idx;
  // vals[a][i] = psi_a(z_i)
  std::vector<std::vector<cplx>> vals;
};

BasisValues basis_values(int top, const std::vector<Vec2>& z, const MagneticParams& p) {
  BasisValues b;
  for (int n = 0; n <= top; ++n)
    for (int m = 0; m <= top; ++m) b.idx.push_back({n, m});
  b.vals.resize(b.idx.size());
  for (std::size_t a = 0; a < b.idx.size(); ++a) {
    b.vals[a].resize(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) b.vals[a][i] = laguerre_fn(b.idx[a], z[i], p);
  }
  return b;
}

// max over k,j,n,m <= top and the points of |psi_kj * psi_nm - delta_jn psi_km / (sqrt(2 pi) l)|
double product_lemma_residual(int top, const std::vector<Vec2>& pts, const QuadGrid& grid, const MagneticParams& p) {
  const double c = 1.0 / (std::sqrt(2.0 * pi) * p.ell_B);
  double worst = 0.0;
  for (const Vec2 x : pts) {
    const ConvolutionPlan plan = twisted_plan(x, grid, p);
    std::vector<Vec2> shifted(plan.y.size());
    for (std::size_t i = 0; i < plan.y.size(); ++i) shifted[i] = x - plan.y[i];
    const BasisValues F = basis_values(top, shifted, p);
    const BasisValues G = basis_values(top, plan.y, p);
    for (std::size_t a = 0; a < F.idx.size(); ++a) {
      std::vector<cplx> fw(plan.y.size());
      for (std::size_t i = 0; i < plan.y.size(); ++i) fw[i] = plan.w[i] * F.vals[a][i];
      for (std::size_t b = 0; b < G.idx.size(); ++b) {
        cplx s = 0.0;
        for (std::size_t i = 0; i < plan.y.size(); ++i) s += fw[i] * G.vals[b][i];
        const LagIndex kj = F.idx[a], nm = G.idx[b];
        const cplx expect = kj.m == nm.n ? c * laguerre_fn({kj.n, nm.m}, x, p) : cplx(0.0);
        worst = std::max(worst, std::abs(s - expect));
      }
    }
  }
  return worst;
}

double max_diff(const Kernel& lhs, const Kernel& rhs, const std::vector<Vec2>& pts) {
  double worst = 0.0;
  for (const Vec2 x : pts) worst = std::max(worst, std::abs(lhs(x) - rhs(x)));
  return worst;
}

}  // namespace

SuiteResult run_convolution(const Config& cfg) {
  const MagneticParams& p = cfg.params;
  const double tol = cfg.tol_quadrature;
  const QuadGrid grid = polar_grid(cfg.quad_degree, p);
  SuiteResult out;
  out.suite = "convolution";

  {
    // plain L2 orthonormality on a grid centred at the origin
    const int top = 5;
    const BasisValues b = basis_values(top, grid.nodes, p);
    double worst = 0.0;
    for (std::size_t a = 0; a < b.idx.size(); ++a)
      for (std::size_t c = 0; c < b.idx.size(); ++c) {
        cplx s = 0.0;
        for (std::size_t i = 0; i < grid.nodes.size(); ++i) s += grid.weights[i] * std::conj(b.vals[a][i]) * b.vals[c][i];
        worst = std::max(worst, std::abs(s - (a == c ? 1.0 : 0.0)));
      }
    out.add(equal_case("basis_orthonormality", "int conj(psi_a) psi_b dx = delta_ab, indices <= 5", 0.0, worst, 1e-9)
                .detail("quad_degree", cfg.quad_degree));
  }
  {
    double worst = 0.0;
    for (int n = 0; n <= 8; ++n)
      for (int m = 0; m <= 8; ++m) {
        const cplx v = laguerre_fn({n, m}, {0.0, 0.0}, p);
        const double e = n == m ? 1.0 / (std::sqrt(2.0 * pi) * p.ell_B) : 0.0;
        worst = std::max(worst, std::abs(v - e));
      }
    out.add(equal_case("basis_origin", "psi_nm(0) = delta_nm / (sqrt(2 pi) l), indices <= 8", 0.0, worst, 1e-14));
  }
  {
    const auto pts = sample_points(200, 3.0, p);
    const double r = product_lemma_residual(3, pts, grid, p);
    out.add(equal_case("product_lemma", "psi_kj * psi_nm = delta_jn psi_km / (sqrt(2 pi) l), indices <= 3, 200 points",
                       0.0, r, tol)
                .detail("points", 200.0)
                .detail("quad_degree", cfg.quad_degree));
  }
  const auto pts = sample_points(12, 2.5, p, kSeed + 1);
  {
    double worst = 0.0;
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; m <= 2; ++m) {
        const Kernel pn = [n, p](Vec2 x) { return cplx(projection_kernel(n, x, p)); };
        const Kernel pm = [m, p](Vec2 x) { return cplx(projection_kernel(m, x, p)); };
        for (const Vec2 x : pts) {
          const cplx v = twisted_convolve(pn, pm, x, grid, p);
          const cplx e = n == m ? cplx(projection_kernel(n, x, p)) : cplx(0.0);
          worst = std::max(worst, std::abs(v - e));
        }
      }
    out.add(equal_case("projection_kernels", "p_n * p_m = delta_nm p_n, n, m <= 2", 0.0, worst, tol));
  }
  std::mt19937_64 rng(kSeed + 2);
  const KernelCoeffs f = random_kernel(rng, 3, 3, p);
  const KernelCoeffs g = random_kernel(rng, 3, 3, p);
  const Kernel fk = f.as_kernel(), gk = g.as_kernel();
  {
    const Kernel lhs = kernel_involution([&](Vec2 x) { return twisted_convolve(fk, gk, x, grid, p); });
    const Kernel rhs = [&](Vec2 x) { return twisted_convolve(kernel_involution(gk), kernel_involution(fk), x, grid, p); };
    out.add(equal_case("involution", "(f*g)^* = g^* * f^*", 0.0, max_diff(lhs, rhs, pts), tol));
  }
  {
    // exact product from the algebra side, reflected back to kernels
    const KernelCoeffs fg = to_kernel(multiply(from_kernel(f), from_kernel(g)));
    const Kernel quad = [&](Vec2 x) { return twisted_convolve(fk, gk, x, grid, p); };
    out.add(equal_case("algebra_product", "f*g by quadrature = kernel of L_f L_g", 0.0,
                       max_diff(quad, fg.as_kernel(), pts), tol));
    double worst = 0.0;
    for (Ladder op : {Ladder::a_plus, Ladder::a_minus}) {
      const Kernel af = ladder_apply(op, f).as_kernel();
      const Kernel lhs = [&](Vec2 x) { return twisted_convolve(af, gk, x, grid, p); };
      worst = std::max(worst, max_diff(lhs, ladder_apply(op, fg).as_kernel(), pts));
    }
    for (Ladder op : {Ladder::b_plus, Ladder::b_minus}) {
      const Kernel bg = ladder_apply(op, g).as_kernel();
      const Kernel lhs = [&](Vec2 x) { return twisted_convolve(fk, bg, x, grid, p); };
      worst = std::max(worst, max_diff(lhs, ladder_apply(op, fg).as_kernel(), pts));
    }
    out.add(equal_case("ladder_compatibility", "a(f*g) = (a f)*g and b(f*g) = f*(b g)", 0.0, worst, tol));
  }
  {
    // nested quadrature on a coarser grid; basis inputs keep it cheap
    const QuadGrid coarse = polar_grid(std::min(cfg.quad_degree, 16), p);
    const Kernel a = basis_kernel({1, 2}, p), b = basis_kernel({2, 0}, p), c = basis_kernel({0, 1}, p);
    const Kernel ab = [&](Vec2 x) { return twisted_convolve(a, b, x, coarse, p); };
    const Kernel bc = [&](Vec2 x) { return twisted_convolve(b, c, x, coarse, p); };
    const std::vector<Vec2> few(pts.begin(), pts.begin() + 4);
    const Kernel lhs = [&](Vec2 x) { return twisted_convolve(ab, c, x, coarse, p); };
    const Kernel rhs = [&](Vec2 x) { return twisted_convolve(a, bc, x, coarse, p); };
    out.add(equal_case("associativity", "(f*g)*h = f*(g*h) for basis functions", 0.0, max_diff(lhs, rhs, few), tol));
  }
  {
    const Kernel a = basis_kernel({0, 1}, p), b = basis_kernel({1, 0}, p);
    double gap = 0.0;
    for (const Vec2 x : pts)
      gap = std::max(gap, std::abs(twisted_convolve(a, b, x, grid, p) - twisted_convolve(b, a, x, grid, p)));
    out.add(at_least_case("noncommutativity", "psi_01 * psi_10 != psi_10 * psi_01", 1e-3, gap));
  }
  {
    const QuadGrid outer = polar_grid(12, p);
    const ContractionCheck eq =
        l2_contraction_check(basis_kernel({0, 1}, p), basis_kernel({1, 0}, p), outer, grid, p);
    out.add(equal_case("contraction_equality", "||psi_01 * psi_10|| = ||psi_01|| ||psi_10|| / (sqrt(2 pi) l)", eq.rhs,
                       eq.lhs, tol));
    const ContractionCheck rnd = l2_contraction_check(fk, gk, outer, grid, p);
    out.add(at_most_case("contraction_bound", "||f*g|| <= ||f|| ||g|| / (sqrt(2 pi) l)", rnd.rhs * (1.0 + tol), rnd.lhs)
                .detail("rhs", rnd.rhs));
  }
  {
    double worst = 0.0;
    for (double s : {0.5, 1.0, 2.0})
      for (const Vec2 x : pts) worst = std::max(worst, std::abs(mehler_kernel(s, x, p) - mehler_series(s, x, p)));
    out.add(equal_case("mehler_series", "sum_j e^{-s(j+1/2)} p_j = Mehler closed form", 0.0, worst, 1e-10));
  }
  {
    double worst = 0.0;
    for (double s : {0.5, 1.0, 2.0}) {
      const Kernel gs = [s, p](Vec2 x) { return cplx(mehler_kernel(s, x, p)); };
      for (std::size_t i = 0; i < 4; ++i) {
        const Vec2 x = pts[i];
        const cplx v = twisted_convolve(gs, gs, x, grid, p);
        worst = std::max(worst, std::abs(v - mehler_kernel(2.0 * s, x, p)));
      }
    }
    out.add(equal_case("heat_semigroup", "g_s * g_s = g_2s", 0.0, worst, tol));
  }
  {
    const Vec2 a{0.4, -0.3}, b{-0.2, 0.7};
    double worst = 0.0;
    for (Translation kind : {Translation::U, Translation::V}) {
      const Kernel lhs = magnetic_translate(kind, a, magnetic_translate(kind, b, fk, p), p);
      const Kernel ab = magnetic_translate(kind, a + b, fk, p);
      const cplx phase = kind == Translation::U ? phase_cocycle(a, b, p) : phase_cocycle(b, a, p);
      for (const Vec2 x : pts) worst = std::max(worst, std::abs(lhs(x) - phase * ab(x)));
    }
    out.add(equal_case("translation_cocycle", "U(a)U(b) = Phi_B(a,b) U(a+b), V(a)V(b) = Phi_B(b,a) V(a+b)", 0.0, worst,
                       1e-12));
    // U commutes with right convolution, V with left convolution
    const Kernel uf = magnetic_translate(Translation::U, a, fk, p);
    const Kernel lhs = [&](Vec2 x) { return twisted_convolve(uf, gk, x, grid, p); };
    const Kernel rhs = magnetic_translate(Translation::U, a, [&](Vec2 x) { return twisted_convolve(fk, gk, x, grid, p); }, p);
    out.add(equal_case("translation_covariance", "(U(a)f)*g = U(a)(f*g)", 0.0, max_diff(lhs, rhs, pts), tol));
  }
  {
    // T_B(L_f^* L_g) 2 pi l^2 against the disk average, independent of R
    const std::vector<std::pair<LagIndex, LagIndex>> pairs = {
        {{0, 0}, {0, 0}}, {{1, 2}, {1, 2}}, {{3, 0}, {3, 0}}, {{0, 1}, {1, 0}}, {{2, 3}, {2, 1}}, {{3, 3}, {3, 3}}};
    double worst = 0.0, spread = 0.0;
    bool warned = false;
    for (const auto& [ia, ib] : pairs) {
      const KernelCoeffs fa = KernelCoeffs::basis(ia, 3, p), gb = KernelCoeffs::basis(ib, 3, p);
      const cplx expect = inner_product_B(fa, gb);
      cplx first = 0.0;
      for (double R : {1.0, 2.0, 4.0}) {
        const QuadValue v = tuv_quadrature(fa, gb, R, p, cfg.quad_degree);
        warned = warned || v.accuracy_warning;
        worst = std::max(worst, std::abs(v.value - expect));
        if (R == 1.0) first = v.value;
        spread = std::max(spread, std::abs(v.value - first));
      }
    }
    out.add(equal_case("tuv_disk_average", "disk average of the kernel diagonal = <f, g>_B, R in {1,2,4}", 0.0,
                       worst, 1e-6)
                .detail("r_spread", spread)
                .detail("accuracy_warning", warned ? 1.0 : 0.0));
  }
  return out;
}

}  // namespace magws::wb
