#include "magws/convolution.hpp"

#include <cmath>
#include <stdexcept>

namespace magws {

Kernel basis_kernel(LagIndex idx, const MagneticParams& p) {
  return [idx, p](Vec2 x) { return laguerre_fn(idx, x, p); };
}

cplx ConvolutionPlan::apply(const Kernel& f, const Kernel& g) const {
  cplx s = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) s += w[i] * f(x - y[i]) * g(y[i]);
  return s;
}

ConvolutionPlan twisted_plan(Vec2 x, const QuadGrid& grid, const MagneticParams& p) {
  const QuadGrid g = grid.shifted(0.5 * x);
  const double norm = 1.0 / (2.0 * pi * p.ell_B * p.ell_B);
  ConvolutionPlan plan;
  plan.x = x;
  plan.y = g.nodes;
  plan.w.resize(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    plan.w[i] = norm * g.weights[i] * phase_cocycle(x, g.nodes[i], p);
  return plan;
}

cplx twisted_convolve(const Kernel& f, const Kernel& g, Vec2 x, const QuadGrid& grid,
                      const MagneticParams& p) {
  return twisted_plan(x, grid, p).apply(f, g);
}

Kernel kernel_involution(Kernel f) {
  return [f = std::move(f)](Vec2 x) { return std::conj(f(-x)); };
}

Kernel kernel_reflection(Kernel f) {
  return [f = std::move(f)](Vec2 x) { return f(-x); };
}

double projection_kernel(int n, Vec2 x, const MagneticParams& p) {
  if (n < 0) throw std::invalid_argument("projection_kernel: negative level");
  const double t = norm2(x) / (2.0 * p.ell_B * p.ell_B);
  return std::exp(-0.5 * t) * laguerre_poly(n, 0.0, t);
}

double mehler_kernel(double s, Vec2 x, const MagneticParams& p) {
  if (!(s > 0.0)) throw std::invalid_argument("mehler_kernel: s must be positive");
  const double q = norm2(x) / (4.0 * p.ell_B * p.ell_B);
  return std::exp(-q / std::tanh(0.5 * s)) / (2.0 * std::sinh(0.5 * s));
}

double mehler_series(double s, Vec2 x, const MagneticParams& p, int* terms) {
  if (!(s > 0.0)) throw std::invalid_argument("mehler_series: s must be positive");
  const double t = norm2(x) / (2.0 * p.ell_B * p.ell_B);
  const double g = std::exp(-0.5 * t);
  const double r = std::exp(-s);
  // |p_j| <= 1, so the tail after term j is bounded by e^{-s(j+3/2)} / (1 - e^{-s})
  double sum = 0.0, weight = std::exp(-0.5 * s);
  double lprev = 0.0, lcur = 1.0;
  int j = 0;
  for (;; ++j) {
    sum += weight * g * lcur;
    const double lnext = ((2.0 * j + 1.0 - t) * lcur - j * lprev) / (j + 1.0);
    lprev = lcur;
    lcur = lnext;
    weight *= r;
    const double tail = weight / (1.0 - r);
    if (tail < 1e-12 * std::abs(sum) || j > 100000) break;
  }
  if (terms) *terms = j + 1;
  return sum;
}

Kernel magnetic_translate(Translation kind, Vec2 a, Kernel f, const MagneticParams& p) {
  if (kind == Translation::U)
    return [a, p, f = std::move(f)](Vec2 x) { return phase_cocycle(a, x, p) * f(x - a); };
  return [a, p, f = std::move(f)](Vec2 x) { return phase_cocycle(x, a, p) * f(x - a); };
}

ContractionCheck l2_contraction_check(const Kernel& f, const Kernel& g, const QuadGrid& outer,
                                      const QuadGrid& inner, const MagneticParams& p) {
  double nf = 0.0, ng = 0.0, nfg = 0.0;
  for (std::size_t i = 0; i < outer.nodes.size(); ++i) {
    const Vec2 x = outer.nodes[i];
    nf += outer.weights[i] * std::norm(f(x));
    ng += outer.weights[i] * std::norm(g(x));
    nfg += outer.weights[i] * std::norm(twisted_convolve(f, g, x, inner, p));
  }
  return {std::sqrt(nfg), std::sqrt(nf) * std::sqrt(ng) / (std::sqrt(2.0 * pi) * p.ell_B)};
}

QuadValue tuv_quadrature(const KernelCoeffs& f, const KernelCoeffs& g, double R,
                         const MagneticParams& p, int degree) {
  if (!(R > 0.0)) throw std::invalid_argument("tuv_quadrature: R must be positive");
  const double l2 = p.ell_B * p.ell_B;
  const QuadGrid outer = disk_grid(R, 12, 24);
  const QuadGrid inner = polar_grid(degree, p);
  const int top = std::max(f.cutoff, g.cutoff);
  cplx total = 0.0;
  for (std::size_t i = 0; i < outer.nodes.size(); ++i) {
    const Vec2 x = outer.nodes[i];
    const Vec2 y = x;
    // the integrand conj(f(x-s)) g(y-s) carries the Gaussian weight around s = (x+y)/2
    const QuadGrid s_grid = inner.shifted(0.5 * (x + y));
    cplx k = 0.0;
    for (std::size_t j = 0; j < s_grid.nodes.size(); ++j) {
      const Vec2 s = s_grid.nodes[j];
      k += s_grid.weights[j] * std::conj(f(x - s)) * g(y - s) * phase_cocycle(s, y - x, p);
    }
    total += outer.weights[i] * k / ((2.0 * pi * l2) * (2.0 * pi * l2));
  }
  return {(2.0 * pi * l2 / (pi * R * R)) * total, 2 * top > degree};
}

}  // namespace magws
