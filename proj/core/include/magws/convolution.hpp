#pragma once

#include <utility>
#include <vector>

#include "magws/laguerre.hpp"
#include "magws/quadrature.hpp"

namespace magws {

Kernel basis_kernel(LagIndex idx, const MagneticParams& p);

// Evaluation plan for (f*g)(x) = (1/2 pi l^2) int f(x-y) g(y) Phi_B(x,y) dy.
// The Gaussian part of the integrand is centred at x/2, so the relative grid is
// re-centred there; (f*g)(x) = sum_i w_i f(x - y_i) g(y_i).
struct ConvolutionPlan {
  Vec2 x;
  std::vector<Vec2> y;
  std::vector<cplx> w;

  cplx apply(const Kernel& f, const Kernel& g) const;
};

ConvolutionPlan twisted_plan(Vec2 x, const QuadGrid& grid, const MagneticParams& p);

cplx twisted_convolve(const Kernel& f, const Kernel& g, Vec2 x, const QuadGrid& grid,
                      const MagneticParams& p);

// f*(x) = conj(f(-x))
Kernel kernel_involution(Kernel f);
// f^-(x) = f(-x)
Kernel kernel_reflection(Kernel f);

// p_n(x) = e^{-|x|^2/4l^2} L_n(|x|^2/2l^2)
double projection_kernel(int n, Vec2 x, const MagneticParams& p);

// g_s(x) = e^{-(|x|^2/4l^2) coth(s/2)} / (2 sinh(s/2))
double mehler_kernel(double s, Vec2 x, const MagneticParams& p);
// sum_j e^{-s(j+1/2)} p_j(x), truncated once the tail bound drops below 1e-12 of the sum
double mehler_series(double s, Vec2 x, const MagneticParams& p, int* terms = nullptr);

enum class Translation { U, V };

// (U(a)f)(x) = Phi_B(a,x) f(x-a), (V(a)f)(x) = Phi_B(x,a) f(x-a)
Kernel magnetic_translate(Translation kind, Vec2 a, Kernel f, const MagneticParams& p);

struct ContractionCheck {
  double lhs;  // ||f*g||_{L2}
  double rhs;  // ||f|| ||g|| / (sqrt(2 pi) l)
};

// outer is the grid for the L2 norms, inner the relative grid for the products
ContractionCheck l2_contraction_check(const Kernel& f, const Kernel& g, const QuadGrid& outer,
                                      const QuadGrid& inner, const MagneticParams& p);

// (2 pi l^2 / |Lambda_R|) int_{Lambda_R} kappa_{f,g}(x,x) dx over the disk of radius R, with
// kappa_{f,g}(x,y) = (2 pi l^2)^{-2} int ds conj(f(x-s)) g(y-s) Phi_B(s, y-x).
QuadValue tuv_quadrature(const KernelCoeffs& f, const KernelCoeffs& g, double R,
                         const MagneticParams& p, int degree = 16);

}  // namespace magws
