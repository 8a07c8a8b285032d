#pragma once

#include <vector>

#include "magws/params.hpp"

namespace magws {

// Nodes and weights on R^2 with int F dx ~ sum w_i F(x_i).
struct QuadGrid {
  std::vector<Vec2> nodes;
  std::vector<double> weights;
  int degree = 0;  // products psi_a conj(psi_b) with indices <= degree are exact
  Vec2 center;

  QuadGrid shifted(Vec2 c) const;
};

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// int_0^inf e^{-t} f(t) dt
GaussRule gauss_laguerre(int n);
// int_{-1}^{1} f(t) dt
GaussRule gauss_legendre(int n);

// Gauss-Laguerre in t = |x - c|^2 / 2 l^2 times a uniform trapezoid in angle.
// radial = degree + 1 + extra, angular = 2 (degree + 1 + extra).
QuadGrid polar_grid(int degree, const MagneticParams& p, Vec2 center = {}, int extra = 0);

// Gauss-Legendre in r times trapezoid in angle over the disk |x| <= R.
QuadGrid disk_grid(double R, int radial, int angular);

}  // namespace magws
