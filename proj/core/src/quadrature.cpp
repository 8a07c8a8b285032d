#include "magws/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace magws {

namespace {

// Golub-Welsch on a symmetric Jacobi matrix.
GaussRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& off, double mu0) {
  const int n = static_cast<int>(diag.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    J(i, i) = diag(i);
    if (i + 1 < n) {
      J(i, i + 1) = off(i);
      J(i + 1, i) = off(i);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = es.eigenvalues()(i);
    const double v = es.eigenvectors()(0, i);
    r.weights[i] = mu0 * v * v;
  }
  return r;
}

}  // namespace

QuadGrid QuadGrid::shifted(Vec2 c) const {
  QuadGrid g = *this;
  const Vec2 d = c - center;
  for (auto& x : g.nodes) x = x + d;
  g.center = c;
  return g;
}

GaussRule gauss_laguerre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: n >= 1 required");
  Eigen::VectorXd d(n), o(n > 1 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) d(i) = 2.0 * i + 1.0;
  for (int i = 0; i + 1 < n; ++i) o(i) = i + 1.0;
  GaussRule r = golub_welsch(d, o, 1.0);
  // small weights lose relative accuracy in the eigenvector; refine with the
  // closed form w_i = t_i / ((n+1)^2 L_{n+1}(t_i)^2)
  for (int i = 0; i < n; ++i) {
    const double t = r.nodes[i];
    double l0 = 1.0, l1 = 1.0 - t;
    for (int k = 1; k <= n; ++k) {
      const double l2 = ((2.0 * k + 1.0 - t) * l1 - k * l0) / (k + 1.0);
      l0 = l1;
      l1 = l2;
    }
    r.weights[i] = t / ((n + 1.0) * (n + 1.0) * l1 * l1);
  }
  return r;
}

GaussRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
  Eigen::VectorXd d = Eigen::VectorXd::Zero(n), o(n > 1 ? n - 1 : 0);
  for (int i = 0; i + 1 < n; ++i) {
    const double k = i + 1.0;
    o(i) = k / std::sqrt(4.0 * k * k - 1.0);
  }
  return golub_welsch(d, o, 2.0);
}

QuadGrid polar_grid(int degree, const MagneticParams& p, Vec2 center, int extra) {
  if (degree < 0 || extra < 0) throw std::invalid_argument("polar_grid: negative degree");
  const int nr = degree + 1 + extra;
  const int na = 2 * nr;
  const GaussRule gl = gauss_laguerre(nr);
  const double l2 = p.ell_B * p.ell_B;
  QuadGrid g;
  g.degree = degree + extra;
  g.center = center;
  g.nodes.reserve(static_cast<std::size_t>(nr) * na);
  g.weights.reserve(static_cast<std::size_t>(nr) * na);
  const double dth = 2.0 * pi / na;
  for (int i = 0; i < nr; ++i) {
    const double t = gl.nodes[i];
    const double r = std::sqrt(2.0 * l2 * t);
    // dx = l^2 dt dtheta; e^{t} undoes the Laguerre weight
    const double w = l2 * gl.weights[i] * std::exp(t) * dth;
    for (int k = 0; k < na; ++k) {
      const double th = (k + 0.5) * dth;
      g.nodes.push_back({center.x1 + r * std::cos(th), center.x2 + r * std::sin(th)});
      g.weights.push_back(w);
    }
  }
  return g;
}

QuadGrid disk_grid(double R, int radial, int angular) {
  if (!(R > 0.0) || radial < 1 || angular < 1) throw std::invalid_argument("disk_grid: bad arguments");
  const GaussRule gl = gauss_legendre(radial);
  QuadGrid g;
  g.degree = 0;
  const double dth = 2.0 * pi / angular;
  for (int i = 0; i < radial; ++i) {
    const double r = 0.5 * R * (gl.nodes[i] + 1.0);
    const double w = 0.5 * R * gl.weights[i] * r * dth;
    for (int k = 0; k < angular; ++k) {
      const double th = (k + 0.5) * dth;
      g.nodes.push_back({r * std::cos(th), r * std::sin(th)});
      g.weights.push_back(w);
    }
  }
  return g;
}

}  // namespace magws
