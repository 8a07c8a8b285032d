#include "magws/laguerre.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "magws/quadrature.hpp"

namespace magws {

double laguerre_poly(int n, double alpha, double zeta) {
  if (n < 0) throw std::invalid_argument("laguerre_poly: negative degree");
  if (n == 0) return 1.0;
  double l0 = 1.0;
  double l1 = 1.0 + alpha - zeta;
  for (int k = 1; k < n; ++k) {
    const double l2 = ((2.0 * k + 1.0 + alpha - zeta) * l1 - (k + alpha) * l0) / (k + 1.0);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

namespace {

// sqrt(lo!/hi!)
double sqrt_factorial_ratio(int lo, int hi) {
  if (hi <= 20) {
    double r = 1.0;
    for (int k = lo + 1; k <= hi; ++k) r *= k;
    return 1.0 / std::sqrt(r);
  }
  return std::exp(0.5 * (std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0)));
}

}  // namespace

cplx laguerre_fn(LagIndex idx, Vec2 x, const MagneticParams& p) {
  if (idx.n < 0 || idx.m < 0) throw std::invalid_argument("laguerre_fn: negative index");
  const double l = p.ell_B;
  const double t = norm2(x) / (2.0 * l * l);
  const double psi0 = std::exp(-0.5 * t) / (l * std::sqrt(2.0 * pi));
  const cplx w(x.x2 / (l * std::sqrt(2.0)), x.x1 / (l * std::sqrt(2.0)));
  if (idx.m >= idx.n) {
    const int k = idx.m - idx.n;
    return psi0 * sqrt_factorial_ratio(idx.n, idx.m) * std::pow(w, k) * laguerre_poly(idx.n, k, t);
  }
  const int k = idx.n - idx.m;
  return psi0 * sqrt_factorial_ratio(idx.m, idx.n) * std::pow(-std::conj(w), k) *
         laguerre_poly(idx.m, k, t);
}

cplx phase_cocycle(Vec2 x, Vec2 y, const MagneticParams& p) {
  return std::polar(1.0, wedge(x, y) / (2.0 * p.ell_B * p.ell_B));
}

KernelCoeffs::KernelCoeffs(int cutoff_, const MagneticParams& p)
    : cutoff(cutoff_), params(p), c(Eigen::MatrixXcd::Zero(cutoff_ + 1, cutoff_ + 1)) {
  if (cutoff_ < 0) throw std::invalid_argument("KernelCoeffs: negative cutoff");
}

KernelCoeffs KernelCoeffs::basis(LagIndex idx, int cutoff, const MagneticParams& p) {
  KernelCoeffs f(std::max({cutoff, idx.n, idx.m}), p);
  f.c(idx.n, idx.m) = 1.0;
  return f;
}

cplx KernelCoeffs::at(int n, int m) const {
  if (n < 0 || m < 0 || n > cutoff || m > cutoff) return 0.0;
  return c(n, m);
}

KernelCoeffs KernelCoeffs::resized(int new_cutoff) const {
  KernelCoeffs f(new_cutoff, params);
  const int k = std::min(cutoff, new_cutoff) + 1;
  f.c.topLeftCorner(k, k) = c.topLeftCorner(k, k);
  return f;
}

cplx KernelCoeffs::operator()(Vec2 x) const {
  cplx s = 0.0;
  for (int n = 0; n <= cutoff; ++n)
    for (int m = 0; m <= cutoff; ++m)
      if (c(n, m) != cplx(0.0)) s += c(n, m) * laguerre_fn({n, m}, x, params);
  return s;
}

Kernel KernelCoeffs::as_kernel() const {
  KernelCoeffs copy = *this;
  return [copy](Vec2 x) { return copy(x); };
}

static KernelCoeffs combine(const KernelCoeffs& a, const KernelCoeffs& b, double sign) {
  if (!same_params(a.params, b.params)) throw std::invalid_argument("KernelCoeffs: mismatched parameters");
  const int n = std::max(a.cutoff, b.cutoff);
  KernelCoeffs r = a.resized(n);
  r.c += sign * b.resized(n).c;
  return r;
}

KernelCoeffs operator+(const KernelCoeffs& a, const KernelCoeffs& b) { return combine(a, b, 1.0); }
KernelCoeffs operator-(const KernelCoeffs& a, const KernelCoeffs& b) { return combine(a, b, -1.0); }
KernelCoeffs operator*(cplx s, const KernelCoeffs& a) {
  KernelCoeffs r = a;
  r.c *= s;
  return r;
}

KernelCoeffs ladder_apply(Ladder op, const KernelCoeffs& f) {
  const bool raising = op == Ladder::a_plus || op == Ladder::b_plus;
  int top = 0;
  for (int n = 0; n <= f.cutoff; ++n)
    for (int m = 0; m <= f.cutoff; ++m)
      if (f.c(n, m) != cplx(0.0)) top = std::max({top, n, m});
  KernelCoeffs r(std::max(f.cutoff, raising ? top + 1 : 0), f.params);
  for (int n = 0; n <= f.cutoff; ++n) {
    for (int m = 0; m <= f.cutoff; ++m) {
      const cplx v = f.c(n, m);
      if (v == cplx(0.0)) continue;
      switch (op) {
        case Ladder::a_plus: r.c(n + 1, m) += std::sqrt(n + 1.0) * v; break;
        case Ladder::a_minus: if (n > 0) r.c(n - 1, m) += std::sqrt(double(n)) * v; break;
        case Ladder::b_plus: r.c(n, m + 1) += std::sqrt(m + 1.0) * v; break;
        case Ladder::b_minus: if (m > 0) r.c(n, m - 1) += std::sqrt(double(m)) * v; break;
      }
    }
  }
  return r;
}

cplx inner_product_B(const KernelCoeffs& f, const KernelCoeffs& g) {
  if (!same_params(f.params, g.params)) throw std::invalid_argument("inner_product_B: mismatched parameters");
  const int n = std::max(f.cutoff, g.cutoff);
  const cplx s = f.resized(n).c.cwiseProduct(g.resized(n).c.conjugate()).sum();
  return std::conj(s) / (2.0 * pi * f.params.ell_B * f.params.ell_B);
}

QuadValue inner_product_B(const Kernel& f, const Kernel& g, const QuadGrid& grid,
                          const MagneticParams& p, int max_index) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i)
    s += grid.weights[i] * std::conj(f(grid.nodes[i])) * g(grid.nodes[i]);
  return {s / (2.0 * pi * p.ell_B * p.ell_B), max_index > grid.degree};
}

double seminorm_r_k(const KernelCoeffs& f, int k) {
  if (k < 0) throw std::invalid_argument("seminorm_r_k: negative order");
  double s = 0.0;
  for (int n = 0; n <= f.cutoff; ++n)
    for (int m = 0; m <= f.cutoff; ++m)
      s += std::pow((2.0 * n + 1.0) * (2.0 * m + 1.0), k) * std::norm(f.c(n, m));
  return std::sqrt(s);
}

Kernel involution_J(Kernel f) {
  return [f = std::move(f)](Vec2 x) { return std::conj(f(-x)); };
}

KernelCoeffs involution_J(const KernelCoeffs& f) {
  KernelCoeffs r(f.cutoff, f.params);
  r.c = f.c.transpose().conjugate();
  return r;
}

}  // namespace magws
