#include "magws/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace magws {

namespace {

double sign_pow(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

void check_params(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.params.ell_B != y.params.ell_B) throw std::invalid_argument("algebra: mismatched ell_B");
}

}  // namespace

AlgebraElement::AlgebraElement(int cutoff_, const MagneticParams& p)
    : cutoff(cutoff_), params(p), a(Eigen::MatrixXcd::Zero(cutoff_ + 1, cutoff_ + 1)) {
  if (cutoff_ < 0) throw std::invalid_argument("AlgebraElement: negative cutoff");
}

cplx AlgebraElement::coeff(int k, int j) const {
  if (k < 0 || j < 0 || k > cutoff || j > cutoff) return 0.0;
  return a(k, j);
}

AlgebraElement AlgebraElement::resized(int new_cutoff) const {
  AlgebraElement r(new_cutoff, params);
  const int n = std::min(cutoff, new_cutoff) + 1;
  r.a.topLeftCorner(n, n) = a.topLeftCorner(n, n);
  return r;
}

int AlgebraElement::support() const {
  int s = -1;
  for (int k = 0; k <= cutoff; ++k)
    for (int j = 0; j <= cutoff; ++j)
      if (a(k, j) != cplx(0.0)) s = std::max({s, k, j});
  return s;
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  check_params(x, y);
  const int n = std::max(x.cutoff, y.cutoff);
  AlgebraElement r = x.resized(n);
  r.a += y.resized(n).a;
  return r;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
  check_params(x, y);
  const int n = std::max(x.cutoff, y.cutoff);
  AlgebraElement r = x.resized(n);
  r.a -= y.resized(n).a;
  return r;
}

AlgebraElement operator*(cplx s, const AlgebraElement& x) {
  AlgebraElement r = x;
  r.a *= s;
  return r;
}

AlgebraElement upsilon(int j, int k, int cutoff, const MagneticParams& p) {
  if (j < 0 || k < 0 || j > cutoff || k > cutoff) throw std::out_of_range("upsilon: index outside cutoff");
  AlgebraElement r(cutoff, p);
  r.a(k, j) = 1.0;
  return r;
}

AlgebraElement landau_projection(int n, int cutoff, const MagneticParams& p) { return upsilon(n, n, cutoff, p); }

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  check_params(x, y);
  const int n = std::max(x.cutoff, y.cutoff);
  AlgebraElement r(n, x.params);
  r.a = x.resized(n).a * y.resized(n).a;
  return r;
}

AlgebraElement adjoint(const AlgebraElement& x) {
  AlgebraElement r(x.cutoff, x.params);
  r.a = x.a.adjoint();
  return r;
}

AlgebraElement from_kernel(const KernelCoeffs& g) {
  AlgebraElement r(g.cutoff, g.params);
  const double s = 1.0 / (std::sqrt(2.0 * pi) * g.params.ell_B);
  for (int n = 0; n <= g.cutoff; ++n)
    for (int m = 0; m <= g.cutoff; ++m) r.a(n, m) = s * sign_pow(m - n) * g.c(n, m);
  return r;
}

KernelCoeffs to_kernel(const AlgebraElement& x) {
  KernelCoeffs g(x.cutoff, x.params);
  const double s = std::sqrt(2.0 * pi) * x.params.ell_B;
  for (int n = 0; n <= x.cutoff; ++n)
    for (int m = 0; m <= x.cutoff; ++m) g.c(n, m) = s * sign_pow(m - n) * x.a(n, m);
  return g;
}

cplx trace_B(const AlgebraElement& x) { return x.a.trace(); }

cplx trace_B_via_kernel(const AlgebraElement& x) { return to_kernel(x)(Vec2{0.0, 0.0}); }

cplx hs_inner(const AlgebraElement& x, const AlgebraElement& y) { return trace_B(multiply(adjoint(x), y)); }

cplx trace_per_unit_volume(const AlgebraElement& x) {
  return trace_B(x) / (2.0 * x.params.lambda_B());
}

AlgebraElement heat_element(double s, int cutoff, const MagneticParams& p) {
  if (!(s > 0.0)) throw std::invalid_argument("heat_element: s must be positive");
  AlgebraElement r(cutoff, p);
  for (int j = 0; j <= cutoff; ++j) r.a(j, j) = std::exp(-s * (j + 0.5));
  return r;
}

KernelCoeffs apply_to_state(const AlgebraElement& x, const KernelCoeffs& v) {
  const int n = std::max(x.cutoff, v.cutoff);
  KernelCoeffs r(n, v.params);
  r.c = x.resized(n).a * v.resized(n).c;
  return r;
}

}  // namespace magws
