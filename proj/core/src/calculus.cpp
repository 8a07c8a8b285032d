#include "magws/calculus.hpp"

#include <cmath>
#include <stdexcept>

namespace magws {

AlgebraElement nabla(const AlgebraElement& x, int dir) {
  if (dir != 1 && dir != 2) throw std::invalid_argument("nabla: direction must be 1 or 2");
  const int N = x.cutoff;
  AlgebraElement r(N + 1, x.params);
  const double c = x.params.ell_B / std::sqrt(2.0);
  const cplx pre = dir == 1 ? cplx(c) : cplx(0.0, c);
  // signs of the four shifted terms: (k-1), (j-1), (k+1), (j+1)
  const double s[2][4] = {{1, 1, -1, -1}, {1, -1, 1, -1}};
  const auto& sg = s[dir - 1];
  for (int k = 0; k <= N; ++k) {
    for (int j = 0; j <= N; ++j) {
      const cplx v = x.a(k, j);
      if (v == cplx(0.0)) continue;
      if (k > 0) r.a(k - 1, j) += pre * sg[0] * std::sqrt(double(k)) * v;
      if (j > 0) r.a(k, j - 1) += pre * sg[1] * std::sqrt(double(j)) * v;
      r.a(k + 1, j) += pre * sg[2] * std::sqrt(k + 1.0) * v;
      r.a(k, j + 1) += pre * sg[3] * std::sqrt(j + 1.0) * v;
    }
  }
  return r;
}

std::pair<AlgebraElement, AlgebraElement> grad(const AlgebraElement& x) { return {nabla(x, 1), nabla(x, 2)}; }

KernelCoeffs kernel_derivation(const KernelCoeffs& f, int dir) {
  if (dir != 1 && dir != 2) throw std::invalid_argument("kernel_derivation: direction must be 1 or 2");
  const int N = f.cutoff;
  KernelCoeffs r(N + 1, f.params);
  const double c = f.params.ell_B / std::sqrt(2.0);
  const cplx pre = dir == 1 ? cplx(c) : cplx(0.0, c);
  // signs of the terms psi_{n-1,m}, psi_{n,m-1}, psi_{n+1,m}, psi_{n,m+1}
  const double s[2][4] = {{-1, -1, 1, 1}, {-1, 1, -1, 1}};
  const auto& sg = s[dir - 1];
  for (int n = 0; n <= N; ++n) {
    for (int m = 0; m <= N; ++m) {
      const cplx v = f.c(n, m);
      if (v == cplx(0.0)) continue;
      if (n > 0) r.c(n - 1, m) += pre * sg[0] * std::sqrt(double(n)) * v;
      if (m > 0) r.c(n, m - 1) += pre * sg[1] * std::sqrt(double(m)) * v;
      r.c(n + 1, m) += pre * sg[2] * std::sqrt(n + 1.0) * v;
      r.c(n, m + 1) += pre * sg[3] * std::sqrt(m + 1.0) * v;
    }
  }
  return r;
}

double norm_B2(const AlgebraElement& x) { return std::sqrt(std::max(0.0, hs_inner(x, x).real())); }

double sobolev_norm(const AlgebraElement& x, int N, int p) {
  if (p != 2) throw std::invalid_argument("sobolev_norm: only p = 2 is supported");
  if (N < 0) throw std::invalid_argument("sobolev_norm: negative order");
  double total = 0.0;
  // rows: a applications of nabla_1, then b of nabla_2
  AlgebraElement row = x;
  for (int a = 0; a <= N; ++a) {
    AlgebraElement t = row;
    for (int b = 0; a + b <= N; ++b) {
      const double nb = norm_B2(t);
      total += nb * nb;
      if (a + b < N) t = nabla(t, 2);
    }
    if (a < N) row = nabla(row, 1);
  }
  return std::sqrt(total);
}

double integration_by_parts_residual(const AlgebraElement& t, const AlgebraElement& s, int j) {
  return std::abs(trace_B(multiply(t, nabla(s, j))) + trace_B(multiply(nabla(t, j), s)));
}

}  // namespace magws
