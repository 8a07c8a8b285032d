#pragma once

#include <functional>

#include <Eigen/Dense>

#include "magws/params.hpp"

namespace magws {

struct QuadGrid;

struct LagIndex {
  int n = 0;  // Landau index
  int m = 0;  // dual index
};

using Kernel = std::function<cplx(Vec2)>;

// L_n^(alpha)(zeta) by the three-term recurrence; any real alpha.
double laguerre_poly(int n, double alpha, double zeta);

// Magnetic Laguerre function psi_{n,m}(x).
//
// Convention: psi_{n,m} = psi_0 sqrt(n!/m!) w^{m-n} L_n^{(m-n)}(|x|^2/2l^2) with
// w = (x2 + i x1)/(l sqrt 2); for m < n the negative power is rewritten through
// L_n^{(-k)}(t) = (-t)^k (n-k)!/n! L_{n-k}^{(k)}(t). In this basis the ladder
// operators a+- act with the usual sqrt coefficients, psi_{k,j} * psi_{n,m} =
// delta_{jn} psi_{k,m} / (sqrt(2 pi) l) and d_j f = i x_j f matches nabla_j.
cplx laguerre_fn(LagIndex idx, Vec2 x, const MagneticParams& p);

// Phi_B(x,y) = exp(i (x ^ y) / 2 l^2)
cplx phase_cocycle(Vec2 x, Vec2 y, const MagneticParams& p);

// f = sum c_{n,m} psi_{n,m}, n,m <= cutoff.
struct KernelCoeffs {
  int cutoff = 0;
  MagneticParams params;
  Eigen::MatrixXcd c;  // c(n, m)

  KernelCoeffs() = default;
  KernelCoeffs(int cutoff_, const MagneticParams& p);

  static KernelCoeffs basis(LagIndex idx, int cutoff, const MagneticParams& p);

  cplx at(int n, int m) const;
  KernelCoeffs resized(int new_cutoff) const;
  cplx operator()(Vec2 x) const;
  Kernel as_kernel() const;
};

KernelCoeffs operator+(const KernelCoeffs& a, const KernelCoeffs& b);
KernelCoeffs operator-(const KernelCoeffs& a, const KernelCoeffs& b);
KernelCoeffs operator*(cplx s, const KernelCoeffs& a);

enum class Ladder { a_plus, a_minus, b_plus, b_minus };

// Coefficient action; raising at the boundary grows the cutoff by one.
KernelCoeffs ladder_apply(Ladder op, const KernelCoeffs& f);

// (1/2 pi l^2) sum conj(c) d
cplx inner_product_B(const KernelCoeffs& f, const KernelCoeffs& g);

struct QuadValue {
  cplx value;
  bool accuracy_warning = false;
};

// (1/2 pi l^2) int conj(f) g over the grid. max_index is the largest Laguerre
// index the caller expects in f, g; exceeding the grid degree raises the flag.
QuadValue inner_product_B(const Kernel& f, const Kernel& g, const QuadGrid& grid,
                          const MagneticParams& p, int max_index = 0);

// sqrt(sum (2n+1)^k (2m+1)^k |c|^2)
double seminorm_r_k(const KernelCoeffs& f, int k);

// (Jf)(x) = conj(f(-x)); on coefficients J psi_{n,m} = psi_{m,n}.
Kernel involution_J(Kernel f);
KernelCoeffs involution_J(const KernelCoeffs& f);

}  // namespace magws
