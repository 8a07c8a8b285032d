#pragma once

#include <Eigen/Dense>

#include "magws/laguerre.hpp"

namespace magws {

// A = sum a(k,j) Upsilon_{j->k}, k,j <= cutoff. With this storage the product
// rule Upsilon_{j->k} Upsilon_{m->n} = delta_{jn} Upsilon_{m->k} is a matrix product.
struct AlgebraElement {
  int cutoff = 0;
  MagneticParams params;
  Eigen::MatrixXcd a;

  AlgebraElement() = default;
  AlgebraElement(int cutoff_, const MagneticParams& p);

  static AlgebraElement zero(int cutoff, const MagneticParams& p) { return {cutoff, p}; }

  cplx coeff(int k, int j) const;
  AlgebraElement resized(int new_cutoff) const;
  // largest index carrying a nonzero coefficient, -1 for zero
  int support() const;
};

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator*(cplx s, const AlgebraElement& x);

AlgebraElement upsilon(int j, int k, int cutoff, const MagneticParams& p);
AlgebraElement landau_projection(int n, int cutoff, const MagneticParams& p);

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement adjoint(const AlgebraElement& x);

// L_g = (1/sqrt(2 pi) l) sum (-1)^{m-n} g_{n,m} Upsilon_{m->n}
AlgebraElement from_kernel(const KernelCoeffs& g);
KernelCoeffs to_kernel(const AlgebraElement& x);

cplx trace_B(const AlgebraElement& x);
// trace through the kernel value at the origin, h(0)
cplx trace_B_via_kernel(const AlgebraElement& x);
cplx hs_inner(const AlgebraElement& x, const AlgebraElement& y);
cplx trace_per_unit_volume(const AlgebraElement& x);

// e^{-s/2} sum_{j <= cutoff} e^{-s j} Pi_j
AlgebraElement heat_element(double s, int cutoff, const MagneticParams& p);

// Hilbert-space action on a state v = sum v(n,m) psi_{n,m}; never mixes m.
KernelCoeffs apply_to_state(const AlgebraElement& x, const KernelCoeffs& v);

}  // namespace magws
