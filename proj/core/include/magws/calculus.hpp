#pragma once

#include <utility>

#include "magws/algebra.hpp"

namespace magws {

// nabla_1(Ups_{j->k}) = (l/sqrt2)(sqrt k Ups_{j->k-1} + sqrt j Ups_{j-1->k} - sqrt(k+1) Ups_{j->k+1} - sqrt(j+1) Ups_{j+1->k})
// nabla_2(Ups_{j->k}) = i(l/sqrt2)(sqrt k Ups_{j->k-1} - sqrt j Ups_{j-1->k} + sqrt(k+1) Ups_{j->k+1} - sqrt(j+1) Ups_{j+1->k})
// The result has cutoff + 1.
AlgebraElement nabla(const AlgebraElement& x, int j);
std::pair<AlgebraElement, AlgebraElement> grad(const AlgebraElement& x);

// (d_j f)(x) = i x_j f(x) on Laguerre coefficients; from_kernel(d_j f) = nabla_j(from_kernel(f)).
KernelCoeffs kernel_derivation(const KernelCoeffs& f, int j);

// |||T|||_{B,2} = sqrt(hs_inner(T,T))
double norm_B2(const AlgebraElement& x);

// (sum_{a+b <= N} |||nabla_1^a nabla_2^b (x)|||^2_{B,2})^{1/2}; only p = 2.
double sobolev_norm(const AlgebraElement& x, int N, int p = 2);

// |trace(T nabla_j S) + trace(nabla_j(T) S)|
double integration_by_parts_residual(const AlgebraElement& t, const AlgebraElement& s, int j);

}  // namespace magws
