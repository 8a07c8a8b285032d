#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "magws/convolution.hpp"

namespace magws::wb {

inline constexpr std::uint64_t kSeed = 0x6d61677773ULL;

// n points uniform in the square [-r l, r l]^2
inline std::vector<Vec2> sample_points(int n, double r, const MagneticParams& p, std::uint64_t seed = kSeed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-r * p.ell_B, r * p.ell_B);
  std::vector<Vec2> pts(n);
  for (auto& x : pts) {
    x.x1 = u(rng);
    x.x2 = u(rng);
  }
  return pts;
}

// terms random coefficients on indices <= top
inline KernelCoeffs random_kernel(std::mt19937_64& rng, int top, int terms, const MagneticParams& p) {
  std::uniform_int_distribution<int> idx(0, top);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  KernelCoeffs f(top, p);
  for (int t = 0; t < terms; ++t) f.c(idx(rng), idx(rng)) += cplx(u(rng), u(rng));
  return f;
}

}  // namespace magws::wb
