#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>

namespace magws {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

struct Vec2 {
  double x1 = 0.0;
  double x2 = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
inline Vec2 operator-(Vec2 a) { return {-a.x1, -a.x2}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x1, s * a.x2}; }
inline double norm2(Vec2 a) { return a.x1 * a.x1 + a.x2 * a.x2; }
inline double wedge(Vec2 a, Vec2 b) { return a.x1 * b.x2 - a.x2 * b.x1; }

// Magnetic length and magnetic energy; natural units by default.
struct MagneticParams {
  double ell_B = 1.0;
  double energy_B = 1.0;

  // magnetic disk area
  double lambda_B() const { return pi * ell_B * ell_B; }

  void validate() const {
    if (!(ell_B > 0.0)) throw std::invalid_argument("ell_B must be positive");
    if (!(energy_B > 0.0)) throw std::invalid_argument("energy_B must be positive");
  }
};

inline bool same_params(const MagneticParams& a, const MagneticParams& b) {
  return a.ell_B == b.ell_B && a.energy_B == b.energy_B;
}

}  // namespace magws
