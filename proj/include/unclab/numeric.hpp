#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace unclab {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// sin(x)/x with the removable singularity handled by a Taylor form.
// The series switch at |x| < 1e-4 keeps the error below 1e-20 and avoids
// branching on exact float equality of frequency differences.
inline double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

// Reduce x to [0, 2*pi).
inline double wrap_angle(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  if (y >= kTwoPi) y = 0.0;  // fmod can land exactly on 2*pi after the add
  return y;
}

struct GaussRule {
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive
};

// Gauss-Legendre rule with n points on [-1, 1], Newton iteration on the
// Legendre recurrence. Accurate to ~1e-15 for n up to several thousand.
GaussRule gauss_legendre(std::size_t n);

// The same rule mapped to [a, b].
GaussRule gauss_legendre(std::size_t n, double a, double b);

inline double sq(double x) { return x * x; }

inline double abs_sq(std::complex<double> z) {
  return z.real() * z.real() + z.imag() * z.imag();
}

}  // namespace unclab
