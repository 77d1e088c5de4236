#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace schlicht {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// True when the principal log is discontinuous (or undefined) at z.
inline bool on_branch_cut(Complex z) noexcept {
  return z.imag() == 0.0 && z.real() <= 0.0;
}

inline Complex unit(double theta) noexcept { return std::polar(1.0, theta); }

/// z^n by repeated squaring; ipow(0, 0) == 1.
inline Complex ipow(Complex z, int n) noexcept {
  if (n < 0) return 1.0 / ipow(z, -n);
  Complex result = 1.0;
  while (n > 0) {
    if (n & 1) result *= z;
    z *= z;
    n >>= 1;
  }
  return result;
}

}  // namespace schlicht
