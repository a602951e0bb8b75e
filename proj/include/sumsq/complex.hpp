#pragma once
#include <cmath>
#include <complex>

namespace sumsq {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// log(1+z) without losing digits for small |z|.
inline Complex log1p(Complex z) {
  if (std::abs(z) > 0.25) return std::log(1.0 + z);
  // log(1+z) = 2 atanh(z/(2+z)); series in w = z/(2+z), |w| < 1/7
  Complex w = z / (2.0 + z), w2 = w * w, term = w, sum = w;
  for (int n = 3; n < 80; n += 2) {
    term *= w2;
    Complex d = term / double(n);
    sum += d;
    if (std::abs(d) <= 1e-17 * std::abs(sum)) break;
  }
  return 2.0 * sum;
}

inline Complex expm1(Complex z) {
  if (std::abs(z) > 0.5) return std::exp(z) - 1.0;
  Complex term = z, sum = z;
  for (int n = 2; n < 60; ++n) {
    term *= z / double(n);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace sumsq
