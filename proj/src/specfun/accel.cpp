#include "sumsq/accel.hpp"

#include <cmath>

namespace sumsq {

std::vector<double> cvz_weights(int n) {
  std::vector<double> w(static_cast<std::size_t>(n));
  if (n == 0) return w;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2;
  double b = -1.0, c = -d;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    w[k] = c / d;  // c already carries the (-1)^k sign
    b = (static_cast<double>(k) + n) * (static_cast<double>(k) - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return w;
}

}  // namespace sumsq
