#pragma once
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "sumsq/errors.hpp"

namespace sumsq {

// Weights w_j (j < n) with  sum_{j} (-1)^j a_j  ~=  sum_j w_j a_j.
// Cohen-Villegas-Zagier: exact for a_j = moments of a positive measure on [0,1],
// error ~ (3+sqrt 8)^{-n} for well-behaved alternating tails.
std::vector<double> cvz_weights(int n);

// sum_{j>=0} (-1)^j a_j using the first a.size() terms.
template <class T>
T cvz_sum(std::span<const T> a) {
  auto w = cvz_weights(static_cast<int>(a.size()));
  T s{};
  for (std::size_t j = 0; j < a.size(); ++j) s += w[j] * a[j];
  return s;
}

struct AccelResult {
  double value;
  double err;
  int depth;
};

// Adaptive alternating sum: depth grows in steps of 8 until two successive
// depths agree to tol/10 (relative, with absolute floor 1e-300).
template <class F>
AccelResult alternating_sum(F&& term, double tol, int max_depth = 96) {
  std::vector<double> a;
  double prev = NAN;
  for (int n = 16; n <= max_depth; n += 8) {
    while (static_cast<int>(a.size()) < n) a.push_back(term(static_cast<int>(a.size())));
    double s = cvz_sum<double>(a);
    if (!std::isnan(prev)) {
      double d = std::fabs(s - prev);
      if (d <= 0.1 * tol * std::fabs(s) || d < 1e-300) return {s, d, n};
    }
    prev = s;
  }
  // machine precision reached: successive depths agree only up to rounding
  double s = cvz_sum<double>(a);
  double d = std::fabs(s - prev);
  if (d <= 1e-13 * std::fabs(s)) return {s, d, max_depth};
  throw AccuracyError("alternating_sum: acceleration did not converge");
}

}  // namespace sumsq
