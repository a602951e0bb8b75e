#include <cmath>
#include <vector>

#include "sumsq/accel.hpp"
#include "sumsq/errors.hpp"
#include "sumsq/specfun.hpp"

namespace sumsq {

namespace {

constexpr int kMaxTerms = 20000;

bool nonpositive_integer(double x) { return x <= 0 && x == std::floor(x); }

template <class T>
T series(double a, double b, double c, T x) {
  T term = 1.0, sum = 1.0;
  int small = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    double f = (a + n) * (b + n) / ((c + n) * (n + 1.0));
    if (f == 0) return sum;  // terminating (a or b a nonpositive integer)
    term *= f * x;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      if (++small == 2) return sum;
    } else {
      small = 0;
    }
  }
  throw AccuracyError("hyp2f1: series term cap reached");
}

void check(double c, double ax) {
  if (nonpositive_integer(c)) throw PoleError("hyp2f1: c is a nonpositive integer");
  if (!(ax < 1.0)) throw DivergenceError("hyp2f1: |x| >= 1");
}

// Real z close to -1: the series alternates and converges slowly; sum it
// with CVZ weights instead.
double series_alternating(double a, double b, double c, double z) {
  double az = -z;
  std::vector<double> coef{1.0};
  auto term = [&](int j) {
    while (static_cast<int>(coef.size()) <= j) {
      int n = static_cast<int>(coef.size()) - 1;
      coef.push_back(coef.back() * (a + n) * (b + n) / ((c + n) * (n + 1.0)) * az);
    }
    return coef[j];
  };
  return alternating_sum(term, 1e-15, 120).value;
}

}  // namespace

template <class T>
T hyp2f1_direct(double a, double b, double c, T x) {
  check(c, std::abs(x));
  return series(a, b, c, x);
}

template <class T>
T hyp2f1_pfaff(double a, double b, double c, T x) {
  check(c, std::abs(x));
  if (std::real(x) >= 1.0) throw DivergenceError("hyp2f1: Pfaff needs Re x < 1");
  T z = x / (x - 1.0);
  T pre = std::pow(1.0 - x, -b);
  if constexpr (std::is_same_v<T, double>) {
    if (z < -0.7) return pre * series_alternating(c - a, b, c, z);
  }
  if (!(std::abs(z) < 1.0)) throw DivergenceError("hyp2f1: Pfaff argument outside unit disk");
  return pre * series(c - a, b, c, z);
}

template <class T>
T hyp2f1(double a, double b, double c, T x) {
  double ax = std::abs(x);
  check(c, ax);
  if (x == T(0)) return 1.0;
  if (ax <= 0.5) return series(a, b, c, x);
  T z = x / (x - 1.0);
  if (std::real(x) < 0.5 && std::abs(z) <= 0.5) return std::pow(1.0 - x, -b) * series(c - a, b, c, z);
  // right half of the disk: Pfaff does not shrink the argument there, use the
  // 1-x connection formula when c-a-b is safely away from an integer
  double s = c - a - b;
  if (std::abs(1.0 - x) <= 0.5 && std::fabs(s - std::round(s)) > 1e-6) {
    T y = 1.0 - x;
    double g1 = gamma(c) * gamma(s) * rgamma(c - a) * rgamma(c - b);
    double g2 = gamma(c) * gamma(-s) * rgamma(a) * rgamma(b);
    T f1 = g1 == 0 ? T(0) : g1 * series(a, b, 1.0 - s, y);
    T f2 = g2 == 0 ? T(0) : g2 * std::pow(y, s) * series(c - a, c - b, 1.0 + s, y);
    return f1 + f2;
  }
  return series(a, b, c, x);
}

template double hyp2f1<double>(double, double, double, double);
template Complex hyp2f1<Complex>(double, double, double, Complex);
template double hyp2f1_direct<double>(double, double, double, double);
template Complex hyp2f1_direct<Complex>(double, double, double, Complex);
template double hyp2f1_pfaff<double>(double, double, double, double);
template Complex hyp2f1_pfaff<Complex>(double, double, double, Complex);

}  // namespace sumsq
