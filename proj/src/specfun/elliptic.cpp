#include <cmath>

#include "sumsq/errors.hpp"
#include "sumsq/specfun.hpp"

namespace sumsq {

namespace {

void check(double m) {
  if (!(m >= 0.0 && m < 1.0)) throw DomainError("elliptic: modulus must lie in [0,1)");
}

// AGM with the running sum needed for E: E = K (1 - sum 2^{n-1} c_n^2).
struct Agm {
  double mean;
  double csum;
};

Agm agm(double m) {
  double a = 1.0, g = std::sqrt((1.0 - m) * (1.0 + m));
  double c = m, p = 0.5, s = p * c * c;
  for (int i = 0; i < 64 && std::fabs(a - g) > 1e-17 * a; ++i) {
    c = 0.5 * (a - g);
    double an = 0.5 * (a + g);
    g = std::sqrt(a * g);
    a = an;
    p *= 2;
    s += p * c * c;
  }
  return {a, s};
}

}  // namespace

double elliptic_k(double m) {
  check(m);
  return kPi / (2 * agm(m).mean);
}

double elliptic_e(double m) {
  check(m);
  Agm r = agm(m);
  return kPi / (2 * r.mean) * (1.0 - r.csum);
}

double elliptic_d(double m) {
  check(m);
  double m2 = m * m;
  // (K-E)/m^2 cancels for small m; use D = pi/4 2F1(1/2,3/2;2;m^2) there
  if (m2 <= 0.25) return kPi / 4 * hyp2f1_direct(0.5, 1.5, 2.0, m2);
  return (elliptic_k(m) - elliptic_e(m)) / m2;
}

}  // namespace sumsq
