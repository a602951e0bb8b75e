#pragma once
#include <map>

namespace sumsq {

double zeta(double s);        // s = 0, 0 < s < 1, s > 1
double zeta_prime(double s);  // s in {0, 2, 4}
double dirichlet_beta(double s);        // s > 0
double dirichlet_beta_prime(double s);  // s > 0 (used at 1 and 3)
double beta_prime_zero();               // from the functional equation at s = 1

// sum_{n>=1} r_k(n) n^{-s} for k in {2,4,6,8} via its zeta/beta factorization.
double zeta_k(int k, double s);

struct ConstantsBag {
  double gamma_euler;
  double zeta3;
  std::map<double, double> zeta_at, zeta_prime_at, beta_at, beta_prime_at;

  static const ConstantsBag& instance();  // built once, read-only afterwards

  double zeta(double s) const;
  double zeta_prime(double s) const;
  double beta(double s) const;
  double beta_prime(double s) const;
};

}  // namespace sumsq
