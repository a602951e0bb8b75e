#pragma once
#include "sumsq/complex.hpp"

namespace sumsq {

struct EvalPolicy {
  double series_asymptotic_crossover = 20.0;
  double target_accuracy = 1e-12;
  int max_series_terms = 600;
  // below this |z| K_nu uses the series, between it and the crossover the
  // exponentially convergent integral representation
  double k_series_limit = 2.0;
};

inline const EvalPolicy& default_policy() {
  static const EvalPolicy p{};
  return p;
}

// Forced evaluation regime, mainly for the overlap-band tests.
enum class Regime { automatic, series, integral, asymptotic };

double gamma(double x);
Complex gamma(Complex z);
double rgamma(double x);  // 1/Gamma, zero at poles

Complex bessel_j(double nu, Complex z, const EvalPolicy& pol = default_policy(),
                 Regime r = Regime::automatic);
Complex bessel_i(double nu, Complex z, const EvalPolicy& pol = default_policy(),
                 Regime r = Regime::automatic);
Complex bessel_k(double nu, Complex z, const EvalPolicy& pol = default_policy(),
                 Regime r = Regime::automatic);

// e^{-z} I_nu(z) and e^{z} K_nu(z), for products that would overflow (Re z > 0).
Complex bessel_i_scaled(double nu, Complex z, const EvalPolicy& pol = default_policy());
Complex bessel_k_scaled(double nu, Complex z, const EvalPolicy& pol = default_policy());

// I_nu(x) K_nu(y) without intermediate overflow (Re y > 0).
Complex bessel_ik_product(double nu, Complex x, Complex y, const EvalPolicy& pol = default_policy());

// Gauss 2F1, |x| < 1. double and Complex instantiations are provided.
template <class T>
T hyp2f1(double a, double b, double c, T x);
template <class T>
T hyp2f1_direct(double a, double b, double c, T x);  // plain series only
template <class T>
T hyp2f1_pfaff(double a, double b, double c, T x);   // (1-x)^{-b} F(c-a,b;c;x/(x-1))

// Complete elliptic integrals in modulus convention: K(m)=int dθ/sqrt(1-m^2 sin^2 θ).
double elliptic_k(double m);
double elliptic_e(double m);
double elliptic_d(double m);  // (K-E)/m^2

}  // namespace sumsq
