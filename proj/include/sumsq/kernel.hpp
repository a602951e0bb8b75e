#pragma once
#include "sumsq/complex.hpp"

namespace sumsq {

// The main identity's test function
//   f(x) = q^nu / (A B) (1/A + 1/B)^{k-2} 2F1(nu+1-k/2, 1-k/2; nu+1; q^2),
//   A = sqrt(x+alpha), B = sqrt(x+beta), q = (A-B)/(A+B),
// together with its large-x behaviour f(x) ~ c0 x^{-s}, s = nu + k/2.
class MainKernel {
 public:
  MainKernel(int k, double nu, Complex alpha, Complex beta);

  Complex operator()(double x) const;
  Complex minus_leading(double x) const;  // f(x) - c0 x^{-s}, no cancellation

  Complex c0() const { return c0_; }
  double s() const { return nu_ + 0.5 * k_; }
  int k() const { return k_; }
  double nu() const { return nu_; }

 private:
  Complex direct(double x) const;
  Complex log_ratio(double x) const;  // log(f(x) / (c0 x^{-s}))
  Complex f21_minus_one(Complex q2) const;

  int k_;
  double nu_;
  Complex alpha_, beta_, c0_;
};

}  // namespace sumsq
