#include "sumsq/kernel.hpp"

#include <cmath>

#include "sumsq/errors.hpp"

namespace sumsq {

MainKernel::MainKernel(int k, double nu, Complex alpha, Complex beta)
    : k_(k), nu_(nu), alpha_(alpha), beta_(beta) {
  c0_ = std::pow(2.0, k - 2 - 2 * nu) * std::pow(alpha - beta, nu);
}

Complex MainKernel::f21_minus_one(Complex q2) const {
  double a = nu_ + 1 - 0.5 * k_, b = 1 - 0.5 * k_, c = nu_ + 1;
  Complex term = 1.0, sum = 0.0;
  for (int n = 0; n < 2000; ++n) {
    double f = (a + n) * (b + n) / ((c + n) * (n + 1.0));
    if (f == 0) return sum;
    term *= f * q2;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(1.0 + sum)) return sum;
  }
  throw AccuracyError("main kernel: 2F1 series did not converge");
}

Complex MainKernel::direct(double x) const {
  Complex A = std::sqrt(x + alpha_), B = std::sqrt(x + beta_);
  Complex q = (alpha_ - beta_) / ((A + B) * (A + B));
  Complex v = 1.0 / (A * B) * std::pow(1.0 / A + 1.0 / B, double(k_ - 2)) * (1.0 + f21_minus_one(q * q));
  if (nu_ != 0) v *= std::pow(q, nu_);
  return v;
}

Complex MainKernel::log_ratio(double x) const {
  double t = 1.0 / x;
  Complex la = sumsq::log1p(alpha_ * t), lb = sumsq::log1p(beta_ * t);
  Complex ea = sumsq::expm1(0.5 * la), eb = sumsq::expm1(0.5 * lb);    // sqrt(1+at)-1
  Complex da = sumsq::expm1(-0.5 * la), db = sumsq::expm1(-0.5 * lb);  // 1/sqrt(1+at)-1
  Complex A = std::sqrt(x + alpha_), B = std::sqrt(x + beta_);
  Complex q = (alpha_ - beta_) / ((A + B) * (A + B));
  Complex L = -0.5 * (la + lb) - 2 * nu_ * sumsq::log1p(0.5 * (ea + eb)) +
              double(k_ - 2) * sumsq::log1p(0.5 * (da + db)) + sumsq::log1p(f21_minus_one(q * q));
  return L;
}

Complex MainKernel::operator()(double x) const {
  if (x < 1.0) return direct(x);
  return c0_ * std::pow(x, -s()) * std::exp(log_ratio(x));
}

Complex MainKernel::minus_leading(double x) const {
  if (x < 1.0) return direct(x) - c0_ * std::pow(x, -s());
  return c0_ * std::pow(x, -s()) * sumsq::expm1(log_ratio(x));
}

}  // namespace sumsq
