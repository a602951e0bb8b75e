#include <doctest.h>

#include <cmath>
#include <random>

#include "sumsq/errors.hpp"
#include "sumsq/specfun.hpp"

using namespace sumsq;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

// K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt; the trapezoid rule is
// spectrally accurate for this doubly-exponentially decaying integrand.
double k_trapezoid(double nu, double x) {
  const double h = 0.02;
  double s = 0.5 * std::exp(-x);
  for (int j = 1;; ++j) {
    double t = j * h, v = std::exp(-x * std::cosh(t)) * std::cosh(nu * t);
    s += v;
    if (v < 1e-300 || v < 1e-20 * s) break;
  }
  return h * s;
}

// I_n(x) = (1/pi) int_0^pi e^{x cos t} cos(n t) dt, trapezoid on a periodic integrand.
double i_trapezoid(int n, double x) {
  const int N = 400;
  double s = 0;
  for (int j = 0; j <= N; ++j) {
    double t = kPi * j / N, w = (j == 0 || j == N) ? 0.5 : 1.0;
    s += w * std::exp(x * std::cos(t)) * std::cos(n * t);
  }
  return s / N;
}

double agm(double a, double b) {
  for (int i = 0; i < 40; ++i) {
    double m = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = m;
  }
  return a;
}

}  // namespace

TEST_CASE("gamma") {
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.3, 30.0, -0.5, -2.7}) CHECK(rel(sumsq::gamma(x), std::tgamma(x)) < 1e-14);
  CHECK(rel(sumsq::gamma(0.5), std::sqrt(kPi)) < 1e-15);
  CHECK_THROWS_AS(sumsq::gamma(-2.0), PoleError);
  CHECK(rgamma(-3.0) == 0.0);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int i = 0; i < 50; ++i) {
    Complex z(u(rng), u(rng));
    // recurrence and reflection
    CHECK(rel(sumsq::gamma(z + 1.0), z * sumsq::gamma(z)) < 1e-13);
    CHECK(rel(sumsq::gamma(z) * sumsq::gamma(1.0 - z), kPi / std::sin(kPi * z)) < 1e-12);
  }
  for (double y : {0.5, 2.0, 6.0}) {
    double g2 = std::norm(sumsq::gamma(Complex(0, y)));
    CHECK(std::fabs(g2 - kPi / (y * std::sinh(kPi * y))) < 1e-13 * g2);
  }
}

TEST_CASE("half-integer closed forms") {
  for (Complex z : {Complex(0.1), Complex(1.0), Complex(1.99), Complex(2.01), Complex(5.0), Complex(19.9),
                    Complex(20.1), Complex(45.0), Complex(2, 3), Complex(10, -4), Complex(0.3, 0.2),
                    Complex(25, 10)}) {
    Complex k = std::sqrt(kPi / (2.0 * z)) * std::exp(-z);
    Complex i = std::sqrt(2.0 / (kPi * z)) * std::sinh(z);
    CHECK(rel(bessel_k(0.5, z), k) < 1e-12);
    CHECK(rel(bessel_i(0.5, z), i) < 1e-12);
    CHECK(rel(bessel_k(1.5, z), k * (1.0 + 1.0 / z)) < 1e-12);
    if (std::abs(z) < 30) {
      Complex j = std::sqrt(2.0 / (kPi * z)) * std::sin(z);
      CHECK(rel(bessel_j(0.5, z), j) < 1e-12);
    }
    CHECK(rel(bessel_k_scaled(0.5, z), std::sqrt(kPi / (2.0 * z))) < 1e-12);
  }
}

TEST_CASE("Wronskian I K") {
  for (double nu : {0.0, 0.3, 0.5, 1.0, 2.5, 7.0, -0.4})
    for (Complex z : {Complex(0.5), Complex(1.9), Complex(2.1), Complex(10), Complex(19.9), Complex(20.1),
                      Complex(35), Complex(3, 2), Complex(0.7, -1.5), Complex(30, 12), Complex(800)}) {
      Complex w = bessel_i_scaled(nu, z) * bessel_k_scaled(nu + 1, z) +
                  bessel_i_scaled(nu + 1, z) * bessel_k_scaled(nu, z);
      CHECK(std::abs(w * z - 1.0) < 1e-10);
    }
}

TEST_CASE("J recurrence") {
  for (double nu : {0.5, 1.0, 2.3})
    for (Complex z : {Complex(0.7), Complex(3.2), Complex(12), Complex(25), Complex(2, 1)}) {
      Complex lhs = bessel_j(nu - 1, z) + bessel_j(nu + 1, z), rhs = 2 * nu / z * bessel_j(nu, z);
      CHECK(std::abs(lhs - rhs) < 1e-12 * (std::abs(lhs) + std::abs(bessel_j(nu, z))));
    }
}

TEST_CASE("K and I against quadrature") {
  for (double nu : {0.0, 0.25, 1.0, 1.7, 3.0})
    for (double x : {0.05, 0.3, 1.0, 2.0, 5.0, 12.0, 25.0, 60.0})
      CHECK(std::abs(bessel_k(nu, x).real() / k_trapezoid(nu, x) - 1) < 1e-12);
  for (int n : {0, 1, 2, 5})
    for (double x : {0.2, 1.0, 4.0, 15.0, 30.0}) {
      // the quadrature loses ~e^x / I_n(x) ulps to cancellation
      double scale = std::exp(x) * 1e-3 + std::fabs(i_trapezoid(n, x));
      CAPTURE(n);
      CAPTURE(x);
      CHECK(std::abs(bessel_i(n, x).real() - i_trapezoid(n, x)) < 1e-12 * scale);
    }
}

TEST_CASE("regimes agree in the overlap bands") {
  for (double nu : {0.0, 0.5, 1.3, 4.0}) {
    for (double r : {1.5, 2.0, 2.5}) {
      Complex z = std::polar(r, 0.4);
      CHECK(rel(bessel_k(nu, z, default_policy(), Regime::series), bessel_k(nu, z, default_policy(), Regime::integral)) <
            1e-11);
    }
    for (double r : {18.0, 20.0, 24.0}) {
      Complex z = std::polar(r, 0.3);
      CHECK(rel(bessel_k(nu, z, default_policy(), Regime::integral),
                bessel_k(nu, z, default_policy(), Regime::asymptotic)) < 1e-11);
      CHECK(rel(bessel_i(nu, z, default_policy(), Regime::series),
                bessel_i(nu, z, default_policy(), Regime::asymptotic)) < 1e-11);
    }
  }
}

TEST_CASE("I K product") {
  for (double nu : {0.0, 0.5, 2.0})
    for (auto [x, y] : {std::pair{Complex(0.8), Complex(3.0)}, {Complex(4, 1), Complex(9, 1)}, {Complex(30), Complex(40)}})
      CHECK(rel(bessel_ik_product(nu, x, y), bessel_i(nu, x) * bessel_k(nu, y)) < 1e-12);
  // overflowing factors, bounded product: I_0(x) K_0(y) ~ e^{x-y} / (2 sqrt(x y))
  Complex p = bessel_ik_product(0.0, 2000.0, 2001.0);
  CHECK(std::abs(p.real() * 2 * std::sqrt(2000.0 * 2001.0) * std::exp(1.0) - 1) < 1e-3);
}

TEST_CASE("2F1 closed forms") {
  for (double x : {-0.9, -0.3, 0.2, 0.6, 0.9, 0.97}) {
    CHECK(std::fabs(hyp2f1(1.0, 1.0, 2.0, x) / (-std::log1p(-x) / x) - 1) < 1e-13);
    CHECK(std::fabs(hyp2f1(0.7, 1.3, 1.3, x) / std::pow(1 - x, -0.7) - 1) < 1e-13);
  }
  for (double t : {0.2, 0.5, 0.9, 0.99}) {
    CHECK(std::fabs(hyp2f1(0.5, 0.5, 1.5, t * t) / (std::asin(t) / t) - 1) < 1e-12);
    CHECK(std::fabs(hyp2f1(0.5, 1.0, 1.5, -t * t) / (std::atan(t) / t) - 1) < 1e-13);
  }
  // terminating series
  CHECK(std::fabs(hyp2f1(-2.0, 1.5, 2.5, 0.4) - (1 - 2 * 1.5 / 2.5 * 0.4 + 1.5 * 2.5 / (2.5 * 3.5) * 0.16)) < 1e-15);
  Complex z(0.3, 0.4);
  CHECK(rel(hyp2f1(1.0, 1.0, 2.0, z), -std::log(1.0 - z) / z) < 1e-13);
  CHECK_THROWS_AS(hyp2f1(1.0, 1.0, -2.0, 0.1), PoleError);
  CHECK_THROWS_AS(hyp2f1(1.0, 1.0, 2.0, 1.2), DivergenceError);
}

TEST_CASE("2F1 Pfaff transformation") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> ab(-2.5, 3.0), cc(0.3, 4.0), xx(-0.9, 0.45), yy(-0.3, 0.3);
  for (int i = 0; i < 200; ++i) {
    double a = ab(rng), b = ab(rng), c = cc(rng);
    Complex x(xx(rng), yy(rng));
    Complex d = hyp2f1_direct(a, b, c, x), p = hyp2f1_pfaff(a, b, c, x);
    CHECK(std::abs(d - p) < 1e-12 * std::max(1.0, std::abs(d)));
  }
}

TEST_CASE("elliptic integrals") {
  for (double k : {0.0, 0.1, 0.5, 0.8, 0.95, 0.999}) {
    double kp = std::sqrt(1 - k * k);
    CHECK(std::fabs(elliptic_k(k) - kPi / (2 * agm(1, kp))) < 1e-13 * elliptic_k(k));
    // Landen: K(k) = (1 + k1) K(k1) with k1 = (1 - k') / (1 + k')
    double k1 = (1 - kp) / (1 + kp);
    CHECK(std::fabs(elliptic_k(k) - (1 + k1) * elliptic_k(k1)) < 1e-12 * elliptic_k(k));
    if (k > 0 && k < 0.999) {
      // Legendre relation
      double K = elliptic_k(k), E = elliptic_e(k), Kp = elliptic_k(kp), Ep = elliptic_e(kp);
      CHECK(std::fabs(E * Kp + Ep * K - K * Kp - kPi / 2) < 1e-12);
      CHECK(std::fabs(elliptic_d(k) - (K - E) / (k * k)) < 1e-10 * elliptic_d(k));
    }
  }
  CHECK(std::fabs(elliptic_d(0.0) - kPi / 4) < 1e-15);
  CHECK(std::fabs(elliptic_d(1e-4) - kPi / 4 * (1 + 0.375 * 1e-8)) < 1e-14);
  CHECK_THROWS_AS(elliptic_k(1.0), DomainError);
}
