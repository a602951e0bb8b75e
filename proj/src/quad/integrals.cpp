#include <cmath>

#include "sumsq/errors.hpp"
#include "sumsq/kernel.hpp"
#include "sumsq/quad.hpp"
#include "sumsq/specfun.hpp"

namespace sumsq {

namespace {

// ((Z-W)/(Z+W)) with Z = sqrt(u^2+z^2), W = sqrt(u^2+w^2), written without
// the Z-W cancellation.
struct Radicals {
  Complex Z, W, q;
};

Radicals radicals(double u, Complex z, Complex w) {
  Complex Z = std::sqrt(u * u + z * z), W = std::sqrt(u * u + w * w);
  return {Z, W, (z * z - w * w) / ((Z + W) * (Z + W))};
}

void check_zw(Complex z, Complex w, const char* who) {
  if (!(z.real() > w.real() && w.real() > 0)) throw DomainError(std::string(who) + ": need Re z > Re w > 0");
}

double ratio(double alpha, double beta) {
  double a = std::sqrt(alpha), b = std::sqrt(beta);
  return (a - b) / (a + b);
}

void check_ab(double alpha, double beta, const char* who) {
  if (!(alpha > beta && beta > 0)) throw DomainError(std::string(who) + ": need alpha > beta > 0");
}

}  // namespace

// ---------------------------------------------------------------- Fock

Complex fock_closed_form(double rho, Complex z, Complex w, double nu) {
  return bessel_ik_product(nu, rho * (z - w) / 2.0, rho * (z + w) / 2.0);
}

QuadResult fock_integral(double rho, Complex z, Complex w, double nu, const OscOptions& opt) {
  if (!(rho > 0)) throw DomainError("fock_integral: rho must be positive");
  check_zw(z, w, "fock_integral");
  if (!(nu > -0.75)) throw DomainError("fock_integral: nu must exceed -3/4");
  if (nu < 0 && (z.imag() != 0 || w.imag() != 0))
    throw DomainError("fock_integral: nu < 0 only for real z, w");
  auto g = [=](double x) -> Complex {
    Radicals r = radicals(x, z, w);
    Complex v = bessel_j(0, rho * x) * x / (r.Z * r.W);
    return nu == 0 ? v : v * std::pow(r.q, nu);
  };
  return oscillatory_bessel(g, 0.0, rho, opt);
}

// ---------------------------------------------------------------- Koshliakov

Complex koshliakov_closed_form(double rho, Complex z, Complex w, double nu, double mu) {
  return gamma(nu + 1) / gamma(nu + mu + 1) * std::pow(2 * rho, mu) * fock_closed_form(rho, z, w, nu);
}

QuadResult koshliakov_integral(double rho, Complex z, Complex w, double nu, double mu, const OscOptions& opt) {
  if (!(rho > 0)) throw DomainError("koshliakov_integral: rho must be positive");
  check_zw(z, w, "koshliakov_integral");
  if (!(mu > -1) || !(mu + 2 * nu + 1.5 > 0)) throw DomainError("koshliakov_integral: need mu > -1, mu+2nu+3/2 > 0");
  auto g = [=](double u) -> Complex {
    Radicals r = radicals(u, z, w);
    Complex v = bessel_j(mu, rho * u) * std::pow(u, mu + 1) / (r.Z * r.W) *
                std::pow(1.0 / r.Z + 1.0 / r.W, 2 * mu) * hyp2f1(nu - mu, -mu, nu + 1, r.q * r.q);
    return nu == 0 ? v : v * std::pow(r.q, nu);
  };
  return oscillatory_bessel(g, mu, rho, opt);
}

// ---------------------------------------------------------------- Laplace

namespace {
void check_laplace(Complex a, Complex b, double mu, double nu, bool modified) {
  if (!(mu + nu > 0)) throw DomainError("laplace_bessel: need mu + nu > 0");
  Complex s = modified ? b : Complex(0, 1) * b;
  if (!((a + s).real() > 0 && (a - s).real() > 0))
    throw DomainError(modified ? "laplace_bessel: need Re(a +- b) > 0" : "laplace_bessel: need Re(a +- ib) > 0");
}
}  // namespace

Complex laplace_bessel_closed_form(Complex a, Complex b, double mu, double nu, bool modified) {
  check_laplace(a, b, mu, nu, modified);
  Complex pre = std::pow(b / (2.0 * a), nu) * gamma(mu + nu) / (std::pow(a, mu) * gamma(nu + 1));
  if (nu == 0) pre = gamma(mu) / std::pow(a, mu);
  double A = 0.5 * (mu + nu);
  if (modified) return pre * hyp2f1(A, A + 0.5, nu + 1, Complex(b * b / (a * a)));
  // Pfaff moves -b^2/a^2 into the unit disk for any real ratio
  Complex r = a * a + b * b;
  return pre * std::pow(r / (a * a), -A) * hyp2f1(A, 0.5 * (nu - mu + 1), nu + 1, Complex(b * b / r));
}

Complex laplace_bessel_closed_form_euler(Complex a, Complex b, double mu, double nu) {
  check_laplace(a, b, mu, nu, false);
  Complex pre = std::pow(b / (2.0 * a), nu) * gamma(mu + nu) / (std::pow(a, mu) * gamma(nu + 1));
  if (nu == 0) pre = gamma(mu) / std::pow(a, mu);
  Complex x = b * b / (a * a);
  return pre * std::pow(1.0 + x, 0.5 - mu) * hyp2f1(0.5 * (nu - mu + 1), 0.5 * (nu - mu) + 1, nu + 1, -x);
}

QuadResult laplace_bessel(Complex a, Complex b, double mu, double nu, bool modified, const QuadOptions& opt) {
  check_laplace(a, b, mu, nu, modified);
  // |e^{-at} J_nu(bt)| <~ e^{(|Im b| - Re a) t}; past underflow the factors overflow separately
  double decay = modified ? std::fabs(b.real()) - a.real() : std::fabs(b.imag()) - a.real();
  auto g = [=](double t) -> Complex {
    Complex bt = b * t;
    if (decay * t < -700) return 0.0;
    if (!modified) return std::exp(-a * t) * bessel_j(nu, bt) * std::pow(t, mu - 1);
    if (bt == 0.0) return nu == 0 ? std::exp(-a * t) * std::pow(t, mu - 1) : Complex(0.0);
    if (bt.real() > 0) return std::exp(bt - a * t) * bessel_i_scaled(nu, bt) * std::pow(t, mu - 1);
    return std::exp(-a * t) * bessel_i(nu, bt) * std::pow(t, mu - 1);
  };
  return exp_sinh(g, 0.0, opt);
}

// ---------------------------------------------------------------- choi2 / choi3

double choi2_closed_form(double nu, double alpha, double beta) {
  check_ab(alpha, beta, "choi2");
  if (!(nu > 0)) throw DomainError("choi2: nu must be positive");
  return std::pow(ratio(alpha, beta), nu) / nu;
}

QuadResult choi2_integral(double nu, double alpha, double beta, const QuadOptions& opt) {
  check_ab(alpha, beta, "choi2");
  if (!(nu > 0)) throw DomainError("choi2: nu must be positive");
  double A = (alpha + beta) / (alpha - beta);
  auto g = [=](double t) -> Complex { return std::exp((1 - A) * t) * bessel_i_scaled(nu, t) / t; };
  return exp_sinh(g, 0.0, opt);
}

double choi3_closed_form(int k, double nu, double alpha, double beta) {
  check_ab(alpha, beta, "choi3");
  return std::pow(2.0, k - 2) * gamma(nu) * gamma(0.5 * k) / gamma(nu + 0.5 * k) *
         std::pow(ratio(alpha, beta), nu);
}

QuadResult choi3_integral(int k, double nu, double alpha, double beta, const QuadOptions& opt) {
  check_ab(alpha, beta, "choi3");
  if (k < 2 || !(nu > 0)) throw DomainError("choi3: need k >= 2, nu > 0");
  MainKernel f(k, nu, alpha, beta);
  auto g = [=](double y) -> Complex { return std::pow(y, 0.5 * k - 1) * f(y); };
  return exp_sinh(g, 0.0, opt);
}

// ---------------------------------------------------------------- I K Mellin

double ik_mellin_closed_form(double a, double b, double c, double nu) {
  if (!(c > 0 && b >= 0 && b < c && a > 0 && nu > -1 && nu + 0.5 * a > 0))
    throw DomainError("ik_mellin: need 0 <= b < c, a > 0, nu + a/2 > 0");
  double Z = (c * c + b * b) / (c * c - b * b);
  // P^{-nu}_{-a/2}(Z) = ((Z+1)/(Z-1))^{-nu/2} F(a/2, 1-a/2; 1+nu; (1-Z)/2) / Gamma(1+nu),
  // then Pfaff on F sends (1-Z)/2 to b^2/c^2
  double x = 0.5 * (1 - Z);
  double F = std::pow(1 - x, -0.5 * a) * hyp2f1(0.5 * a, nu + 0.5 * a, 1 + nu, b * b / (c * c));
  double P = (b == 0 ? (nu == 0 ? 1.0 : 0.0) : std::pow((Z + 1) / (Z - 1), -0.5 * nu)) * F / gamma(1 + nu);
  return std::pow(2.0, a - 2) * std::pow(c * c - b * b, -0.5 * a) * gamma(0.5 * a) * gamma(nu + 0.5 * a) * P;
}

QuadResult ik_mellin(double a, double b, double c, double nu, const QuadOptions& opt) {
  ik_mellin_closed_form(a, b, c, nu);  // domain check
  auto g = [=](double x) -> Complex { return std::pow(x, a - 1) * bessel_ik_product(nu, b * x, c * x); };
  return exp_sinh(g, 0.0, opt);
}

// ---------------------------------------------------------------- Hankel pair

double hankel_pair_closed_form(int k, double nu, double alpha, double beta, double x) {
  check_ab(alpha, beta, "hankel_pair");
  double sa = std::sqrt(alpha), sb = std::sqrt(beta), rx = std::sqrt(x);
  return std::pow(2.0, k - 1) * std::pow(kPi, 0.5 * k) * std::pow(x, 0.25 * k - 0.5) * gamma(nu + 1) /
         gamma(nu + 0.5 * k) * bessel_ik_product(nu, kPi * rx * (sa - sb), kPi * rx * (sa + sb)).real();
}

QuadResult hankel_pair_check(int k, double nu, double alpha, double beta, double x, const OscOptions& opt) {
  check_ab(alpha, beta, "hankel_pair");
  if (!(x > 0) || k < 2 || !(nu > 0)) throw DomainError("hankel_pair: need x > 0, k >= 2, nu > 0");
  MainKernel f(k, nu, alpha, beta);
  double mu = 0.5 * k - 1, rho = 2 * kPi * std::sqrt(x);
  // G(x) = pi int F(y) J_mu(2 pi sqrt(xy)) dy with y = u^2
  auto g = [=](double u) -> Complex {
    return 2 * kPi * std::pow(u, 0.5 * k) * f(u * u) * bessel_j(mu, rho * u);
  };
  return oscillatory_bessel(g, mu, rho, opt);
}

QuadResult hankel_inverse(int k, double nu, double alpha, double beta, double x, const QuadOptions& opt) {
  check_ab(alpha, beta, "hankel_inverse");
  if (!(x > 0) || k < 2 || !(nu > 0)) throw DomainError("hankel_inverse: need x > 0, k >= 2, nu > 0");
  double mu = 0.5 * k - 1, rho = 2 * kPi * std::sqrt(x);
  double sa = std::sqrt(alpha), sb = std::sqrt(beta);
  double cst = std::pow(2.0, k - 1) * std::pow(kPi, 0.5 * k) * gamma(nu + 1) / gamma(nu + 0.5 * k);
  // F(x) = pi int G(t) J_mu(2 pi sqrt(xt)) dt, t = v^2, G(v^2) carries v^{k/2-1}
  auto g = [=](double v) -> Complex {
    Complex ik = bessel_ik_product(nu, kPi * v * (sa - sb), kPi * v * (sa + sb));
    return 2 * kPi * v * cst * std::pow(v, 0.5 * k - 1) * ik * bessel_j(mu, rho * v);
  };
  QuadResult r = exp_sinh(g, 0.0, opt);
  double scale = std::pow(x, 0.25 * k - 0.5);
  return {r.value / scale, r.err_estimate / scale, r.panels};
}

}  // namespace sumsq
