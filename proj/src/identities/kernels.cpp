#include "kernels.hpp"

#include <cmath>

#include "sumsq/errors.hpp"
#include "sumsq/kernel.hpp"
#include "sumsq/lfunc.hpp"
#include "sumsq/specfun.hpp"

namespace sumsq {

namespace {

using detail::SeriesSpec;
using detail::SideSpec;

constexpr double kTwoPi = 2 * kPi;

Complex rsqrt(double n) { return Complex(std::sqrt(n), 0.0); }

SeriesSpec exp_series(int k, Term term, double c, double p) {
  SeriesSpec s;
  s.exponential = true;
  s.k = k;
  s.term = std::move(term);
  s.env = {c, p};
  return s;
}

SeriesSpec power_series(int k, Smooth g, double sigma) {
  SeriesSpec s;
  s.exponential = false;
  s.k = k;
  s.g = std::move(g);
  s.sigma = sigma;
  return s;
}

// sum r_k(n) I_nu(pi sqrt n (a - b)) K_nu(pi sqrt n (a + b)), a = sqrt alpha, b = sqrt beta
SeriesSpec ik_series(int k, double nu, Complex alpha, Complex beta) {
  Complex a = std::sqrt(alpha), b = std::sqrt(beta);
  // I K ~ e^{-2 pi sqrt(n) b} / sqrt n; half a power of slack on top
  return exp_series(k, [=](std::int64_t n) {
    double r = std::sqrt(double(n));
    return bessel_ik_product(nu, kPi * r * (a - b), kPi * r * (a + b));
  }, kTwoPi * b.real(), 0.0);
}

Complex ratio(Complex alpha, Complex beta) {
  Complex a = std::sqrt(alpha), b = std::sqrt(beta);
  return (a - b) / (a + b);
}

// ---------------------------------------------------------------- main

SideSpec main_side(const ParamPoint& p, Side side, bool continued) {
  SideSpec s;
  if (p.alpha == p.beta) return s;  // every summand and the ratio term vanish
  if (side == Side::lhs) {
    s.series = ik_series(p.k, p.nu, p.alpha, p.beta);
    return s;
  }
  MainKernel f(p.k, p.nu, p.alpha, p.beta);
  double G = gamma(p.nu + 0.5 * p.k) / (std::pow(kPi, 0.5 * p.k) * std::pow(2.0, p.k - 1) * gamma(p.nu + 1));
  Complex lead = -std::pow(ratio(p.alpha, p.beta), p.nu) / (2 * p.nu);
  s.prefactor = G;
  if (!continued) {
    s.constant = lead + G * f(0.0);
    s.series = power_series(p.k, [f](double x) { return f(x); }, f.s());
  } else {
    s.constant = lead + G * (f(0.0) + f.c0() * zeta_k(p.k, f.s()));
    s.series = power_series(p.k, [f](double x) { return f.minus_leading(x); }, f.s() + 1);
  }
  return s;
}

SideSpec popov_side(const ParamPoint& p, Side side) {
  SideSpec s;
  if (p.alpha == p.beta) return s;
  double nu = p.nu;
  Complex al = p.alpha, be = p.beta, a = std::sqrt(al), b = std::sqrt(be);
  if (side == Side::lhs) {
    s.prefactor = kTwoPi / std::pow(al - be, nu);
    s.series = ik_series(2, nu, al, be);
    return s;
  }
  Complex ab = a * b;
  s.constant = (nu - kPi * ab) / (nu * ab * std::pow(a + b, 2 * nu));
  s.series = power_series(2, [=](double x) {
    Complex A = std::sqrt(x + al), B = std::sqrt(x + be);
    return 1.0 / (A * B * std::pow(A + B, 2 * nu));
  }, nu + 1);
  return s;
}

// ---------------------------------------------------------------- corollaries

SideSpec cor_half_side(const ParamPoint& p, Side side) {
  SideSpec s;
  if (p.alpha == p.beta) return s;
  Complex al = p.alpha, be = p.beta, a = std::sqrt(al), b = std::sqrt(be);
  int k = p.k;
  if (side == Side::lhs) {
    // n^{-1/2} e^{-pi sqrt n (a+b)} sinh(pi sqrt n (a-b))
    s.series = exp_series(k, [=](std::int64_t n) {
      double r = std::sqrt(double(n));
      return -0.5 / r * std::exp(-kTwoPi * r * b) * expm1(-kTwoPi * r * (a - b));
    }, kTwoPi * b.real(), 0.0);
    return s;
  }
  double e = 0.5 * (1 - k);
  double H = gamma(0.5 * (k - 1)) / (2 * std::pow(kPi, 0.5 * (k - 1)));
  // (x+alpha)^e - (x+beta)^e without cancellation
  auto diff = [=](Complex x) {
    return std::pow(x + be, e) * expm1(e * log1p((al - be) / (x + be)));
  };
  s.constant = -kPi * (a - b) - H * diff(0.0);
  s.prefactor = -H;
  s.series = power_series(k, [=](double x) { return diff(Complex(x)); }, 0.5 * (k + 1));
  return s;
}

SideSpec dixfer_side(const ParamPoint& p, Side side) {
  SideSpec s;
  Complex be = p.beta, b = std::sqrt(be);
  double nu = p.nu;
  int k = p.k;
  if (side == Side::lhs) {
    // n = 0 term read as the limit Gamma(nu) / (2 pi^nu beta^{nu/2})
    s.constant = gamma(nu) / (2 * std::pow(kPi, nu) * std::pow(be, 0.5 * nu));
    s.series = exp_series(k, [=](std::int64_t n) {
      return std::pow(double(n), 0.5 * nu) * bessel_k(nu, kTwoPi * rsqrt(double(n)) * b);
    }, kTwoPi * b.real(), 0.5 * nu + 0.25);
    return s;
  }
  double e = nu + 0.5 * k;
  Complex P = std::pow(be, 0.5 * nu) * gamma(e) / (2 * std::pow(kPi, e));
  s.prefactor = P;
  s.constant = P * std::pow(be, -e);
  s.series = power_series(k, [=](double x) { return std::pow(x + be, -e); }, e);
  return s;
}

SideSpec hardy_side(const ParamPoint& p, Side side) {
  SideSpec s;
  Complex be = p.beta, b = std::sqrt(be);
  int k = p.k;
  if (side == Side::lhs) {
    s.constant = 1.0;
    s.series = exp_series(k, [=](std::int64_t n) { return std::exp(-kTwoPi * std::sqrt(double(n)) * b); },
                          kTwoPi * b.real(), 0.5);
    return s;
  }
  double e = 0.5 * (k + 1);
  Complex P = b * gamma(e) / std::pow(kPi, e);
  s.prefactor = P;
  s.constant = P * std::pow(be, -e);
  s.series = power_series(k, [=](double x) { return std::pow(x + be, -e); }, e);
  return s;
}

SideSpec elliptic_side(const ParamPoint& p, Side side) {
  SideSpec s;
  double al = p.alpha.real(), be = p.beta.real();
  if (al == be) return s;
  if (side == Side::lhs) {
    s.series = ik_series(3, 1.0, al, be);
    return s;
  }
  auto t = [=](double x) -> Complex {
    double A = std::sqrt(x + al), B = std::sqrt(x + be);
    double q = (al - be) / ((A + B) * (A + B));  // (A-B)/(A+B)
    double m = std::sqrt(al - be) / A;
    if (!(m < 1)) throw DomainError("elliptic: modulus left [0, 1)");
    return (elliptic_k(m) / A - (4 * x + 2 * al + 2 * be) / std::pow(A + B, 3) * elliptic_d(q)) /
           ((x + al) * (x + be));
  };
  double pre = (al - be) / (4 * kPi * kPi);
  s.prefactor = pre;
  s.constant = -0.5 * ratio(al, be) + pre * t(0.0);
  s.series = power_series(3, t, 2.5);
  return s;
}

// sum_{n>=0} r_2(n) (n+a)^{-1/2} e^{-2 pi sqrt(b (n+a))}
SideSpec ramanujan_sum(Complex a, Complex b) {
  SideSpec s;
  auto w = [=](double n) { return std::exp(-kTwoPi * std::sqrt(b * (n + a))) / std::sqrt(n + a); };
  s.constant = w(0.0);
  s.series = exp_series(2, [=](std::int64_t n) { return w(double(n)); }, kTwoPi * std::sqrt(b).real(), 0.0);
  return s;
}

// x^{nu/2} sum_{n>=0} r_2(n) (n+d)^{-nu/2} K_nu(2 pi sqrt(x (n+d)))
SideSpec dixonferrar_sum(double nu, Complex x, Complex d) {
  SideSpec s;
  auto w = [=](double n) {
    return std::pow(n + d, -0.5 * nu) * bessel_k(nu, kTwoPi * std::sqrt(x * (n + d)));
  };
  s.prefactor = std::pow(x, 0.5 * nu);
  s.constant = s.prefactor * w(0.0);
  s.series = exp_series(2, [=](std::int64_t n) { return w(double(n)); }, kTwoPi * std::sqrt(x).real(),
                        0.25 - 0.5 * nu);
  return s;
}

SideSpec dixonferrar_side(const ParamPoint& p, Side side) {
  // alpha carries delta; the right side is the left with nu -> 1-nu, beta <-> delta
  if (side == Side::lhs) return dixonferrar_sum(p.nu, p.beta, p.alpha);
  return dixonferrar_sum(1 - p.nu, p.alpha, p.beta);
}

// ---------------------------------------------------------------- nu = 0

SideSpec ac_nu0_side(const ParamPoint& p, Side side) {
  SideSpec s;
  Complex al = p.alpha, be = p.beta;
  int k = p.k;
  if (side == Side::lhs) {
    s.series = ik_series(k, 0.0, al, be);
    return s;
  }
  s.constant = ac_nu0_constant(k, al, be);
  // (k-dependent rational function of n) / ((n+alpha)(n+beta))^{(k-1)/2} - c / n^{k/2}, factored
  auto logs = [=](double n) { return log1p(al / n) + log1p(be / n); };
  switch (k) {
    case 2:
      s.prefactor = 1 / kTwoPi;
      s.series = power_series(2, [=](double n) { return expm1(-0.5 * logs(n)) / n; }, 2);
      break;
    case 4:
      s.prefactor = 1 / (4 * kPi * kPi);
      s.series = power_series(4, [=](double n) {
        return 2 / (n * n) * expm1(log1p((al + be) / (2 * n)) - 1.5 * logs(n));
      }, 3);
      break;
    case 6:
      s.prefactor = 1 / (8 * std::pow(kPi, 3));
      s.series = power_series(6, [=](double n) {
        Complex u = (al + be) / n + (3.0 * al * al + 2.0 * al * be + 3.0 * be * be) / (8 * n * n);
        return 8 / (n * n * n) * expm1(log1p(u) - 2.5 * logs(n));
      }, 4);
      break;
    case 8:
      s.prefactor = 3 / (16 * std::pow(kPi, 4));
      s.series = power_series(8, [=](double n) {
        Complex u = (24 * n * n * (al + be) + n * (18.0 * al * al + 12.0 * al * be + 18.0 * be * be) +
                     (5.0 * al * al * al + 3.0 * al * al * be + 3.0 * al * be * be + 5.0 * be * be * be)) /
                    (16 * n * n * n);
        return 16 / (n * n * n * n) * expm1(log1p(u) - 3.5 * logs(n));
      }, 5);
      break;
    default:
      throw UnsupportedPointError("ac_nu0: k must be 2, 4, 6 or 8");
  }
  return s;
}

SideSpec df_side(const ParamPoint& p, Side side) {
  SideSpec s;
  double x = p.beta.real();
  const auto& cb = ConstantsBag::instance();
  if (side == Side::lhs) {
    s.constant = -std::log(0.5 * kPi * x) - 2 * cb.gamma_euler + 2 * beta_prime_zero();
    s.prefactor = 2;
    double rx = std::sqrt(x);
    s.series = exp_series(2, [=](std::int64_t n) {
      return bessel_k(0, Complex(kTwoPi * std::sqrt(double(n)) * rx));
    }, kTwoPi * rx, 0.25);
    return s;
  }
  s.constant = 1 / (kPi * x);
  s.prefactor = 1 / kPi;
  s.series = power_series(2, [=](double n) -> Complex { return -x / (n * (n + x)); }, 2);
  return s;
}

SideSpec goody_side(const ParamPoint& p, Side side) {
  SideSpec s;
  Complex al = p.alpha, be = p.beta, a = std::sqrt(al), b = std::sqrt(be);
  int k = p.k, m = k / 2;
  if (side == Side::lhs) {
    // n^{-1/2} e^{-pi sqrt n (a+b)} cosh(pi sqrt n (a-b)) = (e^{-2 pi sqrt n b} + e^{-2 pi sqrt n a}) / (2 sqrt n)
    s.series = exp_series(k, [=](std::int64_t n) {
      double r = std::sqrt(double(n));
      return 0.5 / r * (std::exp(-kTwoPi * r * b) + std::exp(-kTwoPi * r * a));
    }, kTwoPi * b.real(), 0.0);
    return s;
  }
  double e = m - 0.5;
  double G = gamma(e) / (2 * std::pow(kPi, e));
  s.constant = goody_a(m) + kPi * (a + b) + G * (std::pow(al, -e) + std::pow(be, -e));
  s.prefactor = G;
  s.series = power_series(k, [=](double n) {
    return std::pow(n, -e) * (expm1(-e * log1p(al / n)) + expm1(-e * log1p(be / n)));
  }, e + 1);
  return s;
}

}  // namespace

Complex ac_nu0_constant(int k, Complex al, Complex be) {
  const auto& cb = ConstantsBag::instance();
  Complex a = std::sqrt(al), b = std::sqrt(be), ab = a * b;
  double g = cb.gamma_euler;
  Complex lg = std::log(0.5 * (a + b));
  switch (k) {
    case 2:
      return 1.0 / (kTwoPi * ab) + g + lg + 0.5 * std::log(0.5 * kPi) - beta_prime_zero();
    case 4:
      return (al + be) / (4 * kPi * kPi * std::pow(ab, 3)) + 0.5 * g +
             0.5 * (1 - 2.0 / 3 * std::log(4.0) + 2.0 * std::log(a + b) + 6 / (kPi * kPi) * cb.zeta_prime(2));
    case 6:
      return (3.0 * al * al + 2.0 * al * be + 3.0 * be * be) / (8 * std::pow(kPi, 3) * std::pow(ab, 5)) +
             0.5 * g - cb.zeta3 / (kPi * kPi) + lg + 0.75 + 16 / std::pow(kPi, 3) * cb.beta_prime(3);
    case 8:
      return 3.0 * (5.0 * al * al * al + 3.0 * al * al * be + 3.0 * al * be * be + 5.0 * be * be * be) /
                 (16 * std::pow(kPi, 4) * std::pow(ab, 7)) +
             0.5 * g + lg + 11.0 / 12 + 45 / std::pow(kPi, 4) * cb.zeta_prime(4);
  }
  throw UnsupportedPointError("ac_nu0: k must be 2, 4, 6 or 8");
}

double goody_a(int m) {
  const auto& cb = ConstantsBag::instance();
  switch (m) {
    case 1: return 4 * cb.zeta(0.5) * cb.beta(0.5);
    case 2: return 2 / kPi * cb.zeta(1.5) * cb.zeta(0.5);
    case 3: return 3 / (4 * kPi * kPi) * (16 * cb.zeta(0.5) * cb.beta(2.5) - 4 * cb.zeta(2.5) * cb.beta(0.5));
    case 4: return 30 / std::pow(kPi, 3) * (9.0 / 8 - std::pow(2.0, -2.5)) * cb.zeta(3.5) * cb.zeta(0.5);
  }
  throw UnsupportedPointError("goody: m must be 1, 2, 3 or 4");
}

namespace detail {

SideSpec side_spec(IdentityId id, Side side, const ParamPoint& p) {
  switch (id) {
    case IdentityId::main: return main_side(p, side, false);
    case IdentityId::main_continued: return main_side(p, side, true);
    case IdentityId::popov: return popov_side(p, side);
    case IdentityId::cor_half: return cor_half_side(p, side);
    case IdentityId::dixfer: return dixfer_side(p, side);
    case IdentityId::hardy_gen: return hardy_side(p, side);
    case IdentityId::elliptic: return elliptic_side(p, side);
    case IdentityId::ramanujan:
      return side == Side::lhs ? ramanujan_sum(p.alpha, p.beta) : ramanujan_sum(p.beta, p.alpha);
    case IdentityId::ac_nu0: return ac_nu0_side(p, side);
    case IdentityId::df_limit: return df_side(p, side);
    case IdentityId::goody: return goody_side(p, side);
    case IdentityId::dixonferrar: return dixonferrar_side(p, side);
  }
  throw DomainError("unknown identity");
}

SideResult evaluate_spec(const SideSpec& s, const Truncation& t, Exec exec, PowerMethod method) {
  if (!s.series) {
    Truncation tr = t;
    tr.tail_estimate = 0;
    tr.terms_used = tr.terms_required = 1;
    return {s.constant, tr};
  }
  Truncation inner = t;
  double pre = std::abs(s.prefactor);
  inner.scale = pre > 0 ? std::abs(s.constant) / pre : 0;
  const SeriesSpec& ser = *s.series;
  SeriesResult r = ser.exponential ? exp_lattice_sum(ser.k, ser.term, ser.env, inner, exec)
                   : method == PowerMethod::smoothed ? power_lattice_sum(ser.k, ser.g, inner, exec)
                                                     : power_direct_sum(ser.k, ser.g, ser.sigma, inner, exec);
  r.trunc.tail_estimate *= pre;
  r.trunc.scale = t.scale;
  return {s.constant + s.prefactor * r.value, r.trunc};
}

}  // namespace detail

}  // namespace sumsq
