#include <cmath>
#include <complex>

#include "sumsq/errors.hpp"
#include "sumsq/specfun.hpp"

namespace sumsq {

namespace {

using LD = long double;
using CLD = std::complex<long double>;

constexpr LD kEpsLD = 1.0842021724855044e-19L;

struct Approx {
  Complex value;
  double err;  // relative
};

Complex to_c(CLD z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }
CLD to_ld(Complex z) { return {z.real(), z.imag()}; }

bool is_int(double x) { return x == std::floor(x); }

// (z/2)^nu sum_m (s z^2/4)^m / (m! Gamma(m+nu+1)),  s=-1 gives J, s=+1 gives I.
// Summed in extended precision; err accounts for cancellation via sum |t_m|.
struct ApproxLD {
  CLD value;
  double err;
};

ApproxLD power_series_ld(double nu, Complex z, int s, int max_terms) {
  if (nu <= -1 && is_int(nu)) throw DomainError("bessel series: negative integer order");
  if (z == 0.0) {
    if (nu == 0) return {1.0L, 0.0};
    if (nu > 0) return {0.0L, 0.0};
    throw PoleError("bessel series: z = 0 with negative order");
  }
  CLD h = to_ld(z) / 2.0L;
  CLD q = h * h * static_cast<LD>(s);
  LD aq = std::abs(q);
  CLD t = 1.0L, sum = 1.0L;
  LD abs_sum = 1.0L;
  int m = 1;
  for (; m <= max_terms; ++m) {
    t *= q / (static_cast<LD>(m) * (static_cast<LD>(m) + nu));
    sum += t;
    LD at = std::abs(t);
    abs_sum += at;
    if (m > aq && at <= kEpsLD * std::abs(sum)) break;
  }
  if (m > max_terms) throw AccuracyError("bessel series: term cap reached");
  CLD pre = std::pow(h, static_cast<LD>(nu)) / std::tgamma(static_cast<LD>(nu) + 1.0L);
  LD mag = std::abs(sum);
  double err = mag == 0 ? 1.0 : static_cast<double>(4 * kEpsLD * abs_sum / mag);
  return {pre * sum, err};
}

Approx power_series(double nu, Complex z, int s, int max_terms) {
  ApproxLD a = power_series_ld(nu, z, s, max_terms);
  return {to_c(a.value), a.err};
}

// Hankel coefficients a_m(nu)/z^m summed to the smallest term.
struct HankelSums {
  CLD alt;     // sum (-1)^m a_m / z^m
  CLD plain;   // sum a_m / z^m
  CLD p, q;    // even/odd parts with (-1)^{m/2} signs, for J
  LD smallest;
  bool exact;
};

HankelSums hankel_sums(double nu, Complex z, int max_terms) {
  CLD zi = 1.0L / to_ld(z);
  LD mu = 4.0L * nu * nu;
  HankelSums h{1.0L, 1.0L, 1.0L, 0.0L, 0.0L, false};
  CLD u = 1.0L;  // a_m / z^m
  LD prev = 1.0L;
  for (int m = 1; m <= max_terms; ++m) {
    LD f = (mu - (2.0L * m - 1) * (2.0L * m - 1)) / (8.0L * m);
    if (f == 0) {
      h.exact = true;
      h.smallest = 0;
      return h;
    }
    CLD nu_ = u * f * zi;
    LD a = std::abs(nu_);
    if (a > prev) break;  // superasymptotic stop
    u = nu_;
    prev = a;
    h.plain += u;
    h.alt += (m % 2 ? -u : u);
    int r = (m / 2) % 2;
    if (m % 2 == 0) h.p += (r ? -u : u);
    else h.q += (r ? -u : u);
    if (a < kEpsLD) {
      h.smallest = a;
      return h;
    }
  }
  h.smallest = prev;
  return h;
}

Approx j_asymptotic(double nu, Complex z, int max_terms) {
  HankelSums h = hankel_sums(nu, z, max_terms);
  CLD zz = to_ld(z);
  CLD w = zz - (static_cast<LD>(nu) / 2.0L + 0.25L) * static_cast<LD>(M_PIl);
  CLD c = std::cos(w), s = std::sin(w);
  CLD pre = std::sqrt(2.0L / (static_cast<LD>(M_PIl) * zz));
  CLD v = pre * (h.p * c - h.q * s);
  LD env = std::abs(pre) * (std::abs(c) + std::abs(s));
  double err = static_cast<double>((h.smallest + 8 * kEpsLD) * env / std::max(std::abs(v), 1e-300L));
  // for the oscillatory J relative error is measured against the envelope
  err = std::min(err, static_cast<double>(h.smallest + 8 * kEpsLD) * 2.0);
  return {to_c(v), err};
}

// e^{-z} I_nu(z) for |ph z| <= pi/4.
Approx i_scaled_asymptotic(double nu, Complex z, int max_terms) {
  HankelSums h = hankel_sums(nu, z, max_terms);
  CLD zz = to_ld(z);
  CLD v = h.alt / std::sqrt(2.0L * static_cast<LD>(M_PIl) * zz);
  // the recessive e^{-2z} contribution is only counted in the error
  double rec = std::exp(-2.0 * z.real());
  return {to_c(v), static_cast<double>(h.smallest + 8 * kEpsLD) + rec};
}

Approx k_scaled_asymptotic(double nu, Complex z, int max_terms) {
  HankelSums h = hankel_sums(nu, z, max_terms);
  CLD zz = to_ld(z);
  CLD v = h.plain * std::sqrt(static_cast<LD>(M_PIl) / (2.0L * zz));
  return {to_c(v), static_cast<double>(h.smallest + 8 * kEpsLD)};
}

// e^{z} K_nu(z) = int_0^inf exp(-2 z sinh^2(t/2)) cosh(nu t) dt, trapezoid with
// step halving (the integrand is even and entire, so convergence is geometric).
Approx k_scaled_integral(double nu, Complex z) {
  double x = z.real();
  if (x <= 0) throw DomainError("bessel_k: Re z <= 0");
  // cut where the integrand is below e^{-50} relative to its peak
  double tmax = 1.0;
  while (x * 2 * std::pow(std::sinh(tmax / 2), 2) - nu * tmax < 50.0 + std::max(0.0, nu * std::log(1 + nu / x)))
    tmax += 0.5;
  auto f = [&](double t) {
    double s = std::sinh(t / 2);
    return std::exp(-2.0 * z * s * s) * std::cosh(nu * t);
  };
  double hstep = 0.5;
  Complex sum = 0.5 * f(0.0);
  for (double t = hstep; t <= tmax; t += hstep) sum += f(t);
  Complex prev = sum * hstep;
  for (int level = 0; level < 12; ++level) {
    // add midpoints
    for (double t = hstep / 2; t <= tmax; t += hstep) sum += f(t);
    hstep /= 2;
    Complex cur = sum * hstep;
    double d = std::abs(cur - prev);
    if (d <= 1e-15 * std::abs(cur) && level >= 1) return {cur, std::max(d / std::abs(cur), 1e-16)};
    prev = cur;
  }
  throw AccuracyError("bessel_k: integral representation did not converge");
}

// Integer order n >= 0, small |z|: logarithmic series.
Approx k_integer_series(int n, Complex z, int max_terms) {
  CLD zz = to_ld(z), h = zz / 2.0L, q = h * h;
  CLD lg = std::log(h);
  // finite part: 1/2 (z/2)^{-n} sum_{k<n} (n-k-1)!/k! (-q)^k
  CLD fin = 0.0L;
  LD absfin = 0;
  if (n > 0) {
    CLD t = std::tgamma(static_cast<LD>(n));  // k=0 term: (n-1)!
    for (int k = 0; k < n; ++k) {
      if (k > 0) t *= -q / (static_cast<LD>(k) * static_cast<LD>(n - k));
      fin += t;
      absfin += std::abs(t);
    }
    fin *= 0.5L * std::pow(h, static_cast<LD>(-n));
    absfin *= 0.5L * std::abs(std::pow(h, static_cast<LD>(-n)));
  }
  // (-1)^{n+1} ln(z/2) I_n(z) + (-1)^n 1/2 (z/2)^n sum (psi(k+1)+psi(n+k+1)) q^k/(k!(n+k)!)
  const LD g = 0.577215664901532860606512090082402431L;
  LD psi1 = -g, psi2 = -g;  // psi(1), psi(n+1)
  for (int j = 1; j <= n; ++j) psi2 += 1.0L / j;
  CLD t = 1.0L / std::tgamma(static_cast<LD>(n) + 1.0L);  // q^0/(0! n!)
  CLD si = 0.0L, sp = 0.0L;
  LD abss = 0;
  int k = 0;
  for (; k <= max_terms; ++k) {
    if (k > 0) {
      t *= q / (static_cast<LD>(k) * static_cast<LD>(n + k));
      psi1 += 1.0L / k;
      psi2 += 1.0L / (n + k);
    }
    si += t;
    CLD d = (psi1 + psi2) * t;
    sp += d;
    abss += std::abs(t) * (std::abs(lg) + std::abs(psi1 + psi2));
    if (k > std::abs(q) && std::abs(t) * (1 + std::abs(psi1 + psi2)) <= kEpsLD * std::abs(sp + si))
      break;
  }
  if (k > max_terms) throw AccuracyError("bessel_k: log series term cap");
  CLD hn = std::pow(h, static_cast<LD>(n));
  LD sgn = (n % 2) ? -1.0L : 1.0L;
  CLD v = fin - sgn * lg * hn * si + sgn * 0.5L * hn * sp;
  LD mag = std::abs(v);
  double err = static_cast<double>(8 * kEpsLD * (absfin + std::abs(hn) * abss) / std::max(mag, 1e-300L));
  return {to_c(v), err};
}

// K_nu for non-integer nu from pi/(2 sin nu pi) (I_{-nu} - I_nu).
Approx k_reflection_series(double nu, Complex z, int max_terms) {
  ApproxLD a = power_series_ld(-nu, z, 1, max_terms), b = power_series_ld(nu, z, 1, max_terms);
  CLD diff = a.value - b.value;
  LD sn = std::sin(static_cast<LD>(M_PIl) * nu);
  CLD v = static_cast<LD>(M_PIl) / (2.0L * sn) * diff;
  LD mag = std::abs(diff);
  double scale = std::abs(a.value) + std::abs(b.value);
  double err = (a.err + b.err + 8 * static_cast<double>(kEpsLD)) * scale / std::max(static_cast<double>(mag), 1e-300);
  return {to_c(v), err};
}

void check_finite_z(Complex z) {
  if (!is_finite(z)) throw DomainError("bessel: non-finite argument");
}

Approx j_eval(double nu, Complex z, const EvalPolicy& pol, Regime r) {
  if (nu <= -1) throw DomainError("bessel_j: order must exceed -1");
  check_finite_z(z);
  double az = std::abs(z);
  if (z.real() < 0 && z.imag() == 0 && r != Regime::series) {
    // J_nu(-x) = e^{i nu pi} J_nu(x) on the principal branch from above
    Approx a = j_eval(nu, -z, pol, r);
    return {a.value * std::exp(Complex(0, kPi * nu)), a.err};
  }
  if (r == Regime::series) return power_series(nu, z, -1, pol.max_series_terms);
  if (r == Regime::asymptotic) return j_asymptotic(nu, z, pol.max_series_terms);
  if (r == Regime::integral) throw DomainError("bessel_j: no integral regime");
  if (az < pol.series_asymptotic_crossover) {
    Approx s = power_series(nu, z, -1, pol.max_series_terms);
    // J oscillates: measure the error against its envelope, not its value
    if (az >= 1) {
      double env = std::sqrt(2 / (kPi * az)) * std::exp(std::fabs(z.imag()));
      s.err = s.err * std::abs(s.value) / std::max(std::abs(s.value), env);
    }
    if (s.err <= pol.target_accuracy || az < 8.0) return s;
    Approx a = j_asymptotic(nu, z, pol.max_series_terms);
    return a.err < s.err ? a : s;
  }
  return j_asymptotic(nu, z, pol.max_series_terms);
}

// e^{-z} I_nu(z) in the large-|z| regime.
Approx i_scaled_large(double nu, Complex z, const EvalPolicy& pol) {
  if (z.real() > 0 && std::abs(z.imag()) <= z.real()) return i_scaled_asymptotic(nu, z, pol.max_series_terms);
  // near the imaginary axis: rotate onto J, whose expansion is oscillatory there
  bool upper = z.imag() >= 0;
  Complex rz = upper ? Complex(-z.imag(), z.real()) : Complex(z.imag(), -z.real());
  Approx a = j_asymptotic(nu, rz, pol.max_series_terms);
  Complex ph = std::exp(Complex(0, upper ? -kPi * nu / 2 : kPi * nu / 2));
  return {ph * a.value * std::exp(-z), a.err};
}

}  // namespace

Complex bessel_j(double nu, Complex z, const EvalPolicy& pol, Regime r) {
  Approx a = j_eval(nu, z, pol, r);
  if (r == Regime::automatic && !(a.err <= pol.target_accuracy))
    throw AccuracyError("bessel_j: no regime met the target accuracy");
  return a.value;
}

Complex bessel_i(double nu, Complex z, const EvalPolicy& pol, Regime r) {
  if (nu <= -1) throw DomainError("bessel_i: order must exceed -1");
  check_finite_z(z);
  if (r == Regime::integral) throw DomainError("bessel_i: no integral regime");
  double az = std::abs(z);
  bool series = r == Regime::series || (r == Regime::automatic && az < pol.series_asymptotic_crossover);
  if (series) return power_series(nu, z, 1, pol.max_series_terms).value;
  if (z.real() < 0) {
    // I_nu(-z) = e^{±i nu pi} I_nu(z); keep to the right half-plane
    Complex ph = std::exp(Complex(0, (z.imag() >= 0 ? 1 : -1) * kPi * nu));
    return ph * bessel_i(nu, -z, pol, r);
  }
  Approx a = i_scaled_large(nu, z, pol);
  Complex v = a.value * std::exp(z);
  if (!is_finite(v)) throw OverflowError("bessel_i: result overflows");
  return v;
}

Complex bessel_i_scaled(double nu, Complex z, const EvalPolicy& pol) {
  if (z.real() <= 0) throw DomainError("bessel_i_scaled: Re z <= 0");
  if (std::abs(z) < pol.series_asymptotic_crossover)
    return power_series(nu, z, 1, pol.max_series_terms).value * std::exp(-z);
  return i_scaled_large(nu, z, pol).value;
}

namespace {

Approx k_scaled_eval(double nu, Complex z, const EvalPolicy& pol, Regime r) {
  check_finite_z(z);
  if (!(z.real() > 0)) throw DomainError("bessel_k: Re z must be positive");
  nu = std::fabs(nu);
  double az = std::abs(z);
  if (r == Regime::automatic) {
    if (az >= pol.series_asymptotic_crossover) r = Regime::asymptotic;
    else if (az >= pol.k_series_limit) r = Regime::integral;
    else r = Regime::series;
  }
  switch (r) {
    case Regime::asymptotic:
      return k_scaled_asymptotic(nu, z, pol.max_series_terms);
    case Regime::integral:
      return k_scaled_integral(nu, z);
    default: {
      double nint = std::round(nu);
      Approx a;
      if (nu == nint) a = k_integer_series(static_cast<int>(nint), z, pol.max_series_terms);
      else if (std::fabs(nu - nint) < 1e-5) return k_scaled_integral(nu, z);
      else a = k_reflection_series(nu, z, pol.max_series_terms);
      return {a.value * std::exp(z), a.err};
    }
  }
}

}  // namespace

Complex bessel_k_scaled(double nu, Complex z, const EvalPolicy& pol) {
  return k_scaled_eval(nu, z, pol, Regime::automatic).value;
}

Complex bessel_k(double nu, Complex z, const EvalPolicy& pol, Regime r) {
  Approx a = k_scaled_eval(nu, z, pol, r);
  Complex v = a.value * std::exp(-z);
  if (!is_finite(v)) throw OverflowError("bessel_k: result overflows");
  return v;
}

Complex bessel_ik_product(double nu, Complex x, Complex y, const EvalPolicy& pol) {
  if (x == 0.0) return nu == 0 ? bessel_k(0, y, pol) : Complex(0.0);
  if (x.real() <= 0) return bessel_i(nu, x, pol) * bessel_k(nu, y, pol);
  return bessel_i_scaled(nu, x, pol) * bessel_k_scaled(nu, y, pol) * std::exp(x - y);
}

}  // namespace sumsq
