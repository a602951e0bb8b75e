#include "sumsq/lfunc.hpp"

#include <cmath>

#include "sumsq/accel.hpp"
#include "sumsq/complex.hpp"
#include "sumsq/errors.hpp"

namespace sumsq {

namespace {

// B_{2j}/(2j)!, j = 1..12
constexpr double kB2jFact[12] = {
    1.0 / 12,
    -1.0 / 720,
    1.0 / 30240,
    -1.0 / 1209600,
    1.0 / 47900160,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
    77683.0 / 14101100039391805440000.0,
    -236364091.0 / 1693824136731743669452800000.0};

constexpr int kEmN = 16;

// Euler-Maclaurin for zeta and its s-derivative, valid for s != 1, s > -20.
struct Em {
  double value, deriv;
};

Em euler_maclaurin(double s) {
  // long double: at s = 0 the derivative cancels terms of size ~40 down to ~1
  using LD = long double;
  const LD S = s;
  LD v = 0, d = 0;
  for (int n = 1; n < kEmN; ++n) {
    LD p = std::pow(LD(n), -S), l = std::log(LD(n));
    v += p;
    d -= l * p;
  }
  const LD N = kEmN, lN = std::log(N);
  LD pN = std::pow(N, -S);
  v += N * pN / (S - 1) + 0.5L * pN;
  d += -lN * N * pN / (S - 1) - N * pN / ((S - 1) * (S - 1)) - 0.5L * lN * pN;
  // rising product P_j(s) = s(s+1)...(s+2j-2) and its derivative
  LD P = S, dP = 1;
  LD pw = pN / N;  // N^{-s-1}
  for (int j = 0; j < 12; ++j) {
    v += kB2jFact[j] * P * pw;
    d += kB2jFact[j] * (dP - lN * P) * pw;
    for (int i = 2 * j + 1; i <= 2 * j + 2; ++i) {
      dP = dP * (S + i) + P;
      P *= (S + i);
    }
    pw /= N * N;
  }
  return {double(v), double(d)};
}

// sum_{k>=0} (-1)^k a(k): the first kHead terms directly, the remainder by
// CVZ, whose rate depends on a(k) being smooth and monotone from the start.
constexpr int kHead = 8;

template <class F>
double alt_series(F a) {
  double head = 0;
  for (int k = 0; k < kHead; ++k) head += (k % 2 ? -a(k) : a(k));
  double tail = alternating_sum([&](int j) { return a(kHead + j); }, 1e-15).value;
  return head + (kHead % 2 ? -tail : tail);
}

double eta(double s) {
  return alt_series([s](int k) { return std::pow(k + 1.0, -s); });
}

}  // namespace

double zeta(double s) {
  if (s == 1.0) throw PoleError("zeta: pole at s = 1");
  if (s == 0.0) return -0.5;
  if (s < 0.0 || !std::isfinite(s)) throw DomainError("zeta: s < 0 is not implemented");
  if (s > 1.0) return euler_maclaurin(s).value;
  // 1 - 2^{1-s} written with expm1 so s near 1 keeps its digits
  return eta(s) / -std::expm1((1.0 - s) * std::log(2.0));
}

double zeta_prime(double s) {
  if (s != 0.0 && s != 2.0 && s != 4.0) throw UnsupportedPointError("zeta_prime: only s in {0, 2, 4}");
  return euler_maclaurin(s).deriv;
}

double dirichlet_beta(double s) {
  if (!(s > 0.0)) throw DomainError("dirichlet_beta: s must be positive");
  return alt_series([s](int k) { return std::pow(2.0 * k + 1.0, -s); });
}

double dirichlet_beta_prime(double s) {
  if (!(s > 0.0)) throw DomainError("dirichlet_beta_prime: s must be positive");
  return -alt_series([s](int k) {
    double m = 2.0 * k + 1.0;
    return std::log(m) * std::pow(m, -s);
  });
}

double beta_prime_zero() {
  // differentiate B(1-s) = (2/pi)^s sin(pi s/2) Gamma(s) B(s) at s = 1
  return 0.5 * (kEulerGamma + std::log(kPi / 2)) - (2 / kPi) * dirichlet_beta_prime(1.0);
}

namespace {
double beta_ext(double s) { return s == 0.0 ? 0.5 : dirichlet_beta(s); }

void need(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}
}  // namespace

double zeta_k(int k, double s) {
  switch (k) {
    case 2:
      need(s >= 0, "zeta_k(2): s must be >= 0");
      need(s > 0, "zeta_k(2): beta factor needs s > 0");
      return 4 * zeta(s) * dirichlet_beta(s);
    case 4:
      need(s >= 1, "zeta_k(4): s must be >= 1");
      // at s = 1 the zero of 1-4^{1-s} cancels the pole of zeta(s)
      if (s == 1.0) return 8 * std::log(4.0) * zeta(0.0);
      return 8 * -std::expm1((1 - s) * std::log(4.0)) * zeta(s) * zeta(s - 1);
    case 6:
      need(s >= 2, "zeta_k(6): s must be >= 2");
      return 16 * zeta(s - 2) * dirichlet_beta(s) - 4 * zeta(s) * beta_ext(s - 2);
    case 8:
      need(s >= 3, "zeta_k(8): s must be >= 3");
      return 16 * (1 - std::pow(2.0, 1 - s) + std::pow(4.0, 2 - s)) * zeta(s) * zeta(s - 3);
    default:
      throw DomainError("zeta_k: k must be 2, 4, 6 or 8");
  }
}

const ConstantsBag& ConstantsBag::instance() {
  static const ConstantsBag bag = [] {
    ConstantsBag b;
    b.gamma_euler = kEulerGamma;
    for (double s : {0.0, 0.5, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0}) b.zeta_at[s] = sumsq::zeta(s);
    for (double s : {0.0, 2.0, 4.0}) b.zeta_prime_at[s] = sumsq::zeta_prime(s);
    for (double s : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) b.beta_at[s] = dirichlet_beta(s);
    b.beta_at[0.0] = 0.5;
    for (double s : {1.0, 3.0}) b.beta_prime_at[s] = dirichlet_beta_prime(s);
    b.beta_prime_at[0.0] = beta_prime_zero();
    b.zeta3 = b.zeta_at[3.0];
    return b;
  }();
  return bag;
}

namespace {
double lookup(const std::map<double, double>& m, double s, const char* what) {
  auto it = m.find(s);
  if (it == m.end()) throw UnsupportedPointError(std::string(what) + ": point not in ConstantsBag");
  return it->second;
}
}  // namespace

double ConstantsBag::zeta(double s) const { return lookup(zeta_at, s, "zeta"); }
double ConstantsBag::zeta_prime(double s) const { return lookup(zeta_prime_at, s, "zeta_prime"); }
double ConstantsBag::beta(double s) const { return lookup(beta_at, s, "beta"); }
double ConstantsBag::beta_prime(double s) const { return lookup(beta_prime_at, s, "beta_prime"); }

}  // namespace sumsq
