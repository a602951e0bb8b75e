#include <cmath>
#include <exception>
#include <vector>

#include "sumsq/accel.hpp"
#include "sumsq/errors.hpp"
#include "sumsq/quad.hpp"
#include "sumsq/specfun.hpp"

namespace sumsq {

double bessel_zero(double mu, int s) {
  if (s < 1) throw DomainError("bessel_zero: index must be >= 1");
  double m = 4 * mu * mu;
  double b = (s + 0.5 * mu - 0.25) * kPi, e = 8 * b;
  double x = b - (m - 1) / e - 4 * (m - 1) * (7 * m - 31) / (3 * e * e * e) -
             32 * (m - 1) * (83 * m * m - 982 * m + 3779) / (15 * std::pow(e, 5));
  double start = x;
  for (int it = 0; it < 8; ++it) {
    double j = bessel_j(mu, x).real();
    double dj = -bessel_j(mu + 1, x).real() + mu / x * j;
    double dx = j / dj;
    x -= dx;
    if (std::fabs(dx) < 1e-10) return x;
  }
  // keep the McMahon estimate if Newton wandered; panels only need a partition
  return std::fabs(x - start) < 0.5 ? x : start;
}

std::vector<Complex> bessel_panels(const Integrand& g, double mu, double rho, int count, Exec exec) {
  std::vector<double> edge(static_cast<std::size_t>(count) + 1);
  edge[0] = 0;
  for (int s = 1; s <= count; ++s) {
    edge[s] = bessel_zero(mu, s) / rho;
    if (!(edge[s] > edge[s - 1])) edge[s] = edge[s - 1] + kPi / rho;
  }
  std::vector<Complex> p(static_cast<std::size_t>(count));
  QuadOptions qo;
  qo.tol = 1e-13;
  qo.min_level = 3;
  auto one = [&](int s) { p[s] = tanh_sinh(g, edge[s], edge[s + 1], qo).value; };
  if (exec == Exec::serial) {
    for (int s = 0; s < count; ++s) one(s);
    return p;
  }
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < count; ++s) {
    try {
      one(s);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return p;
}

QuadResult oscillatory_bessel(const Integrand& g, double mu, double rho, const OscOptions& opt) {
  if (!(rho > 0)) throw DomainError("oscillatory_bessel: rho must be positive");
  const int s0 = opt.accel_start;
  int count = s0 + 48;
  std::vector<Complex> p = bessel_panels(g, mu, rho, count, opt.exec);
  for (;;) {
    Complex head = 0;
    for (int s = 0; s < s0; ++s) head += p[s];
    std::vector<Complex> a;
    for (int j = 0; s0 + j < count; ++j) a.push_back(j % 2 ? -p[s0 + j] : p[s0 + j]);
    Complex prev = NAN;
    for (int n = 16; n <= static_cast<int>(a.size()); n += 8) {
      Complex cur = head + cvz_sum<Complex>(std::span<const Complex>(a.data(), n));
      if (!std::isnan(prev.real())) {
        double d = std::abs(cur - prev);
        if (d <= 0.1 * opt.tol * std::abs(cur) || d < 1e-300)
          return {cur, std::max(d, 1e-16 * std::abs(cur)), s0 + n};
      }
      prev = cur;
    }
    if (count >= opt.max_panels) break;
    int more = std::min(opt.max_panels, count + 32) - count;
    // extend by recomputing; panel values are deterministic so this is safe
    count += more;
    p = bessel_panels(g, mu, rho, count, opt.exec);
  }
  throw AccuracyError("oscillatory_bessel: acceleration stalled");
}

}  // namespace sumsq
