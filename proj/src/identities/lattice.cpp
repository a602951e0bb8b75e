#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <vector>

#include "sumsq/errors.hpp"
#include "sumsq/quad.hpp"
#include "sumsq/series.hpp"
#include "sumsq/specfun.hpp"

namespace sumsq {

namespace {

std::mutex table_mutex;
std::map<int, std::shared_ptr<const SquaresTable>> tables;
std::map<int, std::int64_t> guard_cache;

constexpr std::int64_t kGuardTable = 4096;

std::int64_t guard_start(int k) {
  {
    std::lock_guard<std::mutex> lock(table_mutex);
    auto it = guard_cache.find(k);
    if (it != guard_cache.end()) return it->second;
  }
  auto t = squares_table(k, kGuardTable);
  std::int64_t g = summatory_guard_start(*t);
  std::lock_guard<std::mutex> lock(table_mutex);
  guard_cache[k] = g;
  return g;
}

// Neumaier summation on both components.
struct Compensated {
  double re = 0, im = 0, cre = 0, cim = 0;
  static void add1(double& s, double& c, double x) {
    double t = s + x;
    c += std::fabs(s) >= std::fabs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  void add(Complex z) {
    add1(re, cre, z.real());
    add1(im, cim, z.imag());
  }
  Complex value() const { return {re + cre, im + cim}; }
};

// Evaluate f(lo..hi) into out, in parallel if asked; rethrows the first error.
template <class F>
void fill_block(std::vector<Complex>& out, std::int64_t lo, std::int64_t hi, F&& f, Exec exec) {
  out.assign(static_cast<std::size_t>(hi - lo + 1), Complex(0.0));
  if (exec == Exec::serial) {
    for (std::int64_t n = lo; n <= hi; ++n) out[n - lo] = f(n);
    return;
  }
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t n = lo; n <= hi; ++n) {
    try {
      out[n - lo] = f(n);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

double sphere_factor(int k) { return std::pow(kPi, 0.5 * k) / gamma(0.5 * k); }

void check_finite(Complex v, std::int64_t n, const char* who) {
  if (!is_finite(v))
    throw AccuracyError(std::string(who) + ": non-finite summand at n = " + std::to_string(n));
}

}  // namespace

std::shared_ptr<const SquaresTable> squares_table(int k, std::int64_t nmax) {
  std::lock_guard<std::mutex> lock(table_mutex);
  auto& slot = tables[k];
  if (!slot || slot->nmax() < nmax) {
    std::int64_t want = std::max<std::int64_t>(nmax, slot ? 2 * slot->nmax() : 1024);
    slot = std::make_shared<const SquaresTable>(rk_table(k, want, Exec::parallel));
  }
  return slot;
}

// ---------------------------------------------------------------- exponential

SeriesResult exp_lattice_sum(int k, const Term& w, Envelope env, const Truncation& t, Exec exec,
                             std::int64_t force_terms) {
  if (!(env.c > 0)) throw DomainError("exp_lattice_sum: decay rate must be positive");
  const double V = sphere_factor(k);
  const double a = k - 1 + 2 * env.p;
  std::int64_t start = std::max<std::int64_t>(guard_start(k), 4);
  if (env.p > 0) start = std::max(start, static_cast<std::int64_t>(std::ceil(std::pow(4 * env.p / env.c, 2))));
  const std::int64_t cap = force_terms > 0 ? force_terms : t.max_terms;

  Compensated S;
  std::array<double, 4> ring{};  // |w(m)| / (m^p e^{-c sqrt m}) over the last four m
  std::vector<Complex> vals;
  std::int64_t n = 1, block = 32;
  for (;;) {
    if (n > cap) {
      if (force_terms > 0) break;
      throw TruncationError("exp_lattice_sum: max_terms reached before the tail bound met tol");
    }
    std::int64_t hi = std::min(n + block - 1, cap);
    auto table = squares_table(k, hi);
    // w(m) is needed even where r_k(m) = 0, to keep the envelope anchored
    fill_block(vals, n, hi, w, exec);
    for (std::int64_t m = n; m <= hi; ++m) {
      Complex v = vals[m - n];
      check_finite(v, m, "exp_lattice_sum");
      if (Count r = (*table)[m]) S.add(double(r) * v);
      double root = std::sqrt(double(m));
      ring[m % 4] = std::abs(v) * std::exp(env.c * root - env.p * std::log(double(m)));
      if (m < start) continue;
      double C = *std::max_element(ring.begin(), ring.end());
      if (env.c * root <= 2 * a) continue;
      double E = C * std::exp(env.p * std::log(double(m)) - env.c * root);
      double tail_int = 2 * std::exp(a * std::log(root) - env.c * root) / env.c;
      double bound = 3 * (summatory_main_term(k, double(m)) * E + V * C * 2 * tail_int);
      Complex sv = S.value();
      bool done = force_terms > 0 ? m == force_terms : bound <= 0.1 * t.tol * std::max(std::abs(sv), t.scale);
      if (done) {
        SeriesResult res{sv, t};
        res.trunc.tail_estimate = bound;
        res.trunc.terms_used = m;
        res.trunc.terms_required = m;
        return res;
      }
    }
    n = hi + 1;
    block = std::min<std::int64_t>(2 * block, 2048);
  }
  // forced count too small to even reach the bound's validity range
  SeriesResult res{S.value(), t};
  res.trunc.tail_estimate = INFINITY;
  res.trunc.terms_used = res.trunc.terms_required = force_terms;
  return res;
}

// ---------------------------------------------------------------- power law

namespace {

struct Cutoff {
  double s, R, Rc, Rhi;
  std::int64_t nmax;
};

// Width s and centre R of the erfc transition for a target of e^{-L}.
Cutoff cutoff_for(double L) {
  Cutoff c;
  c.s = 1.15 * std::sqrt(L) / kPi + 0.3;
  double xcut = std::sqrt(L + 2);
  c.R = xcut * c.s + std::max(4.0, 0.3 * L);
  c.Rc = c.R - xcut * c.s;
  c.Rhi = c.R + xcut * c.s;
  c.nmax = static_cast<std::int64_t>(std::floor(c.Rhi * c.Rhi));
  return c;
}

struct SmoothSum {
  Complex value;
  double magnitude;  // sum of |pieces|, for the rounding floor
};

SmoothSum smoothed(int k, const Smooth& g, const Cutoff& c, Exec exec) {
  auto table = squares_table(k, c.nmax);
  auto inner = [&](double r) { return 0.5 * std::erfc((r - c.R) / c.s); };  // 1 - phi
  std::vector<Complex> vals;
  fill_block(vals, 1, c.nmax, [&](std::int64_t n) -> Complex {
    Count r = (*table)[n];
    if (!r) return 0.0;
    double x = double(n), root = std::sqrt(x);
    double wgt = root < c.Rc ? 1.0 : inner(root);
    return double(r) * wgt * g(x);
  }, exec);
  Compensated S;
  double mag = 0;
  for (std::int64_t n = 1; n <= c.nmax; ++n) {
    check_finite(vals[n - 1], n, "power_lattice_sum");
    S.add(vals[n - 1]);
    mag += std::abs(vals[n - 1]);
  }
  auto outer = [&](double r) -> Complex {
    double phi = 0.5 * std::erfc((c.R - r) / c.s);
    // r^{k-1} split in two so far nodes underflow to zero instead of overflowing
    double h = std::pow(r, 0.5 * (k - 1));
    return h * (phi * g(r * r)) * h;
  };
  QuadOptions qo;
  qo.tol = 1e-13;
  qo.min_level = 4;
  QuadResult mid = tanh_sinh(outer, c.Rc, c.Rhi, qo);
  QuadResult far = exp_sinh(outer, c.Rhi, qo);
  Complex integral = 2 * sphere_factor(k) * (mid.value + far.value);
  return {S.value() + integral, mag + std::abs(integral)};
}

}  // namespace

SeriesResult power_lattice_sum(int k, const Smooth& g, const Truncation& t, Exec exec) {
  double L = std::max(12.0, std::log(100.0 / t.tol));
  for (int attempt = 0; attempt < 6; ++attempt, L *= 1.5) {
    Cutoff c1 = cutoff_for(L), c2 = cutoff_for(1.2 * L);
    if (c2.nmax > t.max_terms)
      throw TruncationError("power_lattice_sum: cutoff needs more than max_terms lattice terms");
    SmoothSum s1 = smoothed(k, g, c1, exec), s2 = smoothed(k, g, c2, exec);
    double tail = std::abs(s1.value - s2.value);
    double floor = 1e-15 * s2.magnitude;
    if (tail <= t.tol * std::max(std::abs(s2.value), t.scale) || tail <= floor) {
      SeriesResult res{s2.value, t};
      res.trunc.tail_estimate = tail;
      res.trunc.terms_used = res.trunc.terms_required = c2.nmax;
      return res;
    }
  }
  throw TruncationError("power_lattice_sum: cutoff refinement did not settle");
}

SeriesResult power_direct_sum(int k, const Smooth& g, double sigma, const Truncation& t, Exec exec) {
  const double excess = sigma - 0.5 * k;
  if (!(excess > 0)) throw DivergenceError("power_direct_sum: series is not absolutely convergent");
  // tail <= 3 C N^{-excess} [pi^{k/2}/Gamma(k/2+1) + 2V/(2 sigma - k)]
  const double K = std::pow(kPi, 0.5 * k) / gamma(0.5 * k + 1) + 2 * sphere_factor(k) / (2 * excess);
  Compensated S;
  double C = 0;
  std::vector<Complex> vals;
  std::int64_t n = 1, block = 256, required = 0, summed = 0;
  double bound = INFINITY;
  while (n <= t.max_terms) {
    std::int64_t hi = std::min(n + block - 1, t.max_terms);
    auto table = squares_table(k, hi);
    fill_block(vals, n, hi, [&](std::int64_t m) { return double((*table)[m]) * g(double(m)); }, exec);
    for (std::int64_t m = n; m <= hi; ++m) {
      check_finite(vals[m - n], m, "power_direct_sum");
      S.add(vals[m - n]);
    }
    summed = hi;
    // envelope constant from the block's last stretch
    for (std::int64_t m = std::max(n, hi - 63); m <= hi; ++m)
      C = std::max(C, std::abs(g(double(m))) * std::pow(double(m), sigma));
    double target = t.tol * std::max(std::abs(S.value()), t.scale);
    bound = 3 * C * K * std::pow(double(hi), -excess);
    double need = std::pow(3 * C * K / target, 1 / excess);
    required = need > 9e18 ? std::int64_t(9e18) : std::max<std::int64_t>(hi, std::int64_t(std::ceil(need)));
    if (bound <= target) {
      required = hi;
      break;
    }
    n = hi + 1;
    block = std::min<std::int64_t>(2 * block, 1 << 18);
  }
  SeriesResult res{S.value(), t};
  res.trunc.tail_estimate = bound;
  res.trunc.terms_used = summed;
  res.trunc.terms_required = required;
  return res;
}

}  // namespace sumsq
