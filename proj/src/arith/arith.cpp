#include "sumsq/arith.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sumsq/errors.hpp"

namespace sumsq {

SquaresTable::SquaresTable(int k, std::vector<Count> counts) : k_(k), counts_(std::move(counts)) {}

std::string SquaresTable::to_csv() const {
  std::ostringstream os;
  os << "n,r_k\n";
  for (std::size_t n = 0; n < counts_.size(); ++n) os << n << ',' << counts_[n] << '\n';
  return os.str();
}

namespace {

std::vector<Count> r1_table(std::int64_t nmax) {
  std::vector<Count> t(static_cast<std::size_t>(nmax + 1), 0);
  t[0] = 1;
  for (std::int64_t m = 1; m * m <= nmax; ++m) t[static_cast<std::size_t>(m * m)] = 2;
  return t;
}

Count conv_at(std::span<const Count> a, std::span<const Count> b, std::int64_t n) {
  Count s = 0;
  for (std::int64_t i = 0; i <= n; ++i) {
    Count x = a[static_cast<std::size_t>(i)];
    if (x == 0) continue;
    Count y = b[static_cast<std::size_t>(n - i)];
    if (y == 0) continue;
    Count p;
    if (__builtin_mul_overflow(x, y, &p) || __builtin_add_overflow(s, p, &s))
      throw OverflowError("r_k convolution overflows 64-bit counts at n=" + std::to_string(n));
  }
  return s;
}

// One more square: out[n] = t[n] + 2 sum_{m>=1, m^2<=n} t[n-m^2].
// Only the sqrt(n) nonzero entries of r_1 are visited; the output is split in
// chunks and each chunk streams through t contiguously for every m.
std::vector<Count> add_square(const std::vector<Count>& t, std::int64_t nmax, Exec exec) {
  Count top = 0;
  for (Count v : t) top = std::max(top, v);
  double bound = static_cast<double>(top) * (1 + 2 * std::sqrt(static_cast<double>(nmax)));
  if (bound >= 9.2e18) throw OverflowError("r_k table would overflow 64-bit counts");
  std::vector<Count> out(t.begin(), t.begin() + nmax + 1);
  constexpr std::int64_t kChunk = 1 << 14;
  const std::int64_t chunks = nmax / kChunk + 1;
  auto chunk = [&](std::int64_t c) {
    std::int64_t lo = c * kChunk, hi = std::min(nmax + 1, lo + kChunk);
    for (std::int64_t m = 1; m * m < hi; ++m) {
      std::int64_t sq = m * m;
      for (std::int64_t n = std::max(lo, sq); n < hi; ++n) out[n] += 2 * t[n - sq];
    }
  };
  if (exec == Exec::serial) {
    for (std::int64_t c = 0; c < chunks; ++c) chunk(c);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) chunk(c);
  }
  return out;
}

}  // namespace

std::vector<Count> convolve(std::span<const Count> a, std::span<const Count> b, std::int64_t nmax,
                            Exec exec) {
  if (nmax < 0) throw DomainError("convolve: nmax < 0");
  if (static_cast<std::int64_t>(a.size()) <= nmax || static_cast<std::int64_t>(b.size()) <= nmax)
    throw DomainError("convolve: input shorter than nmax+1");
  std::vector<Count> out(static_cast<std::size_t>(nmax + 1), 0);
  if (exec == Exec::serial) {
    for (std::int64_t n = 0; n <= nmax; ++n) out[static_cast<std::size_t>(n)] = conv_at(a, b, n);
    return out;
  }
  // exceptions may not cross the parallel region; record and rethrow
  bool overflow = false;
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t n = 0; n <= nmax; ++n) {
    try {
      out[static_cast<std::size_t>(n)] = conv_at(a, b, n);
    } catch (const OverflowError&) {
#pragma omp atomic write
      overflow = true;
    }
  }
  if (overflow) throw OverflowError("r_k convolution overflows 64-bit counts");
  return out;
}

SquaresTable rk_table(int k, std::int64_t nmax, Exec exec, std::int64_t work_bound) {
  if (k < 1) throw DomainError("rk_table: k must be >= 1");
  if (nmax < 0) throw DomainError("rk_table: nmax must be >= 0");
  if (static_cast<double>(k) * static_cast<double>(nmax) > static_cast<double>(work_bound))
    throw CapacityError("rk_table: k*nmax exceeds work bound");
  // The k=1 table is sparse, so each step costs O(nmax*sqrt(nmax)).
  std::vector<Count> t = r1_table(nmax);
  for (int j = 2; j <= k; ++j) t = add_square(t, nmax, exec);
  return SquaresTable(k, std::move(t));
}

Count divisor_count_mod(std::int64_t n, std::int64_t j, std::int64_t l) {
  if (n < 1 || l < 1 || j < 0 || j >= l) throw DomainError("divisor_count_mod: bad arguments");
  Count c = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    if (d % l == j) ++c;
    std::int64_t e = n / d;
    if (e != d && e % l == j) ++c;
  }
  return c;
}

Count divisor_sigma(std::int64_t n) {
  if (n < 1) throw DomainError("divisor_sigma: n must be >= 1");
  Count s = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += d;
    if (n / d != d) s += n / d;
  }
  return s;
}

Count r2_closed(std::int64_t n) {
  if (n < 1) throw DomainError("r2_closed: n must be >= 1");
  return 4 * (divisor_count_mod(n, 1, 4) - divisor_count_mod(n, 3, 4));
}

Count r4_closed(std::int64_t n) {
  if (n < 1) throw DomainError("r4_closed: n must be >= 1");
  return 8 * divisor_sigma(n) - (n % 4 == 0 ? 32 * divisor_sigma(n / 4) : 0);
}

double summatory_main_term(int k, double x) {
  if (x < 0) throw DomainError("summatory_main_term: x < 0");
  double h = 0.5 * k;
  return std::exp(h * std::log(M_PI * x) - std::lgamma(h + 1.0));
}

std::int64_t summatory_guard_start(const SquaresTable& t, double factor) {
  // scan from the top; the step function A(x) is worst just after each jump
  std::vector<double> partial(static_cast<std::size_t>(t.nmax() + 1));
  double a = 0;
  for (std::int64_t n = 0; n <= t.nmax(); ++n) partial[n] = a += static_cast<double>(t[n]);
  std::int64_t start = t.nmax() + 1;
  for (std::int64_t n = t.nmax(); n >= 1; --n) {
    if (partial[n] > factor * summatory_main_term(t.k(), static_cast<double>(n))) break;
    start = n;
  }
  return start;
}

}  // namespace sumsq
