#pragma once
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sumsq/exec.hpp"

namespace sumsq {

using Count = std::int64_t;

// Exact r_k(0..nmax). Immutable once built.
class SquaresTable {
 public:
  SquaresTable(int k, std::vector<Count> counts);

  int k() const { return k_; }
  std::int64_t nmax() const { return static_cast<std::int64_t>(counts_.size()) - 1; }
  Count operator[](std::int64_t n) const { return counts_[static_cast<std::size_t>(n)]; }
  std::span<const Count> counts() const { return counts_; }

  std::string to_csv() const;  // header "n,r_k"

 private:
  int k_;
  std::vector<Count> counts_;
};

// Work bound on k*nmax; exceeding it raises CapacityError.
inline constexpr std::int64_t kDefaultWorkBound = 400'000'000;

SquaresTable rk_table(int k, std::int64_t nmax, Exec exec = Exec::parallel,
                      std::int64_t work_bound = kDefaultWorkBound);

// Cauchy product truncated at nmax, overflow-checked.
std::vector<Count> convolve(std::span<const Count> a, std::span<const Count> b, std::int64_t nmax,
                            Exec exec = Exec::parallel);

Count r2_closed(std::int64_t n);
Count r4_closed(std::int64_t n);
Count divisor_sigma(std::int64_t n);
Count divisor_count_mod(std::int64_t n, std::int64_t j, std::int64_t l);

// pi^{k/2} x^{k/2} / Gamma(k/2+1): volume of the k-ball of radius sqrt(x).
double summatory_main_term(int k, double x);

// Smallest n0 such that sum_{m<=x} r_k(m) <= factor * main_term(k, x)
// holds for every x in [n0, table.nmax()].
std::int64_t summatory_guard_start(const SquaresTable& t, double factor = 3.0);

}  // namespace sumsq
