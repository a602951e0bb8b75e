#pragma once
#include <cstdint>
#include <functional>
#include <memory>

#include "sumsq/arith.hpp"
#include "sumsq/complex.hpp"
#include "sumsq/exec.hpp"

namespace sumsq {

struct Truncation {
  double tol = 1e-10;                   // relative
  std::int64_t max_terms = 4'000'000;
  double tail_estimate = 0;             // a posteriori bound, filled on return
  std::int64_t terms_used = 0;
  std::int64_t terms_required = 0;     // differs from terms_used only for capped direct sums
  double scale = 0;                     // tolerance is relative to max(|S|, scale)
};

struct SeriesResult {
  Complex value;
  Truncation trunc;
};

// Process-wide r_k tables. Tables are immutable; a request past the cached
// nmax builds a larger one and swaps it in under a lock.
std::shared_ptr<const SquaresTable> squares_table(int k, std::int64_t nmax);

using Term = std::function<Complex(std::int64_t)>;  // summand w(n), r_k(n) excluded
using Smooth = std::function<Complex(double)>;      // summand g(x) for real x > 0

// |w(n)| <~ C n^p e^{-c sqrt n}; p should carry some slack over the true power.
struct Envelope {
  double c;
  double p;
};

// sum_{n>=1} r_k(n) w(n) for exponentially decaying w. Terms are produced in
// blocks (in parallel when asked) and reduced serially, so the result does not
// depend on the thread count. Stops at the first n where the Abel-summation
// bound on the tail is below tol/10 of the running sum.
SeriesResult exp_lattice_sum(int k, const Term& w, Envelope env, const Truncation& t,
                             Exec exec = Exec::parallel, std::int64_t force_terms = 0);

// sum_{n>=1} r_k(n) g(n) for g decaying like a power, |g(x)| ~ x^{-sigma} with
// sigma > k/2. The sum is split with a smooth radial cutoff: the inner part is
// summed over the lattice, the outer part is replaced by its integral, which
// Poisson summation shows to be exponentially accurate in the cutoff width.
SeriesResult power_lattice_sum(int k, const Smooth& g, const Truncation& t, Exec exec = Exec::parallel);

// Plain truncation of the same sum, for comparison. The count needed to make
// the Abel tail bound meet tol is computed from the bound; at most max_terms
// of them are actually summed (terms_used still reports the required count).
SeriesResult power_direct_sum(int k, const Smooth& g, double sigma, const Truncation& t,
                              Exec exec = Exec::parallel);

}  // namespace sumsq
