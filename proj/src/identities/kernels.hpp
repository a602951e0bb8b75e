#pragma once
#include <optional>

#include "sumsq/identities.hpp"

namespace sumsq::detail {

// A side is  constant + prefactor * sum_{n>=1} r_k(n) s(n).
struct SeriesSpec {
  bool exponential = true;
  int k = 2;
  Term term;        // exponential sides
  Envelope env{1, 0};
  Smooth g;         // power sides
  double sigma = 0; // |g(x)| ~ x^{-sigma}
};

struct SideSpec {
  Complex constant = 0;
  Complex prefactor = 1;
  std::optional<SeriesSpec> series;  // empty when the side is identically the constant
};

SideSpec side_spec(IdentityId id, Side side, const ParamPoint& p);

enum class PowerMethod { smoothed, direct };
SideResult evaluate_spec(const SideSpec& s, const Truncation& t, Exec exec,
                         PowerMethod method = PowerMethod::smoothed);

}  // namespace sumsq::detail
