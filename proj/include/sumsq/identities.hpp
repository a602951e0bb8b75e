#pragma once
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumsq/complex.hpp"
#include "sumsq/errors.hpp"
#include "sumsq/exec.hpp"
#include "sumsq/series.hpp"

namespace sumsq {

enum class IdentityId {
  main,            // I_nu K_nu series vs hypergeometric series
  main_continued,  // same, RHS with the leading term subtracted and zeta_k added back
  popov,           // k = 2, scaled by 2 pi / (alpha-beta)^nu
  cor_half,        // nu = 1/2
  dixfer,          // n^{nu/2} K_nu(2 pi sqrt(n beta)) vs (n+beta)^{-nu-k/2}
  hardy_gen,       // e^{-2 pi sqrt(n beta)} vs (n+beta)^{-(k+1)/2}
  elliptic,        // k = 3, nu = 1 with K and D
  ramanujan,       // a <-> b exchange, alpha = a, beta = b
  ac_nu0,          // nu = 0, k in {2,4,6,8}
  df_limit,        // alpha = beta = x limit of ac_nu0 at k = 2, x = beta
  goody,           // cosh variant, k = 2m, m in {1..4}
  dixonferrar,     // K_nu / K_{1-nu} exchange, alpha = delta
};

const std::vector<IdentityId>& all_identities();
std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);

struct ParamPoint {
  int k = 2;
  double nu = 0.5;
  Complex alpha{2.0, 0.0};
  Complex beta{1.0, 0.0};
  bool operator==(const ParamPoint&) const = default;
};

// Fields an identity actually reads. The rest are pinned by normalize(), so
// grid expansion can drop duplicates.
struct Relevance {
  bool k, nu, alpha, beta;
};
Relevance relevance(IdentityId id);
ParamPoint normalize(IdentityId id, ParamPoint p);

// Throws RejectedError (codes: region, order, dimension, domain) for points
// outside the identity's validity region.
void check_point(IdentityId id, const ParamPoint& p);

enum class Side { lhs, rhs };
std::string_view side_name(Side s);

struct SideResult {
  Complex value;
  Truncation trunc;
};

// An evaluator failure, tagged with the side it came from.
struct SideError : Error {
  Side side;
  SideError(Side s, const std::string& msg) : Error(msg), side(s) {}
};

// One side of the identity to relative tolerance t.tol.
SideResult evaluate_side(IdentityId id, Side side, const ParamPoint& p, const Truncation& t,
                         Exec exec = Exec::parallel);

struct IdentityReport {
  std::string name;
  ParamPoint point;
  Complex lhs, rhs;
  double abs_residual = 0, rel_residual = 0;
  Truncation lhs_trunc, rhs_trunc;
  double elapsed = 0;
};

double rel_residual(Complex a, Complex b);  // |a-b| / (|a|+|b|+1)

// Checks the point, evaluates both sides independently with tol/20 each.
IdentityReport verify(IdentityId id, const ParamPoint& p, const Truncation& t, Exec exec = Exec::parallel);

// For identities with an exponentially decaying side and a power-law side:
// the exponential side, the smoothed power side and the plain truncated
// power side, all at tolerance t.tol.
struct BenchSides {
  Side exponential_side;
  SideResult exponential, power_smoothed, power_direct;
  double seconds[3] = {0, 0, 0};
};
bool has_power_side(IdentityId id);
BenchSides bench_sides(IdentityId id, const ParamPoint& p, const Truncation& t, Exec exec = Exec::parallel);

// Constant terms of the nu = 0 identities and the goody a_m, exposed for tests.
Complex ac_nu0_constant(int k, Complex alpha, Complex beta);
double goody_a(int m);

}  // namespace sumsq
