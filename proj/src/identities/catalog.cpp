#include <chrono>
#include <cmath>
#include <cstdio>

#include "kernels.hpp"
#include "sumsq/identities.hpp"

namespace sumsq {

namespace {

struct Entry {
  IdentityId id;
  const char* name;
  Relevance rel;
};

const Entry kCatalog[] = {
    {IdentityId::main, "main", {true, true, true, true}},
    {IdentityId::main_continued, "main_continued", {true, true, true, true}},
    {IdentityId::popov, "popov", {false, true, true, true}},
    {IdentityId::cor_half, "cor_half", {true, false, true, true}},
    {IdentityId::dixfer, "dixfer_k", {true, true, false, true}},
    {IdentityId::hardy_gen, "hardy_gen", {true, false, false, true}},
    {IdentityId::elliptic, "elliptic_id", {false, false, true, true}},
    {IdentityId::ramanujan, "ramanujan_id", {false, false, true, true}},
    {IdentityId::ac_nu0, "ac_nu0", {true, false, true, true}},
    {IdentityId::df_limit, "df_limit", {false, false, false, true}},
    {IdentityId::goody, "goody", {true, false, true, true}},
    {IdentityId::dixonferrar, "dixonferrar_background", {false, true, true, true}},
};

const Entry& entry(IdentityId id) {
  for (const auto& e : kCatalog)
    if (e.id == id) return e;
  throw DomainError("unknown identity");
}

constexpr double kMargin = 1e-9;
constexpr double kMinOrder = 1e-3;

[[noreturn]] void reject(const char* code, const std::string& msg) { throw RejectedError(code, msg); }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void need_region(const ParamPoint& p) {
  double a = std::sqrt(p.alpha).real(), b = std::sqrt(p.beta).real();
  if (!(b > kMargin)) reject("region", "region: Re(sqrt(beta)) must be positive");
  if (p.alpha == p.beta) return;
  if (a < b - kMargin) reject("region", "region: Re(sqrt(alpha)) < Re(sqrt(beta))");
  if (a < b + kMargin) reject("region", "region: Re(sqrt(alpha)) within 1e-9 of Re(sqrt(beta)) with alpha != beta");
}

void need_sqrt_beta(Complex beta) {
  if (!(std::sqrt(beta).real() > kMargin)) reject("region", "region: Re(sqrt(beta)) must be positive");
}

void need_k(int k, int lo, int hi) {
  if (k < lo || k > hi) reject("dimension", "dimension: k = " + std::to_string(k) + " outside [" +
                                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

void need_even_k(int k) {
  if (k < 2 || k > 8 || k % 2) reject("dimension", "dimension: k must be 2, 4, 6 or 8");
}

void need_positive_order(double nu) {
  if (!(nu > 0)) reject("order", "order: nu must be positive, got " + fmt(nu));
  if (nu < kMinOrder) reject("order", "order: |nu| < 1e-3 is refused in direct mode");
}

void need_positive_real(Complex z, const char* what) {
  if (z.imag() != 0 || !(z.real() > 0)) reject("domain", std::string("domain: ") + what + " must be real and positive");
}

// r_k(n) for k > 10 exceeds 64 bits within the tables the guards use
constexpr int kMaxK = 10;

}  // namespace

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const auto& e : kCatalog) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::string_view identity_name(IdentityId id) { return entry(id).name; }

std::optional<IdentityId> identity_from_name(std::string_view name) {
  for (const auto& e : kCatalog)
    if (name == e.name) return e.id;
  return std::nullopt;
}

Relevance relevance(IdentityId id) { return entry(id).rel; }

std::string_view side_name(Side s) { return s == Side::lhs ? "lhs" : "rhs"; }

ParamPoint normalize(IdentityId id, ParamPoint p) {
  Relevance r = relevance(id);
  if (!r.nu) p.nu = (id == IdentityId::cor_half || id == IdentityId::ramanujan) ? 0.5 : 0.0;
  if (id == IdentityId::elliptic) p.nu = 1.0;
  if (!r.k) p.k = id == IdentityId::elliptic ? 3 : 2;
  if (!r.alpha) p.alpha = id == IdentityId::df_limit ? p.beta : Complex(0.0);
  return p;
}

void check_point(IdentityId id, const ParamPoint& p) {
  if (!finite(p.alpha) || !finite(p.beta) || !std::isfinite(p.nu)) reject("domain", "domain: non-finite parameter");
  switch (id) {
    case IdentityId::main:
      need_k(p.k, 2, kMaxK);
      need_positive_order(p.nu);
      need_region(p);
      return;
    case IdentityId::main_continued:
      need_even_k(p.k);
      if (!(p.nu > -1)) reject("order", "order: continued mode needs nu > -1");
      if (std::fabs(p.nu) < kMinOrder) reject("order", "order: nu = 0 is the ac_nu0 identity");
      need_region(p);
      return;
    case IdentityId::popov:
      need_positive_order(p.nu);
      need_region(p);
      return;
    case IdentityId::cor_half:
    case IdentityId::goody:
    case IdentityId::ac_nu0:
      if (id == IdentityId::cor_half) need_k(p.k, 2, kMaxK);
      else need_even_k(p.k);
      need_region(p);
      return;
    case IdentityId::dixfer:
      need_k(p.k, 2, kMaxK);
      need_positive_order(p.nu);
      need_sqrt_beta(p.beta);
      return;
    case IdentityId::hardy_gen:
      need_k(p.k, 2, kMaxK);
      need_sqrt_beta(p.beta);
      return;
    case IdentityId::elliptic:
      need_positive_real(p.alpha, "alpha");
      need_positive_real(p.beta, "beta");
      if (p.alpha.real() < p.beta.real()) reject("region", "region: Re(sqrt(alpha)) < Re(sqrt(beta))");
      return;
    case IdentityId::ramanujan:
      if (!(p.alpha.real() > 0 && p.beta.real() > 0)) reject("domain", "domain: need Re(a), Re(b) > 0");
      return;
    case IdentityId::df_limit:
      need_positive_real(p.beta, "x");
      return;
    case IdentityId::dixonferrar:
      need_positive_real(p.alpha, "delta");
      need_sqrt_beta(p.beta);
      return;
  }
}

SideResult evaluate_side(IdentityId id, Side side, const ParamPoint& p, const Truncation& t, Exec exec) {
  try {
    return detail::evaluate_spec(detail::side_spec(id, side, p), t, exec);
  } catch (const RejectedError&) {
    throw;
  } catch (const Error& e) {
    throw SideError(side, std::string(side_name(side)) + ": " + e.what());
  }
}

double rel_residual(Complex a, Complex b) { return std::abs(a - b) / (std::abs(a) + std::abs(b) + 1); }

IdentityReport verify(IdentityId id, const ParamPoint& p0, const Truncation& t, Exec exec) {
  ParamPoint p = normalize(id, p0);
  check_point(id, p);
  auto t0 = std::chrono::steady_clock::now();
  Truncation side_t = t;
  side_t.tol = t.tol / 20;
  IdentityReport r;
  r.name = identity_name(id);
  r.point = p;
  SideResult lhs = evaluate_side(id, Side::lhs, p, side_t, exec);
  SideResult rhs = evaluate_side(id, Side::rhs, p, side_t, exec);
  r.lhs = lhs.value;
  r.rhs = rhs.value;
  r.lhs_trunc = lhs.trunc;
  r.rhs_trunc = rhs.trunc;
  r.abs_residual = std::abs(r.lhs - r.rhs);
  r.rel_residual = rel_residual(r.lhs, r.rhs);
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

bool has_power_side(IdentityId id) { return id != IdentityId::ramanujan && id != IdentityId::dixonferrar; }

BenchSides bench_sides(IdentityId id, const ParamPoint& p0, const Truncation& t, Exec exec) {
  if (!has_power_side(id)) throw UnsupportedPointError("bench: both sides of this identity decay exponentially");
  ParamPoint p = normalize(id, p0);
  check_point(id, p);
  BenchSides b;
  b.exponential_side = Side::lhs;
  detail::SideSpec lhs = detail::side_spec(id, Side::lhs, p), rhs = detail::side_spec(id, Side::rhs, p);
  auto timed = [&](int slot, auto&& f) {
    auto t0 = std::chrono::steady_clock::now();
    SideResult r = f();
    b.seconds[slot] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  };
  using detail::PowerMethod;
  b.exponential = timed(0, [&] { return detail::evaluate_spec(lhs, t, exec); });
  b.power_smoothed = timed(1, [&] { return detail::evaluate_spec(rhs, t, exec, PowerMethod::smoothed); });
  b.power_direct = timed(2, [&] { return detail::evaluate_spec(rhs, t, exec, PowerMethod::direct); });
  return b;
}

}  // namespace sumsq
