#include <cmath>
#include <vector>

#include "sumsq/errors.hpp"
#include "sumsq/quad.hpp"

namespace sumsq {

namespace {

struct Node {
  double x, w;
  bool ok;
};

// Generic double-exponential driver. map(t) gives abscissa and weight; the
// t-range is fixed on level 0 by walking outwards until terms are negligible,
// finer levels only add the odd nodes inside that range.
template <class Map>
QuadResult de_driver(const Integrand& f, Map map, const QuadOptions& opt, const char* who) {
  constexpr double kTiny = 1e-20;
  constexpr double kTLimit = 7.0;
  auto eval = [&](double t, bool& finite) -> Complex {
    Node n = map(t);
    if (!n.ok || n.w == 0) return 0.0;
    Complex v = f(n.x) * n.w;
    finite = is_finite(v);
    return finite ? v : Complex(0.0);
  };

  bool fin = true;
  Complex sum = eval(0.0, fin);
  if (!fin) throw AccuracyError(std::string(who) + ": integrand not finite at the centre node");
  double tlo = 0, thi = 0;
  for (int dir : {-1, 1}) {
    int small = 0;
    double tlast = 0;
    for (int j = 1; j <= kTLimit; ++j) {
      double t = dir * double(j);
      bool f_ok = true;
      Complex v = eval(t, f_ok);
      tlast = t;
      if (!f_ok) {
        // overflow in a far tail: accept only if the tail was already negligible
        if (small == 0) throw AccuracyError(std::string(who) + ": integrand not finite in the tail");
        break;
      }
      sum += v;
      if (std::abs(v) <= kTiny * std::abs(sum)) {
        if (++small == 2) break;
      } else {
        small = 0;
      }
    }
    (dir < 0 ? tlo : thi) = tlast;
  }

  double h = 1.0;
  Complex prev = sum * h;
  double err = INFINITY;
  int extra = -1;
  for (int level = 1; level <= opt.max_level + opt.extra_levels; ++level) {
    h /= 2;
    for (double t = tlo + h; t < thi; t += 2 * h) {
      bool f_ok = true;
      Complex v = eval(t, f_ok);
      if (f_ok) sum += v;
    }
    Complex cur = sum * h;
    err = std::abs(cur - prev);
    prev = cur;
    if (extra >= 0) {
      if (++extra >= opt.extra_levels) return {cur, err, level};
      continue;
    }
    if (level >= opt.min_level && err <= opt.tol * std::abs(cur)) {
      if (opt.extra_levels == 0) return {cur, err, level};
      extra = 0;
    }
  }
  if (extra >= 0) return {prev, err, opt.max_level + opt.extra_levels};
  // report what we have if the refinement stalled at rounding level
  if (err <= 1e3 * opt.tol * std::abs(prev) || err < 1e-290)
    return {prev, err, opt.max_level};
  throw AccuracyError(std::string(who) + ": no convergence");
}

}  // namespace

QuadResult tanh_sinh(const Integrand& f, double a, double b, const QuadOptions& opt) {
  if (a == b) return {0.0, 0.0, 0};
  if (!(a < b)) throw DomainError("tanh_sinh: need a < b");
  double half = 0.5 * (b - a);
  auto map = [=](double t) -> Node {
    double u = 0.5 * kPi * std::sinh(t);
    double au = std::fabs(u);
    if (au > 350) return {0, 0, false};
    double e = std::exp(-2 * au);
    double d = (b - a) * e / (1 + e);  // distance to the nearer endpoint
    double x = t < 0 ? a + d : b - d;
    if (!(x > a && x < b)) return {0, 0, false};
    double ch = std::cosh(u);
    return {x, half * 0.5 * kPi * std::cosh(t) / (ch * ch), true};
  };
  return de_driver(f, map, opt, "tanh_sinh");
}

QuadResult exp_sinh(const Integrand& f, double a, const QuadOptions& opt) {
  auto map = [=](double t) -> Node {
    double u = 0.5 * kPi * std::sinh(t);
    if (u > 700 || u < -690) return {0, 0, false};
    double e = std::exp(u);
    double x = a + e;
    if (!(x > a) || !std::isfinite(x)) return {0, 0, false};
    return {x, 0.5 * kPi * std::cosh(t) * e, true};
  };
  return de_driver(f, map, opt, "exp_sinh");
}

}  // namespace sumsq
