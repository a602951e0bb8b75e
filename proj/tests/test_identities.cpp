#include <doctest.h>

#include <cmath>
#include <map>

#include "kernels.hpp"
#include "sumsq/identities.hpp"
#include "sumsq/lfunc.hpp"

using namespace sumsq;

namespace {

using LD = long double;

// r_k(n) for n <= N by brute-force enumeration of lattice points in a box.
std::vector<LD> lattice_counts(int k, int N) {
  std::vector<LD> c(N + 1, 0);
  int R = static_cast<int>(std::sqrt(double(N)));
  std::vector<int> x(k, -R);
  for (;;) {
    long s = 0;
    for (int v : x) s += long(v) * v;
    if (s <= N) c[s] += 1;
    int i = 0;
    while (i < k && x[i] == R) x[i++] = -R;
    if (i == k) break;
    ++x[i];
  }
  return c;
}

Truncation tol(double t, std::int64_t max_terms = 4'000'000) {
  Truncation tr;
  tr.tol = t;
  tr.max_terms = max_terms;
  return tr;
}

Complex side(IdentityId id, Side s, ParamPoint p, double t = 1e-13) {
  return evaluate_side(id, s, normalize(id, p), tol(t)).value;
}

double relerr(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("main LHS at nu = 1/2 from elementary functions") {
  // I_{1/2}(x) K_{1/2}(y) = sinh(x) e^{-y} / sqrt(x y), sqrt(x y) = pi sqrt(n) sqrt(alpha - beta)
  auto r2 = lattice_counts(2, 400);
  LD a = std::sqrt(2.0L), b = 1, s = 0;
  for (int n = 1; n <= 400; ++n) {
    LD rn = std::sqrt(LD(n));
    s += r2[n] * std::sinh(kPi * rn * (a - b)) * std::exp(-kPi * rn * (a + b)) / (kPi * rn);
  }
  Complex got = side(IdentityId::main, Side::lhs, {2, 0.5, 2.0, 1.0});
  CHECK(relerr(got, double(s)) < 1e-12);
}

TEST_CASE("hardy_gen LHS against an enumerated lattice") {
  auto r3 = lattice_counts(3, 900);
  for (double beta : {0.5, 2.0}) {
    LD s = 1;
    for (int n = 1; n <= 900; ++n) s += r3[n] * std::exp(-2 * kPi * std::sqrt(LD(n) * beta));
    CHECK(relerr(side(IdentityId::hardy_gen, Side::lhs, {3, 0, 0.0, beta}), double(s)) < 1e-12);
  }
}

TEST_CASE("alpha = beta gives zero on both sides") {
  for (int k : {2, 5}) {
    IdentityReport r = verify(IdentityId::main, {k, 1.7, 5.0, 5.0}, tol(1e-8));
    CHECK(r.lhs == Complex(0));
    CHECK(r.rhs == Complex(0));
    CHECK(r.lhs_trunc.terms_used <= 1);
  }
  IdentityReport e = verify(IdentityId::elliptic, {3, 1, 2.0, 2.0}, tol(1e-8));
  CHECK(std::abs(e.lhs) < 1e-15);
  CHECK(e.rel_residual < 1e-8);
  CHECK(verify(IdentityId::cor_half, {3, 0.5, 2.0, 2.0}, tol(1e-8)).rel_residual < 1e-12);
}

TEST_CASE("headline verifications") {
  CHECK(verify(IdentityId::main, {2, 0.5, 2.0, 1.0}, tol(1e-8)).rel_residual < 1e-8);
  CHECK(verify(IdentityId::hardy_gen, {2, 0, 0.0, 1.0}, tol(1e-10)).rel_residual < 1e-10);
  CHECK(verify(IdentityId::hardy_gen, {8, 0, 0.0, 2.0}, tol(1e-8)).rel_residual < 1e-8);
  CHECK(verify(IdentityId::popov, {2, 0.5, 2.0, 1.0}, tol(1e-10)).rel_residual < 1e-10);
  CHECK(verify(IdentityId::cor_half, {5, 0.5, 3.5, 0.8}, tol(1e-8)).rel_residual < 1e-8);
  CHECK(verify(IdentityId::cor_half, {2, 0.5, 2.0, 1.0}, tol(1e-9)).rel_residual < 1e-9);
  CHECK(verify(IdentityId::dixfer, {3, 1.0, 0.0, 1.0}, tol(1e-8)).rel_residual < 1e-8);
  CHECK(verify(IdentityId::elliptic, {3, 1, 2.0, 1.0}, tol(1e-8)).rel_residual < 1e-8);
  CHECK(verify(IdentityId::ramanujan, {2, 0.5, 1.0, 2.0}, tol(1e-10)).rel_residual < 1e-10);
  CHECK(verify(IdentityId::dixonferrar, {2, 0.3, 1.0, 2.0}, tol(1e-9)).rel_residual < 1e-9);
  CHECK(verify(IdentityId::ac_nu0, {2, 0, 2.0, 1.0}, tol(1e-8)).rel_residual < 1e-8);
  CHECK(verify(IdentityId::df_limit, {2, 0, 1.0, 1.0}, tol(1e-8)).rel_residual < 1e-8);
  CHECK(verify(IdentityId::goody, {2, 0, 2.0, 1.0}, tol(1e-8)).rel_residual < 1e-8);
  CHECK(verify(IdentityId::goody, {8, 0, 2.0, 1.0}, tol(1e-7)).rel_residual < 1e-7);
}

TEST_CASE("popov is the k = 2 main identity rescaled") {
  for (double nu : {0.5, 1.0, 2.5}) {
    ParamPoint p{2, nu, 3.5, 0.8};
    Complex scale = 2 * kPi / std::pow(Complex(3.5 - 0.8), nu);
    CHECK(relerr(side(IdentityId::popov, Side::lhs, p), scale * side(IdentityId::main, Side::lhs, p)) < 1e-12);
    CHECK(relerr(side(IdentityId::popov, Side::rhs, p), scale * side(IdentityId::main, Side::rhs, p)) < 1e-10);
  }
}

TEST_CASE("direct and continued main RHS agree") {
  for (int k : {2, 4, 6, 8})
    for (double nu : {0.3, 0.5, 1.0})
      for (auto [a, b] : {std::pair{3.0, 1.0}, {2.0, 1.0}}) {
        ParamPoint p{k, nu, a, b};
        Complex d = side(IdentityId::main, Side::rhs, p, 1e-12), c = side(IdentityId::main_continued, Side::rhs, p, 1e-12);
        CHECK(rel_residual(d, c) < 1e-9);
      }
}

TEST_CASE("dixfer at nu = 1/2 is hardy_gen / (2 beta^{1/4})") {
  for (int k : {2, 3, 5})
    for (Complex beta : {Complex(1.0), Complex(2.0), Complex(1, 0.5)}) {
      ParamPoint p{k, 0.5, 0.0, beta};
      Complex h = side(IdentityId::hardy_gen, Side::lhs, p);
      CHECK(relerr(side(IdentityId::dixfer, Side::lhs, p), h / (2.0 * std::pow(beta, 0.25))) < 1e-12);
    }
}

TEST_CASE("ramanujan exchange symmetry") {
  for (auto [a, b] : {std::pair{Complex(1), Complex(2)}, {Complex(0.5), Complex(3)}, {Complex(1, 1), Complex(2)}}) {
    CHECK(side(IdentityId::ramanujan, Side::lhs, {2, 0.5, a, b}) == side(IdentityId::ramanujan, Side::rhs, {2, 0.5, b, a}));
  }
  IdentityReport same = verify(IdentityId::ramanujan, {2, 0.5, 1.5, 1.5}, tol(1e-10));
  CHECK(same.lhs == same.rhs);
}

TEST_CASE("dixonferrar background") {
  // nu = 1/2 with delta = a, beta = b is half of the ramanujan pair
  for (auto [a, b] : {std::pair{1.0, 2.0}, {0.5, 1.0}}) {
    ParamPoint p{2, 0.5, a, b};
    CHECK(relerr(side(IdentityId::dixonferrar, Side::lhs, p), 0.5 * side(IdentityId::ramanujan, Side::lhs, p)) < 1e-12);
    CHECK(relerr(side(IdentityId::dixonferrar, Side::rhs, p), 0.5 * side(IdentityId::ramanujan, Side::rhs, p)) < 1e-12);
  }
  // nu <-> 1 - nu with delta <-> beta swaps the sides
  for (double nu : {0.3, 1.5}) {
    Complex l = side(IdentityId::dixonferrar, Side::lhs, {2, nu, 1.0, 2.0});
    Complex r = side(IdentityId::dixonferrar, Side::rhs, {2, 1 - nu, 2.0, 1.0});
    CHECK(relerr(l, r) < 1e-14);
  }
}

TEST_CASE("goody with alpha = beta") {
  for (int k : {2, 4, 6, 8}) {
    IdentityReport r = verify(IdentityId::goody, {k, 0, 3.0, 3.0}, tol(1e-8));
    CHECK(r.rel_residual < 1e-8);
  }
}

TEST_CASE("power sides decay at the declared rate") {
  struct Case {
    IdentityId id;
    ParamPoint p;
  };
  for (Case c : {Case{IdentityId::main, {3, 1.7, 2.0, 1.0}}, Case{IdentityId::main_continued, {4, 0.5, 3.0, 1.0}},
                 Case{IdentityId::elliptic, {3, 1, 2.0, 1.0}}, Case{IdentityId::ac_nu0, {8, 0, 3.0, 1.0}},
                 Case{IdentityId::ac_nu0, {2, 0, 2.0, 1.0}}, Case{IdentityId::goody, {6, 0, 2.0, 1.0}},
                 Case{IdentityId::cor_half, {5, 0.5, 3.5, 0.8}}, Case{IdentityId::df_limit, {2, 0, 1.0, 1.0}}}) {
    detail::SideSpec s = detail::side_spec(c.id, Side::rhs, normalize(c.id, c.p));
    REQUIRE(s.series);
    REQUIRE_FALSE(s.series->exponential);
    double x1 = 1e3, x2 = 1e4;
    double slope = std::log(std::abs(s.series->g(x2)) / std::abs(s.series->g(x1))) / std::log(x2 / x1);
    CAPTURE(identity_name(c.id));
    CHECK(std::fabs(slope + s.series->sigma) < 0.02);
  }
}

TEST_CASE("region scan") {
  std::vector<std::pair<Complex, Complex>> pts;
  for (double a : {0.5, 1.0, 2.0, 5.0})
    for (double b : {0.5, 1.0, 2.0, 5.0})
      if (a >= b) pts.emplace_back(a, b);
  for (double y : {0.0, 0.5, 1.0}) pts.emplace_back(Complex(2, y), 1.0);
  int evaluated = 0;
  for (IdentityId id : all_identities())
    for (auto [a, b] : pts)
      for (int k : {2, 4}) {
        ParamPoint p = normalize(id, {k, 0.5, a, b});
        try {
          check_point(id, p);
        } catch (const RejectedError&) {
          continue;
        }
        IdentityReport r = verify(id, p, tol(1e-8), Exec::serial);
        CAPTURE(identity_name(id));
        CAPTURE(a);
        CAPTURE(b);
        CHECK(r.rel_residual <= 1e-8);
        ++evaluated;
      }
  CHECK(evaluated > 100);
}

TEST_CASE("halving tol does not worsen the residual") {
  for (IdentityId id : {IdentityId::main, IdentityId::hardy_gen, IdentityId::goody}) {
    ParamPoint p{4, 1.0, 3.0, 1.0};
    double prev = verify(id, p, tol(1e-4)).rel_residual;
    for (double t = 5e-5; t > 1e-11; t /= 2) {
      double r = verify(id, p, tol(t)).rel_residual;
      CHECK(r <= prev + 2 * t);
      prev = r;
    }
  }
}

TEST_CASE("exp sums: Cauchy check on the stopping rule") {
  detail::SideSpec s = detail::side_spec(IdentityId::main, Side::lhs, {2, 0.5, 2.0, 1.0});
  for (double t : {1e-6, 1e-10}) {
    SeriesResult a = exp_lattice_sum(2, s.series->term, s.series->env, tol(t));
    SeriesResult b = exp_lattice_sum(2, s.series->term, s.series->env, tol(t), Exec::parallel, 2 * a.trunc.terms_used);
    CHECK(b.trunc.terms_used >= 2 * a.trunc.terms_used);
    CHECK(std::abs(a.value - b.value) < t * std::abs(b.value));
    CHECK(a.trunc.tail_estimate <= t * std::abs(a.value));
  }
}

TEST_CASE("serial and parallel give identical bits") {
  for (IdentityId id : {IdentityId::main, IdentityId::elliptic, IdentityId::dixonferrar, IdentityId::ac_nu0}) {
    ParamPoint p{6, 0.3, 3.5, 0.8};
    IdentityReport a = verify(id, p, tol(1e-10), Exec::serial), b = verify(id, p, tol(1e-10), Exec::parallel);
    CHECK(a.lhs == b.lhs);
    CHECK(a.rhs == b.rhs);
    CHECK(a.lhs_trunc.terms_used == b.lhs_trunc.terms_used);
  }
}

TEST_CASE("smoothed power sums against closed forms") {
  for (auto [k, s] : {std::pair{2, 2.0}, {4, 3.5}, {6, 4.0}, {8, 5.5}}) {
    Smooth g = [s](double x) { return Complex(std::pow(x, -s)); };
    SeriesResult r = power_lattice_sum(k, g, tol(1e-12), Exec::serial);
    CHECK(std::fabs(r.value.real() / zeta_k(k, s) - 1) < 1e-11);
    CHECK(power_lattice_sum(k, g, tol(1e-12), Exec::parallel).value == r.value);
  }
  // direct truncation of a fast-decaying sum agrees with the smoothed one
  Smooth g = [](double x) { return Complex(std::pow(x + 1, -6)); };
  SeriesResult d = power_direct_sum(2, g, 6, tol(1e-10)), sm = power_lattice_sum(2, g, tol(1e-10));
  CHECK(std::abs(d.value - sm.value) < 1e-10 * std::abs(sm.value));
  CHECK(d.trunc.terms_used <= d.trunc.terms_required);
}

TEST_CASE("bench sides") {
  BenchSides b = bench_sides(IdentityId::main, {2, 0.5, 2.0, 1.0}, tol(1e-8, 100'000));
  CHECK(b.exponential.trunc.terms_used * 10 <= b.power_direct.trunc.terms_required);
  CHECK(b.power_smoothed.trunc.terms_used < b.power_direct.trunc.terms_required);
  BenchSides z = bench_sides(IdentityId::main, {2, 0.5, 5.0, 5.0}, tol(1e-8));
  CHECK(z.exponential.trunc.terms_used == 1);
  CHECK(z.power_direct.trunc.terms_used == 1);
  CHECK_THROWS_AS(bench_sides(IdentityId::ramanujan, {2, 0.5, 1.0, 2.0}, tol(1e-8)), UnsupportedPointError);
}

TEST_CASE("rejections carry reason codes") {
  auto code = [](IdentityId id, ParamPoint p) -> std::string {
    try {
      check_point(id, normalize(id, p));
    } catch (const RejectedError& e) {
      return e.code + " | " + e.what();
    }
    return "";
  };
  CHECK(code(IdentityId::main, {2, 0.5, 1.0, 2.0}) == "region | region: Re(sqrt(alpha)) < Re(sqrt(beta))");
  CHECK(code(IdentityId::main, {2, 0.5, Complex(1, 1e-12), 1.0}).rfind("region | region: Re(sqrt(alpha)) within", 0) == 0);
  CHECK(code(IdentityId::main, {2, 0.5, 2.0, -1.0}).rfind("region", 0) == 0);
  CHECK(code(IdentityId::main, {2, 1e-4, 2.0, 1.0}).rfind("order", 0) == 0);
  CHECK(code(IdentityId::main, {2, -0.5, 2.0, 1.0}).rfind("order", 0) == 0);
  CHECK(code(IdentityId::main_continued, {2, -1.2, 2.0, 1.0}).rfind("order", 0) == 0);
  CHECK(code(IdentityId::main_continued, {3, 0.5, 2.0, 1.0}).rfind("dimension", 0) == 0);
  CHECK(code(IdentityId::main, {11, 0.5, 2.0, 1.0}).rfind("dimension", 0) == 0);
  CHECK(code(IdentityId::goody, {5, 0, 2.0, 1.0}).rfind("dimension", 0) == 0);
  CHECK(code(IdentityId::elliptic, {3, 1, Complex(2, 1), 1.0}).rfind("domain", 0) == 0);
  CHECK(code(IdentityId::df_limit, {2, 0, 0.0, -1.0}).rfind("domain", 0) == 0);
  CHECK(code(IdentityId::main, {2, 0.5, 2.0, 1.0}).empty());
  CHECK_THROWS_AS(verify(IdentityId::main, {2, 0.5, 1.0, 2.0}, tol(1e-8)), RejectedError);
}

TEST_CASE("evaluator errors name their side") {
  try {
    verify(IdentityId::main, {2, 0.5, 2.0, 1.0}, tol(1e-8, 5));
    FAIL("expected a truncation failure");
  } catch (const SideError& e) {
    CHECK(e.side == Side::lhs);
    CHECK(std::string(e.what()).rfind("lhs: ", 0) == 0);
  }
}

TEST_CASE("catalog") {
  CHECK(all_identities().size() == 12);
  for (IdentityId id : all_identities()) CHECK(identity_from_name(identity_name(id)) == id);
  CHECK_FALSE(identity_from_name("nope"));
  ParamPoint p = normalize(IdentityId::hardy_gen, {3, 2.5, 7.0, 1.0});
  CHECK(p.nu == 0);
  CHECK(p.alpha == Complex(0));
  CHECK(normalize(IdentityId::df_limit, {5, 1, 3.0, 2.0}).alpha == Complex(2.0));
}
