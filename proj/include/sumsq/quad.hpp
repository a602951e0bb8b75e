#pragma once
#include <functional>
#include <vector>

#include "sumsq/complex.hpp"
#include "sumsq/exec.hpp"

namespace sumsq {

struct QuadResult {
  Complex value;
  double err_estimate = 0;
  int panels = 1;
};

using Integrand = std::function<Complex(double)>;

struct QuadOptions {
  double tol = 1e-12;  // relative
  int min_level = 3;
  int max_level = 12;
  int extra_levels = 0;  // refine this many levels past convergence
};

// tanh-sinh on [a, b]; integrable endpoint singularities are fine.
QuadResult tanh_sinh(const Integrand& f, double a, double b, const QuadOptions& opt = {});
// exp-sinh on [a, inf) for integrands decaying at least algebraically.
QuadResult exp_sinh(const Integrand& f, double a, const QuadOptions& opt = {});

// j_{mu,s}: s-th positive zero of J_mu (McMahon start, Newton polish to 1e-10).
double bessel_zero(double mu, int s);

struct OscOptions {
  double tol = 1e-11;
  int accel_start = 5;   // panels before this index are summed directly
  int max_panels = 160;
  Exec exec = Exec::parallel;
};

// int_0^inf g(u) du where g contains the factor J_mu(rho u): panels between
// consecutive zeros, CVZ acceleration of the alternating panel sequence.
QuadResult oscillatory_bessel(const Integrand& g, double mu, double rho, const OscOptions& opt = {});

// Panel values themselves (P_0 = [0, u_1], P_s = [u_s, u_{s+1}]).
std::vector<Complex> bessel_panels(const Integrand& g, double mu, double rho, int count, Exec exec);

// ---- integral evaluations: quadrature side and closed form ----

QuadResult fock_integral(double rho, Complex z, Complex w, double nu, const OscOptions& opt = {});
Complex fock_closed_form(double rho, Complex z, Complex w, double nu);

QuadResult koshliakov_integral(double rho, Complex z, Complex w, double nu, double mu,
                               const OscOptions& opt = {});
Complex koshliakov_closed_form(double rho, Complex z, Complex w, double nu, double mu);

// int_0^inf e^{-a t} J_nu(b t) t^{mu-1} dt, or with I_nu when modified is set.
QuadResult laplace_bessel(Complex a, Complex b, double mu, double nu, bool modified = false,
                          const QuadOptions& opt = {});
Complex laplace_bessel_closed_form(Complex a, Complex b, double mu, double nu, bool modified = false);
// the same closed form written as in the Euler-transformed version
Complex laplace_bessel_closed_form_euler(Complex a, Complex b, double mu, double nu);

// int_0^inf e^{-((alpha+beta)/(alpha-beta)) t} I_nu(t) dt / t  vs  (1/nu) ratio^nu
QuadResult choi2_integral(double nu, double alpha, double beta, const QuadOptions& opt = {});
double choi2_closed_form(double nu, double alpha, double beta);
// int_0^inf y^{k/2-1} f(y) dy with f the main identity's test function
QuadResult choi3_integral(int k, double nu, double alpha, double beta, const QuadOptions& opt = {});
double choi3_closed_form(int k, double nu, double alpha, double beta);

// int_0^inf x^{a-1} I_nu(b x) K_nu(c x) dx and its Legendre/2F1 closed form.
QuadResult ik_mellin(double a, double b, double c, double nu, const QuadOptions& opt = {});
double ik_mellin_closed_form(double a, double b, double c, double nu);

// Forward Hankel transform of F(x) = x^{k/4-1/2} f(x) at x, vs closed-form G.
QuadResult hankel_pair_check(int k, double nu, double alpha, double beta, double x,
                             const OscOptions& opt = {});
double hankel_pair_closed_form(int k, double nu, double alpha, double beta, double x);
// Inverse direction: pi int_0^inf G(t) J_{k/2-1}(2 pi sqrt(x t)) dt / x^{k/4-1/2}  ->  f(x)
QuadResult hankel_inverse(int k, double nu, double alpha, double beta, double x,
                          const QuadOptions& opt = {});

}  // namespace sumsq
