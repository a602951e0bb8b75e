#include <cmath>

#include "sumsq/errors.hpp"
#include "sumsq/specfun.hpp"

namespace sumsq {

namespace {
bool nonpositive_integer(double x) { return x <= 0 && x == std::floor(x); }

// Lanczos g=7, n=9 (Godfrey's coefficients), ~15 digits for Re z >= 1/2.
constexpr double kLanczos[9] = {
    0.99999999999980993227684700473478,  676.520368121885098567009190444019,
    -1259.13921672240287047156078755283, 771.3234287776530788486528258894,
    -176.61502916214059906584551354,     12.507343278686904814458936853,
    -0.13857109526572011689554707,       9.984369578019570859563e-6,
    1.50563273514931155834e-7};
}  // namespace

double gamma(double x) {
  if (nonpositive_integer(x)) throw PoleError("gamma: pole at nonpositive integer");
  return std::tgamma(x);
}

double rgamma(double x) {
  if (nonpositive_integer(x)) return 0.0;
  if (x > 171.0) return 0.0;
  return 1.0 / std::tgamma(x);
}

Complex gamma(Complex z) {
  if (z.imag() == 0.0) return gamma(z.real());
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * gamma(1.0 - z));
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
  Complex t = z + 7.5;
  return std::sqrt(2 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace sumsq
