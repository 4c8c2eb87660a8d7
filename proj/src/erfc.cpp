#include "hopfield/erfc.hpp"

#include <cmath>
#include <stdexcept>

#include "hopfield/errors.hpp"

namespace hopfield {

namespace {

constexpr double kTwoOverSqrtPi = 1.1283791670955125739;  // 2/sqrt(pi)
constexpr double kOneOverSqrtPi = 0.5641895835477562869;  // 1/sqrt(pi)

// Maclaurin series of erf for |x| < 1. Terms a_k = (-1)^k x^(2k+1)/(k!(2k+1))
// via the ratio a_{k+1}/a_k = -x^2 (2k+1)/((k+1)(2k+3)).
double erf_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int k = 0; k < 80; ++k) {
    term *= -x2 * (2 * k + 1) / (static_cast<double>(k + 1) * (2 * k + 3));
    const double prev = sum;
    sum += term;
    if (sum == prev) break;
  }
  return kTwoOverSqrtPi * sum;
}

// Modified Lentz evaluation of the classical continued fraction
//   sqrt(pi) e^{x^2} erfc(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// (partial numerators k/2), valid and fast for x >= 1.
double erfc_cf(double x) {
  constexpr double kTiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int k = 1; k <= 500; ++k) {
    const double ak = 0.5 * k;
    d = x + ak * d;
    if (d == 0.0) d = kTiny;
    c = x + ak / c;
    if (c == 0.0) c = kTiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 4e-17) {
      // exp(-x^2) with the rounding of x*x compensated: x^2 = x2 + e exactly,
      // so e^{-x^2} = e^{-x2} * (1 - e) to first order.
      const double x2 = x * x;
      const double e = std::fma(x, x, -x2);
      return kOneOverSqrtPi * std::exp(-x2) * (1.0 - e) / f;
    }
  }
  throw NumericalError("erfc: continued fraction failed to converge");
}

}  // namespace

double erfc(double x) {
  if (!std::isfinite(x)) throw std::domain_error("erfc: argument must be finite");
  const double a = std::fabs(x);
  if (a < 1.0) {
    // erfc(x) = 1 - erf(x); the signed series keeps both branches cancellation-safe
    return 1.0 - erf_series(x);
  }
  const double tail = erfc_cf(a);
  return x > 0.0 ? tail : 2.0 - tail;
}

}  // namespace hopfield
