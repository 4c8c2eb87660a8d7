#include "hopfield/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfield/erfc.hpp"
#include "hopfield/errors.hpp"
#include "hopfield/instance.hpp"

namespace hopfield {

namespace {

constexpr double kSqrtTwoOverPi = 0.79788456080286536;  // sqrt(2/pi)
constexpr double kInvSqrt2 = 0.70710678118654752;

constexpr int kScanPoints = 2048;
constexpr double kScanLo = 1e-4;
constexpr double kScanHi = 50.0;
constexpr double kGoldenTol = 1e-10;

void check_domain(double c3, double alpha) {
  if (!(c3 > 0.0) || !std::isfinite(c3)) throw std::domain_error("c3 must be positive and finite");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::domain_error("alpha must be positive and finite");
}

double objective(double c3, double alpha, Form form) {
  const double gamma = gamma_hat(c3, alpha, form);
  const double arg = 1.0 - c3 / (2.0 * gamma);
  if (form == Form::Positive && !(arg > 0.0 && arg < 1.0))
    throw NumericalError("positive objective: log argument left (0,1), c3=" +
                         std::to_string(c3));
  // gamma < 0 for the negative form, so arg > 1 there
  return std::log(erfc(-c3 * kInvSqrt2)) / c3 + gamma - alpha / (2.0 * c3) * std::log(arg);
}

BoundResult optimize(double alpha, Form form) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::domain_error("alpha must be positive and finite");
  const auto f = [alpha, form](double c3) { return objective(c3, alpha, form); };
  const MinimizeResult r = minimize_scalar(f, kScanLo, kScanHi, kGoldenTol);
  const BaselineBounds base = baseline_bounds(alpha);
  BoundResult out;
  out.form = form;
  out.alpha = alpha;
  out.c3_star = r.x_star;
  out.gamma_hat = gamma_hat(r.x_star, alpha, form);
  out.value = form == Form::Positive ? r.f_star : -r.f_star;
  out.baseline = form == Form::Positive ? base.upper : base.lower;
  out.evaluations = r.evaluations;
  return out;
}

}  // namespace

BaselineBounds baseline_bounds(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::domain_error("alpha must be positive and finite");
  const double root = std::sqrt(alpha);
  return {kSqrtTwoOverPi + root, root - kSqrtTwoOverPi};
}

double gamma_hat(double c3, double alpha, Form form) {
  check_domain(c3, alpha);
  const double disc = std::sqrt(4.0 * c3 * c3 + 16.0 * alpha);
  return form == Form::Positive ? (2.0 * c3 + disc) / 8.0 : (2.0 * c3 - disc) / 8.0;
}

double positive_objective(double c3, double alpha) { return objective(c3, alpha, Form::Positive); }

double negative_objective(double c3, double alpha) { return objective(c3, alpha, Form::Negative); }

MinimizeResult minimize_scalar(const std::function<double(double)>& f, double lo, double hi,
                               double tol) {
  if (!(lo > 0.0) || !(lo < hi)) throw std::domain_error("minimize_scalar: need 0 < lo < hi");
  if (!(tol > 0.0)) throw std::domain_error("minimize_scalar: tol must be positive");

  long evals = 0;
  const auto eval = [&](double x) {
    const double y = f(x);
    ++evals;
    if (std::isnan(y))
      throw NumericalError("minimize_scalar: objective returned NaN at x=" + format_double(x));
    return y;
  };

  // coarse log-spaced scan to bracket the minimizer
  const double ratio = std::log(hi / lo);
  int best = 0;
  double best_f = eval(lo);
  std::vector<double> xs(kScanPoints);
  xs[0] = lo;
  for (int i = 1; i < kScanPoints; ++i) {
    xs[i] = lo * std::exp(ratio * i / (kScanPoints - 1));
    const double y = eval(xs[i]);
    if (y < best_f) {
      best_f = y;
      best = i;
    }
  }
  double a = xs[best > 0 ? best - 1 : 0];
  double b = xs[best < kScanPoints - 1 ? best + 1 : kScanPoints - 1];

  // golden-section refinement
  constexpr double kInvPhi = 0.6180339887498948482;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = eval(d);
    }
  }
  const double x_star = 0.5 * (a + b);
  return {x_star, eval(x_star), evals};
}

BoundResult lifted_upper_bound(double alpha) { return optimize(alpha, Form::Positive); }

BoundResult lifted_lower_bound(double alpha) { return optimize(alpha, Form::Negative); }

}  // namespace hopfield
