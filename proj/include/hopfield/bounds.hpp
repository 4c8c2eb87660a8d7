#pragma once

#include <functional>

#include "hopfield/forms.hpp"

namespace hopfield {

/// Closed-form bounds obtained without exponential lifting:
/// upper = sqrt(2/pi) + sqrt(alpha), lower = sqrt(alpha) - sqrt(2/pi).
/// The lower bound is negative (vacuous) for alpha < 2/pi and reported as-is.
struct BaselineBounds {
  double upper;
  double lower;
};

BaselineBounds baseline_bounds(double alpha);

/// Closed-form optimizer of the inner gamma problem:
///   Positive: (2 c3 + sqrt(4 c3^2 + 16 alpha)) / 8   (> c3/2 always)
///   Negative: (2 c3 - sqrt(4 c3^2 + 16 alpha)) / 8   (< 0 always)
double gamma_hat(double c3, double alpha, Form form);

/// Lifted bound objective for the positive form,
///   log(erfc(-c3/sqrt(2)))/c3 + gamma + alpha/(2 c3) * -log(1 - c3/(2 gamma))
/// with gamma = gamma_hat(c3, alpha, Positive). Minimizing over c3 > 0 gives
/// the upper bound on the normalized ground-state energy.
double positive_objective(double c3, double alpha);

/// Same objective with the negative-form gamma; its minimum over c3 > 0,
/// negated, is the lower bound on the normalized ground-state energy.
double negative_objective(double c3, double alpha);

struct MinimizeResult {
  double x_star;
  double f_star;
  long evaluations;
};

/// One-dimensional minimization on [lo, hi], 0 < lo < hi: log-spaced coarse
/// scan (2048 points) to bracket, then golden-section to absolute tolerance
/// `tol` on the bracket width. A NaN from `f` raises NumericalError naming
/// the offending abscissa. Deterministic.
MinimizeResult minimize_scalar(const std::function<double(double)>& f, double lo, double hi,
                               double tol);

struct BoundResult {
  Form form;
  double alpha;
  double c3_star;     // optimal lifting scale
  double gamma_hat;   // inner optimizer at c3_star
  double value;       // the bound itself
  double baseline;    // unlifted comparison value
  long evaluations;   // objective calls spent in the optimizer
};

/// Upper bound on E max ||Hx||_2 / sqrt(n) for the positive form at aspect
/// ratio alpha (= 1.7832... at alpha = 1).
BoundResult lifted_upper_bound(double alpha);

/// Lower bound on E min ||Hx||_2 / sqrt(n) for the negative form at aspect
/// ratio alpha (= 0.32016... at alpha = 1).
BoundResult lifted_lower_bound(double alpha);

}  // namespace hopfield
