#include "hopfield/bounds.hpp"

#include <cmath>
#include <cstring>

#include "doctest.h"
#include "hopfield/errors.hpp"

using namespace hopfield;

namespace {

// 17-digit values from an independent 40-digit evaluation of the closed
// forms and a high-precision scan+golden minimization over c3.
constexpr double kPosObjAt1 = 1.8106222209710463;    // positive_objective(1, 1)
constexpr double kNegObjAt1 = -0.26983541789805545;  // negative_objective(1, 1)
constexpr double kUpperAt1 = 1.7832544811253383;
constexpr double kUpperC3At1 = 0.424607506902154;
constexpr double kLowerAt1 = 0.32016330947179694;
constexpr double kLowerC3At1 = 2.6915388458371894;
constexpr double kSqrt2OverPi = 0.79788456080286536;

constexpr double kAlphaGrid[] = {0.25, 0.5, 1.0, 2.0, 4.0};

}  // namespace

TEST_CASE("gamma_hat closed form") {
  CHECK(gamma_hat(2.0, 1.0, Form::Positive) ==
        doctest::Approx(1.2071067811865475).epsilon(1e-15));
  CHECK(gamma_hat(2.0, 1.0, Form::Negative) ==
        doctest::Approx(-0.20710678118654752).epsilon(1e-15));
  // c3 -> 0 limit is sqrt(16 alpha)/8 = sqrt(alpha)/2
  CHECK(gamma_hat(1e-12, 1.0, Form::Positive) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK_THROWS_AS(gamma_hat(0.0, 1.0, Form::Positive), std::domain_error);
  CHECK_THROWS_AS(gamma_hat(1.0, -1.0, Form::Positive), std::domain_error);
}

TEST_CASE("objective values at c3 = 1, alpha = 1") {
  CHECK(positive_objective(1.0, 1.0) == doctest::Approx(kPosObjAt1).epsilon(1e-13));
  CHECK(negative_objective(1.0, 1.0) == doctest::Approx(kNegObjAt1).epsilon(1e-13));
}

TEST_CASE("c3 -> 0 limits reproduce the baselines") {
  for (double alpha : kAlphaGrid) {
    const BaselineBounds base = baseline_bounds(alpha);
    CAPTURE(alpha);
    CHECK(std::fabs(positive_objective(1e-8, alpha) - base.upper) <= 1e-6);
    CHECK(std::fabs(negative_objective(1e-8, alpha) - (-base.lower)) <= 1e-6);
  }
}

TEST_CASE("baseline bounds") {
  const BaselineBounds b1 = baseline_bounds(1.0);
  CHECK(b1.upper == doctest::Approx(1.7978845608028654).epsilon(1e-15));
  CHECK(b1.lower == doctest::Approx(0.20211543919713464).epsilon(1e-12));
  const BaselineBounds b4 = baseline_bounds(4.0);
  CHECK(b4.upper == doctest::Approx(2.0 + kSqrt2OverPi).epsilon(1e-15));
  CHECK(b4.lower == doctest::Approx(2.0 - kSqrt2OverPi).epsilon(1e-15));
  // exact cancellation point
  CHECK(std::fabs(baseline_bounds(2.0 / 3.14159265358979323846).lower) <= 1e-15);
  CHECK_THROWS_AS(baseline_bounds(0.0), std::domain_error);
}

TEST_CASE("minimize_scalar on simple functions") {
  const auto quad = [](double x) { return (x - 2.0) * (x - 2.0); };
  const MinimizeResult r1 = minimize_scalar(quad, 0.1, 10.0, 1e-10);
  CHECK(std::fabs(r1.x_star - 2.0) <= 1e-8);
  CHECK(r1.f_star <= 1e-15);
  CHECK(r1.evaluations > 2048);

  const auto kink = [](double x) { return std::fabs(x - 1.0); };
  const MinimizeResult r2 = minimize_scalar(kink, 0.1, 10.0, 1e-10);
  CHECK(std::fabs(r2.x_star - 1.0) <= 1e-8);

  CHECK_THROWS_AS(minimize_scalar(quad, -1.0, 1.0, 1e-10), std::domain_error);
  const auto bad = [](double x) { return x > 5.0 ? std::nan("") : x; };
  CHECK_THROWS_AS(minimize_scalar(bad, 0.1, 10.0, 1e-10), NumericalError);
}

TEST_CASE("minimize_scalar finds the lifted optimum, cross-checked by a dense grid") {
  const auto f = [](double c3) { return positive_objective(c3, 1.0); };
  const MinimizeResult r = minimize_scalar(f, 1e-4, 50.0, 1e-10);
  CHECK(std::fabs(r.f_star - 1.7832) <= 1e-4);

  // dense-grid oracle: no grid point may beat the reported minimum, and the
  // grid argmin must sit next to x_star
  double grid_best = 1e300, grid_x = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double x = 1e-4 * std::exp(std::log(50.0 / 1e-4) * i / 19999.0);
    const double y = f(x);
    if (y < grid_best) {
      grid_best = y;
      grid_x = x;
    }
  }
  CHECK(r.f_star <= grid_best + 1e-12);
  CHECK(std::fabs(std::log(grid_x / r.x_star)) <= 2.0 * std::log(50.0 / 1e-4) / 19999.0);
}

TEST_CASE("lifted bounds at alpha = 1 match the reference optimum") {
  const BoundResult up = lifted_upper_bound(1.0);
  CHECK(std::fabs(up.value - 1.7832) <= 1e-4);
  CHECK(up.value == doctest::Approx(kUpperAt1).epsilon(1e-10));
  CHECK(std::fabs(up.c3_star - kUpperC3At1) <= 1e-6);
  CHECK(up.value < 1.7978846);
  CHECK(up.gamma_hat > up.c3_star / 2.0);
  CHECK(up.baseline == doctest::Approx(1.7978845608028654).epsilon(1e-15));

  const BoundResult lo = lifted_lower_bound(1.0);
  CHECK(std::fabs(lo.value - 0.32016) <= 1e-4);
  CHECK(lo.value == doctest::Approx(kLowerAt1).epsilon(1e-10));
  CHECK(std::fabs(lo.c3_star - kLowerC3At1) <= 1e-6);
  CHECK(lo.value > 0.2021154);
  CHECK(lo.gamma_hat < 0.0);
}

TEST_CASE("lifted bounds: alpha = 4 tightness") {
  CHECK(lifted_upper_bound(4.0).value < 2.0 + kSqrt2OverPi);
  CHECK(lifted_lower_bound(4.0).value > 2.0 - kSqrt2OverPi);
}

TEST_CASE("tightness and monotonicity across the alpha grid") {
  double prev_upper = 0.0;
  for (double alpha : kAlphaGrid) {
    CAPTURE(alpha);
    const BoundResult up = lifted_upper_bound(alpha);
    const BoundResult lo = lifted_lower_bound(alpha);
    const BaselineBounds base = baseline_bounds(alpha);
    CHECK(up.value < base.upper);
    CHECK(lo.value > base.lower);
    CHECK(up.c3_star > 0.0);
    CHECK(lo.c3_star > 0.0);
    CHECK(up.value > prev_upper);
    prev_upper = up.value;
  }
}

TEST_CASE("bound results are bitwise deterministic") {
  const BoundResult a = lifted_upper_bound(1.0);
  const BoundResult b = lifted_upper_bound(1.0);
  CHECK(std::memcmp(&a.value, &b.value, sizeof(double)) == 0);
  CHECK(std::memcmp(&a.c3_star, &b.c3_star, sizeof(double)) == 0);
  CHECK(a.evaluations == b.evaluations);
  const BoundResult c = lifted_lower_bound(0.5);
  const BoundResult d = lifted_lower_bound(0.5);
  CHECK(std::memcmp(&c.value, &d.value, sizeof(double)) == 0);
}
