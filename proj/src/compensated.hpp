#pragma once

#include <cmath>

namespace hopfield::detail {

// Neumaier-compensated accumulator, engaged for squared-norm sums with more
// than 10^4 terms where plain summation could shed digits.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    comp += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }

  double total() const { return sum + comp; }
};

inline constexpr int kCompensateRows = 10000;

}  // namespace hopfield::detail
