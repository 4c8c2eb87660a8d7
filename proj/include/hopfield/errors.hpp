#pragma once

#include <stdexcept>
#include <string>

namespace hopfield {

/// Problem size exceeds a configured enumeration limit. Carries a work
/// estimate so callers can report what the refused computation would cost.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::string msg, std::uint64_t states, double flops)
      : std::runtime_error(std::move(msg)), states_required(states), flops_estimate(flops) {}

  std::uint64_t states_required;
  double flops_estimate;
};

/// Numerical failure: NaN from a user-supplied objective, overflow in an
/// exponential, or a violated internal formula invariant.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hopfield
