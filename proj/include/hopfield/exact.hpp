#pragma once

#include <cstdint>

#include "hopfield/forms.hpp"
#include "hopfield/instance.hpp"

namespace hopfield {

enum class Method { ExactGray, ExactNaive, BitFlip };

const char* to_string(Method m);

struct GroundStateResult {
  Form form = Form::Positive;
  double value = 0.0;       // xi = ||H s||_2 / sqrt(n), recomputed fresh at the witness
  SpinVector witness;       // attains `value`
  double normalized = 0.0;  // value / sqrt(n)
  std::uint64_t states_visited = 0;
  Method method = Method::ExactGray;
  bool hit_sweep_limit = false;  // BitFlip only: some restart ran out of sweeps
};

inline constexpr int kDefaultEnumerationLimit = 30;

/// Exact optimum over all 2^n spin vectors. Exploits the s -> -s symmetry by
/// fixing the first spin to +1 (2^(n-1) states visited) and sweeps them in
/// binary-reflected Gray order with an O(m) incremental update of v = H s per
/// flip. Equal-valued optima resolve to the first one in canonical Gray
/// order, independent of thread count. Throws CapacityError (with a work
/// estimate) when n exceeds `limit`.
GroundStateResult exact_ground_state(const HopfieldInstance& h, Form form,
                                     int limit = kDefaultEnumerationLimit, int threads = 0);

/// Reference enumerator: recomputes ||H s||_2 from scratch for every state,
/// same visiting order and tie-breaking as exact_ground_state. n <= limit
/// (default 16).
GroundStateResult exact_ground_state_naive(const HopfieldInstance& h, Form form, int limit = 16);

}  // namespace hopfield
