#pragma once

#include <cstdint>

#include "hopfield/exact.hpp"
#include "hopfield/forms.hpp"
#include "hopfield/instance.hpp"

namespace hopfield {

enum class Strategy { Steepest, FirstImprovement };

const char* to_string(Strategy s);
Strategy parse_strategy(const std::string& s);

struct SearchConfig {
  int restarts = 1;
  Strategy strategy = Strategy::Steepest;
  int max_sweeps = 1000;
  std::uint64_t seed = 0;
};

/// Randomized local search over single spin flips. Each restart r starts
/// from i.i.d. uniform signs drawn from seed mix_seed(cfg.seed, r), descends
/// to 1-flip local optimality (each flip scored in O(m) on the squared norm,
/// improvement threshold 1e-12 absolute), then iterates: kick three random
/// spins, descend again, keep the result only when it improves. A restart
/// ends after 30 consecutive non-improving kicks or cfg.max_sweeps total
/// sweeps (the latter sets hit_sweep_limit). Returns the best local optimum
/// across restarts; value ties resolve to the lexicographically smallest
/// witness. Deterministic for fixed inputs regardless of thread count.
GroundStateResult bit_flip_search(const HopfieldInstance& h, Form form, const SearchConfig& cfg,
                                  int threads = 0);

}  // namespace hopfield
