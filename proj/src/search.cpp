#include "hopfield/search.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "compensated.hpp"
#include "hopfield/rng.hpp"
#include "hopfield/threads.hpp"

namespace hopfield {

namespace {

// Squared-norm gain of flipping spin j: with v = H s,
//   ||v - 2 s_j h_j||^2 - ||v||^2 = 4 (||h_j||^2 - s_j <v, h_j>).
constexpr double kImproveTol = 1e-12;

// Each restart is an iterated descent: run single-flip descent to 1-flip
// local optimality, then repeatedly kick a few random spins and re-descend,
// keeping the kicked state only when it improves. A plain descent from a
// uniform start stalls well above the reachable optimum at n ~ 50; the kick
// chain closes that gap within the same per-restart sweep budget.
constexpr int kKickSpins = 3;
constexpr int kStallLimit = 30;

struct RestartOutcome {
  double sq = 0.0;  // fresh squared norm at the chain's best local optimum
  std::vector<std::int8_t> signs;
  std::uint64_t moves = 0;  // accepted descent flips plus kick rounds
  bool hit_sweep_limit = false;
};

struct Workspace {
  const HopfieldInstance& h;
  std::vector<double> cols;   // column-major copy
  std::vector<double> colsq;  // per-column squared norms

  explicit Workspace(const HopfieldInstance& inst) : h(inst) {
    cols.resize(static_cast<std::size_t>(h.n) * h.m);
    colsq.assign(h.n, 0.0);
    for (int i = 0; i < h.m; ++i)
      for (int j = 0; j < h.n; ++j) {
        const double e = h.at(i, j);
        cols[static_cast<std::size_t>(j) * h.m + i] = e;
        colsq[j] += e * e;
      }
  }

  double delta(const std::vector<double>& v, const std::vector<std::int8_t>& signs, int j) const {
    const double* col = cols.data() + static_cast<std::size_t>(j) * h.m;
    double dot = 0.0;
    for (int i = 0; i < h.m; ++i) dot += v[i] * col[i];
    return 4.0 * (colsq[j] - signs[j] * dot);
  }

  void flip(std::vector<double>& v, std::vector<std::int8_t>& signs, int j) const {
    const double* col = cols.data() + static_cast<std::size_t>(j) * h.m;
    const double t = -2.0 * signs[j];
    for (int i = 0; i < h.m; ++i) v[i] += t * col[i];
    signs[j] = static_cast<std::int8_t>(-signs[j]);
  }

  double fresh_sq(const std::vector<std::int8_t>& signs) const {
    const bool compensate = h.m > detail::kCompensateRows;
    detail::CompensatedSum cs;
    double sq = 0.0;
    for (int i = 0; i < h.m; ++i) {
      const double* row = h.entries.data() + static_cast<std::size_t>(i) * h.n;
      double acc = 0.0;
      for (int j = 0; j < h.n; ++j) acc += signs[j] > 0 ? row[j] : -row[j];
      if (compensate)
        cs.add(acc * acc);
      else
        sq += acc * acc;
    }
    return compensate ? cs.total() : sq;
  }
};

struct DescentStats {
  int sweeps = 0;
  bool certified = false;  // reached 1-flip local optimality within budget
};

// Single-flip descent on v/signs in place. A steepest sweep scans all n
// deltas and applies the best improving one; first-improvement probes
// cyclically (n probes are charged as one sweep).
DescentStats descend(const Workspace& ws, Form form, Strategy strategy, int budget, Rng& rng,
                     std::vector<double>& v, std::vector<std::int8_t>& signs,
                     std::uint64_t* moves) {
  const int n = ws.h.n;
  const bool maximize = form == Form::Positive;
  const auto improving = [&](double d) { return maximize ? d > kImproveTol : d < -kImproveTol; };
  DescentStats st;

  if (strategy == Strategy::Steepest) {
    while (st.sweeps < budget) {
      ++st.sweeps;
      int pick = -1;
      double pick_d = 0.0;
      for (int j = 0; j < n; ++j) {
        const double d = ws.delta(v, signs, j);
        if (!improving(d)) continue;
        if (pick < 0 || (maximize ? d > pick_d : d < pick_d)) {
          pick = j;
          pick_d = d;
        }
      }
      if (pick < 0) {
        st.certified = true;
        break;
      }
      ws.flip(v, signs, pick);
      ++*moves;
    }
    return st;
  }

  int pos = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  int since_improve = 0;
  long probes = 0;
  const long max_probes = static_cast<long>(budget) * n;
  while (probes < max_probes) {
    const double d = ws.delta(v, signs, pos);
    ++probes;
    if (improving(d)) {
      ws.flip(v, signs, pos);
      ++*moves;
      since_improve = 0;
    } else if (++since_improve == n) {
      st.certified = true;
      break;
    }
    pos = pos + 1 == n ? 0 : pos + 1;
  }
  st.sweeps = static_cast<int>((probes + n - 1) / n);
  return st;
}

RestartOutcome run_restart(const Workspace& ws, Form form, const SearchConfig& cfg,
                           std::uint64_t restart) {
  const int n = ws.h.n;
  const int m = ws.h.m;
  Rng rng(mix_seed(cfg.seed, restart));
  RestartOutcome out;

  std::vector<std::int8_t> signs(n);
  for (auto& s : signs) s = static_cast<std::int8_t>(rng.sign());
  std::vector<double> v(m, 0.0);
  for (int j = 0; j < n; ++j) {
    const double* col = ws.cols.data() + static_cast<std::size_t>(j) * m;
    for (int i = 0; i < m; ++i) v[i] += signs[j] > 0 ? col[i] : -col[i];
  }

  int budget = cfg.max_sweeps;
  DescentStats st = descend(ws, form, cfg.strategy, budget, rng, v, signs, &out.moves);
  budget -= st.sweeps;
  out.hit_sweep_limit = !st.certified;
  out.signs = signs;
  out.sq = ws.fresh_sq(signs);
  std::vector<double> best_v = v;

  const bool maximize = form == Form::Positive;
  const int kick = kKickSpins < n ? kKickSpins : n;
  int stall = 0;
  while (budget > 0 && stall < kStallLimit && st.certified) {
    signs = out.signs;
    v = best_v;
    // kick: re-randomize a few distinct spins, then descend again
    int chosen[kKickSpins];
    for (int k = 0; k < kick; ++k) {
      int j;
      bool fresh;
      do {
        j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        fresh = true;
        for (int l = 0; l < k; ++l) fresh = fresh && chosen[l] != j;
      } while (!fresh);
      chosen[k] = j;
      ws.flip(v, signs, j);
    }
    ++out.moves;

    st = descend(ws, form, cfg.strategy, budget, rng, v, signs, &out.moves);
    budget -= st.sweeps;
    if (!st.certified) {
      out.hit_sweep_limit = true;
      break;
    }
    const double sq = ws.fresh_sq(signs);
    if (maximize ? sq > out.sq + kImproveTol : sq < out.sq - kImproveTol) {
      out.sq = sq;
      out.signs = signs;
      best_v = v;
      stall = 0;
    } else {
      ++stall;
    }
  }
  return out;
}

}  // namespace

const char* to_string(Strategy s) {
  return s == Strategy::Steepest ? "steepest" : "first-improvement";
}

Strategy parse_strategy(const std::string& s) {
  if (s == "steepest") return Strategy::Steepest;
  if (s == "first" || s == "first-improvement") return Strategy::FirstImprovement;
  throw std::invalid_argument("unknown strategy: " + s);
}

GroundStateResult bit_flip_search(const HopfieldInstance& h, Form form, const SearchConfig& cfg,
                                  int threads) {
  if (cfg.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (cfg.max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");

  const Workspace ws(h);
  std::vector<RestartOutcome> outcomes(cfg.restarts);
  const int workers = resolve_threads(threads) < cfg.restarts ? resolve_threads(threads)
                                                              : cfg.restarts;
  if (workers <= 1) {
    for (int r = 0; r < cfg.restarts; ++r)
      outcomes[r] = run_restart(ws, form, cfg, static_cast<std::uint64_t>(r));
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int r = w; r < cfg.restarts; r += workers)
          outcomes[r] = run_restart(ws, form, cfg, static_cast<std::uint64_t>(r));
      });
    for (auto& t : pool) t.join();
  }

  // fold in restart order, as a serial loop would
  const bool maximize = form == Form::Positive;
  std::size_t win = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    const bool better = maximize ? outcomes[r].sq > outcomes[win].sq
                                 : outcomes[r].sq < outcomes[win].sq;
    const bool tie = outcomes[r].sq == outcomes[win].sq;
    if (better || (tie && outcomes[r].signs < outcomes[win].signs)) win = r;
  }

  GroundStateResult res;
  res.form = form;
  res.method = Method::BitFlip;
  res.witness.signs = outcomes[win].signs;
  res.value = std::sqrt(outcomes[win].sq / h.n);
  res.normalized = res.value / std::sqrt(static_cast<double>(h.n));
  res.states_visited = 0;
  for (const auto& o : outcomes) {
    res.states_visited += 1 + o.moves;
    res.hit_sweep_limit = res.hit_sweep_limit || o.hit_sweep_limit;
  }
  return res;
}

}  // namespace hopfield
