#include "hopfield/exact.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <thread>
#include <vector>

#include "compensated.hpp"
#include "hopfield/errors.hpp"
#include "hopfield/threads.hpp"

namespace hopfield {

namespace {

// Signs for free spins 1..n-1 from the Gray code of `counter`; spin 0 stays +1.
void gray_state(std::uint64_t counter, int n, std::int8_t* signs) {
  const std::uint64_t gray = counter ^ (counter >> 1);
  signs[0] = 1;
  for (int b = 0; b < n - 1; ++b) signs[1 + b] = (gray >> b) & 1 ? -1 : 1;
}

double squared_product_norm(const HopfieldInstance& h, const std::int8_t* signs,
                            std::vector<double>* v_out) {
  const bool compensate = h.m > detail::kCompensateRows;
  detail::CompensatedSum cs;
  double sq = 0.0;
  for (int i = 0; i < h.m; ++i) {
    const double* row = h.entries.data() + static_cast<std::size_t>(i) * h.n;
    double acc = 0.0;
    for (int j = 0; j < h.n; ++j) acc += signs[j] > 0 ? row[j] : -row[j];
    if (v_out) (*v_out)[i] = acc;
    if (compensate)
      cs.add(acc * acc);
    else
      sq += acc * acc;
  }
  return compensate ? cs.total() : sq;
}

struct ChunkBest {
  double value = 0.0;  // fresh ||H s||/sqrt(n) at the chunk winner
  std::uint64_t counter = 0;
  SpinVector witness;
};

// Sweep counters [c0, c1) in Gray order, tracking the best state. The winner
// within a chunk is the first strict improvement, i.e. the smallest counter
// among incremental ties, which makes the cross-chunk reduction below agree
// with a single-threaded sweep.
ChunkBest sweep_chunk(const HopfieldInstance& h, const std::vector<double>& cols, Form form,
                      std::uint64_t c0, std::uint64_t c1) {
  const int m = h.m;
  const int n = h.n;
  std::vector<std::int8_t> signs(n);
  gray_state(c0, n, signs.data());
  std::vector<double> v(m);
  double sq = squared_product_norm(h, signs.data(), &v);

  double best_sq = sq;
  std::uint64_t best_counter = c0;
  std::vector<std::int8_t> best_signs = signs;

  const bool maximize = form == Form::Positive;
  for (std::uint64_t c = c0 + 1; c < c1; ++c) {
    const int spin = 1 + std::countr_zero(c);
    const std::int8_t ns = -signs[spin];
    signs[spin] = ns;
    const double* col = cols.data() + static_cast<std::size_t>(spin) * m;
    const double t = 2.0 * ns;
    sq = 0.0;
    for (int i = 0; i < m; ++i) {
      const double vi = v[i] + t * col[i];
      v[i] = vi;
      sq += vi * vi;
    }
    if (maximize ? sq > best_sq : sq < best_sq) {
      best_sq = sq;
      best_counter = c;
      best_signs = signs;
    }
  }

  ChunkBest out;
  out.counter = best_counter;
  out.witness.signs = std::move(best_signs);
  out.value = std::sqrt(squared_product_norm(h, out.witness.signs.data(), nullptr) / n);
  return out;
}

GroundStateResult single_state_result(const HopfieldInstance& h, Form form, Method method) {
  GroundStateResult r;
  r.form = form;
  r.method = method;
  r.witness.signs.assign(1, 1);
  r.value = evaluate(h, r.witness);
  r.normalized = r.value / std::sqrt(static_cast<double>(h.n));
  r.states_visited = 1;
  return r;
}

void check_limit(const HopfieldInstance& h, int limit, const char* what) {
  if (h.n <= limit) return;
  const std::uint64_t states = std::uint64_t{1} << (h.n > 63 ? 63 : h.n - 1);
  const double flops = static_cast<double>(states) * h.m * 3.0;
  throw CapacityError(std::string(what) + ": n=" + std::to_string(h.n) +
                          " exceeds enumeration limit " + std::to_string(limit) + " (would visit " +
                          std::to_string(states) + " states, ~" + std::to_string(flops) + " flops)",
                      states, flops);
}

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::ExactGray: return "exact-gray";
    case Method::ExactNaive: return "exact-naive";
    case Method::BitFlip: return "bitflip";
  }
  return "?";
}

GroundStateResult exact_ground_state(const HopfieldInstance& h, Form form, int limit,
                                     int threads) {
  check_limit(h, limit, "exact_ground_state");
  if (h.n == 1) return single_state_result(h, form, Method::ExactGray);

  // column-major copy for the flip update
  std::vector<double> cols(static_cast<std::size_t>(h.n) * h.m);
  for (int i = 0; i < h.m; ++i)
    for (int j = 0; j < h.n; ++j)
      cols[static_cast<std::size_t>(j) * h.m + i] = h.at(i, j);

  const std::uint64_t total = std::uint64_t{1} << (h.n - 1);
  const int want = resolve_threads(threads);
  const std::uint64_t max_chunks = total / 1024 > 0 ? total / 1024 : 1;
  const std::uint64_t chunks =
      static_cast<std::uint64_t>(want) < max_chunks ? static_cast<std::uint64_t>(want) : max_chunks;

  std::vector<ChunkBest> results(chunks);
  const auto run = [&](std::uint64_t k) {
    const std::uint64_t c0 = total / chunks * k + (k < total % chunks ? k : total % chunks);
    const std::uint64_t len = total / chunks + (k < total % chunks ? 1 : 0);
    results[k] = sweep_chunk(h, cols, form, c0, c0 + len);
  };
  if (chunks == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    for (std::uint64_t k = 0; k < chunks; ++k) pool.emplace_back(run, k);
    for (auto& t : pool) t.join();
  }

  // reduce in counter order: value first, earlier counter breaks ties
  const bool maximize = form == Form::Positive;
  std::size_t win = 0;
  for (std::size_t k = 1; k < chunks; ++k) {
    const bool better =
        maximize ? results[k].value > results[win].value : results[k].value < results[win].value;
    if (better) win = k;
  }

  GroundStateResult r;
  r.form = form;
  r.method = Method::ExactGray;
  r.value = results[win].value;
  r.witness = std::move(results[win].witness);
  r.normalized = r.value / std::sqrt(static_cast<double>(h.n));
  r.states_visited = total;
  return r;
}

GroundStateResult exact_ground_state_naive(const HopfieldInstance& h, Form form, int limit) {
  check_limit(h, limit, "exact_ground_state_naive");
  if (h.n == 1) return single_state_result(h, form, Method::ExactNaive);

  const std::uint64_t total = std::uint64_t{1} << (h.n - 1);
  std::vector<std::int8_t> signs(h.n);
  std::vector<std::int8_t> best_signs;
  double best_sq = 0.0;
  const bool maximize = form == Form::Positive;
  for (std::uint64_t c = 0; c < total; ++c) {
    gray_state(c, h.n, signs.data());
    const double sq = squared_product_norm(h, signs.data(), nullptr);
    if (c == 0 || (maximize ? sq > best_sq : sq < best_sq)) {
      best_sq = sq;
      best_signs = signs;
    }
  }

  GroundStateResult r;
  r.form = form;
  r.method = Method::ExactNaive;
  r.value = std::sqrt(best_sq / h.n);
  r.witness.signs = std::move(best_signs);
  r.normalized = r.value / std::sqrt(static_cast<double>(h.n));
  r.states_visited = total;
  return r;
}

}  // namespace hopfield
