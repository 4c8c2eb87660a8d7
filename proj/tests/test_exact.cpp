#include "hopfield/exact.hpp"

#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "hopfield/errors.hpp"
#include "hopfield/rng.hpp"

using namespace hopfield;

namespace {

struct ThreadEnvGuard {
  explicit ThreadEnvGuard(const char* v) { setenv("HOPFIELD_THREADS", v, 1); }
  ~ThreadEnvGuard() { unsetenv("HOPFIELD_THREADS"); }
};

}  // namespace

TEST_CASE("hand-enumerated 2x2 instance") {
  const auto h = make_instance(2, 2, {1, 2, 3, 4});

  const auto pos = exact_ground_state(h, Form::Positive);
  CHECK(pos.value == doctest::Approx(std::sqrt(29.0)).epsilon(1e-14));
  CHECK(pos.witness.to_string() == "++");
  CHECK(pos.states_visited == 2);

  const auto neg = exact_ground_state(h, Form::Negative);
  CHECK(neg.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(neg.witness.to_string() == "+-");
}

TEST_CASE("identity matrix: every state is optimal with value 1") {
  for (int n : {1, 4, 9}) {
    std::vector<double> e(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = 1.0;
    const auto h = make_instance(n, n, std::move(e));
    CHECK(exact_ground_state(h, Form::Positive).value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(exact_ground_state(h, Form::Negative).value == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("n = 1 visits a single sign class") {
  const auto h = make_instance(3, 1, {3, 4, 12});
  const auto r = exact_ground_state(h, Form::Positive);
  CHECK(r.value == doctest::Approx(13.0).epsilon(1e-15));
  CHECK(r.states_visited == 1);
  CHECK(exact_ground_state_naive(h, Form::Negative).value == doctest::Approx(13.0).epsilon(1e-15));
}

TEST_CASE("gray-code and naive enumerators agree on random instances") {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + trial % 9;  // 4..12
    const int m = 3 + trial % 7;
    const auto h = sample_instance(m, n, Ensemble::Gaussian, 1000 + trial);
    for (Form form : {Form::Positive, Form::Negative}) {
      CAPTURE(trial);
      const auto fast = exact_ground_state(h, form);
      const auto slow = exact_ground_state_naive(h, form);
      CHECK(std::fabs(fast.value - slow.value) <= 1e-10 * slow.value);
      CHECK(fast.witness.signs == slow.witness.signs);
      CHECK(fast.states_visited == slow.states_visited);
    }
  }
}

TEST_CASE("exact values sandwich every probe state") {
  const auto h = sample_instance(8, 12, Ensemble::Gaussian, 77);
  const double hi = exact_ground_state(h, Form::Positive).value;
  const double lo = exact_ground_state(h, Form::Negative).value;
  Rng rng(123);
  for (int probe = 0; probe < 50; ++probe) {
    SpinVector s;
    for (int j = 0; j < 12; ++j) s.signs.push_back(static_cast<std::int8_t>(rng.sign()));
    const double v = evaluate(h, s);
    CHECK(v <= hi * (1 + 1e-12));
    CHECK(v >= lo * (1 - 1e-12));
  }
}

TEST_CASE("witness value re-evaluates to the reported optimum") {
  const auto h = sample_instance(14, 14, Ensemble::Gaussian, 5);
  for (Form form : {Form::Positive, Form::Negative}) {
    const auto r = exact_ground_state(h, form);
    CHECK(std::fabs(evaluate(h, r.witness) - r.value) <= 1e-9 * r.value);
  }
}

TEST_CASE("incremental update does not drift over a full sweep") {
  // replay the enumerator's flip rule (v += 2 * new_sign * column) across all
  // 2^(n-1) states and compare the running v with a fresh H*s at the end
  const int n = 16, m = 16;
  const auto h = sample_instance(m, n, Ensemble::Gaussian, 31);
  std::vector<std::int8_t> signs(n, 1);
  std::vector<double> v(m, 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) v[i] += h.at(i, j);

  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t c = 1; c < total; ++c) {
    int spin = 1;
    for (std::uint64_t x = c; !(x & 1); x >>= 1) ++spin;
    signs[spin] = static_cast<std::int8_t>(-signs[spin]);
    for (int i = 0; i < m; ++i) v[i] += 2.0 * signs[spin] * h.at(i, spin);
  }

  double fresh_norm = 0.0, drift = 0.0;
  for (int i = 0; i < m; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += signs[j] > 0 ? h.at(i, j) : -h.at(i, j);
    fresh_norm += acc * acc;
    drift += (v[i] - acc) * (v[i] - acc);
  }
  CHECK(std::sqrt(drift) <= 1e-9 * std::sqrt(fresh_norm));
}

TEST_CASE("thread partitioning does not change the result") {
  const auto h = sample_instance(12, 15, Ensemble::Gaussian, 9);
  GroundStateResult single, quad;
  {
    ThreadEnvGuard env("1");
    single = exact_ground_state(h, Form::Negative);
  }
  {
    ThreadEnvGuard env("4");
    quad = exact_ground_state(h, Form::Negative);
  }
  CHECK(single.value == quad.value);  // bitwise
  CHECK(single.witness.signs == quad.witness.signs);
  CHECK(single.states_visited == quad.states_visited);
}

TEST_CASE("enumeration limit refusal carries a work estimate") {
  const auto h = sample_instance(4, 31, Ensemble::Gaussian, 1);
  CHECK_THROWS_AS(exact_ground_state(h, Form::Positive), CapacityError);
  try {
    exact_ground_state(h, Form::Positive);
  } catch (const CapacityError& e) {
    CHECK(e.states_required == (std::uint64_t{1} << 30));
    CHECK(e.flops_estimate > 0);
  }
  const auto h2 = sample_instance(4, 17, Ensemble::Gaussian, 1);
  CHECK_THROWS_AS(exact_ground_state_naive(h2, Form::Positive), CapacityError);
}
