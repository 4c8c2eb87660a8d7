#include "hopfield/ensemble.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "hopfield/bounds.hpp"
#include "hopfield/errors.hpp"
#include "hopfield/rng.hpp"
#include "hopfield/threads.hpp"

namespace hopfield {

namespace {

void validate(const EnsembleConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("ensemble: n must be >= 1");
  if (!(cfg.alpha > 0.0)) throw std::invalid_argument("ensemble: alpha must be positive");
  if (cfg.trials < 1) throw std::invalid_argument("ensemble: trials must be >= 1");
  if (cfg.ensemble == Ensemble::Explicit)
    throw std::invalid_argument("ensemble: sampling needs gaussian or bernoulli");
  if (cfg.method != Method::ExactGray && cfg.method != Method::BitFlip)
    throw std::invalid_argument("ensemble: method must be exact-gray or bitflip");
}

double run_trial(const EnsembleConfig& cfg, int m, int t) {
  const std::uint64_t inst_seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(t));
  const HopfieldInstance inst = sample_instance(m, cfg.n, cfg.ensemble, inst_seed);
  if (cfg.method == Method::ExactGray)
    return exact_ground_state(inst, cfg.form, cfg.enumeration_limit, 1).value;
  SearchConfig scfg = cfg.search.value_or(SearchConfig{});
  scfg.seed = mix_seed(scfg.seed, static_cast<std::uint64_t>(t));
  return bit_flip_search(inst, cfg.form, scfg, 1).value;
}

struct Stats {
  double mean, stddev, stderr_;
};

// Neumaier-compensated fold in index order; permuting the inputs leaves the
// statistics unchanged up to the compensation error.
Stats summarize(const std::vector<double>& xs) {
  double sum = 0.0, comp = 0.0;
  for (double x : xs) {
    const double t = sum + x;
    comp += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  const double mean = (sum + comp) / xs.size();
  if (xs.size() < 2) return {mean, 0.0, 0.0};
  double ss = 0.0, ssc = 0.0;
  for (double x : xs) {
    const double d = (x - mean) * (x - mean);
    const double t = ss + d;
    ssc += std::fabs(ss) >= d ? (ss - t) + d : (d - t) + ss;
    ss = t;
  }
  const double var = (ss + ssc) / (xs.size() - 1);
  const double sd = std::sqrt(var);
  return {mean, sd, sd / std::sqrt(static_cast<double>(xs.size()))};
}

}  // namespace

int rows_for(double alpha, int n) {
  const long m = std::lround(alpha * n);
  return m < 1 ? 1 : static_cast<int>(m);
}

EnsembleSummary run_ensemble(const EnsembleConfig& cfg) {
  validate(cfg);
  EnsembleSummary s;
  s.config = cfg;
  s.m = rows_for(cfg.alpha, cfg.n);
  s.values.resize(cfg.trials);
  s.trial_seeds.resize(cfg.trials);
  for (int t = 0; t < cfg.trials; ++t)
    s.trial_seeds[t] = mix_seed(cfg.seed, static_cast<std::uint64_t>(t));

  const int workers =
      resolve_threads(0) < cfg.trials ? resolve_threads(0) : cfg.trials;
  std::exception_ptr failure;
  if (workers <= 1) {
    for (int t = 0; t < cfg.trials; ++t) s.values[t] = run_trial(cfg, s.m, t);
  } else {
    std::vector<std::thread> pool;
    std::mutex fail_mutex;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (int t = w; t < cfg.trials; t += workers) s.values[t] = run_trial(cfg, s.m, t);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(fail_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  const double root_n = std::sqrt(static_cast<double>(cfg.n));
  s.normalized.resize(cfg.trials);
  for (int t = 0; t < cfg.trials; ++t) s.normalized[t] = s.values[t] / root_n;

  const Stats st = summarize(s.normalized);
  s.mean = st.mean;
  s.stddev = st.stddev;
  s.stderr_ = st.stderr_;

  const BoundResult b = cfg.form == Form::Positive ? lifted_upper_bound(cfg.alpha)
                                                   : lifted_lower_bound(cfg.alpha);
  s.bound = b.value;
  s.baseline = b.baseline;
  for (double x : s.normalized)
    if (cfg.form == Form::Positive ? x > s.bound : x < s.bound) ++s.violations;
  s.gaussian_proof_caveat = cfg.ensemble == Ensemble::Bernoulli;
  return s;
}

nlohmann::json to_json(const EnsembleSummary& s) {
  nlohmann::json cfg{
      {"n", s.config.n},
      {"m", s.m},
      {"alpha", s.config.alpha},
      {"form", to_string(s.config.form)},
      {"ensemble", to_string(s.config.ensemble)},
      {"method", to_string(s.config.method)},
      {"trials", s.config.trials},
      {"seed", s.config.seed},
  };
  if (s.config.method == Method::BitFlip) {
    const SearchConfig sc = s.config.search.value_or(SearchConfig{});
    cfg["search"] = {{"restarts", sc.restarts},
                     {"strategy", to_string(sc.strategy)},
                     {"max_sweeps", sc.max_sweeps},
                     {"seed", sc.seed}};
  }
  nlohmann::json trials = nlohmann::json::array();
  for (std::size_t t = 0; t < s.values.size(); ++t)
    trials.push_back({{"trial", t},
                      {"seed", s.trial_seeds[t]},
                      {"value", s.values[t]},
                      {"normalized", s.normalized[t]}});
  nlohmann::json bound{{"form", to_string(s.config.form)},
                       {"alpha", s.config.alpha},
                       {"lifted", s.bound},
                       {"baseline", s.baseline}};
  if (s.gaussian_proof_caveat) bound["caveat"] = "bounds-proved-for-gaussian";
  return nlohmann::json{{"config", cfg},
                        {"trials", trials},
                        {"statistics",
                         {{"mean", s.mean},
                          {"stddev", s.stddev},
                          {"stderr", s.stderr_},
                          {"violations", s.violations}}},
                        {"bound", bound}};
}

ComparisonSample comparison_smoke_test(const ComparisonSpec& spec, Form form,
                                       std::uint64_t seed) {
  if (spec.n < 1 || spec.n > 8 || spec.m < 1 || spec.m > 8)
    throw std::invalid_argument("comparison: n and m must lie in [1, 8]");
  if (!(spec.c3 > 0.0) || spec.c3 > 1.0)
    throw std::invalid_argument("comparison: c3 must lie in (0, 1]");
  if (spec.num_pairs < 1) throw std::invalid_argument("comparison: need at least one pair");
  if (spec.samples < 2) throw std::invalid_argument("comparison: need at least two samples");

  const int n = spec.n, m = spec.m, P = spec.num_pairs;
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));

  // fixed candidate sets: x's on the scaled hypercube, y's on the unit sphere
  Rng cand_rng(mix_seed(seed, 0));
  std::vector<double> xs(static_cast<std::size_t>(P) * n), ys(static_cast<std::size_t>(P) * m);
  for (int p = 0; p < P; ++p) {
    for (int j = 0; j < n; ++j) xs[static_cast<std::size_t>(p) * n + j] = cand_rng.sign() * inv_sqrt_n;
    double norm = 0.0;
    for (int i = 0; i < m; ++i) {
      const double g = cand_rng.normal();
      ys[static_cast<std::size_t>(p) * m + i] = g;
      norm += g * g;
    }
    norm = std::sqrt(norm);
    for (int i = 0; i < m; ++i) ys[static_cast<std::size_t>(p) * m + i] /= norm;
  }

  Rng rng(mix_seed(seed, 1));
  std::vector<double> H(static_cast<std::size_t>(m) * n), gv(m), hv(n), Hx(static_cast<std::size_t>(P) * m);
  double lhs_sum = 0.0, lhs_sumsq = 0.0, rhs_sum = 0.0, rhs_sumsq = 0.0;

  const auto guarded_exp = [&](double e) {
    if (e > 700.0)
      throw NumericalError("comparison: exponent overflow; reduce c3 (got exponent " +
                           format_double(e) + ")");
    return std::exp(e);
  };

  for (long long it = 0; it < spec.samples; ++it) {
    for (double& v : H) v = rng.normal();
    const double g = rng.normal();
    for (double& v : gv) v = rng.normal();
    for (double& v : hv) v = rng.normal();

    double lhs, rhs;
    if (form == Form::Positive) {
      double lbest = -1.0, rbest = -1.0;
      for (int p = 0; p < P; ++p) {
        const double* x = xs.data() + static_cast<std::size_t>(p) * n;
        const double* y = ys.data() + static_cast<std::size_t>(p) * m;
        double yHx = 0.0;
        for (int i = 0; i < m; ++i) {
          const double* row = H.data() + static_cast<std::size_t>(i) * n;
          double acc = 0.0;
          for (int j = 0; j < n; ++j) acc += row[j] * x[j];
          yHx += y[i] * acc;
        }
        double gy = 0.0, hx = 0.0;
        for (int i = 0; i < m; ++i) gy += gv[i] * y[i];
        for (int j = 0; j < n; ++j) hx += hv[j] * x[j];
        const double l = guarded_exp(spec.c3 * (yHx + g));
        const double r = guarded_exp(spec.c3 * (gy + hx));
        if (l > lbest) lbest = l;
        if (r > rbest) rbest = r;
      }
      lhs = lbest;
      rhs = rbest;
    } else {
      for (int p = 0; p < P; ++p) {
        const double* x = xs.data() + static_cast<std::size_t>(p) * n;
        for (int i = 0; i < m; ++i) {
          const double* row = H.data() + static_cast<std::size_t>(i) * n;
          double acc = 0.0;
          for (int j = 0; j < n; ++j) acc += row[j] * x[j];
          Hx[static_cast<std::size_t>(p) * m + i] = acc;
        }
      }
      double lbest = -1.0, rbest = -1.0;
      for (int i = 0; i < P; ++i) {
        double lmin = 0.0, rmin = 0.0;
        double hx = 0.0;
        const double* x = xs.data() + static_cast<std::size_t>(i) * n;
        for (int j = 0; j < n; ++j) hx += hv[j] * x[j];
        for (int j = 0; j < P; ++j) {
          const double* y = ys.data() + static_cast<std::size_t>(j) * m;
          double yHx = 0.0, gy = 0.0;
          for (int k = 0; k < m; ++k) {
            yHx += y[k] * Hx[static_cast<std::size_t>(i) * m + k];
            gy += gv[k] * y[k];
          }
          const double l = guarded_exp(-spec.c3 * (yHx + g));
          const double r = guarded_exp(-spec.c3 * (gy + hx));
          if (j == 0 || l < lmin) lmin = l;
          if (j == 0 || r < rmin) rmin = r;
        }
        if (lmin > lbest) lbest = lmin;
        if (rmin > rbest) rbest = rmin;
      }
      lhs = lbest;
      rhs = rbest;
    }
    lhs_sum += lhs;
    lhs_sumsq += lhs * lhs;
    rhs_sum += rhs;
    rhs_sumsq += rhs * rhs;
  }

  const double N = static_cast<double>(spec.samples);
  ComparisonSample out;
  out.spec = spec;
  out.form = form;
  out.seed = seed;
  out.lhs_mean = lhs_sum / N;
  out.rhs_mean = rhs_sum / N;
  const double lvar = (lhs_sumsq - N * out.lhs_mean * out.lhs_mean) / (N - 1);
  const double rvar = (rhs_sumsq - N * out.rhs_mean * out.rhs_mean) / (N - 1);
  out.lhs_stderr = std::sqrt(lvar > 0 ? lvar / N : 0.0);
  out.rhs_stderr = std::sqrt(rvar > 0 ? rvar / N : 0.0);
  return out;
}

ConcentrationReport concentration_report(const EnsembleConfig& cfg,
                                         const std::vector<int>& n_grid) {
  if (n_grid.empty()) throw std::invalid_argument("concentration: empty n grid");
  ConcentrationReport rep;
  rep.rows.reserve(n_grid.size());
  for (int n : n_grid) {
    EnsembleConfig c = cfg;
    c.n = n;
    const EnsembleSummary s = run_ensemble(c);
    rep.rows.push_back({n, s.mean, s.stddev});
  }
  rep.stddev_decreasing = true;
  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    if (!(rep.rows[i].stddev < rep.rows[i - 1].stddev)) rep.stddev_decreasing = false;
  return rep;
}

}  // namespace hopfield
