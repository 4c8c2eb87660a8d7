#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hopfield/exact.hpp"
#include "hopfield/forms.hpp"
#include "hopfield/instance.hpp"
#include "hopfield/search.hpp"

#include "json.hpp"

namespace hopfield {

struct EnsembleConfig {
  int n = 0;
  double alpha = 1.0;
  int trials = 0;
  Ensemble ensemble = Ensemble::Gaussian;
  Method method = Method::ExactGray;  // ExactGray or BitFlip
  Form form = Form::Positive;
  std::uint64_t seed = 0;
  std::optional<SearchConfig> search;  // BitFlip settings; defaulted when absent
  int enumeration_limit = kDefaultEnumerationLimit;
};

/// Derived row count m = round(alpha * n), at least 1.
int rows_for(double alpha, int n);

struct EnsembleSummary {
  EnsembleConfig config;
  int m = 0;
  std::vector<std::uint64_t> trial_seeds;  // mix_seed(config.seed, t)
  std::vector<double> values;              // xi per trial
  std::vector<double> normalized;          // xi / sqrt(n) per trial
  double mean = 0.0;                       // of normalized values
  double stddev = 0.0;                     // sample stddev (N-1); 0 for a single trial
  double stderr_ = 0.0;                    // stddev / sqrt(trials)
  double bound = 0.0;                      // lifted bound for (form, alpha)
  double baseline = 0.0;
  int violations = 0;  // trials beyond the bound in the forbidden direction
  bool gaussian_proof_caveat = false;      // Bernoulli sampling: bounds proved for Gaussian only
};

/// Seeded Monte Carlo over random instances. Trial t samples an instance
/// from seed mix_seed(cfg.seed, t); BitFlip trials derive their restart seed
/// stream from mix_seed(cfg.search.seed, t). Trials may run in parallel;
/// aggregation is a fold in trial order, so results are scheduling-independent.
EnsembleSummary run_ensemble(const EnsembleConfig& cfg);

nlohmann::json to_json(const EnsembleSummary& s);

struct ComparisonSpec {
  int n = 4;
  int m = 4;
  int num_pairs = 8;
  long long samples = 100000;
  double c3 = 0.5;
};

struct ComparisonSample {
  ComparisonSpec spec;
  Form form = Form::Positive;
  std::uint64_t seed = 0;
  double lhs_mean = 0.0;
  double rhs_mean = 0.0;
  double lhs_stderr = 0.0;
  double rhs_stderr = 0.0;
};

/// Monte Carlo estimate of both sides of the exponential comparison
/// inequality on fixed random candidates: x's drawn from the scaled sign
/// hypercube, y's from the unit sphere. Positive form pairs candidate i with
/// itself; the negative form takes max over i of min over j with the negated
/// exponent. Requires n, m in [1, 8] and c3 in (0, 1]; throws NumericalError
/// if an exponent would overflow.
ComparisonSample comparison_smoke_test(const ComparisonSpec& spec, Form form, std::uint64_t seed);

struct ConcentrationRow {
  int n = 0;
  double mean = 0.0;
  double stddev = 0.0;
};

struct ConcentrationReport {
  std::vector<ConcentrationRow> rows;   // grid order
  bool stddev_decreasing = false;       // flag only; small n may violate the trend
};

/// Per-n statistics of xi/sqrt(n) across an n grid (config.n is ignored).
ConcentrationReport concentration_report(const EnsembleConfig& cfg,
                                         const std::vector<int>& n_grid);

}  // namespace hopfield
