#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hopfield/bounds.hpp"
#include "hopfield/ensemble.hpp"
#include "hopfield/errors.hpp"
#include "hopfield/exact.hpp"
#include "hopfield/instance.hpp"
#include "hopfield/search.hpp"

namespace {

using namespace hopfield;

enum class OutputFormat { Table, Csv, Json };

const std::map<std::string, OutputFormat> kFormats{
    {"table", OutputFormat::Table}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};

// tables get 6 significant digits; csv/json keep shortest round-trip floats
std::string fmt6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct InstanceArgs {
  std::string file;
  int n = 0;
  double alpha = 1.0;
  std::uint64_t seed = 1;
  std::string ensemble = "gaussian";

  void add_flags(CLI::App* cmd) {
    auto* f = cmd->add_option("--file", file, "Matrix file ('m n' header, then m rows)");
    auto* n_opt = cmd->add_option("--n", n, "Spin count for a sampled instance");
    cmd->add_option("--alpha", alpha, "Aspect ratio m/n; m = round(alpha*n)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "Instance seed");
    cmd->add_option("--ensemble", ensemble, "Sampling ensemble")
        ->check(CLI::IsMember({"gaussian", "bernoulli"}));
    n_opt->excludes(f);
    f->excludes(n_opt);
  }

  HopfieldInstance resolve() const {
    if (!file.empty()) return read_matrix_file(file);
    if (n < 1) throw CLI::ValidationError("instance", "pass --file or --n");
    return sample_instance(rows_for(alpha, n), n, parse_ensemble(ensemble), seed);
  }
};

nlohmann::json result_json(const HopfieldInstance& h, const GroundStateResult& r) {
  return nlohmann::json{{"form", to_string(r.form)},
                        {"method", to_string(r.method)},
                        {"m", h.m},
                        {"n", h.n},
                        {"value", r.value},
                        {"normalized", r.normalized},
                        {"witness", r.witness.to_string()},
                        {"states_visited", r.states_visited}};
}

void print_result(const HopfieldInstance& h, const GroundStateResult& r, OutputFormat format,
                  const std::vector<std::pair<std::string, std::string>>& extra = {}) {
  switch (format) {
    case OutputFormat::Json: {
      auto j = result_json(h, r);
      for (const auto& [k, v] : extra) j[k] = v;
      std::cout << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv: {
      std::cout << "form,method,m,n,value,normalized,witness,states_visited";
      for (const auto& [k, v] : extra) std::cout << ',' << k;
      std::cout << '\n'
                << to_string(r.form) << ',' << to_string(r.method) << ',' << h.m << ',' << h.n
                << ',' << format_double(r.value) << ',' << format_double(r.normalized) << ','
                << r.witness.to_string() << ',' << r.states_visited;
      for (const auto& [k, v] : extra) std::cout << ',' << v;
      std::cout << '\n';
      break;
    }
    case OutputFormat::Table: {
      std::cout << "form            " << to_string(r.form) << '\n'
                << "method          " << to_string(r.method) << '\n'
                << "m x n           " << h.m << " x " << h.n << '\n'
                << "value           " << fmt6(r.value) << '\n'
                << "normalized      " << fmt6(r.normalized) << '\n'
                << "witness         " << r.witness.to_string() << '\n'
                << "states_visited  " << r.states_visited << '\n';
      for (const auto& [k, v] : extra) {
        std::string pad(k.size() < 16 ? 16 - k.size() : 1, ' ');
        std::cout << k << pad << v << '\n';
      }
      break;
    }
  }
}

// Flat key=value config support: inject "--key=value" tokens right after the
// subcommand for every file entry whose flag is absent from the command line,
// so explicit flags always win. Unknown keys surface as normal usage errors.
std::vector<std::string> apply_config_file(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty() || args.empty()) return args;

  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open config file: " + path);
  std::vector<std::string> injected;
  std::string line;
  while (std::getline(file, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config file: expected key=value, got: " + line);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw std::invalid_argument("config file: empty key in: " + line);
    const std::string flag = "--" + key;
    bool given = false;
    for (const auto& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) given = true;
    if (!given) injected.push_back(flag + "=" + value);
  }

  std::vector<std::string> out;
  out.reserve(args.size() + injected.size());
  out.push_back(args[0]);  // the subcommand
  out.insert(out.end(), injected.begin(), injected.end());
  out.insert(out.end(), args.begin() + 1, args.end());
  return out;
}

struct BoundRow {
  double alpha;
  BoundResult res;
};

int cmd_bound(const std::vector<double>& alphas, const std::string& grid, const std::string& form,
              OutputFormat format) {
  std::vector<double> all = alphas;
  if (!grid.empty()) {
    double lo = 0, hi = 0;
    int count = 0;
    if (std::sscanf(grid.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3 || !(lo > 0) ||
        !(hi >= lo) || count < 1)
      throw CLI::ValidationError("--grid", "expected lo:hi:count with 0 < lo <= hi, count >= 1");
    for (int i = 0; i < count; ++i)
      all.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
  }
  if (all.empty()) throw CLI::ValidationError("bound", "pass --alpha or --grid");

  std::vector<BoundRow> rows;
  for (double a : all) {
    if (form == "positive" || form == "both") rows.push_back({a, lifted_upper_bound(a)});
    if (form == "negative" || form == "both") rows.push_back({a, lifted_lower_bound(a)});
  }

  switch (format) {
    case OutputFormat::Json: {
      auto arr = nlohmann::json::array();
      for (const auto& row : rows)
        arr.push_back({{"alpha", row.alpha},
                       {"form", to_string(row.res.form)},
                       {"value", row.res.value},
                       {"c3_star", row.res.c3_star},
                       {"gamma_hat", row.res.gamma_hat},
                       {"baseline", row.res.baseline},
                       {"improvement", std::fabs(row.res.value - row.res.baseline)},
                       {"evaluations", row.res.evaluations}});
      std::cout << arr.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      std::cout << "alpha,form,value,c3_star,gamma_hat,baseline,improvement\n";
      for (const auto& row : rows)
        std::cout << format_double(row.alpha) << ',' << to_string(row.res.form) << ','
                  << format_double(row.res.value) << ',' << format_double(row.res.c3_star) << ','
                  << format_double(row.res.gamma_hat) << ',' << format_double(row.res.baseline)
                  << ',' << format_double(std::fabs(row.res.value - row.res.baseline)) << '\n';
      break;
    case OutputFormat::Table:
      std::printf("%-10s %-9s %-12s %-12s %-12s %-12s %-12s\n", "alpha", "form", "value",
                  "c3_star", "gamma_hat", "baseline", "improvement");
      for (const auto& row : rows)
        std::printf("%-10s %-9s %-12s %-12s %-12s %-12s %-12s\n", fmt6(row.alpha).c_str(),
                    to_string(row.res.form), fmt6(row.res.value).c_str(),
                    fmt6(row.res.c3_star).c_str(), fmt6(row.res.gamma_hat).c_str(),
                    fmt6(row.res.baseline).c_str(),
                    fmt6(std::fabs(row.res.value - row.res.baseline)).c_str());
      break;
  }
  return 0;
}

int cmd_ensemble(const EnsembleConfig& cfg, OutputFormat format) {
  const EnsembleSummary s = run_ensemble(cfg);
  switch (format) {
    case OutputFormat::Json:
      std::cout << to_json(s).dump(2) << "\n";
      break;
    case OutputFormat::Csv: {
      std::cout << "n,m,alpha,form,ensemble,method,trial,value,normalized,seed\n";
      for (std::size_t t = 0; t < s.values.size(); ++t)
        std::cout << cfg.n << ',' << s.m << ',' << format_double(cfg.alpha) << ','
                  << to_string(cfg.form) << ',' << to_string(cfg.ensemble) << ','
                  << to_string(cfg.method) << ',' << t << ',' << format_double(s.values[t]) << ','
                  << format_double(s.normalized[t]) << ',' << s.trial_seeds[t] << '\n';
      std::cout << "# mean=" << format_double(s.mean) << " stddev=" << format_double(s.stddev)
                << " stderr=" << format_double(s.stderr_) << " bound=" << format_double(s.bound)
                << " baseline=" << format_double(s.baseline) << " violations=" << s.violations;
      if (s.gaussian_proof_caveat) std::cout << " caveat=bounds-proved-for-gaussian";
      std::cout << '\n';
      break;
    }
    case OutputFormat::Table: {
      std::printf("%-6s %-14s %-14s %-20s\n", "trial", "value", "normalized", "seed");
      for (std::size_t t = 0; t < s.values.size(); ++t)
        std::printf("%-6zu %-14s %-14s %-20llu\n", t, fmt6(s.values[t]).c_str(),
                    fmt6(s.normalized[t]).c_str(),
                    static_cast<unsigned long long>(s.trial_seeds[t]));
      std::cout << "mean        " << fmt6(s.mean) << '\n'
                << "stddev      " << fmt6(s.stddev) << '\n'
                << "stderr      " << fmt6(s.stderr_) << '\n'
                << "bound       " << fmt6(s.bound) << '\n'
                << "baseline    " << fmt6(s.baseline) << '\n'
                << "violations  " << s.violations << '\n';
      if (s.gaussian_proof_caveat) std::cout << "caveat      bounds-proved-for-gaussian\n";
      break;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ground-state bounds and solvers for positive/negative Hopfield forms"};
  app.require_subcommand(1);

  // bound
  auto* bound = app.add_subcommand("bound", "Evaluate lifted and baseline bounds");
  std::vector<double> alphas;
  std::string grid, bound_form = "both", bound_fmt = "table";
  bound->add_option("--alpha", alphas, "Aspect ratio(s) m/n")->check(CLI::PositiveNumber);
  bound->add_option("--grid", grid, "Emit a lo:hi:count series of alphas");
  bound->add_option("--form", bound_form, "positive|negative|both")
      ->check(CLI::IsMember({"positive", "negative", "both"}));
  bound->add_option("--format", bound_fmt, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  // exact
  auto* exact = app.add_subcommand("exact", "Exhaustive Gray-code ground state");
  InstanceArgs exact_inst;
  exact_inst.add_flags(exact);
  std::string exact_form, exact_fmt = "table";
  int exact_limit = kDefaultEnumerationLimit;
  exact->add_option("--form", exact_form, "positive|negative")
      ->required()
      ->check(CLI::IsMember({"positive", "negative"}));
  exact->add_option("--limit", exact_limit, "Enumeration limit on n")->check(CLI::PositiveNumber);
  exact->add_option("--format", exact_fmt, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  // search
  auto* search = app.add_subcommand("search", "Bit-flipping local search");
  InstanceArgs search_inst;
  search_inst.add_flags(search);
  std::string search_form, search_fmt = "table", search_strategy = "steepest";
  SearchConfig search_cfg;
  search_cfg.restarts = 32;
  std::uint64_t search_seed = 1;
  search->add_option("--form", search_form, "positive|negative")
      ->required()
      ->check(CLI::IsMember({"positive", "negative"}));
  search->add_option("--restarts", search_cfg.restarts, "Independent restarts")
      ->check(CLI::PositiveNumber);
  search->add_option("--strategy", search_strategy, "steepest|first")
      ->check(CLI::IsMember({"steepest", "first"}));
  search->add_option("--max-sweeps", search_cfg.max_sweeps, "Sweep budget per restart")
      ->check(CLI::PositiveNumber);
  search->add_option("--search-seed", search_seed, "Seed for restart initialization");
  search->add_option("--format", search_fmt, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  // ensemble
  auto* ens = app.add_subcommand("ensemble", "Seeded Monte Carlo study vs the bounds");
  EnsembleConfig ens_cfg;
  std::string ens_form, ens_fmt = "csv", ens_method = "exact", ens_kind = "gaussian",
              ens_strategy = "steepest";
  SearchConfig ens_search;
  ens_search.restarts = 32;
  std::optional<std::uint64_t> ens_search_seed;
  ens_cfg.trials = 10;
  ens->add_option("--form", ens_form, "positive|negative")
      ->required()
      ->check(CLI::IsMember({"positive", "negative"}));
  ens->add_option("--n", ens_cfg.n, "Spins per instance")->required()->check(CLI::PositiveNumber);
  ens->add_option("--alpha", ens_cfg.alpha, "Aspect ratio m/n")->check(CLI::PositiveNumber);
  ens->add_option("--trials", ens_cfg.trials, "Number of sampled instances")
      ->check(CLI::PositiveNumber);
  ens->add_option("--ensemble", ens_kind, "gaussian|bernoulli")
      ->check(CLI::IsMember({"gaussian", "bernoulli"}));
  ens->add_option("--method", ens_method, "exact|bitflip")
      ->check(CLI::IsMember({"exact", "bitflip"}));
  ens->add_option("--seed", ens_cfg.seed, "Base seed; trial t uses mix(seed, t)");
  ens->add_option("--restarts", ens_search.restarts, "Bitflip restarts per trial")
      ->check(CLI::PositiveNumber);
  ens->add_option("--strategy", ens_strategy, "steepest|first")
      ->check(CLI::IsMember({"steepest", "first"}));
  ens->add_option("--max-sweeps", ens_search.max_sweeps, "Bitflip sweep budget")
      ->check(CLI::PositiveNumber);
  ens->add_option("--search-seed", ens_search_seed,
                  "Base seed for bitflip restarts (defaults to --seed)");
  ens->add_option("--limit", ens_cfg.enumeration_limit, "Enumeration limit for --method exact")
      ->check(CLI::PositiveNumber);
  ens->add_option("--format", ens_fmt, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  std::string config_path;
  for (auto* cmd : {bound, exact, search, ens})
    cmd->add_option("--config", config_path,
                    "Flat key=value file mirroring this subcommand's flags (flags win)");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = apply_config_file(args);
    std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
    app.parse(args);

    if (bound->parsed())
      return cmd_bound(alphas, grid, bound_form, kFormats.at(bound_fmt));

    if (exact->parsed()) {
      const HopfieldInstance h = exact_inst.resolve();
      const auto r = exact_ground_state(h, parse_form(exact_form), exact_limit);
      print_result(h, r, kFormats.at(exact_fmt));
      return 0;
    }

    if (search->parsed()) {
      const HopfieldInstance h = search_inst.resolve();
      search_cfg.strategy = parse_strategy(search_strategy);
      search_cfg.seed = search_seed;
      const auto r = bit_flip_search(h, parse_form(search_form), search_cfg);
      print_result(h, r, kFormats.at(search_fmt),
                   {{"restarts", std::to_string(search_cfg.restarts)},
                    {"strategy", to_string(search_cfg.strategy)},
                    {"hit_sweep_limit", r.hit_sweep_limit ? "true" : "false"}});
      return 0;
    }

    if (ens->parsed()) {
      ens_cfg.form = parse_form(ens_form);
      ens_cfg.ensemble = parse_ensemble(ens_kind);
      ens_cfg.method = ens_method == "exact" ? Method::ExactGray : Method::BitFlip;
      if (ens_cfg.method == Method::BitFlip) {
        ens_search.strategy = parse_strategy(ens_strategy);
        ens_search.seed = ens_search_seed.value_or(ens_cfg.seed);
        ens_cfg.search = ens_search;
      }
      return cmd_ensemble(ens_cfg, kFormats.at(ens_fmt));
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
