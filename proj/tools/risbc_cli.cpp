#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "risbc/baselines.hpp"
#include "risbc/bounds.hpp"
#include "risbc/errors.hpp"
#include "risbc/harness.hpp"
#include "risbc/sca_opt.hpp"

using namespace risbc;

namespace {

ScenarioConfig load(const std::string& path, std::optional<std::uint64_t> seed) {
  ScenarioConfig cfg = path.empty() ? ScenarioConfig{} : load_config(path);
  if (seed) cfg.seed = *seed;
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transmit power minimization for RIS-aided broadcast links"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  int threads = 1;
  bool verbose = false;
  app.add_option("--seed", seed, "Override the config seed");
  app.add_option("--threads", threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_flag("--verbose,-v", verbose, "Progress on stderr");

  std::string config_path;
  int trial = 0;
  int n_rand = 50;

  auto* solve = app.add_subcommand("solve", "Run one alternating optimization");
  std::string method = "sca";
  solve->add_option("--config", config_path, "ScenarioConfig JSON file");
  solve->add_option("--method", method, "sdr or sca")->check(CLI::IsMember({"sdr", "sca"}));
  solve->add_option("--trial", trial, "Channel realization index")->check(CLI::NonNegativeNumber);
  solve->add_option("--n-rand", n_rand, "Gaussian randomization draws")->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep written as CSV");
  std::string var = "N", values = "20,40,60,80,100", methods = "sdr,sca,random-ris,mmse", out;
  int trials = 50;
  bool no_timing = false;
  sweep->add_option("--config", config_path, "ScenarioConfig JSON file");
  sweep->add_option("--var", var, "N, gamma_db or K");
  sweep->add_option("--values", values, "Comma-separated ascending values");
  sweep->add_option("--methods", methods, "Comma-separated method names");
  sweep->add_option("--trials", trials, "Trials per value")->check(CLI::PositiveNumber);
  sweep->add_option("--out", out, "CSV output path")->required();
  sweep->add_option("--n-rand", n_rand, "Gaussian randomization draws")->check(CLI::PositiveNumber);
  sweep->add_flag("--no-timing", no_timing, "Write wall_time_s = 0 for byte-stable output");

  auto* bound = app.add_subcommand("bound", "Evaluate a lower bound on one channel draw");
  std::string kind = "analytic";
  bound->add_option("--config", config_path, "ScenarioConfig JSON file");
  bound->add_option("--kind", kind, "analytic, semi, random or noris")
      ->check(CLI::IsMember({"analytic", "semi", "random", "noris"}));
  bound->add_option("--trial", trial, "Channel realization index")->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    const ScenarioConfig cfg = load(config_path, seed);
    HarnessOptions opts;
    opts.threads = threads;
    opts.alt.n_rand = n_rand;

    if (*solve) {
      const ChannelSet cs = generate_channel(cfg, static_cast<std::uint64_t>(trial));
      SolveReport report;
      const ResultRow row = run_method(cs, cfg, method == "sdr" ? Method::Sdr : Method::Sca, trial,
                                       opts, &report);
      if (!row.feasible()) {
        std::cerr << "solve failed: " << row.status << "\n";
        return 1;
      }
      std::cout << format_report(report);
      return 0;
    }

    if (*sweep) {
      SweepSpec spec;
      spec.variable = parse_sweep_variable(var);
      spec.values = parse_values(values);
      spec.methods = parse_methods(methods);
      spec.trials = trials;
      spec.base = cfg;
      opts.record_timing = !no_timing;
      if (verbose) {
        opts.on_row = [](const ResultRow& r) {
          std::fprintf(stderr, "%s %s=%g trial=%d power=%.4g W status=%s\n", r.method.c_str(),
                       r.sweep_variable.c_str(), r.sweep_value, r.trial, r.power_w,
                       r.status.c_str());
        };
      }
      const auto rows = run_sweep(spec, opts);
      write_csv(out, rows);
      std::cout << format_summary(summarize(rows));
      return 0;
    }

    if (*bound) {
      const ChannelSet cs = generate_channel(cfg, static_cast<std::uint64_t>(trial));
      const Method m = kind == "analytic" ? Method::LbAnalytic
                       : kind == "semi"   ? Method::LbSemi
                       : kind == "random" ? Method::LbRandom
                                          : Method::LbNoris;
      const ResultRow row = run_method(cs, cfg, m, trial, opts);
      if (!row.feasible()) {
        std::cerr << "bound failed: " << row.status << "\n";
        return 1;
      }
      std::printf("%s_bound_w: %.10g\n%s_bound_dbm: %.6f\n", kind.c_str(), row.power_w,
                  kind.c_str(), row.power_dbm);
      return 0;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
