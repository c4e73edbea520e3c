#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "risbc/bounds.hpp"
#include "risbc/channel.hpp"
#include "risbc/sdr_opt.hpp"

namespace risbc {

enum class Method { Sdr, Sca, RandomRis, Mmse, Zf, LbAnalytic, LbSemi, LbRandom, LbNoris };
enum class SweepVariable { N, GammaDb, K };

const char* to_string(Method m);
const char* to_string(SweepVariable v);
Method parse_method(const std::string& name);
SweepVariable parse_sweep_variable(const std::string& name);
std::vector<Method> parse_methods(const std::string& comma_list);
std::vector<double> parse_values(const std::string& comma_list);

struct SweepSpec {
  SweepVariable variable = SweepVariable::N;
  std::vector<double> values;
  std::vector<Method> methods;
  int trials = 50;
  ScenarioConfig base;

  void validate() const;
};

struct ResultRow {
  std::string method;
  std::string sweep_variable;
  double sweep_value = 0.0;
  int trial = 0;
  double power_w = 0.0;
  double power_dbm = 0.0;
  int iterations = 0;
  std::string status;
  std::uint64_t seed = 0;
  double wall_time = 0.0;

  bool feasible() const;
};

struct HarnessOptions {
  AlternatingOptions alt;
  SemiAnalyticSearchCfg semi;
  int threads = 1;
  bool record_timing = true;  // false writes wall_time_s = 0 for byte-stable output
  std::function<void(const ResultRow&)> on_row;  // called under a lock
};

ScenarioConfig apply_sweep_value(const ScenarioConfig& base, SweepVariable v, double value);

// Single (method, trial) evaluation on an already drawn channel.
ResultRow run_method(const ChannelSet& cs, const ScenarioConfig& cfg, Method method,
                     int trial, const HarnessOptions& opts,
                     SolveReport* report_out = nullptr);

// Rows sorted by (method order in spec, sweep value, trial).
std::vector<ResultRow> run_sweep(const SweepSpec& spec, const HarnessOptions& opts = {});

struct SummaryRow {
  std::string method;
  double sweep_value = 0.0;
  double mean_w = 0.0;
  double stderr_w = 0.0;
  double mean_dbm = 0.0;
  int feasible = 0;
  int infeasible = 0;
};

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows);

extern const char* const kCsvHeader;
std::string to_csv(const std::vector<ResultRow>& rows);
void write_csv(const std::string& path, const std::vector<ResultRow>& rows);
// Throws InvalidInput when the header or a field does not match the schema.
std::vector<ResultRow> parse_csv(const std::string& text);

std::string format_summary(const std::vector<SummaryRow>& table);
std::string format_report(const SolveReport& r);

}  // namespace risbc
