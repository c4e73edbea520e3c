#include "risbc/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "risbc/baselines.hpp"
#include "risbc/errors.hpp"
#include "risbc/sca_opt.hpp"

namespace risbc {

namespace {

struct MethodName {
  Method m;
  const char* name;
};

constexpr MethodName kMethods[] = {
    {Method::Sdr, "sdr"},         {Method::Sca, "sca"},
    {Method::RandomRis, "random-ris"}, {Method::Mmse, "mmse"},
    {Method::Zf, "zf"},           {Method::LbAnalytic, "lb-analytic"},
    {Method::LbSemi, "lb-semi"},  {Method::LbRandom, "lb-random"},
    {Method::LbNoris, "lb-noris"},
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

}  // namespace

const char* to_string(Method m) {
  for (const auto& e : kMethods) {
    if (e.m == m) return e.name;
  }
  return "unknown";
}

const char* to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::N: return "N";
    case SweepVariable::GammaDb: return "gamma_db";
    case SweepVariable::K: return "K";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  const std::string t = trim(name);
  for (const auto& e : kMethods) {
    if (t == e.name) return e.m;
  }
  throw InvalidInput("unknown method '" + t + "'");
}

SweepVariable parse_sweep_variable(const std::string& name) {
  const std::string t = trim(name);
  if (t == "N") return SweepVariable::N;
  if (t == "gamma_db" || t == "gamma") return SweepVariable::GammaDb;
  if (t == "K") return SweepVariable::K;
  throw InvalidInput("unknown sweep variable '" + t + "'");
}

std::vector<Method> parse_methods(const std::string& comma_list) {
  std::vector<Method> out;
  for (const auto& s : split(comma_list, ',')) out.push_back(parse_method(s));
  if (out.empty()) throw InvalidInput("no methods given");
  return out;
}

std::vector<double> parse_values(const std::string& comma_list) {
  std::vector<double> out;
  for (const auto& s : split(comma_list, ',')) {
    try {
      size_t used = 0;
      const std::string t = trim(s);
      out.push_back(std::stod(t, &used));
      if (used != t.size()) throw InvalidInput("bad value '" + t + "'");
    } catch (const std::logic_error&) {
      throw InvalidInput("bad value '" + s + "'");
    }
  }
  if (out.empty()) throw InvalidInput("no values given");
  return out;
}

void SweepSpec::validate() const {
  if (values.empty()) throw InvalidInput("sweep: values must be nonempty");
  for (size_t k = 1; k < values.size(); ++k) {
    if (!(values[k] > values[k - 1])) throw InvalidInput("sweep: values must be ascending");
  }
  if (methods.empty()) throw InvalidInput("sweep: methods must be nonempty");
  if (trials < 1) throw InvalidInput("sweep: trials must be >= 1");
  for (double v : values) apply_sweep_value(base, variable, v).validate();
}

bool ResultRow::feasible() const { return status != "infeasible" && status != "error"; }

ScenarioConfig apply_sweep_value(const ScenarioConfig& base, SweepVariable v, double value) {
  ScenarioConfig c = base;
  auto as_int = [&](const char* what) {
    if (value != std::floor(value)) throw InvalidInput(std::string("sweep: ") + what + " must be integral");
    return static_cast<int>(value);
  };
  switch (v) {
    case SweepVariable::N: c.N = as_int("N"); break;
    case SweepVariable::K: c.K = as_int("K"); break;
    case SweepVariable::GammaDb: c.gamma_db = value; break;
  }
  return c;
}

ResultRow run_method(const ChannelSet& cs, const ScenarioConfig& cfg, Method method, int trial,
                     const HarnessOptions& opts, SolveReport* report_out) {
  const auto t0 = std::chrono::steady_clock::now();
  const double gamma = cfg.gamma_linear(), sigma2 = cfg.sigma2_watts();
  RngStream rng(cfg.seed, method_stream_id(static_cast<std::uint64_t>(trial),
                                           static_cast<std::uint64_t>(method)));
  ResultRow row;
  row.method = to_string(method);
  row.trial = trial;
  row.seed = cfg.seed;
  auto take = [&](const SolveReport& r) {
    row.power_w = r.final_power;
    row.iterations = r.iterations;
    row.status = to_string(r.status);
    if (report_out) *report_out = r;
  };
  try {
    const BoundInputs b = BoundInputs::from(cs, gamma, sigma2);
    switch (method) {
      case Method::Sdr: take(alternate_sdr(cs, cfg, opts.alt, rng)); break;
      case Method::Sca: take(alternate_sca(cs, cfg, opts.alt, rng)); break;
      case Method::RandomRis:
        take(random_phase_ris(cs, gamma, sigma2, rng, opts.alt.n_rand, opts.alt.sdp));
        break;
      case Method::Mmse: take(mmse_no_ris(cs, gamma, sigma2, opts.alt.n_rand, rng, opts.alt.sdp)); break;
      case Method::Zf:
        row.power_w = zf_power(cs, gamma, sigma2);
        row.status = "closed_form";
        break;
      case Method::LbAnalytic:
        row.power_w = analytical_lb_ris(b);
        row.status = "bound";
        break;
      case Method::LbSemi:
        row.power_w = semi_analytical_lb_ris(b, opts.semi, cs.H_br, rng);
        row.status = "bound";
        break;
      case Method::LbRandom:
        row.power_w = analytical_lb_random_phase(b);
        row.status = "bound";
        break;
      case Method::LbNoris:
        row.power_w = analytical_lb_no_ris(b);
        row.status = "bound";
        break;
    }
  } catch (const Infeasible&) {
    row.status = "infeasible";
  } catch (const std::exception&) {
    row.status = "error";
  }
  if (row.feasible()) {
    row.power_dbm = watts_to_dbm(row.power_w);
  } else {
    row.power_w = std::nan("");
    row.power_dbm = std::nan("");
  }
  row.wall_time = opts.record_timing
                      ? std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
                      : 0.0;
  return row;
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec, const HarnessOptions& opts) {
  spec.validate();
  struct Task {
    size_t method_idx, value_idx;
    int trial;
  };
  std::vector<Task> tasks;
  for (size_t mi = 0; mi < spec.methods.size(); ++mi) {
    for (size_t vi = 0; vi < spec.values.size(); ++vi) {
      for (int t = 0; t < spec.trials; ++t) tasks.push_back({mi, vi, t});
    }
  }
  std::vector<ResultRow> rows(tasks.size());
  std::atomic<size_t> next{0};
  std::mutex mu;
  auto worker = [&] {
    for (size_t k = next++; k < tasks.size(); k = next++) {
      const Task& t = tasks[k];
      const double value = spec.values[t.value_idx];
      const ScenarioConfig cfg = apply_sweep_value(spec.base, spec.variable, value);
      ResultRow row;
      try {
        // Regenerated per task; identical across methods of the same trial.
        const ChannelSet cs = generate_channel(cfg, static_cast<std::uint64_t>(t.trial));
        row = run_method(cs, cfg, spec.methods[t.method_idx], t.trial, opts);
      } catch (const std::exception&) {
        row.method = to_string(spec.methods[t.method_idx]);
        row.trial = t.trial;
        row.seed = cfg.seed;
        row.status = "error";
        row.power_w = row.power_dbm = std::nan("");
      }
      row.sweep_variable = to_string(spec.variable);
      row.sweep_value = value;
      std::lock_guard<std::mutex> lock(mu);
      rows[k] = row;
      if (opts.on_row) opts.on_row(row);
    }
  };
  const int nthreads = std::max(1, std::min<int>(opts.threads, static_cast<int>(tasks.size())));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows) {
  std::vector<SummaryRow> out;
  std::map<std::pair<std::string, double>, size_t> index;
  std::vector<std::vector<double>> samples;
  for (const auto& r : rows) {
    const auto key = std::make_pair(r.method, r.sweep_value);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, out.size()).first;
      SummaryRow s;
      s.method = r.method;
      s.sweep_value = r.sweep_value;
      out.push_back(s);
      samples.emplace_back();
    }
    if (r.feasible()) {
      samples[it->second].push_back(r.power_w);
    } else {
      ++out[it->second].infeasible;
    }
  }
  for (size_t k = 0; k < out.size(); ++k) {
    const auto& v = samples[k];
    auto& s = out[k];
    s.feasible = static_cast<int>(v.size());
    if (v.empty()) {
      s.mean_w = s.stderr_w = s.mean_dbm = std::nan("");
      continue;
    }
    double sum = 0.0;
    for (double x : v) sum += x;
    s.mean_w = sum / v.size();
    double ss = 0.0;
    for (double x : v) ss += (x - s.mean_w) * (x - s.mean_w);
    s.stderr_w = v.size() > 1 ? std::sqrt(ss / (v.size() - 1) / v.size()) : 0.0;
    s.mean_dbm = watts_to_dbm(s.mean_w);
  }
  return out;
}

const char* const kCsvHeader =
    "method,sweep_variable,sweep_value,trial,power_w,power_dbm,iterations,status,seed,wall_time_s";

std::string to_csv(const std::vector<ResultRow>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : rows) {
    out += r.method + "," + r.sweep_variable + "," + fmt("%.10g", r.sweep_value) + "," +
           std::to_string(r.trial) + "," + fmt("%.17g", r.power_w) + "," +
           fmt("%.12g", r.power_dbm) + "," + std::to_string(r.iterations) + "," + r.status + "," +
           std::to_string(r.seed) + "," + fmt("%.6f", r.wall_time) + "\n";
  }
  return out;
}

void write_csv(const std::string& path, const std::vector<ResultRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << to_csv(rows);
  if (!out) throw InvalidInput("write failed for " + path);
}

std::vector<ResultRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || trim(line) != kCsvHeader) {
    throw InvalidInput("csv: header does not match schema");
  }
  std::vector<ResultRow> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto f = split(trim(line), ',');
    if (f.size() != 10) throw InvalidInput("csv: line " + std::to_string(lineno) + " has wrong field count");
    ResultRow r;
    try {
      r.method = f[0];
      r.sweep_variable = f[1];
      r.sweep_value = std::stod(f[2]);
      r.trial = std::stoi(f[3]);
      r.power_w = std::stod(f[4]);
      r.power_dbm = std::stod(f[5]);
      r.iterations = std::stoi(f[6]);
      r.status = f[7];
      r.seed = std::stoull(f[8]);
      r.wall_time = std::stod(f[9]);
    } catch (const std::logic_error&) {
      throw InvalidInput("csv: malformed field on line " + std::to_string(lineno));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string format_summary(const std::vector<SummaryRow>& table) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-12s %10s %12s %12s %8s %8s\n", "method", "value", "mean_dBm",
                "stderr_W", "ok", "failed");
  out += buf;
  for (const auto& s : table) {
    std::snprintf(buf, sizeof buf, "%-12s %10g %12.3f %12.4g %8d %8d\n", s.method.c_str(),
                  s.sweep_value, s.mean_dbm, s.stderr_w, s.feasible, s.infeasible);
    out += buf;
  }
  return out;
}

std::string format_report(const SolveReport& r) {
  std::ostringstream o;
  o << "status: " << to_string(r.status) << "\n";
  o << "final_power_w: " << fmt("%.10g", r.final_power) << "\n";
  o << "final_power_dbm: " << fmt("%.6f", watts_to_dbm(r.final_power)) << "\n";
  o << "iterations: " << r.iterations << "\n";
  o << "wall_time_s: " << fmt("%.3f", r.wall_time) << "\n";
  o << "power_trace_w:";
  for (double p : r.power_trace) o << " " << fmt("%.8g", p);
  o << "\n";
  return o.str();
}

}  // namespace risbc
