// Copyright 2026 The leakc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// leakc command-line front end. Built only on the C interface.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "leakc/leakc.h"
#include "plot.h"

namespace leakc_cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCheckFailed = 2;

// Input problem reported with exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SystemDeleter {
  void operator()(lk_system* p) const { lk_system_free(p); }
};
struct MetricDeleter {
  void operator()(lk_metric* p) const { lk_metric_free(p); }
};
struct DistDeleter {
  void operator()(lk_dist* p) const { lk_dist_free(p); }
};
struct TableDeleter {
  void operator()(lk_type_table* p) const { lk_type_table_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { lk_string_free(p); }
};

using SystemPtr = std::unique_ptr<lk_system, SystemDeleter>;
using MetricPtr = std::unique_ptr<lk_metric, MetricDeleter>;
using DistPtr = std::unique_ptr<lk_dist, DistDeleter>;
using TablePtr = std::unique_ptr<lk_type_table, TableDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

void Check(lk_status status, const std::string& context) {
  if (status == LK_OK) return;
  throw InputError(context + ": " + lk_status_name(status) + ": " +
                   lk_last_error());
}

struct RunConfig {
  std::string system = "builtin:fig3";
  std::string metric = "maximal_leakage";
  std::uint64_t n = 1;
  std::string ns;
  std::string window;
  std::string mode = "global_gap";
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
  unsigned threads = 0;
  bool strict = false;
  std::string which = "all";
  bool metric_given = false;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  const std::filesystem::path parent =
      std::filesystem::path(path).parent_path();
  std::error_code ec;
  if (!parent.empty()) std::filesystem::create_directories(parent, ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot write file");
  out << text;
  if (!out) throw InputError(path + ": write failed");
}

SystemPtr LoadSystem(const std::string& spec) {
  lk_system* sys = nullptr;
  constexpr std::string_view kBuiltin = "builtin:";
  if (spec.rfind(kBuiltin, 0) == 0) {
    Check(lk_system_builtin(spec.substr(kBuiltin.size()).c_str(), &sys), spec);
  } else {
    Check(lk_system_from_json(ReadFile(spec).c_str(), &sys), spec);
  }
  return SystemPtr(sys);
}

bool IsBareKind(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(c == '_' || (c >= 'a' && c <= 'z'))) return false;
  }
  return true;
}

MetricPtr LoadMetric(const std::string& spec) {
  std::string text;
  std::string context = spec;
  if (!spec.empty() && spec.front() == '{') {
    text = spec;
    context = "--metric";
  } else if (std::filesystem::exists(spec)) {
    text = ReadFile(spec);
  } else if (IsBareKind(spec)) {
    text = "{\"kind\":\"" + spec + "\"}";
    context = "--metric";
  } else {
    throw InputError(spec + ": cannot open file");
  }
  lk_metric* m = nullptr;
  Check(lk_metric_from_json(text.c_str(), &m), context);
  return MetricPtr(m);
}

std::uint64_t ParseCount(const std::string& s, const std::string& flag) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s.front() == '-') {
    throw InputError(flag + ": expected a non-negative integer, got \"" + s +
                     "\"");
  }
  return v;
}

// "a..b" or "a..b:step" or "a,b,c".
std::vector<std::uint64_t> ParseNs(const std::string& s) {
  std::vector<std::uint64_t> out;
  const std::size_t dots = s.find("..");
  if (dots == std::string::npos) {
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(ParseCount(item, "--ns"));
  } else {
    const std::size_t colon = s.find(':', dots);
    const std::uint64_t a = ParseCount(s.substr(0, dots), "--ns");
    const std::uint64_t b = ParseCount(
        s.substr(dots + 2, colon == std::string::npos ? std::string::npos
                                                      : colon - dots - 2),
        "--ns");
    const std::uint64_t step = colon == std::string::npos
                                   ? 1
                                   : ParseCount(s.substr(colon + 1), "--ns");
    if (step == 0) throw InputError("--ns: step must be positive");
    if (b < a) throw InputError("--ns: empty range \"" + s + "\"");
    for (std::uint64_t n = a; n <= b; n += step) out.push_back(n);
  }
  if (out.empty()) throw InputError("--ns: no values");
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] <= out[i - 1]) {
      throw InputError("--ns: values must be strictly increasing");
    }
  }
  return out;
}

std::pair<std::uint64_t, std::uint64_t> ParseWindow(const std::string& s,
                                                    std::uint64_t lo,
                                                    std::uint64_t hi) {
  if (s.empty()) return {lo, hi};
  const std::size_t dots = s.find("..");
  if (dots == std::string::npos) {
    throw InputError("--window: expected a..b, got \"" + s + "\"");
  }
  const std::uint64_t a = ParseCount(s.substr(0, dots), "--window");
  const std::uint64_t b = ParseCount(s.substr(dots + 2), "--window");
  if (b < a) throw InputError("--window: empty window \"" + s + "\"");
  return {a, b};
}

// Writes CSV and/or SVG according to --format and --out.
class Emitter {
 public:
  explicit Emitter(const RunConfig& cfg) : cfg_(cfg) {
    if (cfg.format != "csv" && cfg.format != "svg" && cfg.format != "both") {
      throw InputError("--format: expected csv, svg or both");
    }
    if (cfg.format == "both" && cfg.out.empty()) {
      throw InputError("--format both needs --out");
    }
    base_ = cfg.out;
    const std::filesystem::path p(base_);
    if (p.extension() == ".csv" || p.extension() == ".svg") {
      base_ = p.parent_path().empty() ? p.stem().string()
                                      : (p.parent_path() / p.stem()).string();
    }
  }

  bool wants_svg() const { return cfg_.format != "csv"; }
  // Summary lines go to stdout when the data goes to a file.
  std::ostream& notes() const {
    return cfg_.out.empty() && cfg_.format != "svg" ? std::cerr : std::cout;
  }

  void Emit(const std::string& csv, const std::string& svg) const {
    if (cfg_.out.empty()) {
      std::cout << (cfg_.format == "svg" ? svg : csv);
      return;
    }
    if (cfg_.format != "svg") WriteFile(base_ + ".csv", csv);
    if (cfg_.format != "csv") WriteFile(base_ + ".svg", svg);
  }

 private:
  const RunConfig& cfg_;
  std::string base_;
};

std::string F(double v) { return FormatDouble(v); }

std::string YLabel(const lk_system* sys, std::size_t y) {
  return lk_system_y_label(sys, y);
}

std::string XLabel(const lk_system* sys, std::size_t x) {
  return lk_system_x_label(sys, x);
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string Observation(const lk_system* sys, const std::vector<uint32_t>& c,
                        std::uint64_t n) {
  if (n == 1) {
    for (std::size_t y = 0; y < c.size(); ++y) {
      if (c[y] == 1) return YLabel(sys, y);
    }
  }
  if (n == 0) return "(none)";
  std::string out;
  for (std::size_t y = 0; y < c.size(); ++y) {
    if (!out.empty()) out += ' ';
    out += YLabel(sys, y) + "=" + std::to_string(c[y]);
  }
  return out;
}

StepSeries SeriesFromDist(const std::string& name, const lk_dist* d) {
  StepSeries s{name, {}};
  double cdf = 0.0;
  for (std::size_t i = 0; i < lk_dist_size(d); ++i) {
    cdf += lk_dist_prob(d, i);
    s.points.emplace_back(lk_dist_value(d, i), std::min(cdf, 1.0));
  }
  return s;
}

int RunLeak(const RunConfig& cfg) {
  const Emitter emit(cfg);
  SystemPtr sys = LoadSystem(cfg.system);
  MetricPtr m = LoadMetric(cfg.metric);
  lk_type_table* raw = nullptr;
  Check(lk_pointwise_by_type(m.get(), sys.get(), cfg.n, &raw), "leak");
  TablePtr table(raw);
  double global = 0.0;
  Check(lk_global_leakage(m.get(), sys.get(), cfg.n, &global), "leak");

  std::string csv = "observation,prob,pointwise_bits\n";
  StepSeries series{"pointwise", {}};
  std::vector<uint32_t> counts(lk_system_num_y(sys.get()));
  for (std::size_t i = 0; i < lk_type_table_size(table.get()); ++i) {
    double prob = 0.0;
    double leak = 0.0;
    Check(lk_type_table_row(table.get(), i, counts.data(), &prob, &leak),
          "leak");
    csv += CsvField(Observation(sys.get(), counts, cfg.n)) + "," + F(prob) +
           "," + F(leak) + "\n";
  }
  DistPtr dist;
  if (emit.wants_svg()) {
    lk_dist* d = nullptr;
    Check(lk_pointwise_distribution(m.get(), sys.get(), cfg.n, &d), "leak");
    dist.reset(d);
  }
  const std::string svg =
      dist ? StepCdfSvg(std::string(lk_metric_name(m.get())) +
                            ", n=" + std::to_string(cfg.n),
                        "pointwise leakage (bits)",
                        {SeriesFromDist("L_n", dist.get())})
           : "";
  emit.Emit(csv, svg);
  emit.notes() << "global_leakage_bits=" << F(global) << "\n";
  return kExitOk;
}

int RunDistribution(const RunConfig& cfg) {
  const Emitter emit(cfg);
  SystemPtr sys = LoadSystem(cfg.system);
  MetricPtr m = LoadMetric(cfg.metric);
  lk_dist* raw = nullptr;
  Check(lk_pointwise_distribution(m.get(), sys.get(), cfg.n, &raw),
        "distribution");
  DistPtr d(raw);
  std::string csv = "value_bits,prob,cdf\n";
  const StepSeries series = SeriesFromDist("L_n", d.get());
  for (std::size_t i = 0; i < series.points.size(); ++i) {
    csv += F(lk_dist_value(d.get(), i)) + "," + F(lk_dist_prob(d.get(), i)) +
           "," + F(series.points[i].second) + "\n";
  }
  emit.Emit(csv, emit.wants_svg()
                     ? StepCdfSvg(std::string(lk_metric_name(m.get())) +
                                      ", n=" + std::to_string(cfg.n),
                                  "pointwise leakage (bits)", {series})
                     : "");
  return kExitOk;
}

int RunLimit(const RunConfig& cfg) {
  const Emitter emit(cfg);
  SystemPtr sys = LoadSystem(cfg.system);
  MetricPtr m = LoadMetric(cfg.metric);
  double limit = 0.0;
  Check(lk_global_limit(m.get(), sys.get(), &limit), "limit");
  std::string csv = "x,prior,information_bits,global_limit_bits\n";
  for (std::size_t x = 0; x < lk_system_num_x(sys.get()); ++x) {
    const double prior = lk_system_prior(sys.get(), x);
    std::string info;
    if (prior > 0.0) {
      double v = 0.0;
      Check(lk_information_value(m.get(), sys.get(), x, &v), "limit");
      info = F(v);
    }
    csv += CsvField(XLabel(sys.get(), x)) + "," + F(prior) + "," + info + "," +
           F(limit) + "\n";
  }
  std::string svg;
  if (emit.wants_svg()) {
    lk_dist* raw = nullptr;
    Check(lk_limit_distribution(m.get(), sys.get(), &raw), "limit");
    DistPtr d(raw);
    svg = StepCdfSvg(std::string(lk_metric_name(m.get())) + ", limit",
                     "information value (bits)",
                     {SeriesFromDist("I_X", d.get())});
  }
  emit.Emit(csv, svg);
  return kExitOk;
}

int RunCompose(const RunConfig& cfg) {
  const Emitter emit(cfg);
  SystemPtr sys = LoadSystem(cfg.system);
  MetricPtr m = LoadMetric(cfg.metric);
  const std::vector<std::uint64_t> ns =
      ParseNs(cfg.ns.empty() ? std::to_string(cfg.n) : cfg.ns);
  double limit = 0.0;
  Check(lk_global_limit(m.get(), sys.get(), &limit), "compose");
  lk_dist* raw = nullptr;
  Check(lk_limit_distribution(m.get(), sys.get(), &raw), "compose");
  DistPtr info(raw);
  const std::string name = lk_metric_name(m.get());
  std::string csv =
      "n,metric,global_leakage_bits,global_limit_bits,gap_bits,"
      "l1_to_information_cdf\n";
  RatePlot plot;
  plot.title = name + ": global gap";
  for (std::uint64_t n : ns) {
    double global = 0.0;
    double gap = 0.0;
    double l1 = 0.0;
    Check(lk_global_leakage(m.get(), sys.get(), n, &global), "compose");
    Check(lk_global_gap(m.get(), sys.get(), n, &gap), "compose");
    Check(lk_pointwise_distribution(m.get(), sys.get(), n, &raw), "compose");
    DistPtr d(raw);
    Check(lk_l1_distance(d.get(), info.get(), &l1), "compose");
    csv += std::to_string(n) + "," + CsvField(name) + "," + F(global) + "," +
           F(limit) + "," + F(gap) + "," + F(l1) + "\n";
    plot.n.push_back(static_cast<double>(n));
    plot.gap.push_back(gap);
  }
  emit.Emit(csv, emit.wants_svg() ? RateSvg(plot) : "");
  return kExitOk;
}

int RunRate(const RunConfig& cfg) {
  const Emitter emit(cfg);
  SystemPtr sys = LoadSystem(cfg.system);
  MetricPtr m = LoadMetric(cfg.metric);
  const std::vector<std::uint64_t> ns =
      ParseNs(cfg.ns.empty() ? "60..200:10" : cfg.ns);
  const auto [lo, hi] = ParseWindow(cfg.window, ns.front(), ns.back());
  lk_rate_mode mode;
  if (cfg.mode == "global_gap") {
    mode = LK_RATE_GLOBAL_GAP;
  } else if (cfg.mode == "pointwise_l1") {
    mode = LK_RATE_POINTWISE_L1;
  } else {
    throw InputError("--mode: expected global_gap or pointwise_l1");
  }
  std::vector<double> gaps(ns.size());
  lk_rate_fit fit{};
  Check(lk_rate_experiment(m.get(), sys.get(), ns.data(), ns.size(), mode, lo,
                           hi, gaps.data(), &fit),
        "rate");
  const std::string name = lk_metric_name(m.get());
  std::string csv =
      "n,gap_bits,metric,mode,fitted_slope,r_squared,c_min,relative_error\n";
  RatePlot plot;
  plot.title = name + " (" + cfg.mode + "), slope " + F(fit.slope);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    csv += std::to_string(ns[i]) + "," + F(gaps[i]) + "," + CsvField(name) +
           "," + cfg.mode + "," + F(fit.slope) + "," + F(fit.r_squared) + "," +
           F(fit.c_min) + "," + F(fit.relative_error) + "\n";
    plot.n.push_back(static_cast<double>(ns[i]));
    plot.gap.push_back(gaps[i]);
  }
  plot.slope = fit.slope;
  plot.intercept = fit.intercept;
  plot.window_lo = static_cast<double>(lo);
  plot.window_hi = static_cast<double>(hi);
  emit.Emit(csv, emit.wants_svg() ? RateSvg(plot) : "");
  emit.notes() << "fitted_slope=" << F(fit.slope) << " c_min=" << F(fit.c_min)
               << " relative_error=" << F(fit.relative_error) << "\n";
  return kExitOk;
}

int RunChernoff(const RunConfig& cfg) {
  if (cfg.format != "csv") throw InputError("chernoff: only csv output");
  const Emitter emit(cfg);
  SystemPtr sys = LoadSystem(cfg.system);
  const std::size_t nx = lk_system_num_x(sys.get());
  std::vector<double> matrix(nx * nx);
  double min_value = 0.0;
  std::size_t ax = 0;
  std::size_t bx = 0;
  Check(lk_chernoff_matrix(sys.get(), matrix.data(), &min_value, &ax, &bx),
        "chernoff");
  std::string csv = "x,x_prime,chernoff_bits,is_min\n";
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = i + 1; j < nx; ++j) {
      const bool is_min = i == ax && j == bx;
      csv += CsvField(XLabel(sys.get(), i)) + "," +
             CsvField(XLabel(sys.get(), j)) + "," + F(matrix[i * nx + j]) +
             "," + (is_min ? "1" : "0") + "\n";
    }
  }
  emit.Emit(csv, "");
  emit.notes() << "min_chernoff_bits=" << F(min_value) << "\n";
  return kExitOk;
}

std::string Table(const std::string& report_json) {
  std::ostringstream out;
  const nlohmann::json doc = nlohmann::json::parse(report_json);
  for (const auto& report : doc.at("reports")) {
    for (const auto& check : report.at("checks")) {
      char buf[512];
      std::snprintf(buf, sizeof(buf), "  %-24s %-13s %s\n",
                    check.at("name").get<std::string>().c_str(),
                    check.at("status").get<std::string>().c_str(),
                    check.at("detail").get<std::string>().c_str());
      out << buf;
    }
  }
  return out.str();
}

int RunVerify(const RunConfig& cfg) {
  SystemPtr sys = LoadSystem(cfg.system);
  std::vector<MetricPtr> metrics;
  if (cfg.metric_given) {
    metrics.push_back(LoadMetric(cfg.metric));
  } else {
    for (std::size_t i = 0; i < lk_catalog_size(); ++i) {
      lk_metric* m = nullptr;
      Check(lk_catalog_metric(lk_system_num_x(sys.get()), i, &m), "verify");
      metrics.emplace_back(m);
    }
  }
  bool any_fail = false;
  std::string json = "[\n";
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    char* raw = nullptr;
    int pass = 0;
    int fail = 0;
    Check(lk_verify(metrics[i].get(), sys.get(), cfg.seed, &raw, &pass, &fail),
          "verify");
    StringPtr report(raw);
    any_fail = any_fail || fail != 0;
    std::cout << lk_metric_name(metrics[i].get()) << ": "
              << (pass   ? "all checks pass"
                  : fail ? "FAIL"
                         : "inconclusive")
              << "\n"
              << Table(report.get());
    json += report.get();
    if (i + 1 < metrics.size()) json += ",";
  }
  json += "]\n";
  if (!cfg.out.empty()) WriteFile(cfg.out, json);
  return cfg.strict && any_fail ? kExitCheckFailed : kExitOk;
}

int RunSimulate(const RunConfig& cfg) {
  const Emitter emit(cfg);
  SystemPtr sys = LoadSystem(cfg.system);
  MetricPtr m = LoadMetric(cfg.metric);
  lk_dist* raw = nullptr;
  Check(lk_simulate(m.get(), sys.get(), cfg.n, cfg.trials, cfg.seed, &raw),
        "simulate");
  DistPtr d(raw);
  const StepSeries series = SeriesFromDist("empirical", d.get());
  std::string csv = "value_bits,empirical_cdf\n";
  for (const auto& [v, c] : series.points) csv += F(v) + "," + F(c) + "\n";
  emit.Emit(csv, emit.wants_svg()
                     ? StepCdfSvg(std::string(lk_metric_name(m.get())) +
                                      ", n=" + std::to_string(cfg.n) + ", " +
                                      std::to_string(cfg.trials) + " trials",
                                  "pointwise leakage (bits)", {series})
                     : "");
  return kExitOk;
}

int RunExamples(const RunConfig& cfg) {
  std::vector<std::string> names;
  if (cfg.which == "all") {
    names = {"fig2", "fig3"};
  } else if (cfg.which == "fig2" || cfg.which == "fig3") {
    names = {cfg.which};
  } else {
    throw InputError("--which: expected fig2, fig3 or all");
  }
  for (const std::string& name : names) {
    lk_system* raw = nullptr;
    Check(lk_system_builtin(name.c_str(), &raw), name);
    SystemPtr sys(raw);
    char* text = nullptr;
    Check(lk_system_to_json(sys.get(), &text), name);
    StringPtr json(text);
    if (cfg.out.empty()) {
      std::cout << json.get();
      continue;
    }
    std::filesystem::path target(cfg.out);
    if (names.size() > 1 || std::filesystem::is_directory(target)) {
      std::filesystem::create_directories(target);
      target /= name + ".json";
    }
    WriteFile(target.string(), json.get());
  }
  return kExitOk;
}

void AddSystem(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--system", cfg.system,
                  "System JSON file, or builtin:fig2 / builtin:fig3")
      ->capture_default_str();
}

void AddMetric(CLI::App* sub, RunConfig& cfg) {
  sub->add_option_function<std::string>(
         "--metric",
         [&cfg](const std::string& v) {
           cfg.metric = v;
           cfg.metric_given = true;
         },
         "Metric JSON file, inline JSON or a bare kind name")
      ->default_str(cfg.metric);
}

void AddOutput(CLI::App* sub, RunConfig& cfg, bool with_format) {
  sub->add_option("--out", cfg.out, "Output path (stdout when omitted)");
  if (with_format) {
    sub->add_option("--format", cfg.format, "csv, svg or both")
        ->capture_default_str();
  }
}

}  // namespace

int Main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"leakc: information leakage under repeated observations"};
  app.require_subcommand(1);
  app.add_option("--threads", cfg.threads,
                 "Cap on worker threads (0 = hardware default)");

  CLI::App* leak = app.add_subcommand(
      "leak", "Pointwise leakage per observation type and global leakage");
  AddSystem(leak, cfg);
  AddMetric(leak, cfg);
  leak->add_option("--n", cfg.n, "Number of observations")
      ->capture_default_str();
  AddOutput(leak, cfg, true);

  CLI::App* dist = app.add_subcommand(
      "distribution", "Exact distribution of pointwise leakage after n views");
  AddSystem(dist, cfg);
  AddMetric(dist, cfg);
  dist->add_option("--n", cfg.n, "Number of observations")
      ->capture_default_str();
  AddOutput(dist, cfg, true);

  CLI::App* limit = app.add_subcommand(
      "limit", "Limiting global leakage and information values");
  AddSystem(limit, cfg);
  AddMetric(limit, cfg);
  AddOutput(limit, cfg, true);

  CLI::App* compose = app.add_subcommand(
      "compose", "Global leakage, limit, gap and CDF distance over n values");
  AddSystem(compose, cfg);
  AddMetric(compose, cfg);
  compose->add_option("--ns", cfg.ns, "n values: a..b[:step] or a,b,c");
  compose->add_option("--n", cfg.n, "Single n when --ns is omitted");
  AddOutput(compose, cfg, true);

  CLI::App* rate = app.add_subcommand(
      "rate", "Fit the exponential decay rate of the gap against n");
  AddSystem(rate, cfg);
  AddMetric(rate, cfg);
  rate->add_option("--ns", cfg.ns, "n values: a..b[:step] or a,b,c")
      ->default_str("60..200:10");
  rate->add_option("--window", cfg.window, "Fit window a..b (default: all)");
  rate->add_option("--mode", cfg.mode, "global_gap or pointwise_l1")
      ->capture_default_str();
  AddOutput(rate, cfg, true);

  CLI::App* chernoff = app.add_subcommand(
      "chernoff", "Pairwise Chernoff information between channel rows");
  AddSystem(chernoff, cfg);
  AddOutput(chernoff, cfg, false);

  CLI::App* verify = app.add_subcommand(
      "verify", "Numerically check the axioms for one metric or the catalog");
  AddSystem(verify, cfg);
  AddMetric(verify, cfg);
  verify->add_option("--seed", cfg.seed, "Sampling seed")
      ->capture_default_str();
  verify->add_option("--out", cfg.out, "Write the JSON report here");
  verify->add_flag("--strict", cfg.strict, "Exit with 2 when a check fails");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo empirical CDF of pointwise leakage");
  AddSystem(simulate, cfg);
  AddMetric(simulate, cfg);
  simulate->add_option("--n", cfg.n, "Number of observations")
      ->capture_default_str();
  simulate->add_option("--trials", cfg.trials, "Number of trials")
      ->capture_default_str();
  simulate->add_option("--seed", cfg.seed, "Random seed")
      ->capture_default_str();
  AddOutput(simulate, cfg, true);

  CLI::App* examples = app.add_subcommand(
      "examples", "Write the built-in example systems as JSON");
  examples->add_option("--which", cfg.which, "fig2, fig3 or all")
      ->capture_default_str();
  examples->add_option("--out", cfg.out,
                       "Output file, or directory for several systems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    lk_set_threads(cfg.threads);
    if (leak->parsed()) return RunLeak(cfg);
    if (dist->parsed()) return RunDistribution(cfg);
    if (limit->parsed()) return RunLimit(cfg);
    if (compose->parsed()) return RunCompose(cfg);
    if (rate->parsed()) return RunRate(cfg);
    if (chernoff->parsed()) return RunChernoff(cfg);
    if (verify->parsed()) return RunVerify(cfg);
    if (simulate->parsed()) return RunSimulate(cfg);
    if (examples->parsed()) return RunExamples(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace leakc_cli

int main(int argc, char** argv) { return leakc_cli::Main(argc, argv); }
