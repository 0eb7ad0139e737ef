// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end: solve, stream, baseline, oracle, gen, bench and
// report.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fairkc/core.h"
#include "fairkc/harness.h"
#include "fairkc/offline.h"
#include "fairkc/oracle.h"
#include "fairkc/streaming.h"

namespace {

using fairkc::Error;
using fairkc::ErrorCode;
using Json = nlohmann::ordered_json;

constexpr int kFullScalePointsPerBlob = 5000;

struct InputFlags {
  std::string input;
  std::string group_col = "group";
  std::vector<std::string> ignore_cols;
  bool no_normalize = false;
  int k = 0;
  double k_fraction = 0.05;
  double bounds_eps = 0.2;
  std::vector<int> lower;
  std::vector<int> upper;
  int start = 0;
  std::string format = "json";
  std::string out;
};

void AddInputFlags(CLI::App* cmd, InputFlags& f) {
  cmd->add_option("--input", f.input, "CSV file, or .bin replay file")->required();
  cmd->add_option("--group-col", f.group_col, "Group column of a CSV input");
  cmd->add_option("--ignore-col", f.ignore_cols, "CSV columns to skip");
  cmd->add_flag("--no-normalize", f.no_normalize, "Keep raw feature values");
  cmd->add_option("--k", f.k, "Number of centers (overrides --k-fraction)");
  cmd->add_option("--k-fraction", f.k_fraction, "k as a fraction of n");
  cmd->add_option("--bounds-eps", f.bounds_eps,
                  "Slack of the proportional fairness bounds");
  cmd->add_option("--lower", f.lower, "Explicit lower bounds, one per group")
      ->delimiter(',');
  cmd->add_option("--upper", f.upper, "Explicit upper bounds, one per group")
      ->delimiter(',');
  cmd->add_option("--start", f.start, "First Gonzalez center");
  cmd->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", f.out, "Output path (default stdout)");
}

bool EndsWith(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

fairkc::Dataset LoadDataset(const InputFlags& f) {
  if (EndsWith(f.input, ".bin")) return fairkc::ReadBinary(f.input);
  fairkc::CsvOptions csv{f.group_col, !f.no_normalize, f.ignore_cols};
  return fairkc::IngestCsv(f.input, csv);
}

fairkc::ProblemInstance BuildInstance(const InputFlags& f,
                                      fairkc::Dataset data) {
  int k = f.k;
  if (k <= 0) {
    k = std::max(1, static_cast<int>(std::floor(f.k_fraction * data.size())));
  }
  fairkc::FairnessBounds bounds;
  if (!f.lower.empty() || !f.upper.empty()) {
    if (f.lower.size() != f.upper.size() ||
        static_cast<int>(f.lower.size()) != data.num_groups()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "--lower and --upper need one value per group (" +
                      std::to_string(data.num_groups()) + ")");
    }
    bounds = {f.lower, f.upper, k};
  } else {
    bounds = fairkc::DeriveProportionalBounds(data, k, f.bounds_eps);
  }
  fairkc::ProblemInstance instance{std::move(data), std::move(bounds)};
  fairkc::ValidateInstance(instance);
  return instance;
}

void Write(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, path + ": cannot open for writing");
  out << text;
}

void EmitSolution(const InputFlags& f, const std::string& algorithm,
                  const fairkc::ProblemInstance& instance,
                  const std::vector<int>& centers, double runtime_ms,
                  Json extra) {
  const fairkc::Dataset& data = instance.dataset;
  const auto set = fairkc::CenterSet::FromIds(centers, data);
  if (f.format == "csv") {
    std::ostringstream out;
    out << "center,group\n";
    for (int c : centers) {
      out << c << ',';
      if (data.group_names().empty()) {
        out << data.group(c);
      } else {
        out << data.group_names()[data.group(c)];
      }
      out << '\n';
    }
    Write(out.str(), f.out);
    return;
  }
  Json j;
  j["algorithm"] = algorithm;
  j["n"] = data.size();
  j["k"] = instance.bounds.k;
  j["lower"] = instance.bounds.lower;
  j["upper"] = instance.bounds.upper;
  j["objective"] = fairkc::Objective(data, set);
  j["fair"] = fairkc::CheckFairness(instance, set);
  j["centers"] = centers;
  j["per_group"] = set.per_group();
  if (!data.group_names().empty()) j["group_names"] = data.group_names();
  j["runtime_ms"] = runtime_ms;
  for (auto& [key, value] : extra.items()) j[key] = value;
  Write(j.dump(2) + "\n", f.out);
}

double ElapsedMs(std::chrono::steady_clock::time_point begin) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - begin)
      .count();
}

int ExitCode(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInfeasible:
      return 2;
    case ErrorCode::kIo:
      return 3;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Range-based fair k-center clustering"};
  app.require_subcommand(1);

  InputFlags solve_flags;
  std::string dump_path;
  auto* solve = app.add_subcommand("solve", "Offline 3-approximation");
  AddInputFlags(solve, solve_flags);
  solve->add_option("--dump-network", dump_path,
                    "Write the final flow network to this file");

  InputFlags stream_flags;
  double stream_eps = 0.1;
  bool dedup = false;
  auto* stream = app.add_subcommand("stream", "One-pass streaming solver");
  AddInputFlags(stream, stream_flags);
  stream->add_option("--eps", stream_eps, "Guess ladder ratio minus one");
  stream->add_flag("--dedup", dedup, "Skip exact duplicates in the first block");

  InputFlags baseline_flags;
  std::string mode;
  auto* baseline = app.add_subcommand("baseline", "Major/Minor allocation baselines");
  AddInputFlags(baseline, baseline_flags);
  baseline->add_option("--mode", mode, "Allocation order")
      ->required()
      ->check(CLI::IsMember({"major", "minor"}));

  InputFlags oracle_flags;
  auto* oracle = app.add_subcommand("oracle", "Exact optimum by enumeration");
  AddInputFlags(oracle, oracle_flags);

  std::string spec_path;
  std::string gen_out;
  std::uint64_t gen_seed = 0;
  bool gen_seed_set = false;
  bool gen_full = false;
  fairkc::SyntheticSpec flag_spec;
  auto* gen = app.add_subcommand("gen", "Generate Gaussian blobs");
  gen->add_option("--spec", spec_path, "JSON synthetic spec");
  gen->add_option("--blobs", flag_spec.blobs);
  gen->add_option("--points-per-blob", flag_spec.points_per_blob);
  gen->add_option("--dim", flag_spec.dim);
  gen->add_option("--box-edge", flag_spec.box_edge);
  gen->add_option("--groups", flag_spec.groups);
  auto* seed_opt = gen->add_option("--seed", gen_seed);
  gen->add_flag("--full-scale", gen_full, "5000 points per blob");
  gen->add_option("--out", gen_out, "Output .csv or .bin")->required();

  std::string config_path;
  std::string bench_format = "json";
  std::string bench_out;
  bool bench_full = false;
  std::uint64_t bench_seed = 0;
  auto* bench = app.add_subcommand("bench", "Run an experiment sweep");
  bench->add_option("--config", config_path, "JSON experiment config")->required();
  bench->add_option("--format", bench_format)->check(CLI::IsMember({"json", "csv"}));
  bench->add_option("--out", bench_out);
  auto* bench_seed_opt = bench->add_option("--seed", bench_seed);
  bench->add_flag("--full-scale", bench_full, "5000 points per blob");

  std::string report_in;
  std::string report_format = "csv";
  std::string report_out;
  auto* report = app.add_subcommand("report", "Convert or summarize a JSON report");
  report->add_option("--input", report_in)->required();
  report->add_option("--format", report_format)->check(CLI::IsMember({"json", "csv"}));
  report->add_option("--out", report_out);
  bool report_aggregates = false;
  report->add_flag("--aggregates", report_aggregates,
                   "Print mean and standard deviation per cell");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }
  gen_seed_set = seed_opt->count() > 0;

  try {
    if (*solve) {
      auto instance = BuildInstance(solve_flags, LoadDataset(solve_flags));
      fairkc::OfflineOptions options;
      options.start = solve_flags.start;
      std::ofstream dump;
      if (!dump_path.empty()) {
        dump.open(dump_path);
        if (!dump) throw Error(ErrorCode::kIo, dump_path + ": cannot open for writing");
        options.network_dump = &dump;
      }
      fairkc::OfflineStats stats;
      const auto begin = std::chrono::steady_clock::now();
      const auto centers = fairkc::SolveOffline(instance, options, &stats);
      const double ms = ElapsedMs(begin);
      Json extra;
      extra["prefix"] = stats.prefix;
      extra["shift_threshold"] = stats.shift_threshold;
      extra["probes"] = stats.probes;
      EmitSolution(solve_flags, "ours", instance, centers.ids(), ms, extra);
    } else if (*stream) {
      // Bounds need group sizes, so a counting pass runs first unless they
      // are given explicitly; the solver itself reads the data once.
      auto instance = BuildInstance(stream_flags, LoadDataset(stream_flags));
      fairkc::DatasetSource source(instance.dataset);
      fairkc::StreamOptions options;
      options.eps = stream_eps;
      options.dedup = dedup;
      const auto begin = std::chrono::steady_clock::now();
      const auto result =
          fairkc::StreamSolve(source, instance.bounds,
                              instance.dataset.num_groups(), options,
                              instance.dataset.metric());
      const double ms = ElapsedMs(begin);
      Json extra;
      extra["eps"] = stream_eps;
      extra["peak_stored"] = result.peak_stored;
      extra["used_fallback"] = result.used_fallback;
      extra["delta"] = result.delta;
      extra["tau"] = result.tau;
      extra["beta"] = result.beta;
      EmitSolution(stream_flags, "stream", instance, result.centers, ms, extra);
    } else if (*baseline) {
      auto instance = BuildInstance(baseline_flags, LoadDataset(baseline_flags));
      const auto alloc = fairkc::AllocateHeuristic(
          instance, mode == "major" ? fairkc::HeuristicMode::kMajor
                                    : fairkc::HeuristicMode::kMinor);
      fairkc::OfflineOptions options;
      options.start = baseline_flags.start;
      const auto begin = std::chrono::steady_clock::now();
      const auto centers = fairkc::SolveEquality(instance, alloc.counts, options);
      const double ms = ElapsedMs(begin);
      Json extra;
      extra["allocation"] = alloc.counts;
      EmitSolution(baseline_flags, mode, instance, centers.ids(), ms, extra);
    } else if (*oracle) {
      auto instance = BuildInstance(oracle_flags, LoadDataset(oracle_flags));
      const auto begin = std::chrono::steady_clock::now();
      const auto exact = fairkc::BruteForceOptimal(instance);
      const double ms = ElapsedMs(begin);
      Json extra;
      extra["explored"] = exact.explored;
      EmitSolution(oracle_flags, "oracle", instance, exact.best_set.ids(), ms,
                   extra);
    } else if (*gen) {
      fairkc::SyntheticSpec spec = flag_spec;
      if (!spec_path.empty()) {
        spec = fairkc::ParseSyntheticSpecJson(fairkc::ReadFile(spec_path));
      }
      if (gen_seed_set) spec.seed = gen_seed;
      if (gen_full) spec.points_per_blob = kFullScalePointsPerBlob;
      const auto data = fairkc::GenerateBlobs(spec);
      if (EndsWith(gen_out, ".bin")) {
        fairkc::WriteBinary(data, gen_out);
      } else {
        fairkc::WriteCsv(data, gen_out);
      }
    } else if (*bench) {
      auto config = fairkc::ParseConfigJson(fairkc::ReadFile(config_path));
      if (bench_seed_opt->count() > 0) config.seed = bench_seed;
      if (bench_full) {
        if (auto* spec = std::get_if<fairkc::SyntheticSpec>(&config.source)) {
          spec->points_per_blob = kFullScalePointsPerBlob;
        }
      }
      const auto result = fairkc::RunExperiment(config);
      fairkc::EmitReport(result,
                         bench_format == "csv" ? fairkc::ReportFormat::kCsv
                                               : fairkc::ReportFormat::kJson,
                         bench_out);
    } else if (*report) {
      const auto parsed = fairkc::ParseReportJson(fairkc::ReadFile(report_in));
      if (report_aggregates) {
        std::ostringstream out;
        out << "algorithm,eps,count,mean,stddev\n";
        for (const auto& a : parsed.aggregates) {
          out << a.algorithm << ',' << a.eps << ',' << a.count << ',' << a.mean
              << ',' << a.stddev << '\n';
        }
        Write(out.str(), report_out);
      } else {
        fairkc::EmitReport(parsed,
                           report_format == "csv" ? fairkc::ReportFormat::kCsv
                                                  : fairkc::ReportFormat::kJson,
                           report_out);
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitCode(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
