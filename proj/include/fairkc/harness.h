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

// Data ingestion, synthetic blobs and the experiment runner.

#ifndef FAIRKC_HARNESS_H_
#define FAIRKC_HARNESS_H_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "fairkc/core.h"

namespace fairkc {

struct SyntheticSpec {
  int blobs = 20;
  int points_per_blob = 250;
  int dim = 4;
  double box_edge = 20.0;
  int groups = 2;  // must be a power of two
  std::uint64_t seed = 0;

  bool operator==(const SyntheticSpec& other) const = default;
};

// Isotropic unit-variance Gaussian blobs with centers uniform in
// [0, box_edge]^dim. Groups come from the sign pattern of log2(groups)
// random hyperplanes; offsets are redrawn until every group is nonempty.
// Points are shuffled.
Dataset GenerateBlobs(const SyntheticSpec& spec);

struct CsvOptions {
  std::string group_column;
  bool normalize = true;  // min-max scale every feature to [0, 1]
  std::vector<std::string> ignore_columns;
};

// Every column other than the group column and the ignored ones must be
// numeric. Group ids follow first appearance.
Dataset IngestCsv(const std::string& path, const CsvOptions& options);

// Writes features as f0..f{D-1} and the group column as "group".
void WriteCsv(const Dataset& dataset, const std::string& path);

// Little-endian: u32 n, u32 dim, u32 m, then per point dim float64 and a
// u32 group.
void WriteBinary(const Dataset& dataset, const std::string& path);
Dataset ReadBinary(const std::string& path);

struct ExperimentConfig {
  std::variant<std::string, SyntheticSpec> source;  // CSV path or blobs
  std::string group_column = "group";               // CSV sources only
  std::vector<std::string> ignore_columns;
  bool normalize = true;
  double k_fraction = 0.05;
  std::vector<double> eps_list{0.1, 0.2, 0.3, 0.4};
  int runs = 20;
  std::uint64_t seed = 0;
  std::vector<std::string> algorithms{"ours", "minor", "major"};
  double stream_eps = 0.1;
};

// Throws Error(kInvalidArgument) on an unknown algorithm, an eps outside
// [0, 1), runs < 1 or a bad k_fraction.
void ValidateConfig(const ExperimentConfig& config);

struct RunRecord {
  std::string algorithm;
  double eps = 0.0;
  int run = 0;
  double objective = 0.0;
  double runtime_ms = 0.0;
  std::int64_t stored_points = 0;
  bool fair = false;
  bool failed = false;
  std::string error;

  bool operator==(const RunRecord& other) const = default;
};

struct Aggregate {
  std::string algorithm;
  double eps = 0.0;
  int count = 0;  // successful runs
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for one run

  bool operator==(const Aggregate& other) const = default;
};

struct Report {
  int schema = 1;
  std::string source;
  int n = 0;
  int dim = 0;
  int m = 0;
  int k = 0;
  std::uint64_t seed = 0;
  int runs = 0;
  std::vector<RunRecord> rows;
  std::vector<Aggregate> aggregates;

  bool operator==(const Report& other) const = default;
};

// Mean and sample standard deviation of the objectives of non-failed rows,
// per (algorithm, eps) in first-appearance order.
std::vector<Aggregate> Summarize(const std::vector<RunRecord>& rows);

// Runs every (eps, run, algorithm) cell. A solver error marks that row
// failed and the sweep continues. Synthetic sources draw a fresh dataset
// per run from seed + run; every algorithm of a run shares one random
// Gonzalez start.
Report RunExperiment(const ExperimentConfig& config);

enum class ReportFormat { kJson, kCsv };

std::string FormatReport(const Report& report, ReportFormat format);
// An empty path writes to stdout.
void EmitReport(const Report& report, ReportFormat format,
                const std::string& path);
Report ParseReportJson(const std::string& text);

// Reads a JSON experiment config; see README for the keys.
ExperimentConfig ParseConfigJson(const std::string& text);
SyntheticSpec ParseSyntheticSpecJson(const std::string& text);

std::string ReadFile(const std::string& path);

}  // namespace fairkc

#endif  // FAIRKC_HARNESS_H_
