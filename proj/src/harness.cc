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

#include "fairkc/harness.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "fairkc/offline.h"
#include "fairkc/oracle.h"
#include "fairkc/streaming.h"

namespace fairkc {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxHyperplaneAttempts = 1000;

const std::array<const char*, 6> kAlgorithms = {"ours",     "minor",  "major",
                                                "equality", "stream", "oracle"};

bool IsPowerOfTwo(int x) { return x > 0 && (x & (x - 1)) == 0; }

// Shortest representation that parses back to the same double.
std::string FormatDouble(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// One CSV record; double quotes may wrap a field and "" escapes a quote.
std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(Trim(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(Trim(field));
  return fields;
}

std::optional<double> ParseNumber(const std::string& text) {
  if (text.empty()) return std::nullopt;
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

void PutU32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 4);
}

void PutF64(std::ostream& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t GetBytes(std::istream& in, int count, const std::string& path) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), count)) {
    throw Error(ErrorCode::kIo, path + ": truncated binary file");
  }
  std::uint64_t v = 0;
  for (int i = count - 1; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

// Largest-remainder apportionment of k proportional to group sizes.
std::vector<int> ProportionalCounts(const Dataset& data, int k) {
  const int m = data.num_groups();
  const auto& sizes = data.group_sizes();
  std::vector<int> counts(m);
  std::vector<std::pair<double, int>> remainders;
  int total = 0;
  for (int i = 0; i < m; ++i) {
    const double share = static_cast<double>(sizes[i]) * k / data.size();
    counts[i] = static_cast<int>(std::floor(share));
    total += counts[i];
    remainders.emplace_back(share - counts[i], i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (int j = 0; total < k; ++j, ++total) ++counts[remainders[j].second];
  return counts;
}

Json RowToJson(const RunRecord& r) {
  Json j;
  j["algorithm"] = r.algorithm;
  j["eps"] = r.eps;
  j["run"] = r.run;
  j["objective"] = r.objective;
  j["runtime_ms"] = r.runtime_ms;
  j["stored_points"] = r.stored_points;
  j["fair"] = r.fair;
  j["failed"] = r.failed;
  j["error"] = r.error;
  return j;
}

}  // namespace

Dataset GenerateBlobs(const SyntheticSpec& spec) {
  if (spec.blobs < 1 || spec.points_per_blob < 1 || spec.dim < 1 ||
      !(spec.box_edge > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid synthetic spec");
  }
  if (!IsPowerOfTwo(spec.groups)) {
    throw Error(ErrorCode::kInvalidArgument, "group count must be a power of two");
  }
  const int dim = spec.dim;
  const int n = spec.blobs * spec.points_per_blob;
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> box(0.0, spec.box_edge);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<double> coords;
  coords.reserve(static_cast<size_t>(n) * dim);
  for (int b = 0; b < spec.blobs; ++b) {
    std::vector<double> center(dim);
    for (double& c : center) c = box(rng);
    for (int p = 0; p < spec.points_per_blob; ++p) {
      for (int d = 0; d < dim; ++d) coords.push_back(center[d] + gauss(rng));
    }
  }

  std::vector<double> lo(dim, INFINITY), hi(dim, -INFINITY);
  for (int p = 0; p < n; ++p) {
    for (int d = 0; d < dim; ++d) {
      lo[d] = std::min(lo[d], coords[p * dim + d]);
      hi[d] = std::max(hi[d], coords[p * dim + d]);
    }
  }

  int planes = 0;
  while ((1 << planes) < spec.groups) ++planes;
  std::vector<int> groups(n, 0);
  bool covered = false;
  for (int attempt = 0; attempt < kMaxHyperplaneAttempts && !covered; ++attempt) {
    std::fill(groups.begin(), groups.end(), 0);
    for (int h = 0; h < planes; ++h) {
      std::vector<double> normal(dim);
      double norm = 0.0;
      for (double& x : normal) {
        x = gauss(rng);
        norm += x * x;
      }
      norm = std::sqrt(norm);
      double offset = 0.0;
      for (int d = 0; d < dim; ++d) {
        normal[d] /= norm;
        offset += normal[d] *
                  std::uniform_real_distribution<double>(lo[d], hi[d])(rng);
      }
      for (int p = 0; p < n; ++p) {
        double side = 0.0;
        for (int d = 0; d < dim; ++d) side += normal[d] * coords[p * dim + d];
        if (side > offset) groups[p] |= 1 << h;
      }
    }
    std::vector<int> seen(spec.groups, 0);
    for (int g : groups) seen[g] = 1;
    covered = std::all_of(seen.begin(), seen.end(), [](int s) { return s; });
  }
  int num_groups = spec.groups;
  if (!covered) {
    // Some sign patterns stayed empty; renumber the populated ones densely.
    std::vector<int> remap(spec.groups, -1);
    num_groups = 0;
    for (int& g : groups) {
      if (remap[g] < 0) remap[g] = num_groups++;
      g = remap[g];
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<double> shuffled;
  shuffled.reserve(coords.size());
  std::vector<int> shuffled_groups;
  shuffled_groups.reserve(n);
  for (int p : order) {
    shuffled.insert(shuffled.end(), coords.begin() + p * dim,
                    coords.begin() + (p + 1) * dim);
    shuffled_groups.push_back(groups[p]);
  }
  return Dataset(std::move(shuffled), dim, std::move(shuffled_groups),
                 num_groups);
}

Dataset IngestCsv(const std::string& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, path + ": cannot open");
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::kIo, path + ": empty file");
  const std::vector<std::string> header = SplitCsvLine(line);

  int group_col = -1;
  std::vector<int> features;
  for (int c = 0; c < static_cast<int>(header.size()); ++c) {
    if (header[c] == options.group_column) {
      group_col = c;
    } else if (std::find(options.ignore_columns.begin(),
                         options.ignore_columns.end(),
                         header[c]) == options.ignore_columns.end()) {
      features.push_back(c);
    }
  }
  if (group_col < 0) {
    throw Error(ErrorCode::kIo,
                path + ": missing group column '" + options.group_column + "'");
  }
  if (features.empty()) throw Error(ErrorCode::kIo, path + ": no feature columns");

  const int dim = static_cast<int>(features.size());
  std::vector<double> coords;
  std::vector<int> groups;
  std::vector<std::string> names;
  std::unordered_map<std::string, int> ids;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (Trim(line).empty()) continue;
    const std::vector<std::string> fields = SplitCsvLine(line);
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::kIo, path + ": row " + std::to_string(row) +
                                      " has " + std::to_string(fields.size()) +
                                      " fields, expected " +
                                      std::to_string(header.size()));
    }
    for (int c : features) {
      const auto value = ParseNumber(fields[c]);
      if (!value) {
        throw Error(ErrorCode::kIo, path + ": row " + std::to_string(row) +
                                        ", column '" + header[c] +
                                        "': non-numeric value '" + fields[c] +
                                        "'");
      }
      coords.push_back(*value);
    }
    const std::string& label = fields[group_col];
    if (label.empty()) {
      throw Error(ErrorCode::kIo,
                  path + ": row " + std::to_string(row) + ": missing group");
    }
    auto [it, inserted] = ids.try_emplace(label, static_cast<int>(names.size()));
    if (inserted) names.push_back(label);
    groups.push_back(it->second);
  }
  if (groups.empty()) throw Error(ErrorCode::kIo, path + ": no data rows");

  if (options.normalize) {
    const size_t n = groups.size();
    for (int d = 0; d < dim; ++d) {
      double lo = INFINITY, hi = -INFINITY;
      for (size_t p = 0; p < n; ++p) {
        lo = std::min(lo, coords[p * dim + d]);
        hi = std::max(hi, coords[p * dim + d]);
      }
      for (size_t p = 0; p < n; ++p) {
        double& x = coords[p * dim + d];
        x = hi > lo ? (x - lo) / (hi - lo) : 0.0;
      }
    }
  }
  Dataset data(std::move(coords), dim, std::move(groups),
               static_cast<int>(names.size()));
  data.set_group_names(std::move(names));
  return data;
}

void WriteCsv(const Dataset& dataset, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, path + ": cannot open for writing");
  for (int d = 0; d < dataset.dim(); ++d) out << 'f' << d << ',';
  out << "group\n";
  const auto& names = dataset.group_names();
  for (int p = 0; p < dataset.size(); ++p) {
    for (double x : dataset.point(p)) out << FormatDouble(x) << ',';
    if (names.empty()) {
      out << dataset.group(p) << '\n';
    } else {
      out << names[dataset.group(p)] << '\n';
    }
  }
  if (!out) throw Error(ErrorCode::kIo, path + ": write failed");
}

void WriteBinary(const Dataset& dataset, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, path + ": cannot open for writing");
  PutU32(out, dataset.size());
  PutU32(out, dataset.dim());
  PutU32(out, dataset.num_groups());
  for (int p = 0; p < dataset.size(); ++p) {
    for (double x : dataset.point(p)) PutF64(out, x);
    PutU32(out, dataset.group(p));
  }
  if (!out) throw Error(ErrorCode::kIo, path + ": write failed");
}

Dataset ReadBinary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, path + ": cannot open");
  const auto n = static_cast<int>(GetBytes(in, 4, path));
  const auto dim = static_cast<int>(GetBytes(in, 4, path));
  const auto m = static_cast<int>(GetBytes(in, 4, path));
  std::vector<double> coords;
  std::vector<int> groups;
  coords.reserve(static_cast<size_t>(n) * dim);
  for (int p = 0; p < n; ++p) {
    for (int d = 0; d < dim; ++d) {
      const std::uint64_t bits = GetBytes(in, 8, path);
      double x;
      std::memcpy(&x, &bits, 8);
      coords.push_back(x);
    }
    groups.push_back(static_cast<int>(GetBytes(in, 4, path)));
  }
  return Dataset(std::move(coords), dim, std::move(groups), m);
}

void ValidateConfig(const ExperimentConfig& config) {
  if (!(config.k_fraction > 0.0 && config.k_fraction <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "k_fraction must lie in (0, 1]");
  }
  if (config.runs < 1) throw Error(ErrorCode::kInvalidArgument, "runs must be >= 1");
  if (config.eps_list.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "eps_list is empty");
  }
  for (double eps : config.eps_list) {
    if (!(eps >= 0.0 && eps < 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "eps values must lie in [0, 1)");
    }
  }
  if (!(config.stream_eps > 0.0 && config.stream_eps <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "stream eps must lie in (0, 1]");
  }
  for (const std::string& a : config.algorithms) {
    if (std::find(kAlgorithms.begin(), kAlgorithms.end(), a) == kAlgorithms.end()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown algorithm '" + a + "'");
    }
  }
}

std::vector<Aggregate> Summarize(const std::vector<RunRecord>& rows) {
  std::vector<Aggregate> out;
  std::vector<std::vector<double>> values;
  for (const RunRecord& r : rows) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Aggregate& a) {
      return a.algorithm == r.algorithm && a.eps == r.eps;
    });
    if (it == out.end()) {
      out.push_back({r.algorithm, r.eps, 0, 0.0, 0.0});
      values.emplace_back();
      it = out.end() - 1;
    }
    if (!r.failed) values[it - out.begin()].push_back(r.objective);
  }
  for (size_t i = 0; i < out.size(); ++i) {
    const auto& v = values[i];
    out[i].count = static_cast<int>(v.size());
    if (v.empty()) continue;
    double sum = 0.0;
    for (double x : v) sum += x;
    out[i].mean = sum / v.size();
    if (v.size() > 1) {
      double sq = 0.0;
      for (double x : v) sq += (x - out[i].mean) * (x - out[i].mean);
      out[i].stddev = std::sqrt(sq / (v.size() - 1));
    }
  }
  return out;
}

Report RunExperiment(const ExperimentConfig& config) {
  ValidateConfig(config);
  Report report;
  report.seed = config.seed;
  report.runs = config.runs;

  std::optional<Dataset> fixed;
  if (const auto* path = std::get_if<std::string>(&config.source)) {
    CsvOptions csv{config.group_column, config.normalize, config.ignore_columns};
    fixed = IngestCsv(*path, csv);
    report.source = *path;
  } else {
    const auto& spec = std::get<SyntheticSpec>(config.source);
    report.source = "blobs:" + std::to_string(spec.blobs) + "x" +
                    std::to_string(spec.points_per_blob) + ",dim=" +
                    std::to_string(spec.dim) + ",groups=" +
                    std::to_string(spec.groups);
  }

  for (int run = 0; run < config.runs; ++run) {
    Dataset data;
    if (fixed) {
      data = *fixed;
    } else {
      SyntheticSpec spec = std::get<SyntheticSpec>(config.source);
      spec.seed = config.seed + run;
      data = GenerateBlobs(spec);
    }
    const int n = data.size();
    const int k = std::max(1, static_cast<int>(std::floor(config.k_fraction * n)));
    if (run == 0) {
      report.n = n;
      report.dim = data.dim();
      report.m = data.num_groups();
      report.k = k;
    }
    std::mt19937_64 rng(config.seed + run);
    const int start = std::uniform_int_distribution<int>(0, n - 1)(rng);
    std::vector<int> stream_order(n);
    std::iota(stream_order.begin(), stream_order.end(), 0);
    std::shuffle(stream_order.begin(), stream_order.end(), rng);

    for (double eps : config.eps_list) {
      std::optional<ProblemInstance> instance;
      std::string bounds_error;
      try {
        instance = ProblemInstance{data, DeriveProportionalBounds(data, k, eps)};
      } catch (const Error& e) {
        bounds_error = e.what();
      }
      for (const std::string& algorithm : config.algorithms) {
        RunRecord row;
        row.algorithm = algorithm;
        row.eps = eps;
        row.run = run;
        if (!instance) {
          row.failed = true;
          row.error = bounds_error;
          report.rows.push_back(row);
          continue;
        }
        try {
          OfflineOptions options;
          options.start = start;
          std::vector<int> centers;
          row.stored_points = n;
          const auto begin = std::chrono::steady_clock::now();
          if (algorithm == "ours") {
            centers = SolveOffline(*instance, options).ids();
          } else if (algorithm == "minor" || algorithm == "major") {
            const auto alloc = AllocateHeuristic(
                *instance,
                algorithm == "major" ? HeuristicMode::kMajor : HeuristicMode::kMinor);
            centers = SolveEquality(*instance, alloc.counts, options).ids();
          } else if (algorithm == "equality") {
            centers = SolveEquality(*instance, ProportionalCounts(data, k), options)
                          .ids();
          } else if (algorithm == "stream") {
            DatasetSource source(data, stream_order);
            StreamOptions stream;
            stream.eps = config.stream_eps;
            const StreamResult result =
                StreamSolve(source, instance->bounds, data.num_groups(), stream,
                            data.metric());
            centers = result.centers;
            row.stored_points = static_cast<std::int64_t>(result.peak_stored);
          } else {
            centers = BruteForceOptimal(*instance).best_set.ids();
          }
          const auto end = std::chrono::steady_clock::now();
          row.runtime_ms =
              std::chrono::duration<double, std::milli>(end - begin).count();
          row.fair = CheckFairness(*instance, centers);
          row.objective = Objective(data, centers);
          if (!row.fair) {
            row.failed = true;
            row.error = "solution violates the fairness bounds";
          }
        } catch (const std::exception& e) {
          row.failed = true;
          row.fair = false;
          row.objective = 0.0;
          row.error = e.what();
        }
        report.rows.push_back(row);
      }
    }
  }
  report.aggregates = Summarize(report.rows);
  return report;
}

std::string FormatReport(const Report& report, ReportFormat format) {
  if (format == ReportFormat::kCsv) {
    std::ostringstream out;
    out << "algorithm,eps,run,objective,runtime_ms,stored_points,fair\n";
    for (const RunRecord& r : report.rows) {
      out << r.algorithm << ',' << FormatDouble(r.eps) << ',' << r.run << ',';
      if (!r.failed) out << FormatDouble(r.objective);
      out << ',' << FormatDouble(r.runtime_ms) << ',' << r.stored_points << ','
          << (r.fair ? "true" : "false") << '\n';
    }
    return out.str();
  }
  Json j;
  j["schema"] = report.schema;
  j["source"] = report.source;
  j["n"] = report.n;
  j["dim"] = report.dim;
  j["m"] = report.m;
  j["k"] = report.k;
  j["seed"] = report.seed;
  j["runs"] = report.runs;
  j["rows"] = Json::array();
  for (const RunRecord& r : report.rows) j["rows"].push_back(RowToJson(r));
  j["aggregates"] = Json::array();
  for (const Aggregate& a : report.aggregates) {
    Json row;
    row["algorithm"] = a.algorithm;
    row["eps"] = a.eps;
    row["count"] = a.count;
    row["mean"] = a.mean;
    row["stddev"] = a.stddev;
    j["aggregates"].push_back(row);
  }
  return j.dump(2) + "\n";
}

void EmitReport(const Report& report, ReportFormat format,
                const std::string& path) {
  const std::string text = FormatReport(report, format);
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, path + ": cannot open for writing");
  out << text;
  if (!out) throw Error(ErrorCode::kIo, path + ": write failed");
}

Report ParseReportJson(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    Report report;
    report.schema = j.at("schema").get<int>();
    if (report.schema != 1) {
      throw Error(ErrorCode::kIo, "unsupported report schema " +
                                      std::to_string(report.schema));
    }
    report.source = j.at("source").get<std::string>();
    report.n = j.at("n").get<int>();
    report.dim = j.at("dim").get<int>();
    report.m = j.at("m").get<int>();
    report.k = j.at("k").get<int>();
    report.seed = j.at("seed").get<std::uint64_t>();
    report.runs = j.at("runs").get<int>();
    for (const Json& r : j.at("rows")) {
      RunRecord row;
      row.algorithm = r.at("algorithm").get<std::string>();
      row.eps = r.at("eps").get<double>();
      row.run = r.at("run").get<int>();
      row.objective = r.at("objective").get<double>();
      row.runtime_ms = r.at("runtime_ms").get<double>();
      row.stored_points = r.at("stored_points").get<std::int64_t>();
      row.fair = r.at("fair").get<bool>();
      row.failed = r.at("failed").get<bool>();
      row.error = r.at("error").get<std::string>();
      report.rows.push_back(row);
    }
    for (const Json& a : j.at("aggregates")) {
      report.aggregates.push_back({a.at("algorithm").get<std::string>(),
                                   a.at("eps").get<double>(),
                                   a.at("count").get<int>(),
                                   a.at("mean").get<double>(),
                                   a.at("stddev").get<double>()});
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kIo, std::string("malformed report: ") + e.what());
  }
}

SyntheticSpec ParseSyntheticSpecJson(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    SyntheticSpec spec;
    spec.blobs = j.value("blobs", spec.blobs);
    spec.points_per_blob = j.value("points_per_blob", spec.points_per_blob);
    spec.dim = j.value("dim", spec.dim);
    spec.box_edge = j.value("box_edge", spec.box_edge);
    spec.groups = j.value("groups", spec.groups);
    spec.seed = j.value("seed", spec.seed);
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kIo, std::string("malformed spec: ") + e.what());
  }
}

ExperimentConfig ParseConfigJson(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    ExperimentConfig config;
    if (j.contains("csv")) {
      config.source = j.at("csv").get<std::string>();
      config.group_column = j.value("group_col", config.group_column);
      config.ignore_columns =
          j.value("ignore_cols", std::vector<std::string>{});
      config.normalize = j.value("normalize", true);
    } else if (j.contains("synthetic")) {
      config.source = ParseSyntheticSpecJson(j.at("synthetic").dump());
    } else {
      throw Error(ErrorCode::kIo, "config needs a 'csv' or 'synthetic' source");
    }
    config.k_fraction = j.value("k_fraction", config.k_fraction);
    config.eps_list = j.value("eps_list", config.eps_list);
    config.runs = j.value("runs", config.runs);
    config.seed = j.value("seed", config.seed);
    config.algorithms = j.value("algorithms", config.algorithms);
    config.stream_eps = j.value("stream_eps", config.stream_eps);
    return config;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kIo, std::string("malformed config: ") + e.what());
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, path + ": cannot open");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace fairkc
