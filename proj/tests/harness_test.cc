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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>

#include "doctest.h"
#include "fairkc/harness.h"
#include "fairkc/offline.h"

namespace fairkc {
namespace {

namespace fs = std::filesystem;

std::string Fixture(const std::string& name) {
  return std::string(FAIRKC_FIXTURE_DIR) + "/" + name;
}

std::string TempPath(const std::string& name) {
  return (fs::temp_directory_path() / ("fairkc_test_" + name)).string();
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kPrecondition;
}

TEST_CASE("blobs with two groups") {
  SyntheticSpec spec;
  spec.blobs = 5;
  spec.points_per_blob = 40;
  spec.groups = 2;
  spec.seed = 3;
  const Dataset data = GenerateBlobs(spec);
  CHECK(data.size() == 200);
  CHECK(data.dim() == 4);
  CHECK(data.num_groups() == 2);
  for (int s : data.group_sizes()) CHECK(s > 0);
}

TEST_CASE("blobs are reproducible") {
  SyntheticSpec spec;
  spec.points_per_blob = 20;
  spec.groups = 4;
  spec.seed = 99;
  CHECK(GenerateBlobs(spec) == GenerateBlobs(spec));
  SyntheticSpec other = spec;
  other.seed = 100;
  CHECK_FALSE(GenerateBlobs(spec) == GenerateBlobs(other));
}

TEST_CASE("eight groups come from three hyperplanes") {
  SyntheticSpec spec;
  spec.points_per_blob = 50;
  spec.groups = 8;
  spec.seed = 5;
  const Dataset data = GenerateBlobs(spec);
  CHECK(data.num_groups() <= 8);
  std::set<int> seen(data.groups().begin(), data.groups().end());
  CHECK(static_cast<int>(seen.size()) == data.num_groups());
}

TEST_CASE("blob spec validation") {
  SyntheticSpec spec;
  spec.groups = 3;
  CHECK(CodeOf([&] { GenerateBlobs(spec); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("blob centers stay in the box") {
  SyntheticSpec spec;
  spec.blobs = 3;
  spec.points_per_blob = 400;
  spec.dim = 2;
  spec.box_edge = 20.0;
  spec.seed = 8;
  const Dataset data = GenerateBlobs(spec);
  double mean[2] = {0, 0};
  for (int p = 0; p < data.size(); ++p) {
    for (int d = 0; d < 2; ++d) mean[d] += data.point(p)[d] / data.size();
  }
  for (double m : mean) {
    CHECK(m > 0.0);
    CHECK(m < 20.0);
  }
}

TEST_CASE("tiny csv") {
  CsvOptions options;
  options.group_column = "label";
  options.normalize = false;
  const Dataset data = IngestCsv(Fixture("tiny.csv"), options);
  CHECK(data.size() == 3);
  CHECK(data.dim() == 2);
  CHECK(data.groups() == std::vector<int>{0, 1, 0});
  CHECK(data.group_names() == std::vector<std::string>{"a", "b"});
  CHECK(data.point(1)[0] == 1.0);
  CHECK(data.point(1)[1] == 2.0);
}

TEST_CASE("normalized features span the unit interval") {
  CsvOptions options;
  options.group_column = "race";
  const Dataset data = IngestCsv(Fixture("adult.csv"), options);
  for (int d = 0; d < data.dim(); ++d) {
    double lo = 1e9, hi = -1e9;
    for (int p = 0; p < data.size(); ++p) {
      lo = std::min(lo, data.point(p)[d]);
      hi = std::max(hi, data.point(p)[d]);
    }
    CHECK(lo == 0.0);
    CHECK(hi == 1.0);
  }
  CHECK(IngestCsv(Fixture("adult.csv"), options) == data);
}

TEST_CASE("fixture group columns") {
  for (auto [file, column, groups] :
       std::vector<std::tuple<std::string, std::string, int>>{
           {"bank.csv", "deposit", 2}, {"compas.csv", "sex", 2}, {"adult.csv", "race", 5}}) {
    CsvOptions options;
    options.group_column = column;
    CHECK(IngestCsv(Fixture(file), options).num_groups() == groups);
  }
}

TEST_CASE("csv errors") {
  const std::string bad = TempPath("bad.csv");
  WriteText(bad, "x,y,g\n1,2,a\n3,oops,b\n");
  CsvOptions options;
  options.group_column = "g";
  try {
    IngestCsv(bad, options);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIo);
    const std::string what = e.what();
    CHECK(what.find("row 3") != std::string::npos);
    CHECK(what.find("'y'") != std::string::npos);
  }
  options.group_column = "missing";
  CHECK(CodeOf([&] { IngestCsv(bad, options); }) == ErrorCode::kIo);
  CHECK(CodeOf([&] { IngestCsv(TempPath("does_not_exist.csv"), options); }) ==
        ErrorCode::kIo);
  options.group_column = "g";
  options.ignore_columns = {"y"};
  CHECK(IngestCsv(bad, options).dim() == 1);
}

TEST_CASE("csv and binary round trips") {
  SyntheticSpec spec;
  spec.blobs = 2;
  spec.points_per_blob = 10;
  spec.seed = 4;
  const Dataset data = GenerateBlobs(spec);
  const std::string bin = TempPath("rt.bin");
  WriteBinary(data, bin);
  CHECK(ReadBinary(bin) == data);
  const std::string csv = TempPath("rt.csv");
  WriteCsv(data, csv);
  CsvOptions options;
  options.group_column = "group";
  options.normalize = false;
  const Dataset back = IngestCsv(csv, options);
  CHECK(back.coords() == data.coords());
  CHECK(back.size() == data.size());
}

TEST_CASE("single cell experiment") {
  ExperimentConfig config;
  config.source = Fixture("bank.csv");
  config.group_column = "deposit";
  config.algorithms = {"ours"};
  config.eps_list = {0.0};
  config.runs = 1;
  const Report report = RunExperiment(config);
  REQUIRE(report.rows.size() == 1);
  REQUIRE(report.aggregates.size() == 1);
  CHECK_FALSE(report.rows[0].failed);
  CHECK(report.aggregates[0].mean == report.rows[0].objective);
  CHECK(report.aggregates[0].stddev == 0.0);
  CHECK(report.k == 12);
}

TEST_CASE("aggregates match a recomputation") {
  ExperimentConfig config;
  SyntheticSpec spec;
  spec.blobs = 4;
  spec.points_per_blob = 30;
  config.source = spec;
  config.algorithms = {"ours", "minor", "major", "equality", "stream"};
  config.eps_list = {0.1, 0.3};
  config.runs = 4;
  config.seed = 17;
  const Report report = RunExperiment(config);
  CHECK(report.rows.size() == 2 * 4 * 5);
  for (const auto& row : report.rows) CHECK((row.fair || row.failed));
  for (const auto& agg : report.aggregates) {
    std::vector<double> values;
    for (const auto& row : report.rows) {
      if (row.algorithm == agg.algorithm && row.eps == agg.eps && !row.failed) {
        values.push_back(row.objective);
      }
    }
    REQUIRE(values.size() == static_cast<size_t>(agg.count));
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= values.size();
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    const double sd = values.size() > 1 ? std::sqrt(var / (values.size() - 1)) : 0.0;
    CHECK(agg.mean == doctest::Approx(mean).epsilon(1e-12));
    CHECK(agg.stddev == doctest::Approx(sd).epsilon(1e-12));
  }
}

TEST_CASE("fixed seed reproduces the report") {
  ExperimentConfig config;
  SyntheticSpec spec;
  spec.blobs = 3;
  spec.points_per_blob = 20;
  config.source = spec;
  config.algorithms = {"ours", "stream"};
  config.eps_list = {0.2};
  config.runs = 2;
  config.seed = 5;
  Report a = RunExperiment(config);
  Report b = RunExperiment(config);
  for (auto* r : {&a, &b}) {
    for (auto& row : r->rows) row.runtime_ms = 0.0;
  }
  CHECK(a == b);
}

TEST_CASE("failures are recorded per cell") {
  ExperimentConfig config;
  config.source = Fixture("bank.csv");
  config.group_column = "deposit";
  config.algorithms = {"oracle", "ours"};
  config.eps_list = {0.2};
  config.runs = 1;
  const Report report = RunExperiment(config);
  REQUIRE(report.rows.size() == 2);
  CHECK(report.rows[0].failed);
  CHECK(report.rows[0].error == "oracle scale exceeded");
  CHECK_FALSE(report.rows[1].failed);
}

TEST_CASE("report json round trip") {
  Report report;
  report.source = "x";
  report.n = 10;
  report.k = 2;
  report.rows.push_back({"ours", 0.1, 0, 1.0 / 3.0, 2.5, 10, true, false, ""});
  report.rows.push_back({"stream", 0.1, 0, 0.0, 0.0, 7, false, true, "boom"});
  report.aggregates = Summarize(report.rows);
  CHECK(ParseReportJson(FormatReport(report, ReportFormat::kJson)) == report);
  CHECK(FormatReport(report, ReportFormat::kJson).find("\"schema\": 1") !=
        std::string::npos);
}

TEST_CASE("csv report header") {
  const std::string header = "algorithm,eps,run,objective,runtime_ms,stored_points,fair\n";
  CHECK(FormatReport(Report{}, ReportFormat::kCsv) == header);
  Report report;
  report.rows.push_back({"ours", 0.2, 1, 0.5, 1.0, 3, true, false, ""});
  CHECK(FormatReport(report, ReportFormat::kCsv) == header + "ours,0.2,1,0.5,1,3,true\n");
}

TEST_CASE("emit report surfaces io errors") {
  CHECK(CodeOf([] {
          EmitReport(Report{}, ReportFormat::kCsv, "/nonexistent_dir/x/report.csv");
        }) == ErrorCode::kIo);
}

TEST_CASE("config validation") {
  ExperimentConfig config;
  config.source = SyntheticSpec{};
  config.eps_list = {1.0};
  CHECK(CodeOf([&] { ValidateConfig(config); }) == ErrorCode::kInvalidArgument);
  config.eps_list = {0.1};
  config.runs = 0;
  CHECK(CodeOf([&] { ValidateConfig(config); }) == ErrorCode::kInvalidArgument);
  config.runs = 1;
  config.algorithms = {"kmeans"};
  CHECK(CodeOf([&] { ValidateConfig(config); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("config json") {
  const ExperimentConfig config = ParseConfigJson(R"({
    "synthetic": {"blobs": 5, "points_per_blob": 10, "groups": 4},
    "eps_list": [0.1, 0.2], "runs": 3, "seed": 9, "algorithms": ["ours"]
  })");
  const auto& spec = std::get<SyntheticSpec>(config.source);
  CHECK(spec.blobs == 5);
  CHECK(spec.groups == 4);
  CHECK(config.eps_list == std::vector<double>{0.1, 0.2});
  CHECK(config.runs == 3);
  CHECK(config.k_fraction == 0.05);
  CHECK(CodeOf([] { ParseConfigJson("{}"); }) == ErrorCode::kIo);
}

}  // namespace
}  // namespace fairkc
