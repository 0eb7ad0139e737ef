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

#include <functional>
#include <numeric>
#include <random>

#include "doctest.h"
#include "fairkc/core.h"
#include "fairkc/offline.h"
#include "test_util.h"

namespace fairkc {
namespace {

using testing::Line;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kPrecondition;
}

std::string MessageOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

Dataset GroupsOfSize(const std::vector<int>& sizes) {
  std::vector<double> xs;
  std::vector<int> groups;
  for (size_t g = 0; g < sizes.size(); ++g) {
    for (int i = 0; i < sizes[g]; ++i) {
      xs.push_back(static_cast<double>(xs.size()));
      groups.push_back(static_cast<int>(g));
    }
  }
  return Line(xs, groups, static_cast<int>(sizes.size()));
}

TEST_CASE("objective of all points is zero") {
  const Dataset data = Line({0, 4, 10}, {0, 0, 0});
  const std::vector<int> all{0, 1, 2};
  CHECK(Objective(data, all) == 0.0);
}

TEST_CASE("objective on a line") {
  const Dataset data = Line({0, 4, 10}, {0, 0, 0});
  const std::vector<int> centers{0, 2};
  CHECK(Objective(data, centers) == 4.0);
}

TEST_CASE("objective matches a double loop") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> coords(200 * 4);
  for (double& x : coords) x = unit(rng);
  const Dataset data(coords, 4, std::vector<int>(200, 0), 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> ids(200);
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(1 + trial);
    CHECK(Objective(data, ids) == testing::ScanObjective(data, ids));
  }
}

TEST_CASE("objective rejects an empty center set") {
  const Dataset data = Line({0, 1}, {0, 0});
  CHECK(MessageOf([&] { Objective(data, std::vector<int>{}); }) == "no centers");
}

TEST_CASE("objective is zero exactly when every point is covered") {
  const Dataset data = Line({0, 0, 3, 3}, {0, 0, 0, 0});
  CHECK(Objective(data, std::vector<int>{0, 2}) == 0.0);
  CHECK(Objective(data, std::vector<int>{0}) > 0.0);
}

TEST_CASE("objective does not grow when centers are added") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = testing::RandomMicroInstance(rng);
    std::vector<int> ids(inst.dataset.size());
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    double last = Objective(inst.dataset, std::vector<int>{ids[0]});
    for (size_t j = 2; j <= ids.size(); ++j) {
      const double now =
          Objective(inst.dataset, std::vector<int>(ids.begin(), ids.begin() + j));
      CHECK(now <= last);
      last = now;
    }
  }
}

TEST_CASE("check fairness basics") {
  const Dataset data = Line({0, 1, 2, 3}, {0, 0, 1, 1});
  ProblemInstance inst{data, {{1, 1}, {1, 1}, 2}};
  CHECK(CheckFairness(inst, std::vector<int>{0, 2}));
  CHECK_FALSE(CheckFairness(inst, std::vector<int>{0, 1}));
  ProblemInstance lower{data, {{2, 0}, {2, 2}, 2}};
  CHECK_FALSE(CheckFairness(lower, std::vector<int>{0, 2}));
  // Wrong size and duplicates are rejected rather than thrown.
  CHECK_FALSE(CheckFairness(inst, std::vector<int>{0}));
  CHECK_FALSE(CheckFairness(inst, std::vector<int>{2, 2}));
}

TEST_CASE("check fairness agrees with a recount") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = testing::RandomMicroInstance(rng);
    std::vector<int> ids(inst.dataset.size());
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(inst.bounds.k);
    CHECK(CheckFairness(inst, ids) ==
          testing::RecountFair(inst.dataset, inst.bounds, ids));
  }
}

TEST_CASE("fairness survives a same-group swap") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = testing::RandomMicroInstance(rng);
    const auto& data = inst.dataset;
    const CenterSet c = SolveOffline(inst, 0);
    REQUIRE(CheckFairness(inst, c));
    std::vector<int> ids = c.ids();
    for (int p = 0; p < data.size(); ++p) {
      if (c.Contains(p)) continue;
      for (int& id : ids) {
        if (data.group(id) == data.group(p)) {
          const int old = id;
          id = p;
          CHECK(CheckFairness(inst, ids));
          id = old;
        }
      }
    }
  }
}

TEST_CASE("proportional bounds with exact shares") {
  const Dataset data = GroupsOfSize({50, 50});
  const FairnessBounds b = DeriveProportionalBounds(data, 10, 0.0);
  CHECK(b.lower == std::vector<int>{5, 5});
  CHECK(b.upper == std::vector<int>{5, 5});
}

TEST_CASE("proportional bounds with slack") {
  const Dataset data = GroupsOfSize({90, 10});
  const FairnessBounds b = DeriveProportionalBounds(data, 10, 0.2);
  CHECK(b.lower == std::vector<int>{7, 0});
  // ceil(1.2 * 9) = 11 is capped at k.
  CHECK(b.upper == std::vector<int>{10, 2});
}

TEST_CASE("proportional bounds stay feasible") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = std::uniform_int_distribution<int>(1, 6)(rng);
    std::vector<int> sizes(m);
    for (int& s : sizes) s = std::uniform_int_distribution<int>(1, 40)(rng);
    const Dataset data = GroupsOfSize(sizes);
    const int k = std::uniform_int_distribution<int>(1, data.size())(rng);
    const FairnessBounds b = DeriveProportionalBounds(data, k, 0.4);
    int lsum = 0, usum = 0;
    for (int i = 0; i < m; ++i) {
      CHECK(b.lower[i] <= b.upper[i]);
      CHECK(b.upper[i] <= sizes[i]);
      lsum += b.lower[i];
      usum += b.upper[i];
    }
    CHECK(lsum <= k);
    CHECK(k <= usum);
    CHECK_NOTHROW(ValidateInstance({data, b}));
  }
}

TEST_CASE("zero slack on divisible sizes gives equality bounds") {
  const Dataset data = GroupsOfSize({20, 40, 60});
  const FairnessBounds b = DeriveProportionalBounds(data, 6, 0.0);
  CHECK(b.lower == std::vector<int>{1, 2, 3});
  CHECK(b.upper == b.lower);
}

TEST_CASE("ratio bounds per group") {
  const Dataset data = GroupsOfSize({50, 50});
  const std::vector<double> alpha{1.0, 0.5};
  const std::vector<double> beta{1.0, 2.0};
  const FairnessBounds b = DeriveRatioBounds(data, 10, alpha, beta);
  CHECK(b.lower == std::vector<int>{5, 2});
  CHECK(b.upper == std::vector<int>{5, 10});
}

TEST_CASE("proportional bounds reject a bad eps") {
  const Dataset data = GroupsOfSize({5, 5});
  CHECK(CodeOf([&] { DeriveProportionalBounds(data, 2, 1.0); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("validate instance diagnostics") {
  const Dataset data = GroupsOfSize({2, 3});
  CHECK_NOTHROW(ValidateInstance({data, {{1, 1}, {2, 2}, 3}}));
  CHECK(MessageOf([&] { ValidateInstance({data, {{3, 0}, {3, 3}, 3}}); }) ==
        "l_0 exceeds group size");
  CHECK(MessageOf([&] { ValidateInstance({data, {{2, 2}, {2, 3}, 3}}); }) ==
        "lower bounds exceed k");
  CHECK(MessageOf([&] { ValidateInstance({data, {{0, 2}, {2, 1}, 2}}); }) ==
        "l_1 > u_1");
  CHECK(MessageOf([&] { ValidateInstance({data, {{0, 0}, {1, 1}, 3}}); }) ==
        "upper bounds sum below k");
  CHECK(CodeOf([&] { ValidateInstance({data, {{0, 0}, {5, 5}, 6}}); }) ==
        ErrorCode::kInfeasible);
}

TEST_CASE("center set keeps counts in sync") {
  const Dataset data = Line({0, 1, 2}, {0, 1, 1});
  const CenterSet c = CenterSet::FromIds(std::vector<int>{2, 0}, data);
  CHECK(c.per_group() == std::vector<int>{1, 1});
  CHECK(c.Contains(2));
  CHECK_FALSE(c.Contains(1));
  CHECK(CodeOf([&] { CenterSet::FromIds(std::vector<int>{0, 0}, data); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([&] { CenterSet::FromIds(std::vector<int>{3}, data); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("metric axioms on samples") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (Metric metric : {Metric::kL2, Metric::kL1, Metric::kLinf}) {
    std::vector<double> coords(30 * 3);
    for (double& x : coords) x = unit(rng);
    const Dataset data(coords, 3, std::vector<int>(30, 0), 1, metric);
    for (int a = 0; a < 30; ++a) {
      CHECK(data.distance(a, a) == 0.0);
      for (int b = 0; b < 30; ++b) {
        CHECK(data.distance(a, b) == data.distance(b, a));
        CHECK(data.distance(a, b) >= 0.0);
        for (int c = 0; c < 30; c += 7) {
          CHECK(data.distance(a, b) <=
                data.distance(a, c) + data.distance(c, b) + 1e-12);
        }
      }
    }
  }
}

TEST_CASE("dataset rejects malformed input") {
  CHECK(CodeOf([] { Dataset({0, 1}, 1, {0, 2}, 2); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { Dataset({0, 1, 2}, 2, {0, 0}, 1); }) ==
        ErrorCode::kInvalidArgument);
  std::vector<PointRecord> ragged{{0, {0.0}, 0}, {1, {0.0, 1.0}, 0}};
  CHECK(CodeOf([&] { Dataset::FromRecords(ragged); }) == ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace fairkc
