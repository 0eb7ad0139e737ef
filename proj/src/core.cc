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

#include "fairkc/core.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace fairkc {

namespace {

// Products like 0.8 * 90 * 10 / 100 land a few ulps off the integer they
// denote; snap those before floor/ceil.
double SnapToInteger(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x))) return r;
  return x;
}

std::string Sub(const char* name, int i) {
  return std::string(name) + "_" + std::to_string(i);
}

}  // namespace

double Distance(std::span<const double> a, std::span<const double> b,
                Metric metric) {
  double acc = 0.0;
  switch (metric) {
    case Metric::kL2:
      for (size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        acc += diff * diff;
      }
      return std::sqrt(acc);
    case Metric::kL1:
      for (size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
      return acc;
    case Metric::kLinf:
      for (size_t i = 0; i < a.size(); ++i)
        acc = std::max(acc, std::abs(a[i] - b[i]));
      return acc;
  }
  return acc;
}

Dataset::Dataset(std::vector<double> coords, int dim, std::vector<int> groups,
                 int num_groups, Metric metric)
    : coords_(std::move(coords)),
      dim_(dim),
      groups_(std::move(groups)),
      num_groups_(num_groups),
      group_sizes_(std::max(num_groups, 0), 0),
      metric_(metric) {
  if (dim_ <= 0) throw Error(ErrorCode::kInvalidArgument, "dimension must be positive");
  if (num_groups_ <= 0) throw Error(ErrorCode::kInvalidArgument, "need at least one group");
  if (coords_.size() != groups_.size() * static_cast<size_t>(dim_)) {
    throw Error(ErrorCode::kInvalidArgument,
                "coordinate count does not match points x dimension");
  }
  for (size_t i = 0; i < groups_.size(); ++i) {
    const int g = groups_[i];
    if (g < 0 || g >= num_groups_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "point " + std::to_string(i) + " has group " +
                      std::to_string(g) + " outside [0, " +
                      std::to_string(num_groups_) + ")");
    }
    ++group_sizes_[g];
  }
}

Dataset Dataset::FromRecords(std::span<const PointRecord> records,
                             int num_groups, Metric metric) {
  if (records.empty()) throw Error(ErrorCode::kInvalidArgument, "empty dataset");
  const int dim = static_cast<int>(records.front().coords.size());
  std::vector<double> coords;
  coords.reserve(records.size() * dim);
  std::vector<int> groups;
  groups.reserve(records.size());
  int max_group = 0;
  for (const PointRecord& r : records) {
    if (static_cast<int>(r.coords.size()) != dim) {
      throw Error(ErrorCode::kInvalidArgument,
                  "point " + std::to_string(r.id) + " has dimension " +
                      std::to_string(r.coords.size()) + ", expected " +
                      std::to_string(dim));
    }
    coords.insert(coords.end(), r.coords.begin(), r.coords.end());
    groups.push_back(r.group);
    max_group = std::max(max_group, r.group);
  }
  if (num_groups < 0) num_groups = max_group + 1;
  return Dataset(std::move(coords), dim, std::move(groups), num_groups, metric);
}

PointRecord Dataset::record(int i) const {
  auto p = point(i);
  return PointRecord{i, std::vector<double>(p.begin(), p.end()), groups_[i]};
}

void Dataset::set_group_names(std::vector<std::string> names) {
  if (static_cast<int>(names.size()) != num_groups_) {
    throw Error(ErrorCode::kInvalidArgument, "group name count != group count");
  }
  group_names_ = std::move(names);
}

CenterSet CenterSet::FromIds(std::span<const int> ids, const Dataset& dataset) {
  CenterSet set(dataset.num_groups());
  for (int id : ids) {
    if (id < 0 || id >= dataset.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "center id " + std::to_string(id) + " out of range");
    }
    if (set.Contains(id)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate center id " + std::to_string(id));
    }
    set.Add(id, dataset.group(id));
  }
  return set;
}

void CenterSet::Add(int id, int group) {
  ids_.push_back(id);
  ++per_group_.at(group);
}

bool CenterSet::Contains(int id) const {
  return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

double Objective(const Dataset& dataset, std::span<const int> centers) {
  if (centers.empty()) throw Error(ErrorCode::kInvalidArgument, "no centers");
  for (int c : centers) {
    if (c < 0 || c >= dataset.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "center id " + std::to_string(c) + " out of range");
    }
  }
  double worst = 0.0;
  for (int i = 0; i < dataset.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (int c : centers) best = std::min(best, dataset.distance(i, c));
    worst = std::max(worst, best);
  }
  return worst;
}

double Objective(const Dataset& dataset, const CenterSet& centers) {
  return Objective(dataset, std::span<const int>(centers.ids()));
}

bool CheckFairness(const ProblemInstance& instance,
                   std::span<const int> centers) {
  const Dataset& data = instance.dataset;
  const FairnessBounds& b = instance.bounds;
  if (static_cast<int>(centers.size()) != b.k) return false;
  std::vector<int> counts(data.num_groups(), 0);
  std::vector<int> sorted(centers.begin(), centers.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  for (int c : sorted) {
    if (c < 0 || c >= data.size()) return false;
    ++counts[data.group(c)];
  }
  for (int i = 0; i < data.num_groups(); ++i) {
    if (counts[i] < b.lower[i] || counts[i] > b.upper[i]) return false;
  }
  return true;
}

bool CheckFairness(const ProblemInstance& instance, const CenterSet& centers) {
  return CheckFairness(instance, std::span<const int>(centers.ids()));
}

FairnessBounds DeriveRatioBounds(const Dataset& dataset, int k,
                                 std::span<const double> alpha,
                                 std::span<const double> beta) {
  const int n = dataset.size();
  const int m = dataset.num_groups();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidArgument, "k must lie in [1, n]");
  }
  if (static_cast<int>(alpha.size()) != m || static_cast<int>(beta.size()) != m) {
    throw Error(ErrorCode::kInvalidArgument, "ratio vectors must have one entry per group");
  }
  FairnessBounds b;
  b.k = k;
  b.lower.resize(m);
  b.upper.resize(m);
  for (int i = 0; i < m; ++i) {
    const int size = dataset.group_sizes()[i];
    if (size == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "group " + std::to_string(i) + " is empty");
    }
    const double share = static_cast<double>(size) * k / n;
    const double lo = SnapToInteger(alpha[i] * share);
    const double hi = SnapToInteger(beta[i] * share);
    b.lower[i] = std::max(0, static_cast<int>(std::floor(lo)));
    b.upper[i] = std::min({size, k, static_cast<int>(std::ceil(hi))});
  }
  int lower_sum = std::accumulate(b.lower.begin(), b.lower.end(), 0);
  while (lower_sum > k) {
    auto it = std::max_element(b.lower.begin(), b.lower.end());
    --*it;
    --lower_sum;
  }
  for (int i = 0; i < m; ++i) b.lower[i] = std::min(b.lower[i], b.upper[i]);
  if (std::accumulate(b.upper.begin(), b.upper.end(), 0) < k) {
    throw Error(ErrorCode::kInfeasible, "infeasible proportional bounds");
  }
  return b;
}

FairnessBounds DeriveProportionalBounds(const Dataset& dataset, int k,
                                        double eps) {
  if (!(eps >= 0.0 && eps < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "bounds eps must lie in [0, 1)");
  }
  const std::vector<double> alpha(dataset.num_groups(), 1.0 - eps);
  const std::vector<double> beta(dataset.num_groups(), 1.0 + eps);
  return DeriveRatioBounds(dataset, k, alpha, beta);
}

void ValidateInstance(const ProblemInstance& instance) {
  const Dataset& data = instance.dataset;
  const FairnessBounds& b = instance.bounds;
  const int m = data.num_groups();
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInfeasible, what);
  };
  if (data.size() == 0) fail("empty dataset");
  if (static_cast<int>(b.lower.size()) != m || static_cast<int>(b.upper.size()) != m) {
    fail("bounds must have " + std::to_string(m) + " entries");
  }
  if (b.k < 1) fail("k must be positive");
  if (b.k > data.size()) fail("k exceeds the number of points");
  long lower_sum = 0;
  long upper_sum = 0;
  for (int i = 0; i < m; ++i) {
    const int size = data.group_sizes()[i];
    if (b.lower[i] < 0) fail(Sub("l", i) + " is negative");
    if (b.lower[i] > size) fail(Sub("l", i) + " exceeds group size");
    if (b.lower[i] > b.upper[i]) fail(Sub("l", i) + " > " + Sub("u", i));
    if (b.upper[i] > size) fail(Sub("u", i) + " exceeds group size");
    lower_sum += b.lower[i];
    upper_sum += b.upper[i];
  }
  if (lower_sum > b.k) fail("lower bounds exceed k");
  if (upper_sum < b.k) fail("upper bounds sum below k");
}

}  // namespace fairkc
