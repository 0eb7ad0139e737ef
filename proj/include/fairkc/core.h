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

#ifndef FAIRKC_CORE_H_
#define FAIRKC_CORE_H_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fairkc {

enum class ErrorCode {
  kInvalidArgument,
  kInfeasible,
  kIo,
  kScaleExceeded,
  kPrecondition,
};

// Every failure surfaced by the library is an Error carrying a code so that
// front ends can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

enum class Metric { kL2, kL1, kLinf };

double Distance(std::span<const double> a, std::span<const double> b,
                Metric metric = Metric::kL2);

struct PointRecord {
  int id = 0;
  std::vector<double> coords;
  int group = 0;
};

// Immutable point set with group labels. Coordinates are stored row-major.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<double> coords, int dim, std::vector<int> groups,
          int num_groups, Metric metric = Metric::kL2);

  // Ids of the records are ignored; point i of the dataset is records[i].
  // num_groups < 0 means max(group) + 1.
  static Dataset FromRecords(std::span<const PointRecord> records,
                             int num_groups = -1,
                             Metric metric = Metric::kL2);

  int size() const { return static_cast<int>(groups_.size()); }
  int dim() const { return dim_; }
  int num_groups() const { return num_groups_; }
  Metric metric() const { return metric_; }

  std::span<const double> point(int i) const {
    return {coords_.data() + static_cast<size_t>(i) * dim_,
            static_cast<size_t>(dim_)};
  }
  int group(int i) const { return groups_[i]; }
  const std::vector<int>& groups() const { return groups_; }
  const std::vector<int>& group_sizes() const { return group_sizes_; }
  const std::vector<double>& coords() const { return coords_; }

  double distance(int i, int j) const {
    return Distance(point(i), point(j), metric_);
  }

  PointRecord record(int i) const;

  // Display names for group ids, in id order. Empty unless set by ingestion.
  const std::vector<std::string>& group_names() const { return group_names_; }
  void set_group_names(std::vector<std::string> names);

  bool operator==(const Dataset& other) const = default;

 private:
  std::vector<double> coords_;
  int dim_ = 0;
  std::vector<int> groups_;
  int num_groups_ = 0;
  std::vector<int> group_sizes_;
  Metric metric_ = Metric::kL2;
  std::vector<std::string> group_names_;
};

struct FairnessBounds {
  std::vector<int> lower;
  std::vector<int> upper;
  int k = 0;

  bool operator==(const FairnessBounds& other) const = default;
};

struct ProblemInstance {
  Dataset dataset;
  FairnessBounds bounds;
};

// A set of distinct point ids with per-group counts kept in sync.
class CenterSet {
 public:
  CenterSet() = default;
  explicit CenterSet(int num_groups) : per_group_(num_groups, 0) {}

  // Throws on an out-of-range or duplicate id.
  static CenterSet FromIds(std::span<const int> ids, const Dataset& dataset);

  void Add(int id, int group);
  bool Contains(int id) const;

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::vector<int>& ids() const { return ids_; }
  const std::vector<int>& per_group() const { return per_group_; }

 private:
  std::vector<int> ids_;
  std::vector<int> per_group_;
};

// max over points of the distance to the nearest center. Points are reduced
// in ascending index order, so the result is bitwise reproducible.
double Objective(const Dataset& dataset, std::span<const int> centers);
double Objective(const Dataset& dataset, const CenterSet& centers);

// |centers| == k, ids distinct and valid, and l_i <= |C n S_i| <= u_i.
bool CheckFairness(const ProblemInstance& instance, const CenterSet& centers);
bool CheckFairness(const ProblemInstance& instance,
                   std::span<const int> centers);

// l_i = floor((1 - eps) |S_i| k / n), u_i = min(|S_i|, k, ceil((1 + eps)
// |S_i| k / n)). If the lower bounds overshoot k the largest ones are
// decremented until they sum to k.
FairnessBounds DeriveProportionalBounds(const Dataset& dataset, int k,
                                        double eps);

// Per-group variant: l_i from alpha_i and u_i from beta_i with the same
// rounding as DeriveProportionalBounds.
FairnessBounds DeriveRatioBounds(const Dataset& dataset, int k,
                                 std::span<const double> alpha,
                                 std::span<const double> beta);

// Throws Error(kInfeasible) naming the first violated invariant.
void ValidateInstance(const ProblemInstance& instance);

}  // namespace fairkc

#endif  // FAIRKC_CORE_H_
