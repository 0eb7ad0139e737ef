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

// One-pass fair k-center. A ladder of guesses Delta = (1 + eps)^j runs side
// by side; each guess keeps pivots more than 2 Delta apart, a small
// per-group replacement set per pivot and a per-group reserve. The ladder
// is lifted whenever some guess collects more than k pivots.

#ifndef FAIRKC_STREAMING_H_
#define FAIRKC_STREAMING_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fairkc/core.h"
#include "fairkc/fairshift.h"

namespace fairkc {

// Single-use source of stream points. Ids must be unique.
class PointSource {
 public:
  virtual ~PointSource() = default;
  virtual std::optional<PointRecord> Next() = 0;
};

// Streams the points of a dataset in index order (ids = indices), or in
// the order given by `order`.
class DatasetSource : public PointSource {
 public:
  explicit DatasetSource(const Dataset& dataset, std::vector<int> order = {});
  std::optional<PointRecord> Next() override;

 private:
  const Dataset& dataset_;
  std::vector<int> order_;
  size_t next_ = 0;
};

// Points retained by any guess, reference counted so that a point is
// dropped as soon as the last guess lets go of it.
class PointPool {
 public:
  explicit PointPool(Metric metric) : metric_(metric) {}

  void Insert(PointRecord point);
  void Acquire(int id);
  void Release(int id);
  void DropIfUnused(int id);

  const PointRecord& Get(int id) const;
  int group(int id) const { return Get(id).group; }
  double Distance(int a, int b) const;

  size_t size() const { return points_.size(); }
  size_t peak() const { return peak_; }
  Metric metric() const { return metric_; }

 private:
  struct Entry {
    PointRecord point;
    int refs = 0;
  };
  std::unordered_map<int, Entry> points_;
  Metric metric_;
  size_t peak_ = 0;
};

struct GuessInstance {
  int exponent = 0;  // delta = (1 + eps)^exponent
  double delta = 0.0;
  std::vector<int> pivots;                 // creation order
  std::vector<std::vector<int>> repl;      // parallel to pivots
  std::vector<std::vector<int>> reserve;   // per group, at most u_i each
};

// Attaches p to the first pivot within 2 Delta, merging `replacement` into
// that pivot's set (the incumbent wins a group collision); otherwise p
// becomes a pivot owning `replacement`. Then feeds `replacement` to the
// reserve up to u_i points per group.
void ProcessPoint(GuessInstance& instance, int point,
                  std::span<const int> replacement, PointPool& pool,
                  const FairnessBounds& bounds);

struct MergeResult {
  std::vector<int> centers;  // the well-separated pivot subset C
  double separation = 0.0;   // D, min pairwise distance in C
  ShiftResult shift;         // replacement[i] is the witness for centers[i]
};

MergeResult MergeCenters(const GuessInstance& instance, const PointPool& pool,
                         const FairnessBounds& bounds, int num_groups,
                         double eps);

struct StreamOptions {
  double eps = 0.1;
  // Coalesce exact duplicates when computing the initial lower bound.
  bool dedup = false;
  // Check every ladder invariant after each point and maintenance step.
  bool check_invariants = false;
};

class GuessLadder {
 public:
  GuessLadder(const FairnessBounds& bounds, int num_groups, Metric metric,
              const StreamOptions& options);

  // Ladder length beta: the smallest integer with (1 + eps)^beta >=
  // (2 + eps) / eps.
  static int LadderLength(double eps);
  // Smallest j with (1 + eps)^j >= value.
  static int CeilExponent(double value, double eps);
  double Power(int exponent) const;

  // Consumes the initial block (k + 1 points, or more with dedup) and
  // spawns the ladder. Throws "degenerate prefix" when tau would be zero.
  void Init(std::vector<PointRecord> prefix);

  // Offers one point to every guess; maintains when the count hits a
  // multiple of k.
  void Insert(PointRecord point);

  // Lifts the lower bound if some guess holds more than k pivots.
  void Maintain();

  // Throws Error(kPrecondition) describing the first violated invariant.
  void CheckInvariants(bool after_maintain) const;

  double tau() const { return tau_; }
  double tau_min() const { return Power(min_exponent_); }
  double tau_max() const { return Power(min_exponent_ + beta_); }
  int beta() const { return beta_; }
  int min_exponent() const { return min_exponent_; }
  std::int64_t points_seen() const { return points_seen_; }
  const std::vector<double>& tau_history() const { return tau_history_; }
  const std::map<int, GuessInstance>& instances() const { return instances_; }
  const PointPool& pool() const { return pool_; }
  const FairnessBounds& bounds() const { return bounds_; }
  int num_groups() const { return num_groups_; }
  double eps() const { return options_.eps; }
  bool CheckInvariantsEnabled() const { return options_.check_invariants; }

 private:
  GuessInstance Spawn(int exponent) const;
  void Abort(GuessInstance& instance);

  FairnessBounds bounds_;
  int num_groups_;
  StreamOptions options_;
  PointPool pool_;
  int beta_;
  double tau_ = 0.0;
  int min_exponent_ = 0;
  std::int64_t points_seen_ = 0;
  std::vector<double> tau_history_;
  std::map<int, GuessInstance> instances_;
  bool maintained_since_last_point_ = false;
};

struct StreamResult {
  std::vector<int> centers;  // stream point ids
  std::vector<int> per_group;
  bool used_fallback = false;
  int exponent = 0;  // guess that produced the answer
  double delta = 0.0;
  size_t peak_stored = 0;
  std::int64_t points = 0;
  double tau = 0.0;
  int beta = 0;
  std::vector<double> tau_history;
};

// Tries the guesses in increasing Delta; the first successful merge is
// completed from the reserve. If every guess fails, the offline solver runs
// on everything the smallest guess stored.
StreamResult Finalize(GuessLadder& ladder);

StreamResult StreamSolve(PointSource& source, const FairnessBounds& bounds,
                         int num_groups, const StreamOptions& options = {},
                         Metric metric = Metric::kL2);

}  // namespace fairkc

#endif  // FAIRKC_STREAMING_H_
