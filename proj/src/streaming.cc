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

#include "fairkc/streaming.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "fairkc/gonzalez.h"
#include "fairkc/offline.h"

namespace fairkc {

namespace {

void Violation(const std::string& what) {
  throw Error(ErrorCode::kPrecondition, "stream invariant violated: " + what);
}

bool HasGroup(const std::vector<int>& set, int group, const PointPool& pool) {
  for (int q : set) {
    if (pool.group(q) == group) return true;
  }
  return false;
}

}  // namespace

DatasetSource::DatasetSource(const Dataset& dataset, std::vector<int> order)
    : dataset_(dataset), order_(std::move(order)) {
  if (order_.empty()) {
    order_.resize(dataset.size());
    std::iota(order_.begin(), order_.end(), 0);
  }
}

std::optional<PointRecord> DatasetSource::Next() {
  if (next_ >= order_.size()) return std::nullopt;
  return dataset_.record(order_[next_++]);
}

void PointPool::Insert(PointRecord point) {
  const int id = point.id;
  auto [it, inserted] = points_.try_emplace(id, Entry{std::move(point), 0});
  if (!inserted) {
    throw Error(ErrorCode::kInvalidArgument,
                "duplicate stream point id " + std::to_string(id));
  }
  peak_ = std::max(peak_, points_.size());
}

void PointPool::Acquire(int id) { ++points_.at(id).refs; }

void PointPool::Release(int id) {
  auto it = points_.find(id);
  if (--it->second.refs == 0) points_.erase(it);
}

void PointPool::DropIfUnused(int id) {
  auto it = points_.find(id);
  if (it != points_.end() && it->second.refs == 0) points_.erase(it);
}

const PointRecord& PointPool::Get(int id) const { return points_.at(id).point; }

double PointPool::Distance(int a, int b) const {
  return fairkc::Distance(Get(a).coords, Get(b).coords, metric_);
}

void ProcessPoint(GuessInstance& instance, int point,
                  std::span<const int> replacement, PointPool& pool,
                  const FairnessBounds& bounds) {
  const double reach = 2.0 * instance.delta;
  int host = -1;
  for (size_t i = 0; i < instance.pivots.size(); ++i) {
    if (pool.Distance(instance.pivots[i], point) <= reach) {
      host = static_cast<int>(i);
      break;
    }
  }
  if (host < 0) {
    instance.pivots.push_back(point);
    pool.Acquire(point);
    instance.repl.emplace_back();
    host = static_cast<int>(instance.pivots.size()) - 1;
  }
  std::vector<int>& set = instance.repl[host];
  for (int q : replacement) {
    if (!HasGroup(set, pool.group(q), pool)) {
      set.push_back(q);
      pool.Acquire(q);
    }
  }
  for (int q : replacement) {
    const int g = pool.group(q);
    std::vector<int>& reserve = instance.reserve[g];
    if (static_cast<int>(reserve.size()) < bounds.upper[g] &&
        std::find(reserve.begin(), reserve.end(), q) == reserve.end()) {
      reserve.push_back(q);
      pool.Acquire(q);
    }
  }
}

MergeResult MergeCenters(const GuessInstance& instance, const PointPool& pool,
                         const FairnessBounds& bounds, int num_groups,
                         double eps) {
  MergeResult result;
  const std::vector<int>& pivots = instance.pivots;
  const int count = static_cast<int>(pivots.size());
  if (count == 0) return result;
  const double far = (6.0 + 2.0 * eps) * instance.delta;
  const double near = (3.0 + eps) * instance.delta;

  // Farthest-first over the pivots until the next pick is within `far`.
  std::vector<int> chosen{0};
  std::vector<char> in_set(count, 0);
  in_set[0] = 1;
  std::vector<double> nearest(count);
  for (int i = 0; i < count; ++i) nearest[i] = pool.Distance(pivots[i], pivots[0]);
  double gap = std::numeric_limits<double>::infinity();
  while (gap > far && static_cast<int>(chosen.size()) < count) {
    int next = -1;
    for (int i = 0; i < count; ++i) {
      if (!in_set[i] && (next < 0 || nearest[i] > nearest[next])) next = i;
    }
    gap = nearest[next];
    if (gap > far) {
      chosen.push_back(next);
      in_set[next] = 1;
      for (int i = 0; i < count; ++i) {
        nearest[i] = std::min(nearest[i], pool.Distance(pivots[i], pivots[next]));
      }
    }
  }

  result.separation = std::numeric_limits<double>::infinity();
  for (size_t a = 0; a < chosen.size(); ++a) {
    result.centers.push_back(pivots[chosen[a]]);
    for (size_t b = a + 1; b < chosen.size(); ++b) {
      result.separation =
          std::min(result.separation,
                   pool.Distance(pivots[chosen[a]], pivots[chosen[b]]));
    }
  }

  // Each pivot's replacement set joins the first chosen center within
  // `near`; its points count as sitting at that pivot. Pruning to the
  // closest witness per (center, group) is the one-per-group trim.
  std::vector<ShiftCandidate> raw;
  for (int i = 0; i < count; ++i) {
    for (size_t a = 0; a < chosen.size(); ++a) {
      const double d = pool.Distance(pivots[chosen[a]], pivots[i]);
      if (d <= near) {
        for (int q : instance.repl[i]) {
          raw.push_back({static_cast<int>(a), pool.group(q), q, d});
        }
        break;
      }
    }
  }
  const double radius = result.separation / 2.0;
  std::vector<ShiftCandidate> candidates;
  for (const ShiftCandidate& c : PruneCandidates(raw)) {
    if (c.dist < radius) candidates.push_back(c);
  }
  result.shift = SolveShift(candidates, static_cast<int>(chosen.size()),
                            num_groups, bounds);
  return result;
}

GuessLadder::GuessLadder(const FairnessBounds& bounds, int num_groups,
                         Metric metric, const StreamOptions& options)
    : bounds_(bounds),
      num_groups_(num_groups),
      options_(options),
      pool_(metric),
      beta_(0) {
  if (!(options.eps > 0.0 && options.eps <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "eps must lie in (0, 1]");
  }
  if (bounds.k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  if (static_cast<int>(bounds.lower.size()) != num_groups ||
      static_cast<int>(bounds.upper.size()) != num_groups) {
    throw Error(ErrorCode::kInvalidArgument, "bounds must have one entry per group");
  }
  beta_ = LadderLength(options.eps);
}

double GuessLadder::Power(int exponent) const {
  return std::pow(1.0 + options_.eps, exponent);
}

int GuessLadder::CeilExponent(double value, double eps) {
  const double base = 1.0 + eps;
  int j = static_cast<int>(std::ceil(std::log(value) / std::log(base)));
  while (std::pow(base, j - 1) >= value) --j;
  while (std::pow(base, j) < value) ++j;
  return j;
}

int GuessLadder::LadderLength(double eps) {
  return CeilExponent((2.0 + eps) / eps, eps);
}

GuessInstance GuessLadder::Spawn(int exponent) const {
  GuessInstance instance;
  instance.exponent = exponent;
  instance.delta = Power(exponent);
  instance.reserve.resize(num_groups_);
  return instance;
}

void GuessLadder::Abort(GuessInstance& instance) {
  for (int p : instance.pivots) pool_.Release(p);
  for (const auto& set : instance.repl) {
    for (int q : set) pool_.Release(q);
  }
  for (const auto& reserve : instance.reserve) {
    for (int q : reserve) pool_.Release(q);
  }
  instance.pivots.clear();
  instance.repl.clear();
  instance.reserve.clear();
}

void GuessLadder::Init(std::vector<PointRecord> prefix) {
  if (prefix.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "initial block needs two points");
  }
  double closest = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < prefix.size(); ++i) {
    for (size_t j = i + 1; j < prefix.size(); ++j) {
      const double d = Distance(prefix[i].coords, prefix[j].coords, pool_.metric());
      if (d == 0.0 && options_.dedup) continue;
      closest = std::min(closest, d);
    }
  }
  if (!(closest > 0.0) || std::isinf(closest)) {
    throw Error(ErrorCode::kInvalidArgument, "degenerate prefix");
  }
  tau_ = closest / 2.0;
  tau_history_.push_back(tau_);
  min_exponent_ = CeilExponent(tau_, options_.eps);

  std::vector<int> ids;
  for (PointRecord& p : prefix) {
    if (p.group < 0 || p.group >= num_groups_) {
      throw Error(ErrorCode::kInvalidArgument, "stream point group out of range");
    }
    ids.push_back(p.id);
    pool_.Insert(std::move(p));
    pool_.Acquire(ids.back());
  }
  for (int j = min_exponent_; j <= min_exponent_ + beta_; ++j) {
    GuessInstance instance = Spawn(j);
    for (int id : ids) {
      const int single[] = {id};
      ProcessPoint(instance, id, single, pool_, bounds_);
    }
    instances_.emplace(j, std::move(instance));
  }
  for (int id : ids) pool_.Release(id);
  points_seen_ = static_cast<std::int64_t>(ids.size());
  if (options_.check_invariants) CheckInvariants(false);
}

void GuessLadder::Insert(PointRecord point) {
  if (point.group < 0 || point.group >= num_groups_) {
    throw Error(ErrorCode::kInvalidArgument, "stream point group out of range");
  }
  const int id = point.id;
  pool_.Insert(std::move(point));
  const int single[] = {id};
  for (auto& [exponent, instance] : instances_) {
    ProcessPoint(instance, id, single, pool_, bounds_);
  }
  pool_.DropIfUnused(id);
  ++points_seen_;
  maintained_since_last_point_ = false;
  if (points_seen_ % bounds_.k == 0) {
    Maintain();
    maintained_since_last_point_ = true;
  }
  if (options_.check_invariants) CheckInvariants(maintained_since_last_point_);
}

void GuessLadder::Maintain() {
  const int k = bounds_.k;
  auto distance = [this](int a, int b) { return pool_.Distance(a, b); };

  double lifted = tau_;
  bool oversized = false;
  for (const auto& [exponent, instance] : instances_) {
    if (static_cast<int>(instance.pivots.size()) <= k) continue;
    oversized = true;
    const GonzalezTrace trace =
        GonzalezOnSubset(instance.pivots, distance, k + 1);
    // d_{k+1}: the k + 1-th pick's distance to the first k.
    lifted = std::max(lifted, trace.selection_gaps[k - 1] / 2.0);
  }
  if (!oversized) return;
  tau_ = lifted;
  tau_history_.push_back(tau_);

  const int old_min = min_exponent_;
  const int new_min = std::max(old_min, CeilExponent(tau_, options_.eps));
  if (new_min == old_min) return;

  // Respawn order: the first k + 1 pivots Gonzalez picks, then the rest in
  // creation order.
  const GuessInstance& source = instances_.at(old_min);
  std::vector<int> feed;
  std::vector<char> fed(source.pivots.size(), 0);
  {
    const GonzalezTrace trace =
        GonzalezOnSubset(source.pivots, distance, k + 1);
    const size_t head = std::min<size_t>(k + 1, trace.selection_order.size());
    std::vector<int> head_ids(trace.selection_order.begin(),
                              trace.selection_order.begin() + head);
    for (int id : head_ids) {
      const auto pos = std::find(source.pivots.begin(), source.pivots.end(), id) -
                       source.pivots.begin();
      feed.push_back(static_cast<int>(pos));
      fed[pos] = 1;
    }
    for (size_t i = 0; i < source.pivots.size(); ++i) {
      if (!fed[i]) feed.push_back(static_cast<int>(i));
    }
  }

  std::vector<GuessInstance> spawned;
  for (int j = new_min; j <= new_min + beta_; ++j) {
    if (instances_.count(j)) continue;
    GuessInstance instance = Spawn(j);
    instance.reserve = source.reserve;
    for (const auto& reserve : instance.reserve) {
      for (int q : reserve) pool_.Acquire(q);
    }
    for (int i : feed) {
      ProcessPoint(instance, source.pivots[i], source.repl[i], pool_, bounds_);
    }
    spawned.push_back(std::move(instance));
  }
  for (auto it = instances_.begin(); it != instances_.end();) {
    if (it->first < new_min) {
      Abort(it->second);
      it = instances_.erase(it);
    } else {
      ++it;
    }
  }
  for (GuessInstance& instance : spawned) {
    const int j = instance.exponent;
    instances_.emplace(j, std::move(instance));
  }
  min_exponent_ = new_min;
}

void GuessLadder::CheckInvariants(bool after_maintain) const {
  const int k = bounds_.k;
  if (static_cast<int>(instances_.size()) != beta_ + 1) Violation("ladder size");
  if (instances_.begin()->first != min_exponent_) Violation("ladder base");
  int expected = min_exponent_;
  for (const auto& [exponent, instance] : instances_) {
    if (exponent != expected++) Violation("ladder not contiguous");
    const double delta = instance.delta;
    const auto& pivots = instance.pivots;
    const size_t cap = after_maintain ? k : 2 * k;
    if (pivots.size() > cap) {
      Violation("guess " + std::to_string(exponent) + " holds " +
                std::to_string(pivots.size()) + " pivots");
    }
    for (size_t a = 0; a < pivots.size(); ++a) {
      for (size_t b = a + 1; b < pivots.size(); ++b) {
        if (!(pool_.Distance(pivots[a], pivots[b]) > 2.0 * delta)) {
          Violation("pivot separation");
        }
      }
      std::vector<int> seen(num_groups_, 0);
      for (int q : instance.repl[a]) {
        if (++seen[pool_.group(q)] > 1) Violation("two points of one group");
        if (pool_.Distance(q, pivots[a]) > (2.0 + options_.eps) * delta) {
          Violation("replacement radius");
        }
      }
    }
    for (int g = 0; g < num_groups_; ++g) {
      const auto& reserve = instance.reserve[g];
      if (static_cast<int>(reserve.size()) > bounds_.upper[g]) {
        Violation("reserve cap");
      }
      for (int q : reserve) {
        if (pool_.group(q) != g) Violation("reserve group");
      }
    }
  }
  const double base = tau_min();
  if (base < tau_ || base > (1.0 + options_.eps) * tau_ * (1.0 + 1e-12)) {
    Violation("tau_min outside [tau, (1 + eps) tau]");
  }
  if (!std::is_sorted(tau_history_.begin(), tau_history_.end())) {
    Violation("tau decreased");
  }
}

StreamResult Finalize(GuessLadder& ladder) {
  ladder.Maintain();
  if (ladder.CheckInvariantsEnabled()) ladder.CheckInvariants(true);

  const FairnessBounds& bounds = ladder.bounds();
  const int m = ladder.num_groups();
  const PointPool& pool = ladder.pool();
  StreamResult result;
  result.per_group.assign(m, 0);

  auto take = [&](int id) {
    result.centers.push_back(id);
    ++result.per_group[pool.group(id)];
  };
  auto taken = [&](int id) {
    return std::find(result.centers.begin(), result.centers.end(), id) !=
           result.centers.end();
  };

  bool done = false;
  for (const auto& [exponent, instance] : ladder.instances()) {
    const MergeResult merged =
        MergeCenters(instance, pool, bounds, m, ladder.eps());
    if (!merged.shift.feasible) continue;
    for (int witness : merged.shift.replacement) take(witness);
    // The reserve holds min(u_i, |S_i|) >= l_i distinct points of group i,
    // so after skipping the chosen ones enough remain to cover the deficit.
    for (int g = 0; g < m; ++g) {
      for (int q : instance.reserve[g]) {
        if (result.per_group[g] >= bounds.lower[g]) break;
        if (!taken(q)) take(q);
      }
      if (result.per_group[g] < bounds.lower[g]) {
        throw Error(ErrorCode::kPrecondition,
                    "reserve cannot cure the deficit of group " +
                        std::to_string(g));
      }
    }
    for (int g = 0; g < m; ++g) {
      for (int q : instance.reserve[g]) {
        if (static_cast<int>(result.centers.size()) >= bounds.k) break;
        if (result.per_group[g] >= bounds.upper[g]) break;
        if (!taken(q)) take(q);
      }
    }
    if (static_cast<int>(result.centers.size()) != bounds.k) {
      throw Error(ErrorCode::kPrecondition, "reserve cannot pad to k centers");
    }
    result.exponent = exponent;
    result.delta = instance.delta;
    done = true;
    break;
  }

  if (!done) {
    // Offline solve on everything the smallest guess stored.
    const GuessInstance& base = ladder.instances().begin()->second;
    std::vector<int> ids(base.pivots);
    for (const auto& set : base.repl) ids.insert(ids.end(), set.begin(), set.end());
    for (const auto& reserve : base.reserve) {
      ids.insert(ids.end(), reserve.begin(), reserve.end());
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<PointRecord> records;
    records.reserve(ids.size());
    for (int id : ids) records.push_back(pool.Get(id));
    ProblemInstance sub{Dataset::FromRecords(records, m, pool.metric()), bounds};
    const CenterSet local = SolveOffline(sub, 0);
    for (int i : local.ids()) take(ids[i]);
    result.used_fallback = true;
    result.exponent = base.exponent;
    result.delta = base.delta;
  }

  result.peak_stored = pool.peak();
  result.points = ladder.points_seen();
  result.tau = ladder.tau();
  result.beta = ladder.beta();
  result.tau_history = ladder.tau_history();
  return result;
}

StreamResult StreamSolve(PointSource& source, const FairnessBounds& bounds,
                         int num_groups, const StreamOptions& options,
                         Metric metric) {
  GuessLadder ladder(bounds, num_groups, metric, options);
  const int k = bounds.k;

  // Initial block: k + 1 points, or k + 1 distinct locations with dedup.
  std::vector<PointRecord> prefix;
  int distinct = 0;
  bool exhausted = false;
  while (distinct < k + 1) {
    std::optional<PointRecord> next = source.Next();
    if (!next) {
      exhausted = true;
      break;
    }
    bool fresh = true;
    if (options.dedup) {
      for (const PointRecord& p : prefix) {
        if (p.coords == next->coords) {
          fresh = false;
          break;
        }
      }
    }
    distinct += fresh ? 1 : 0;
    prefix.push_back(std::move(*next));
  }

  if (exhausted) {
    const int n = static_cast<int>(prefix.size());
    if (n < k) {
      throw Error(ErrorCode::kInfeasible,
                  "stream of " + std::to_string(n) + " points is shorter than k");
    }
    ProblemInstance all{Dataset::FromRecords(prefix, num_groups, metric), bounds};
    ValidateInstance(all);
    StreamResult result;
    result.per_group.assign(num_groups, 0);
    CenterSet chosen = n == k ? CenterSet::FromIds(
                                    [&] {
                                      std::vector<int> v(n);
                                      std::iota(v.begin(), v.end(), 0);
                                      return v;
                                    }(),
                                    all.dataset)
                              : SolveOffline(all, 0);
    if (!CheckFairness(all, chosen)) {
      throw Error(ErrorCode::kInfeasible, "short stream admits no fair center set");
    }
    for (int i : chosen.ids()) {
      result.centers.push_back(prefix[i].id);
      ++result.per_group[prefix[i].group];
    }
    result.used_fallback = true;
    result.peak_stored = prefix.size();
    result.points = n;
    result.beta = ladder.beta();
    return result;
  }

  ladder.Init(std::move(prefix));
  while (std::optional<PointRecord> next = source.Next()) {
    ladder.Insert(std::move(*next));
  }
  return Finalize(ladder);
}

}  // namespace fairkc
