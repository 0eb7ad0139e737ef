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

#include "fairkc/offline.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

namespace fairkc {

PrefixSearch::PrefixSearch(const GonzalezTrace& trace,
                           const ProblemInstance& instance)
    : trace_(trace), instance_(instance) {}

double PrefixSearch::Radius(int h) const {
  if (h >= 2) return trace_.gap(h) / 2.0;
  // d_1 is undefined; a single center has no disjointness constraint.
  if (trace_.size() >= 2) return trace_.gap(2);
  return std::numeric_limits<double>::infinity();
}

bool PrefixSearch::Probe(int h) {
  if (h == 0) return true;
  if (auto it = feasible_.find(h); it != feasible_.end()) return it->second;
  ++probes_;
  // The first h Gonzalez centers are pairwise >= d_h apart, so balls of
  // radius d_h / 2 around them are disjoint.
  const auto assignment = AssignmentAtPrefix(trace_, h);
  const auto candidates =
      CollectCandidates(assignment, instance_.dataset, Radius(h));
  const bool ok = SolveShift(candidates, h, instance_.dataset.num_groups(),
                             instance_.bounds)
                      .feasible;
  feasible_[h] = ok;
  return ok;
}

int PrefixSearch::FindMaxPrefix() {
  int lo = 0;
  int hi = trace_.size();
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (Probe(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

int FindMaxPrefix(const GonzalezTrace& trace, const ProblemInstance& instance) {
  PrefixSearch search(trace, instance);
  return search.FindMaxPrefix();
}

ShiftPlan MinimizeShiftDistance(const GonzalezTrace& trace, int h,
                                const ProblemInstance& instance,
                                std::ostream* dump) {
  const Dataset& data = instance.dataset;
  ShiftPlan plan;
  plan.centers = CenterSet(data.num_groups());
  if (h == 0) return plan;

  PrefixSearch prefix(trace, instance);
  const auto assignment = AssignmentAtPrefix(trace, h);
  const auto candidates =
      CollectCandidates(assignment, data, prefix.Radius(h));

  // Only (center, group) minima can be the optimal threshold.
  std::vector<double> thresholds{0.0};
  for (const ShiftCandidate& c : candidates) thresholds.push_back(c.dist);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  std::vector<ShiftCandidate> within;
  auto solve_at = [&](double threshold, std::ostream* out) {
    ++plan.probes;
    within.clear();
    for (const ShiftCandidate& c : candidates) {
      if (c.dist <= threshold) within.push_back(c);
    }
    return SolveShift(within, h, data.num_groups(), instance.bounds, out);
  };

  // The top threshold is feasible by the prefix probe, so it is never
  // re-tested; the last feasible probe is kept to avoid a final re-solve.
  int lo = 0;
  int hi = static_cast<int>(thresholds.size()) - 1;
  std::optional<ShiftResult> best;
  int best_at = -1;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    ShiftResult r = solve_at(thresholds[mid], nullptr);
    if (r.feasible) {
      hi = mid;
      best = std::move(r);
      best_at = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (best_at != lo || dump != nullptr) best = solve_at(thresholds[lo], dump);
  if (!best->feasible) {
    throw Error(ErrorCode::kPrecondition,
                "prefix " + std::to_string(h) + " admits no fair shift");
  }
  plan.threshold = thresholds[lo];
  plan.slack = best->slack;
  for (int witness : best->replacement) {
    plan.centers.Add(witness, data.group(witness));
  }
  return plan;
}

CenterSet CompleteCenters(const CenterSet& partial,
                          const ProblemInstance& instance) {
  const Dataset& data = instance.dataset;
  const FairnessBounds& b = instance.bounds;
  CenterSet out = partial;
  std::vector<char> used(data.size(), 0);
  for (int id : partial.ids()) used[id] = 1;

  std::vector<int> deficit(data.num_groups());
  for (int i = 0; i < data.num_groups(); ++i) {
    deficit[i] = std::max(0, b.lower[i] - out.per_group()[i]);
  }
  for (int p = 0; p < data.size(); ++p) {
    const int g = data.group(p);
    if (!used[p] && deficit[g] > 0) {
      out.Add(p, g);
      used[p] = 1;
      --deficit[g];
    }
  }
  for (int p = 0; p < data.size() && out.size() < b.k; ++p) {
    const int g = data.group(p);
    if (!used[p] && out.per_group()[g] < b.upper[g]) {
      out.Add(p, g);
      used[p] = 1;
    }
  }
  if (!CheckFairness(instance, out)) {
    throw Error(ErrorCode::kPrecondition,
                "completion produced an unfair center set");
  }
  return out;
}

CenterSet SolveOffline(const ProblemInstance& instance,
                       const OfflineOptions& options, OfflineStats* stats) {
  ValidateInstance(instance);
  const GonzalezTrace trace =
      Gonzalez(instance.dataset, instance.bounds.k, options.start);

  PrefixSearch search(trace, instance);
  const int h = search.FindMaxPrefix();
  if (options.verify_monotone) {
    bool seen_failure = false;
    for (int i = 1; i <= trace.size(); ++i) {
      const bool ok = search.Probe(i);
      if (ok && seen_failure) {
        throw Error(ErrorCode::kPrecondition,
                    "prefix feasibility is not monotone at h = " +
                        std::to_string(i));
      }
      seen_failure = seen_failure || !ok;
    }
  }

  const ShiftPlan plan =
      MinimizeShiftDistance(trace, h, instance, options.network_dump);
  CenterSet result = CompleteCenters(plan.centers, instance);
  if (stats != nullptr) {
    stats->prefix = h;
    stats->shift_threshold = plan.threshold;
    stats->probes = search.probes() + plan.probes;
  }
  return result;
}

CenterSet SolveOffline(const ProblemInstance& instance, int start) {
  OfflineOptions options;
  options.start = start;
  return SolveOffline(instance, options);
}

HeuristicAllocation AllocateHeuristic(const ProblemInstance& instance,
                                      HeuristicMode mode) {
  ValidateInstance(instance);
  const auto& sizes = instance.dataset.group_sizes();
  const FairnessBounds& b = instance.bounds;
  HeuristicAllocation alloc;
  alloc.counts = b.lower;
  alloc.order.resize(sizes.size());
  std::iota(alloc.order.begin(), alloc.order.end(), 0);
  std::stable_sort(alloc.order.begin(), alloc.order.end(), [&](int x, int y) {
    return mode == HeuristicMode::kMajor ? sizes[x] > sizes[y]
                                         : sizes[x] < sizes[y];
  });

  int total = std::accumulate(alloc.counts.begin(), alloc.counts.end(), 0);
  for (int i : alloc.order) {
    const int remaining = b.k - total;
    if (b.upper[i] - alloc.counts[i] <= remaining) {
      total += b.upper[i] - alloc.counts[i];
      alloc.counts[i] = b.upper[i];
    } else {
      alloc.counts[i] += remaining;
      total += remaining;
    }
  }
  return alloc;
}

CenterSet SolveEquality(const ProblemInstance& instance,
                        std::span<const int> allocation,
                        const OfflineOptions& options, OfflineStats* stats) {
  const int m = instance.dataset.num_groups();
  if (static_cast<int>(allocation.size()) != m) {
    throw Error(ErrorCode::kInvalidArgument, "allocation needs one entry per group");
  }
  if (std::accumulate(allocation.begin(), allocation.end(), 0) !=
      instance.bounds.k) {
    throw Error(ErrorCode::kInfeasible, "allocation does not sum to k");
  }
  ProblemInstance exact{instance.dataset, {}};
  exact.bounds.k = instance.bounds.k;
  exact.bounds.lower.assign(allocation.begin(), allocation.end());
  exact.bounds.upper.assign(allocation.begin(), allocation.end());
  return SolveOffline(exact, options, stats);
}

}  // namespace fairkc
