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

#include "fairkc/gonzalez.h"

#include <algorithm>
#include <string>

namespace fairkc {

namespace {

// Shared engine over local indices [0, n). Picks `rounds` centers and fills
// sequence (local indices), gaps and history.
GonzalezTrace Traverse(int n, const DistanceFn& dist, int start, int rounds) {
  GonzalezTrace trace;
  trace.history.resize(n);
  std::vector<double> nearest(n);
  std::vector<char> chosen(n, 0);

  trace.sequence.push_back(start);
  chosen[start] = 1;
  for (int p = 0; p < n; ++p) {
    nearest[p] = p == start ? 0.0 : dist(p, start);
    trace.history[p].push_back({1, 0, nearest[p]});
  }

  for (int round = 2; round <= rounds; ++round) {
    int next = -1;
    for (int p = 0; p < n; ++p) {
      if (chosen[p]) continue;
      if (next < 0 || nearest[p] > nearest[next]) next = p;
    }
    const double gap = nearest[next];
    trace.gaps.push_back(gap);
    trace.sequence.push_back(next);
    chosen[next] = 1;
    const int center = round - 1;
    for (int p = 0; p < n; ++p) {
      // A center always owns itself, even when a duplicate came first.
      const double d = p == next ? 0.0 : dist(p, next);
      if (d < nearest[p] || p == next) {
        nearest[p] = d;
        trace.history[p].push_back({round, center, d});
      }
    }
  }
  return trace;
}

}  // namespace

GonzalezTrace Gonzalez(const Dataset& dataset, int k, int start) {
  const int n = dataset.size();
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  if (k > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  }
  if (start < 0 || start >= n) {
    throw Error(ErrorCode::kInvalidArgument, "start point out of range");
  }
  return Traverse(
      n, [&](int a, int b) { return dataset.distance(a, b); }, start, k);
}

std::vector<PointAssignment> AssignmentAtPrefix(const GonzalezTrace& trace,
                                                int h) {
  std::vector<PointAssignment> out(trace.history.size());
  for (size_t p = 0; p < trace.history.size(); ++p) {
    const auto& events = trace.history[p];
    auto it = std::upper_bound(
        events.begin(), events.end(), h,
        [](int value, const AssignmentEvent& e) { return value < e.prefix; });
    const AssignmentEvent& e = *(it - 1);
    out[p] = {e.center, e.distance};
  }
  return out;
}

GonzalezTrace GonzalezOnSubset(std::span<const int> subset,
                               const DistanceFn& distance, int limit) {
  const int n = static_cast<int>(subset.size());
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "empty subset");
  GonzalezTrace local = Traverse(
      n, [&](int a, int b) { return distance(subset[a], subset[b]); }, 0, n);

  GonzalezTrace trace;
  trace.selection_order.reserve(n);
  for (int j : local.sequence) trace.selection_order.push_back(subset[j]);
  trace.selection_gaps = local.gaps;

  const int keep = std::max(1, std::min(limit, n));
  trace.sequence.assign(trace.selection_order.begin(),
                        trace.selection_order.begin() + keep);
  trace.gaps.assign(local.gaps.begin(), local.gaps.begin() + (keep - 1));
  trace.history = std::move(local.history);
  for (auto& events : trace.history) {
    while (!events.empty() && events.back().prefix > keep) events.pop_back();
  }
  return trace;
}

GonzalezTrace GonzalezOnSubset(const Dataset& dataset,
                               std::span<const int> subset, int limit) {
  return GonzalezOnSubset(
      subset, [&](int a, int b) { return dataset.distance(a, b); }, limit);
}

}  // namespace fairkc
