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

#ifndef FAIRKC_GONZALEZ_H_
#define FAIRKC_GONZALEZ_H_

#include <functional>
#include <span>
#include <vector>

#include "fairkc/core.h"

namespace fairkc {

// From prefix length `prefix` on, the point's nearest center is
// sequence[center] at `distance`, until the next event.
struct AssignmentEvent {
  int prefix = 0;
  int center = 0;
  double distance = 0.0;
};

struct PointAssignment {
  int center = 0;  // index into the center sequence
  double distance = 0.0;
};

// Farthest-first traversal. Positions are local: for a run over a whole
// dataset they are dataset ids; for a subset run, history[j] belongs to
// subset[j] while sequence/selection_order hold the original ids.
struct GonzalezTrace {
  std::vector<int> sequence;       // a_1..a_k
  std::vector<double> gaps;        // gaps[i - 2] = d_i for i in [2, k]
  std::vector<std::vector<AssignmentEvent>> history;
  // Subset runs only: every subset point in the order picked, with
  // selection_gaps[j] the gap of selection_order[j + 1].
  std::vector<int> selection_order;
  std::vector<double> selection_gaps;

  int size() const { return static_cast<int>(sequence.size()); }
  // d_i, 2 <= i <= size().
  double gap(int i) const { return gaps.at(i - 2); }
};

using DistanceFn = std::function<double(int, int)>;

// a_1 = start; each next center is the point farthest from those chosen so
// far, ties going to the lowest id. O(nk).
GonzalezTrace Gonzalez(const Dataset& dataset, int k, int start = 0);

// Nearest center among the first h of the sequence, for every point, by
// binary search over each point's event list. O(n log k).
std::vector<PointAssignment> AssignmentAtPrefix(const GonzalezTrace& trace,
                                                int h);

// Runs the traversal over `subset` (original ids) to completion starting at
// subset[0]; sequence/gaps are cut at min(limit, |subset|).
GonzalezTrace GonzalezOnSubset(std::span<const int> subset,
                               const DistanceFn& distance, int limit);
GonzalezTrace GonzalezOnSubset(const Dataset& dataset,
                               std::span<const int> subset, int limit);

}  // namespace fairkc

#endif  // FAIRKC_GONZALEZ_H_
