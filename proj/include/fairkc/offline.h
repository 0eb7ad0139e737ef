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

#ifndef FAIRKC_OFFLINE_H_
#define FAIRKC_OFFLINE_H_

#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "fairkc/core.h"
#include "fairkc/fairshift.h"
#include "fairkc/gonzalez.h"

namespace fairkc {

struct OfflineOptions {
  int start = 0;
  // Probe every prefix and fail if feasibility is not monotone in h.
  bool verify_monotone = false;
  // Receives the network of the final minimization probe.
  std::ostream* network_dump = nullptr;
};

struct OfflineStats {
  int prefix = 0;                // h
  double shift_threshold = 0.0;  // largest center-to-witness distance used
  int probes = 0;                // fair-shift tests run
};

// Memoized fair-shift probes on prefixes of a Gonzalez sequence. Prefix h is
// tested at radius D(h) / 2 with D(h) = d_h for h >= 2 and D(1) = 2 d_2 (or
// unbounded when k = 1).
class PrefixSearch {
 public:
  PrefixSearch(const GonzalezTrace& trace, const ProblemInstance& instance);

  double Radius(int h) const;
  bool Probe(int h);

  // Largest h in [0, k] whose probe succeeds, by binary search.
  int FindMaxPrefix();

  int probes() const { return probes_; }
  const std::map<int, bool>& probed() const { return feasible_; }

 private:
  const GonzalezTrace& trace_;
  const ProblemInstance& instance_;
  std::map<int, bool> feasible_;
  int probes_ = 0;
};

int FindMaxPrefix(const GonzalezTrace& trace, const ProblemInstance& instance);

struct ShiftPlan {
  CenterSet centers;        // C_h
  std::vector<int> slack;   // per-group arbitrary centers from the flow
  double threshold = 0.0;
  int probes = 0;
};

// Smallest candidate distance at which the first h centers still shift.
ShiftPlan MinimizeShiftDistance(const GonzalezTrace& trace, int h,
                                const ProblemInstance& instance,
                                std::ostream* dump = nullptr);

// Cures lower-bound deficits from unused points of each group, then pads to
// k in ascending id order while respecting the upper bounds.
CenterSet CompleteCenters(const CenterSet& partial,
                          const ProblemInstance& instance);

CenterSet SolveOffline(const ProblemInstance& instance,
                       const OfflineOptions& options = {},
                       OfflineStats* stats = nullptr);
CenterSet SolveOffline(const ProblemInstance& instance, int start);

enum class HeuristicMode { kMajor, kMinor };

struct HeuristicAllocation {
  std::vector<int> counts;  // m_i, summing to k
  std::vector<int> order;   // groups in the order visited
};

// Starts at m = l and walks the groups by size (decreasing for Major,
// increasing for Minor; ties by id), raising each m_i to u_i while the
// remaining budget allows and handing out the rest otherwise.
HeuristicAllocation AllocateHeuristic(const ProblemInstance& instance,
                                      HeuristicMode mode);

// Equality-constrained solve: l = u = allocation.
CenterSet SolveEquality(const ProblemInstance& instance,
                        std::span<const int> allocation,
                        const OfflineOptions& options = {},
                        OfflineStats* stats = nullptr);

}  // namespace fairkc

#endif  // FAIRKC_OFFLINE_H_
