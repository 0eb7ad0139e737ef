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

// Brute-force references. They share nothing with the solvers beyond the
// core types and exist to check them. Scale guards throw instead of
// truncating.

#ifndef FAIRKC_ORACLE_H_
#define FAIRKC_ORACLE_H_

#include <cstdint>
#include <span>

#include "fairkc/core.h"
#include "fairkc/fairshift.h"

namespace fairkc {

struct ExactSolution {
  CenterSet best_set;
  double opt = 0.0;
  std::int64_t explored = 0;  // feasible subsets evaluated
};

inline constexpr std::int64_t kMaxOracleSubsets = 10'000'000;
inline constexpr int kMaxOracleShiftCenters = 8;
inline constexpr int kMaxOracleFlowEdges = 10'000;

// Enumerates every k-subset in lexicographic order; the first subset with
// the smallest objective wins.
ExactSolution BruteForceOptimal(const ProblemInstance& instance);

// Exact k-center optimum with no fairness constraint.
ExactSolution BruteForceUnconstrained(const Dataset& dataset, int k);

// Tries every total map from A to points strictly within `radius`,
// checking injectivity, upper bounds and the lower-bound deficit budget.
bool BruteForceFairShift(const Dataset& dataset, std::span<const int> centers,
                         double radius, const FairnessBounds& bounds);

// Edmonds-Karp on a dense copy of the capacities. Ignores current flows.
std::int64_t ReferenceMaxFlow(const FlowNetwork& network);

}  // namespace fairkc

#endif  // FAIRKC_ORACLE_H_
