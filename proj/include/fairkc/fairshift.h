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

#ifndef FAIRKC_FAIRSHIFT_H_
#define FAIRKC_FAIRSHIFT_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "fairkc/core.h"
#include "fairkc/gonzalez.h"

namespace fairkc {

// A point of `group` within reach of center `center` (an index into the
// center list A). Only the closest witness per (center, group) is kept.
struct ShiftCandidate {
  int center = 0;
  int group = 0;
  int witness = 0;
  double dist = 0.0;

  bool operator==(const ShiftCandidate&) const = default;
};

struct FlowEdge {
  int from = 0;
  int to = 0;
  std::int64_t cap = 0;
  std::int64_t flow = 0;
  int label = -1;
};

// Directed graph with integer capacities. Every edge e owns residual arcs
// 2e (forward) and 2e + 1 (backward).
class FlowNetwork {
 public:
  FlowNetwork(int num_vertices, int source, int sink);

  int AddEdge(int from, int to, std::int64_t cap, int label = -1);
  void SetCapacity(int edge, std::int64_t cap);
  void ResetFlow();

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int source() const { return source_; }
  int sink() const { return sink_; }
  const FlowEdge& edge(int e) const { return edges_[e]; }
  const std::vector<FlowEdge>& edges() const { return edges_; }

  // Net flow leaving the source.
  std::int64_t FlowValue() const;

  // One edge per line: from to cap flow label (label -1 when absent).
  void Dump(std::ostream& out) const;

  // Residual-arc view used by the max-flow routine.
  const std::vector<int>& arcs(int v) const { return adjacency_[v]; }
  int ArcHead(int arc) const {
    const FlowEdge& e = edges_[arc >> 1];
    return (arc & 1) ? e.from : e.to;
  }
  int ArcTail(int arc) const {
    const FlowEdge& e = edges_[arc >> 1];
    return (arc & 1) ? e.to : e.from;
  }
  std::int64_t Residual(int arc) const {
    const FlowEdge& e = edges_[arc >> 1];
    return (arc & 1) ? e.flow : e.cap - e.flow;
  }
  void Push(int arc, std::int64_t amount) {
    FlowEdge& e = edges_[arc >> 1];
    e.flow += (arc & 1) ? -amount : amount;
  }

 private:
  std::vector<FlowEdge> edges_;
  std::vector<std::vector<int>> adjacency_;
  int source_;
  int sink_;
};

// The lower-bound-free shift network: s, the slack node v_C, the relay t',
// t, one vertex per center and one per group.
struct ShiftGraph {
  static constexpr int kSource = 0;
  static constexpr int kSlack = 1;
  static constexpr int kRelay = 2;
  static constexpr int kSink = 3;

  FlowNetwork network{4, kSource, kSink};
  int num_centers = 0;
  int num_groups = 0;
  std::int64_t target = 0;          // k + sum(l)
  int slack_edge = -1;              // s -> v_C
  std::vector<int> slack_group_edges;  // v_C -> V_f[f]
  std::vector<int> candidate_edges;    // V_A -> V_f, parallel to candidates

  int center_vertex(int a) const { return 4 + a; }
  int group_vertex(int f) const { return 4 + num_centers + f; }
};

struct ShiftResult {
  bool feasible = false;
  // replacement[a] is the witness chosen for center a; empty when infeasible.
  std::vector<int> replacement;
  // Arbitrary centers routed through v_C, per group.
  std::vector<int> slack;
  std::int64_t max_flow = 0;

  bool empty() const { return !feasible; }
};

// One pass over the assignment: a point at distance < radius from its
// assigned center becomes a candidate; ids are dataset ids.
std::vector<ShiftCandidate> CollectCandidates(
    std::span<const PointAssignment> assignment, const Dataset& dataset,
    double radius);

// Keeps the minimum-distance candidate per (center, group); ties keep the
// earlier entry. Output is sorted by (center, group).
std::vector<ShiftCandidate> PruneCandidates(
    std::span<const ShiftCandidate> candidates);

ShiftGraph BuildShiftGraph(std::span<const ShiftCandidate> candidates,
                           int num_groups, int num_centers,
                           const FairnessBounds& bounds);

// Dinic's algorithm with the advance / retreat / augment blocking-flow
// search. Continues from the network's current flow; returns the flow value.
std::int64_t DinicMaxFlow(FlowNetwork& network);

// Answers the shift question on an explicit candidate list. Callers must
// guarantee the candidate balls are disjoint.
ShiftResult SolveShift(std::span<const ShiftCandidate> candidates,
                       int num_centers, int num_groups,
                       const FairnessBounds& bounds,
                       std::ostream* dump = nullptr);

// Full fair-shift test of centers A (dataset ids) at radius d'. `assignment`
// maps every point to its nearest center in A (index into `centers`).
// Throws Error(kPrecondition, "radius too large") if two centers are closer
// than 2 d'.
ShiftResult FairShift(const Dataset& dataset,
                      std::span<const PointAssignment> assignment,
                      std::span<const int> centers, double radius,
                      const FairnessBounds& bounds);

// Same, computing the nearest-center assignment itself in O(n |A|).
ShiftResult FairShift(const Dataset& dataset, std::span<const int> centers,
                      double radius, const FairnessBounds& bounds);

}  // namespace fairkc

#endif  // FAIRKC_FAIRSHIFT_H_
