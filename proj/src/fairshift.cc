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

#include "fairkc/fairshift.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

namespace fairkc {

FlowNetwork::FlowNetwork(int num_vertices, int source, int sink)
    : adjacency_(num_vertices), source_(source), sink_(sink) {}

int FlowNetwork::AddEdge(int from, int to, std::int64_t cap, int label) {
  const int id = static_cast<int>(edges_.size());
  edges_.push_back({from, to, cap, 0, label});
  adjacency_[from].push_back(2 * id);
  adjacency_[to].push_back(2 * id + 1);
  return id;
}

void FlowNetwork::SetCapacity(int edge, std::int64_t cap) {
  edges_[edge].cap = cap;
}

void FlowNetwork::ResetFlow() {
  for (FlowEdge& e : edges_) e.flow = 0;
}

std::int64_t FlowNetwork::FlowValue() const {
  std::int64_t value = 0;
  for (const FlowEdge& e : edges_) {
    if (e.from == source_) value += e.flow;
    if (e.to == source_) value -= e.flow;
  }
  return value;
}

void FlowNetwork::Dump(std::ostream& out) const {
  for (const FlowEdge& e : edges_) {
    out << e.from << ' ' << e.to << ' ' << e.cap << ' ' << e.flow << ' '
        << e.label << '\n';
  }
}

std::int64_t DinicMaxFlow(FlowNetwork& net) {
  const int n = net.num_vertices();
  const int s = net.source();
  const int t = net.sink();
  std::vector<int> level(n);
  std::vector<size_t> next_arc(n);
  std::vector<int> queue;
  std::vector<int> path;
  queue.reserve(n);

  for (;;) {
    // Level graph by BFS over residual arcs.
    std::fill(level.begin(), level.end(), -1);
    queue.clear();
    level[s] = 0;
    queue.push_back(s);
    for (size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int arc : net.arcs(v)) {
        const int w = net.ArcHead(arc);
        if (level[w] < 0 && net.Residual(arc) > 0) {
          level[w] = level[v] + 1;
          queue.push_back(w);
        }
      }
    }
    if (level[t] < 0) break;

    // Blocking flow. next_arc[v] skips arcs deleted from the layer.
    std::fill(next_arc.begin(), next_arc.end(), 0);
    path.clear();
    int v = s;
    for (;;) {
      if (v == t) {
        // Augment along the path, then back up to the first saturated arc.
        std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
        for (int arc : path) bottleneck = std::min(bottleneck, net.Residual(arc));
        size_t cut = path.size();
        for (size_t i = 0; i < path.size(); ++i) {
          net.Push(path[i], bottleneck);
          if (cut == path.size() && net.Residual(path[i]) == 0) cut = i;
        }
        path.resize(cut);
        v = path.empty() ? s : net.ArcHead(path.back());
        continue;
      }
      // Advance.
      const auto& arcs = net.arcs(v);
      while (next_arc[v] < arcs.size()) {
        const int arc = arcs[next_arc[v]];
        if (net.Residual(arc) > 0 && level[net.ArcHead(arc)] == level[v] + 1) {
          break;
        }
        ++next_arc[v];
      }
      if (next_arc[v] < arcs.size()) {
        const int arc = arcs[next_arc[v]];
        path.push_back(arc);
        v = net.ArcHead(arc);
        continue;
      }
      // Retreat: v is a dead end for this layer.
      level[v] = -1;
      if (path.empty()) break;
      const int arc = path.back();
      path.pop_back();
      v = net.ArcTail(arc);
      ++next_arc[v];
    }
  }
  return net.FlowValue();
}

std::vector<ShiftCandidate> CollectCandidates(
    std::span<const PointAssignment> assignment, const Dataset& dataset,
    double radius) {
  std::vector<ShiftCandidate> raw;
  for (int s = 0; s < static_cast<int>(assignment.size()); ++s) {
    if (assignment[s].distance < radius) {
      raw.push_back({assignment[s].center, dataset.group(s), s,
                     assignment[s].distance});
    }
  }
  return PruneCandidates(raw);
}

std::vector<ShiftCandidate> PruneCandidates(
    std::span<const ShiftCandidate> candidates) {
  std::vector<ShiftCandidate> sorted(candidates.begin(), candidates.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ShiftCandidate& a, const ShiftCandidate& b) {
                     if (a.center != b.center) return a.center < b.center;
                     if (a.group != b.group) return a.group < b.group;
                     return a.dist < b.dist;
                   });
  std::vector<ShiftCandidate> out;
  for (const ShiftCandidate& c : sorted) {
    if (!out.empty() && out.back().center == c.center &&
        out.back().group == c.group) {
      continue;
    }
    out.push_back(c);
  }
  return out;
}

ShiftGraph BuildShiftGraph(std::span<const ShiftCandidate> candidates,
                           int num_groups, int num_centers,
                           const FairnessBounds& bounds) {
  if (num_centers > bounds.k) {
    throw Error(ErrorCode::kPrecondition, "more centers than k");
  }
  ShiftGraph g;
  g.num_centers = num_centers;
  g.num_groups = num_groups;
  g.network = FlowNetwork(4 + num_centers + num_groups, ShiftGraph::kSource,
                          ShiftGraph::kSink);
  FlowNetwork& net = g.network;
  const std::int64_t lower_sum =
      std::accumulate(bounds.lower.begin(), bounds.lower.end(), std::int64_t{0});
  g.target = bounds.k + lower_sum;

  g.slack_edge = net.AddEdge(ShiftGraph::kSource, ShiftGraph::kSlack,
                             bounds.k - num_centers);
  net.AddEdge(ShiftGraph::kSource, ShiftGraph::kRelay, lower_sum);
  net.AddEdge(ShiftGraph::kRelay, ShiftGraph::kSink, bounds.k);
  for (int f = 0; f < num_groups; ++f) {
    net.AddEdge(g.group_vertex(f), ShiftGraph::kSink, bounds.lower[f]);
    net.AddEdge(g.group_vertex(f), ShiftGraph::kRelay,
                bounds.upper[f] - bounds.lower[f]);
  }
  for (int f = 0; f < num_groups; ++f) {
    g.slack_group_edges.push_back(
        net.AddEdge(ShiftGraph::kSlack, g.group_vertex(f), bounds.upper[f]));
  }
  for (int a = 0; a < num_centers; ++a) {
    net.AddEdge(ShiftGraph::kSource, g.center_vertex(a), 1);
  }
  for (const ShiftCandidate& c : candidates) {
    g.candidate_edges.push_back(net.AddEdge(
        g.center_vertex(c.center), g.group_vertex(c.group), 1, c.witness));
  }
  return g;
}

ShiftResult SolveShift(std::span<const ShiftCandidate> candidates,
                       int num_centers, int num_groups,
                       const FairnessBounds& bounds, std::ostream* dump) {
  ShiftGraph g = BuildShiftGraph(candidates, num_groups, num_centers, bounds);
  ShiftResult result;
  result.max_flow = DinicMaxFlow(g.network);
  if (dump != nullptr) g.network.Dump(*dump);
  if (result.max_flow != g.target) return result;

  result.feasible = true;
  result.replacement.assign(num_centers, -1);
  for (size_t i = 0; i < candidates.size(); ++i) {
    const FlowEdge& e = g.network.edge(g.candidate_edges[i]);
    if (e.flow > 0) result.replacement[candidates[i].center] = e.label;
  }
  for (int e : g.slack_group_edges) {
    result.slack.push_back(static_cast<int>(g.network.edge(e).flow));
  }
  return result;
}

ShiftResult FairShift(const Dataset& dataset,
                      std::span<const PointAssignment> assignment,
                      std::span<const int> centers, double radius,
                      const FairnessBounds& bounds) {
  // Open balls of radius d' are disjoint once centers sit >= 2 d' apart.
  for (size_t i = 0; i < centers.size(); ++i) {
    for (size_t j = i + 1; j < centers.size(); ++j) {
      if (dataset.distance(centers[i], centers[j]) < 2.0 * radius) {
        throw Error(ErrorCode::kPrecondition, "radius too large");
      }
    }
  }
  const auto candidates = CollectCandidates(assignment, dataset, radius);
  return SolveShift(candidates, static_cast<int>(centers.size()),
                    dataset.num_groups(), bounds);
}

ShiftResult FairShift(const Dataset& dataset, std::span<const int> centers,
                      double radius, const FairnessBounds& bounds) {
  std::vector<PointAssignment> assignment;
  if (!centers.empty()) {
    assignment.resize(dataset.size());
    for (int p = 0; p < dataset.size(); ++p) {
      PointAssignment best{0, std::numeric_limits<double>::infinity()};
      for (size_t a = 0; a < centers.size(); ++a) {
        const double d = dataset.distance(p, centers[a]);
        if (d < best.distance) best = {static_cast<int>(a), d};
      }
      assignment[p] = best;
    }
  }
  return FairShift(dataset, assignment, centers, radius, bounds);
}

}  // namespace fairkc
