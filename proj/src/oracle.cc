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

#include "fairkc/oracle.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace fairkc {

namespace {

std::int64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > kMaxOracleSubsets) return kMaxOracleSubsets + 1;
  }
  return result;
}

// Advances comb to the next k-subset of [0, n) in lexicographic order.
bool NextCombination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  int i = k - 1;
  while (i >= 0 && comb[i] == n - k + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

double SubsetObjective(const Dataset& data, const std::vector<int>& comb) {
  double worst = 0.0;
  for (int p = 0; p < data.size(); ++p) {
    double best = std::numeric_limits<double>::infinity();
    for (int c : comb) best = std::min(best, data.distance(p, c));
    worst = std::max(worst, best);
  }
  return worst;
}

ExactSolution Enumerate(const Dataset& data, int k,
                        const FairnessBounds* bounds) {
  const int n = data.size();
  if (k < 1 || k > n) throw Error(ErrorCode::kInvalidArgument, "k must lie in [1, n]");
  if (Binomial(n, k) > kMaxOracleSubsets) {
    throw Error(ErrorCode::kScaleExceeded, "oracle scale exceeded");
  }
  ExactSolution best;
  best.opt = std::numeric_limits<double>::infinity();
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i;
  std::vector<int> counts(data.num_groups());
  std::vector<int> best_comb;
  do {
    if (bounds != nullptr) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int c : comb) ++counts[data.group(c)];
      bool fair = true;
      for (int i = 0; i < data.num_groups() && fair; ++i) {
        fair = counts[i] >= bounds->lower[i] && counts[i] <= bounds->upper[i];
      }
      if (!fair) continue;
    }
    ++best.explored;
    const double value = SubsetObjective(data, comb);
    if (value < best.opt) {
      best.opt = value;
      best_comb = comb;
    }
  } while (NextCombination(comb, n));
  if (best_comb.empty()) {
    throw Error(ErrorCode::kInfeasible, "no feasible center set");
  }
  best.best_set = CenterSet::FromIds(best_comb, data);
  return best;
}

}  // namespace

ExactSolution BruteForceOptimal(const ProblemInstance& instance) {
  const auto& b = instance.bounds;
  if (static_cast<int>(b.lower.size()) != instance.dataset.num_groups() ||
      static_cast<int>(b.upper.size()) != instance.dataset.num_groups()) {
    throw Error(ErrorCode::kInvalidArgument, "bounds must have one entry per group");
  }
  return Enumerate(instance.dataset, b.k, &b);
}

ExactSolution BruteForceUnconstrained(const Dataset& dataset, int k) {
  return Enumerate(dataset, k, nullptr);
}

bool BruteForceFairShift(const Dataset& dataset, std::span<const int> centers,
                         double radius, const FairnessBounds& bounds) {
  const int size = static_cast<int>(centers.size());
  if (size > kMaxOracleShiftCenters) {
    throw Error(ErrorCode::kScaleExceeded, "oracle scale exceeded");
  }
  if (size > bounds.k) return false;
  const int m = dataset.num_groups();

  std::vector<std::vector<int>> options(size);
  for (int a = 0; a < size; ++a) {
    for (int s = 0; s < dataset.size(); ++s) {
      if (dataset.distance(centers[a], s) < radius) options[a].push_back(s);
    }
    if (options[a].empty()) return false;
  }

  std::vector<int> pick(size, 0);
  std::vector<int> image(size);
  std::vector<int> counts(m);
  for (;;) {
    for (int a = 0; a < size; ++a) image[a] = options[a][pick[a]];
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    const bool injective =
        std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (injective) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int s : image) ++counts[dataset.group(s)];
      bool ok = true;
      int deficit = 0;
      for (int i = 0; i < m; ++i) {
        if (counts[i] > bounds.upper[i]) ok = false;
        deficit += std::max(0, bounds.lower[i] - counts[i]);
      }
      if (ok && deficit <= bounds.k - size) return true;
    }
    int a = 0;
    while (a < size && ++pick[a] == static_cast<int>(options[a].size())) {
      pick[a] = 0;
      ++a;
    }
    if (a == size) return false;
  }
}

std::int64_t ReferenceMaxFlow(const FlowNetwork& network) {
  if (network.num_edges() > kMaxOracleFlowEdges) {
    throw Error(ErrorCode::kScaleExceeded, "oracle scale exceeded");
  }
  const int n = network.num_vertices();
  std::vector<std::vector<std::int64_t>> residual(
      n, std::vector<std::int64_t>(n, 0));
  for (const FlowEdge& e : network.edges()) residual[e.from][e.to] += e.cap;

  const int s = network.source();
  const int t = network.sink();
  std::int64_t total = 0;
  std::vector<int> parent(n);
  for (;;) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[s] = s;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty() && parent[t] < 0) {
      const int v = queue.front();
      queue.pop();
      for (int w = 0; w < n; ++w) {
        if (parent[w] < 0 && residual[v][w] > 0) {
          parent[w] = v;
          queue.push(w);
        }
      }
    }
    if (parent[t] < 0) break;
    std::int64_t push = std::numeric_limits<std::int64_t>::max();
    for (int v = t; v != s; v = parent[v]) {
      push = std::min(push, residual[parent[v]][v]);
    }
    for (int v = t; v != s; v = parent[v]) {
      residual[parent[v]][v] -= push;
      residual[v][parent[v]] += push;
    }
    total += push;
  }
  return total;
}

}  // namespace fairkc
