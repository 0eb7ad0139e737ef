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

// Shared generators and independent reference computations for the tests.
// Nothing here calls into the solvers.

#ifndef FAIRKC_TESTS_TEST_UTIL_H_
#define FAIRKC_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "fairkc/core.h"
#include "fairkc/streaming.h"

namespace fairkc::testing {

// 1-D dataset from coordinates and groups.
inline Dataset Line(const std::vector<double>& xs, const std::vector<int>& groups,
                    int num_groups = -1) {
  if (num_groups < 0) num_groups = *std::max_element(groups.begin(), groups.end()) + 1;
  return Dataset(xs, 1, groups, num_groups);
}

inline double Euclid(const Dataset& data, int a, int b) {
  double acc = 0.0;
  for (int d = 0; d < data.dim(); ++d) {
    const double diff = data.coords()[a * data.dim() + d] - data.coords()[b * data.dim() + d];
    acc += diff * diff;
  }
  return std::sqrt(acc);
}

// Plain double loop over all (point, center) pairs.
inline double ScanObjective(const Dataset& data, const std::vector<int>& centers) {
  double worst = 0.0;
  for (int p = 0; p < data.size(); ++p) {
    double best = std::numeric_limits<double>::infinity();
    for (int c : centers) best = std::min(best, Euclid(data, p, c));
    worst = std::max(worst, best);
  }
  return worst;
}

inline bool RecountFair(const Dataset& data, const FairnessBounds& b,
                        const std::vector<int>& centers) {
  if (static_cast<int>(centers.size()) != b.k) return false;
  std::vector<int> sorted = centers;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int i = 0; i < data.num_groups(); ++i) {
    int count = 0;
    for (int c : centers) count += data.group(c) == i ? 1 : 0;
    if (count < b.lower[i] || count > b.upper[i]) return false;
  }
  return true;
}

// Random counts summing to k with counts[i] <= caps[i].
inline std::vector<int> RandomComposition(std::mt19937_64& rng, int k,
                                          const std::vector<int>& caps) {
  std::vector<int> counts(caps.size(), 0);
  for (int unit = 0; unit < k; ++unit) {
    std::vector<int> open;
    for (size_t i = 0; i < caps.size(); ++i) {
      if (counts[i] < caps[i]) open.push_back(static_cast<int>(i));
    }
    counts[open[std::uniform_int_distribution<size_t>(0, open.size() - 1)(rng)]]++;
  }
  return counts;
}

struct MicroSpec {
  int min_n = 2;
  int max_n = 14;
  int max_k = 4;
  int max_m = 3;
  int dim = 2;
  bool integer_grid = false;  // small integer coordinates, many distance ties
};

// Random feasible instance. Half the draws use equality bounds.
inline ProblemInstance RandomMicroInstance(std::mt19937_64& rng,
                                           const MicroSpec& spec = {}) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const int m = pick(1, spec.max_m);
  const int n = pick(std::max(spec.min_n, m), spec.max_n);
  const int k = pick(1, std::min(spec.max_k, n));
  std::vector<int> groups(n);
  for (int i = 0; i < n; ++i) groups[i] = i < m ? i : pick(0, m - 1);
  std::shuffle(groups.begin(), groups.end(), rng);
  std::vector<double> coords(static_cast<size_t>(n) * spec.dim);
  std::uniform_real_distribution<double> unit(0.0, 10.0);
  for (double& x : coords) x = spec.integer_grid ? pick(0, 6) : unit(rng);
  Dataset data(coords, spec.dim, groups, m);

  std::vector<int> sizes = data.group_sizes();
  std::vector<int> caps(m);
  for (int i = 0; i < m; ++i) caps[i] = std::min(sizes[i], k);
  const std::vector<int> fair = RandomComposition(rng, k, caps);
  FairnessBounds b;
  b.k = k;
  b.lower.resize(m);
  b.upper.resize(m);
  const bool equality = pick(0, 1) == 0;
  for (int i = 0; i < m; ++i) {
    b.lower[i] = equality ? fair[i] : pick(0, fair[i]);
    b.upper[i] = equality ? fair[i] : pick(fair[i], caps[i]);
  }
  return {std::move(data), std::move(b)};
}

// Source that hands out each point once and counts every read.
class CountingSource : public PointSource {
 public:
  explicit CountingSource(const Dataset& data, std::vector<int> order = {})
      : data_(data), order_(std::move(order)), reads_(data.size(), 0) {
    if (order_.empty()) {
      order_.resize(data.size());
      std::iota(order_.begin(), order_.end(), 0);
    }
  }

  std::optional<PointRecord> Next() override {
    ++calls_;
    if (exhausted_) ++calls_after_end_;
    if (next_ >= order_.size()) {
      exhausted_ = true;
      return std::nullopt;
    }
    const int id = order_[next_++];
    ++reads_[id];
    return data_.record(id);
  }

  const std::vector<int>& reads() const { return reads_; }
  int calls_after_end() const { return calls_after_end_; }

 private:
  const Dataset& data_;
  std::vector<int> order_;
  std::vector<int> reads_;
  size_t next_ = 0;
  int calls_ = 0;
  int calls_after_end_ = 0;
  bool exhausted_ = false;
};

}  // namespace fairkc::testing

#endif  // FAIRKC_TESTS_TEST_UTIL_H_
