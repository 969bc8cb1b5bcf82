// Copyright 2026 The Morrey Authors
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

#include "window_search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <thread>
#include <vector>

namespace morrey::detail {

namespace {

// Radii are visited in decreasing order of an upper bound on their best
// window, in fixed-size batches. A radius is skipped when its bound cannot
// beat the best hit found in earlier batches. Pruning decisions only look at
// completed batches, so the visited set does not depend on the thread count.
constexpr std::size_t kBatch = 8;

// Relative slack absorbing rounding between a bound and the value it
// dominates mathematically.
constexpr double kPruneSlack = 1e-12;

// Accumulates with TwoSum so prefix totals of long sorted runs stay within a
// few ulps.
class CompensatedSum {
 public:
  void add(double term) {
    const double next = sum_ + term;
    const double shifted = next - sum_;
    carry_ += (sum_ - (next - shifted)) + (term - shifted);
    sum_ = next;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// Range add with global max and leftmost argmax. Lazy tags are never pushed
// down: a node's max already includes its own tag.
class RangeAddMax {
 public:
  explicit RangeAddMax(std::size_t n)
      : n_(n), max_(4 * n, 0), tag_(4 * n, 0), arg_(4 * n, 0) {
    build(1, 0, n - 1);
  }

  void add(std::size_t lo, std::size_t hi) { add(1, 0, n_ - 1, lo, hi); }
  Index max() const { return max_[1]; }
  std::size_t argmax() const { return arg_[1]; }

 private:
  void build(std::size_t node, std::size_t l, std::size_t r) {
    arg_[node] = l;
    if (l == r) return;
    const std::size_t mid = l + (r - l) / 2;
    build(2 * node, l, mid);
    build(2 * node + 1, mid + 1, r);
  }

  void add(std::size_t node, std::size_t l, std::size_t r, std::size_t lo,
           std::size_t hi) {
    if (hi < l || r < lo) return;
    if (lo <= l && r <= hi) {
      ++max_[node];
      ++tag_[node];
      return;
    }
    const std::size_t mid = l + (r - l) / 2;
    add(2 * node, l, mid, lo, hi);
    add(2 * node + 1, mid + 1, r, lo, hi);
    const std::size_t left = 2 * node;
    const std::size_t right = 2 * node + 1;
    const bool take_left = max_[left] >= max_[right];
    max_[node] = (take_left ? max_[left] : max_[right]) + tag_[node];
    arg_[node] = take_left ? arg_[left] : arg_[right];
  }

  std::size_t n_;
  std::vector<Index> max_;
  std::vector<Index> tag_;
  std::vector<std::size_t> arg_;
};

struct Entry {
  double modulus;
  Index position;
};

// Nonzero entries of the support, largest modulus first, ties by position.
std::vector<Entry> sorted_entries(const Sequence& x, Interval support) {
  std::vector<Entry> entries;
  for (Index k = support.lo; k <= support.hi; ++k) {
    const double v = std::abs(x[k]);
    if (v != 0.0) entries.push_back({v, k});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.modulus != b.modulus ? a.modulus > b.modulus
                                  : a.position < b.position;
  });
  return entries;
}

using Evaluate = std::function<SearchHit(Index radius)>;

SearchHit run_search(std::span<const double> bounds, const Evaluate& evaluate,
                     unsigned threads) {
  std::vector<Index> order(bounds.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return bounds[static_cast<std::size_t>(a)] >
           bounds[static_cast<std::size_t>(b)];
  });

  SearchHit best;
  std::vector<Index> pending;
  std::vector<SearchHit> hits;
  for (std::size_t start = 0; start < order.size(); start += kBatch) {
    pending.clear();
    bool exhausted = false;
    const std::size_t stop = std::min(order.size(), start + kBatch);
    for (std::size_t i = start; i < stop; ++i) {
      const Index radius = order[i];
      const double bound = bounds[static_cast<std::size_t>(radius)];
      if (best.found) {
        if (bound < best.value * (1.0 - kPruneSlack)) {
          exhausted = true;
          break;
        }
        // Cannot win: at best a tie, and ties go to the smaller radius.
        if (radius > best.radius && bound <= best.value * (1.0 + kPruneSlack)) {
          continue;
        }
      }
      pending.push_back(radius);
    }

    hits.assign(pending.size(), SearchHit{});
    const auto workers =
        std::min<std::size_t>(std::max(1u, threads), pending.size());
    if (workers <= 1) {
      for (std::size_t i = 0; i < pending.size(); ++i) {
        hits[i] = evaluate(pending[i]);
      }
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < pending.size(); i += workers) {
            hits[i] = evaluate(pending[i]);
          }
        });
      }
    }
    for (const SearchHit& hit : hits) {
      if (hit.found && (!best.found || better(hit, best))) best = hit;
    }
    if (exhausted) break;
  }
  return best;
}

}  // namespace

bool better(const SearchHit& a, const SearchHit& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.radius != b.radius) return a.radius < b.radius;
  if (a.center != b.center) return a.center < b.center;
  return a.gamma > b.gamma;
}

SearchHit search_strong(const Sequence& x, double p,
                        std::span<const double> factors, Interval centers,
                        unsigned threads) {
  const auto& support = x.support_bounds();
  if (!support || factors.empty()) return {};
  const PowerPrefixSums prefix(x, p);
  const double inv_p = 1.0 / p;

  // Any window of cardinality L holds at most the L largest |x_k|^p.
  std::vector<double> powers;
  for (const Entry& e : sorted_entries(x, *support)) {
    powers.push_back(std::pow(e.modulus, p));
  }
  std::vector<double> top_sums(powers.size() + 1, 0.0);
  CompensatedSum running;
  for (std::size_t j = 0; j < powers.size(); ++j) {
    running.add(powers[j]);
    top_sums[j + 1] = running.value();
  }
  std::vector<double> bounds(factors.size());
  for (std::size_t n = 0; n < factors.size(); ++n) {
    const std::size_t cardinality = std::min(2 * n + 1, powers.size());
    bounds[n] = factors[n] * std::pow(top_sums[cardinality], inv_p);
  }

  const Evaluate evaluate = [&](Index radius) {
    SearchHit hit;
    const double factor = factors[static_cast<std::size_t>(radius)];
    for (Index m = centers.lo; m <= centers.hi; ++m) {
      const double sum = prefix.range_sum(m - radius, m + radius);
      if (sum == 0.0) continue;
      const double value = factor * std::pow(sum, inv_p);
      if (!hit.found || value > hit.value) {
        hit = SearchHit{true, value, m, radius, 0.0};
      }
    }
    return hit;
  };
  return run_search(bounds, evaluate, threads);
}

SearchHit search_weak(const Sequence& x, double p,
                      std::span<const double> factors, Interval centers,
                      unsigned threads) {
  const auto& support = x.support_bounds();
  if (!support || factors.empty()) return {};
  const std::vector<Entry> entries = sorted_entries(x, *support);
  const double inv_p = 1.0 / p;

  // A window of cardinality L has at most min(L, j) entries >= g_j, where
  // g_j is the j-th largest modulus overall.
  std::vector<double> best_level(entries.size() + 1, 0.0);
  for (std::size_t j = 1; j <= entries.size(); ++j) {
    const double level =
        entries[j - 1].modulus * std::pow(static_cast<double>(j), inv_p);
    best_level[j] = std::max(best_level[j - 1], level);
  }
  std::vector<double> bounds(factors.size());
  for (std::size_t n = 0; n < factors.size(); ++n) {
    const std::size_t cardinality = std::min(2 * n + 1, entries.size());
    bounds[n] = factors[n] * best_level[cardinality];
  }

  const auto slots = static_cast<std::size_t>(centers.length());
  const Evaluate evaluate = [&](Index radius) {
    SearchHit hit;
    const double factor = factors[static_cast<std::size_t>(radius)];
    // Lower the level through the distinct moduli; activating entry k adds
    // one to the count of every center within `radius` of k.
    RangeAddMax counts(slots);
    std::size_t i = 0;
    while (i < entries.size()) {
      const double level = entries[i].modulus;
      for (; i < entries.size() && entries[i].modulus == level; ++i) {
        const Index k = entries[i].position;
        const Index lo = std::max(centers.lo, k - radius);
        const Index hi = std::min(centers.hi, k + radius);
        if (lo > hi) continue;
        counts.add(static_cast<std::size_t>(lo - centers.lo),
                   static_cast<std::size_t>(hi - centers.lo));
      }
      const Index count = counts.max();
      if (count == 0) continue;
      const double value =
          factor * (level * std::pow(static_cast<double>(count), inv_p));
      const Index center = centers.lo + static_cast<Index>(counts.argmax());
      if (!hit.found || value > hit.value ||
          (value == hit.value && center < hit.center)) {
        hit = SearchHit{true, value, center, radius, level};
      }
    }
    return hit;
  };
  return run_search(bounds, evaluate, threads);
}

}  // namespace morrey::detail
