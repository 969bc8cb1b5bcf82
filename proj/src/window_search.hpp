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

#ifndef MORREY_SRC_WINDOW_SEARCH_HPP_
#define MORREY_SRC_WINDOW_SEARCH_HPP_

#include <span>

#include "morrey/sequence.hpp"

namespace morrey::detail {

// Best window found by a search. gamma is only meaningful for weak searches.
struct SearchHit {
  bool found = false;
  double value = 0.0;
  Index center = 0;
  Index radius = 0;
  double gamma = 0.0;
};

// Deterministic total order: larger value, then smaller radius, then
// smaller center, then larger gamma.
bool better(const SearchHit& a, const SearchHit& b);

// Strong search: max over centers in `centers` and radii N < factors.size()
// of factors[N] * (sum_{|k-m|<=N} |x_k|^p)^(1/p).
SearchHit search_strong(const Sequence& x, double p,
                        std::span<const double> factors, Interval centers,
                        unsigned threads);

// Weak search: max over the same family and over levels v of
// factors[N] * (v * count_{|k-m|<=N}(|x_k| >= v)^(1/p)).
SearchHit search_weak(const Sequence& x, double p,
                      std::span<const double> factors, Interval centers,
                      unsigned threads);

}  // namespace morrey::detail

#endif  // MORREY_SRC_WINDOW_SEARCH_HPP_
