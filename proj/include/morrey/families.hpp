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

#ifndef MORREY_FAMILIES_HPP_
#define MORREY_FAMILIES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "morrey/sequence.hpp"

namespace morrey {

struct FamilyMember {
  std::string descriptor;
  Sequence sequence;
};

// Deterministic pseudo-random sequences with lengths in [1, max_length],
// cycling through three value kinds: signs (+-1 with some zeros),
// heavy-tailed Pareto magnitudes with random signs, and uniform reals.
// No member is the zero sequence.
std::vector<FamilyMember> random_family(std::size_t count, std::uint64_t seed,
                                        std::size_t max_length = 64);

// x_k = |k|^(-exponent) for 0 < |k| <= half_length, x_0 = 1.
Sequence power_decay(double exponent, Index half_length);

}  // namespace morrey

#endif  // MORREY_FAMILIES_HPP_
