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

#include "morrey/families.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace morrey {

namespace {

enum class ValueKind { kSigns, kHeavyTail, kUniform };

const char* kind_name(ValueKind kind) {
  switch (kind) {
    case ValueKind::kSigns:
      return "signs";
    case ValueKind::kHeavyTail:
      return "pareto";
    case ValueKind::kUniform:
      return "uniform";
  }
  return "?";
}

double draw(ValueKind kind, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double sign = unit(rng) < 0.5 ? -1.0 : 1.0;
  switch (kind) {
    case ValueKind::kSigns:
      return unit(rng) < 0.15 ? 0.0 : sign;
    case ValueKind::kHeavyTail: {
      if (unit(rng) < 0.1) return 0.0;
      // Pareto with tail index 1.5 and unit scale.
      const double u = 1.0 - unit(rng);
      return sign * std::pow(u, -1.0 / 1.5);
    }
    case ValueKind::kUniform:
      return sign * unit(rng);
  }
  return 0.0;
}

}  // namespace

std::vector<FamilyMember> random_family(std::size_t count, std::uint64_t seed,
                                        std::size_t max_length) {
  if (max_length == 0) {
    throw std::invalid_argument("random family needs max_length >= 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(1, max_length);
  std::uniform_int_distribution<Index> offset(-20, 20);
  std::vector<FamilyMember> family;
  family.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto kind = static_cast<ValueKind>(i % 3);
    const std::size_t n = length(rng);
    const Index start = offset(rng);
    std::vector<double> values(n);
    for (double& v : values) v = draw(kind, rng);
    // Members are never the zero sequence; redraw the middle entry if needed.
    while (std::all_of(values.begin(), values.end(),
                       [](double v) { return v == 0.0; })) {
      values[n / 2] = draw(kind, rng);
    }
    family.push_back({"random[" + std::to_string(i) + "," + kind_name(kind) +
                          ",len=" + std::to_string(n) + "]",
                      Sequence(start, std::move(values))});
  }
  return family;
}

Sequence power_decay(double exponent, Index half_length) {
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw std::invalid_argument("power decay exponent must be positive");
  }
  if (half_length < 0) {
    throw std::invalid_argument("half_length must be nonnegative");
  }
  std::vector<double> values(static_cast<std::size_t>(2 * half_length + 1));
  for (Index k = -half_length; k <= half_length; ++k) {
    values[static_cast<std::size_t>(k + half_length)] =
        k == 0 ? 1.0 : std::pow(static_cast<double>(k < 0 ? -k : k), -exponent);
  }
  return Sequence(-half_length, std::move(values));
}

}  // namespace morrey
