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

#include <cmath>

#include <gtest/gtest.h>

#include "morrey/families.hpp"
#include "morrey/inclusion.hpp"
#include "morrey/norms.hpp"
#include "morrey/oracle.hpp"

namespace morrey::oracle {
namespace {

// Frozen by hand enumeration: xi^{0,2}, p = 1, q = 2. The covering window
// gives 5 * 5^(-1/2); every other window has fewer ones per cardinality.
TEST(OracleMorrey, IndicatorByHand) {
  EXPECT_NEAR(oracle_morrey_norm(make_characteristic(0, 2), {1, 2}), std::sqrt(5.0),
              1e-15);
}

TEST(OracleMorrey, SmallHandCases) {
  EXPECT_DOUBLE_EQ(oracle_morrey_norm(Sequence(0, {3, 4}), {2, 2}), 5.0);
  // Values 1 and 2 at distance 1, p = 1, q = 2: max(2, 3 / sqrt(3)).
  EXPECT_DOUBLE_EQ(oracle_morrey_norm(Sequence(0, {1, 2}), {1, 2}), 2.0);
  // (2, 2) adjacent: 4 / sqrt(3) beats 2.
  EXPECT_NEAR(oracle_morrey_norm(Sequence(0, {2, 2}), {1, 2}), 4.0 / std::sqrt(3.0),
              1e-15);
}

TEST(OracleMorrey, ZeroSequence) {
  EXPECT_EQ(oracle_morrey_norm(Sequence(), {1, 2}), 0.0);
  EXPECT_EQ(oracle_weak_norm(Sequence(), {1, 2}), 0.0);
}

TEST(OracleMorrey, PadsNeverChangeResult) {
  for (const auto& m : random_family(80, 301)) {
    for (auto [p, q] : {std::pair{1.0, 2.0}, {2.0, 3.0}, {1.0, 1.0}}) {
      const double base = oracle_morrey_norm(m.sequence, {p, q});
      EXPECT_EQ(base, oracle_morrey_norm(m.sequence, {p, q}, 3, 0));
      EXPECT_EQ(base, oracle_morrey_norm(m.sequence, {p, q}, 10, 10));
    }
  }
}

TEST(OracleWeak, ApproachesThreeFromBelow) {
  const Sequence x(0, {3, 1, 1});
  const double coarse = oracle_weak_norm(x, {1, 1}, 2);
  const double fine = oracle_weak_norm(x, {1, 1}, 3);
  EXPECT_LT(coarse, 3.0);
  EXPECT_LT(fine, 3.0);
  EXPECT_LE(coarse, fine);
  EXPECT_GT(fine, 3.0 - 1e-5);
}

TEST(OracleWeak, ZeroOneMatchesStrong) {
  for (const auto& m : random_family(60, 302)) {
    std::vector<double> ones;
    for (double v : m.sequence.values()) ones.push_back(v != 0.0 ? 1.0 : 0.0);
    const Sequence x(m.sequence.offset(), ones);
    if (x.is_zero()) continue;
    for (auto [p, q] : {std::pair{1.0, 2.0}, {2.0, 4.0}}) {
      EXPECT_NEAR(oracle_weak_norm(x, {p, q}), oracle_morrey_norm(x, {p, q}),
                  1e-5 * oracle_morrey_norm(x, {p, q}));
    }
  }
}

TEST(OracleWeak, GapShrinksAsGridRefines) {
  for (const auto& m : random_family(40, 303)) {
    const Exponents e(1.5, 3);
    const double exact = weak_morrey_norm(m.sequence, e).value;
    double previous_gap = INFINITY;
    for (int grid : {2, 3, 5, 7}) {
      const double gap = exact - oracle_weak_norm(m.sequence, e, grid);
      EXPECT_GE(gap, -1e-12 * exact);
      EXPECT_LE(gap, previous_gap + 1e-15);
      previous_gap = gap;
    }
    EXPECT_LT(previous_gap, 1e-9 * exact);
  }
}

TEST(OracleWeak, RejectsCoarseGrid) {
  EXPECT_THROW(oracle_weak_norm(Sequence(0, {1}), {1, 1}, 1), std::invalid_argument);
}

TEST(OracleGen, PowerPhiMatchesClassicalOracle) {
  for (const auto& m : random_family(40, 304)) {
    const double a = oracle_gen_morrey_norm(m.sequence, 1, PhiFunction::power(2));
    const double b = oracle_morrey_norm(m.sequence, {1, 2});
    EXPECT_NEAR(a, b, 1e-12 * b);
  }
}

}  // namespace
}  // namespace morrey::oracle
