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
#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "morrey/families.hpp"
#include "morrey/norms.hpp"
#include "morrey/oracle.hpp"
#include "morrey/sequence.hpp"

namespace morrey {
namespace {

TEST(SupportBounds, ZeroSequenceHasNone) {
  EXPECT_FALSE(support_bounds(Sequence()).has_value());
  EXPECT_FALSE(support_bounds(Sequence(3, {0.0, 0.0})).has_value());
}

TEST(SupportBounds, TrimsStoredZeros) {
  const auto s = support_bounds(Sequence(-2, {0, 1, 0, 5, 0}));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, (Interval{-1, 1}));
}

TEST(SupportBounds, Singleton) {
  EXPECT_EQ(*support_bounds(Sequence(7, {3})), (Interval{7, 7}));
}

TEST(SequenceTest, OutsideStoredBlockIsZero) {
  const Sequence x(4, {1, -2});
  EXPECT_EQ(x[3], 0.0);
  EXPECT_EQ(x[5], -2.0);
  EXPECT_EQ(x[100], 0.0);
}

TEST(SequenceTest, RejectsNonFinite) {
  EXPECT_THROW(Sequence(0, {1.0, NAN}), std::invalid_argument);
  EXPECT_THROW(Sequence(0, {INFINITY}), std::invalid_argument);
}

TEST(SequenceTest, ComplexReducedToModuli) {
  const std::vector<std::complex<double>> z{{3, 4}, {0, -1}};
  const Sequence x = Sequence::from_complex(1, z);
  EXPECT_DOUBLE_EQ(x[1], 5.0);
  EXPECT_DOUBLE_EQ(x[2], 1.0);
}

TEST(SequenceTest, SumAlignsOffsets) {
  const Sequence s = Sequence(0, {1, 2}) + Sequence(5, {3});
  EXPECT_EQ(s[0], 1.0);
  EXPECT_EQ(s[1], 2.0);
  EXPECT_EQ(s[5], 3.0);
  EXPECT_TRUE((Sequence(0, {1, 2}) + -Sequence(0, {1, 2})).is_zero());
}

TEST(WindowTest, Basics) {
  const Window w(2, 3);
  EXPECT_EQ(w.cardinality(), 7);
  EXPECT_TRUE(w.contains(-1));
  EXPECT_TRUE(w.contains(5));
  EXPECT_FALSE(w.contains(6));
  EXPECT_THROW(Window(0, -1), std::invalid_argument);
}

TEST(ExponentsTest, Validation) {
  EXPECT_NO_THROW(Exponents(1, 1));
  EXPECT_THROW(Exponents(0.5, 2), std::invalid_argument);
  EXPECT_THROW(Exponents(3, 2), std::invalid_argument);
  EXPECT_THROW(Exponents(1, INFINITY), std::invalid_argument);
  EXPECT_DOUBLE_EQ(Exponents(2, 4).scaling(), -0.25);
}

TEST(WindowPsum, Examples) {
  EXPECT_DOUBLE_EQ(window_psum(Sequence(0, {1, 2, 3}), Window(1, 1), 1), 6.0);
  EXPECT_DOUBLE_EQ(window_psum(Sequence(0, {3, 4}), Window(0, 1), 2), 25.0);
  EXPECT_EQ(window_psum(Sequence(0, {1, 1, 1}), Window(10, 2), 1), 0.0);
}

TEST(LpNorm, Examples) {
  EXPECT_DOUBLE_EQ(lp_norm(Sequence(0, {3, 4}), 2), 5.0);
  EXPECT_EQ(lp_norm(Sequence(), 3), 0.0);
  EXPECT_DOUBLE_EQ(lp_norm(Sequence(0, {1, 1, 1, 1}), 1), 4.0);
}

TEST(EnumerationBound, Examples) {
  EXPECT_FALSE(enumeration_bound(Sequence()).has_value());
  auto b = enumeration_bound(Sequence(-1, {1, 0, 2}));
  EXPECT_EQ(b->max_radius, 1);
  EXPECT_EQ(b->centers, (Interval{-1, 1}));
  b = enumeration_bound(Sequence(0, {4}));
  EXPECT_EQ(b->max_radius, 0);
  b = enumeration_bound(Sequence(0, {1, 0, 0, 0, 0, 1}));
  EXPECT_EQ(b->max_radius, 3);
  EXPECT_EQ(b->centers, (Interval{0, 5}));
}

std::vector<FamilyMember> sample(std::size_t n, std::uint64_t seed) {
  return random_family(n, seed, 48);
}

TEST(WindowPsum, AdditivityInRadius) {
  for (const auto& m : sample(30, 11)) {
    const auto& x = m.sequence;
    for (double p : {1.0, 1.5, 3.0}) {
      for (Index c = -25; c <= 70; c += 7) {
        for (Index N = 0; N < 20; ++N) {
          const double grown = window_psum(x, Window(c, N + 1), p);
          const double split = window_psum(x, Window(c, N), p) +
                               std::pow(std::fabs(x[c - N - 1]), p) +
                               std::pow(std::fabs(x[c + N + 1]), p);
          EXPECT_NEAR(grown, split, 1e-12 * std::max(1.0, split)) << m.descriptor;
        }
      }
    }
  }
}

TEST(WindowPsum, PrefixMatchesDirectSummation) {
  for (const auto& m : sample(60, 12)) {
    const auto& x = m.sequence;
    const auto s = *x.support_bounds();
    for (double p : {1.0, 2.0, 2.5}) {
      for (Index c = s.lo; c <= s.hi; ++c) {
        for (Index N = 0; N <= s.length(); N += 3) {
          double direct = 0.0;
          for (Index k = c - N; k <= c + N; ++k) direct += std::pow(std::fabs(x[k]), p);
          const double fast = window_psum(x, Window(c, N), p);
          if (direct == 0.0) {
            EXPECT_EQ(fast, 0.0);
          } else {
            EXPECT_LE(std::fabs(fast - direct), 1e-12 * direct) << m.descriptor;
          }
        }
      }
    }
  }
}

// Brute force over a padded family of windows never beats the bounded one.
TEST(EnumerationBound, SoundOnRandomSequences) {
  for (const auto& m : sample(60, 13)) {
    for (auto [p, q] : {std::pair{1.0, 2.0}, {2.0, 2.0}, {1.0, 4.0}, {1.5, 3.0}}) {
      const Exponents e(p, q);
      const double bounded = oracle::oracle_morrey_norm(m.sequence, e, 0, 0);
      const double padded = oracle::oracle_morrey_norm(m.sequence, e, 10, 10);
      EXPECT_EQ(bounded, padded) << m.descriptor;
    }
  }
}

}  // namespace
}  // namespace morrey
