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

#ifndef MORREY_SEQUENCE_HPP_
#define MORREY_SEQUENCE_HPP_

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace morrey {

using Index = std::int64_t;

// Closed integer interval [lo, hi].
struct Interval {
  Index lo = 0;
  Index hi = 0;

  Index length() const { return hi - lo + 1; }
  bool operator==(const Interval&) const = default;
};

// The symmetric block S_{m,N} = {m-N, ..., m+N}.
class Window {
 public:
  Window(Index center, Index radius);

  Index center() const { return center_; }
  Index radius() const { return radius_; }
  Index cardinality() const { return 2 * radius_ + 1; }
  Index lo() const { return center_ - radius_; }
  Index hi() const { return center_ + radius_; }
  bool contains(Index k) const;

  bool operator==(const Window&) const = default;

 private:
  Index center_;
  Index radius_;
};

// Validated pair 1 <= p <= q < infinity.
class Exponents {
 public:
  Exponents(double p, double q);

  double p() const { return p_; }
  double q() const { return q_; }
  // 1/q - 1/p, always <= 0.
  double scaling() const { return 1.0 / q_ - 1.0 / p_; }

 private:
  double p_;
  double q_;
};

// Throws std::invalid_argument unless 1 <= p < infinity.
void require_valid_p(double p);

// Finitely supported real sequence indexed by the integers. Entries outside
// the stored block are zero. Complex input is reduced to moduli on ingestion;
// every norm in this library only reads |x_k|.
class Sequence {
 public:
  // The zero sequence.
  Sequence() = default;
  Sequence(Index offset, std::vector<double> values);

  static Sequence from_complex(Index offset,
                               std::span<const std::complex<double>> values);

  Index offset() const { return offset_; }
  std::span<const double> values() const { return values_; }
  std::size_t stored_size() const { return values_.size(); }

  // x_k, zero outside the stored block.
  double operator[](Index k) const;

  bool is_zero() const { return !support_.has_value(); }

  // Tightest interval containing every nonzero entry; nullopt for zero.
  const std::optional<Interval>& support_bounds() const { return support_; }

  Sequence scaled(double alpha) const;

  friend Sequence operator+(const Sequence& x, const Sequence& y);
  friend Sequence operator-(const Sequence& x);

 private:
  Index offset_ = 0;
  std::vector<double> values_;
  std::optional<Interval> support_;
};

inline std::optional<Interval> support_bounds(const Sequence& x) {
  return x.support_bounds();
}

// Prefix sums of |x_k|^p over the support block. O(n) to build, O(1) per
// window query. Each prefix is kept as an unevaluated sum hi + lo
// (compensated accumulation), so a query for a small window next to a heavy
// block does not lose its relative accuracy to cancellation.
class PowerPrefixSums {
 public:
  PowerPrefixSums(const Sequence& x, double p);

  double window_sum(const Window& w) const;
  // Sum of |x_k|^p over lo..hi, clipped to the support.
  double range_sum(Index lo, Index hi) const;
  double total() const;

 private:
  Index base_ = 0;
  std::vector<double> hi_;
  std::vector<double> lo_;
};

// Sum over k in w of |x_k|^p.
double window_psum(const Sequence& x, const Window& w, double p);

// (sum_k |x_k|^p)^(1/p).
double lp_norm(const Sequence& x, double p);

struct EnumerationBound {
  Index max_radius;
  Interval centers;
};

// Finite window family that attains every supremum in this library.
//
// Window reduction: take any S_{m,N} and let [l, r] be the hull of
// supp(x) within it. The smallest window covering [l, r] has radius
// N' <= N, the same p-sum, and any factor c * (2N+1)^(-s) with s >= 0 is
// at least as large at N'. Its center lies in [l, r] and N' <= ceil((b-a)/2)
// for supp(x) in [a, b]. So the sup over Z x omega becomes a max over
// m in [a, b], N in [0, ceil((b-a)/2)]. The same holds for level-set
// counts, which only depend on the intersection with the support.
std::optional<EnumerationBound> enumeration_bound(const Sequence& x);

}  // namespace morrey

#endif  // MORREY_SEQUENCE_HPP_
