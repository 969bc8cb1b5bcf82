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

#include "morrey/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace morrey {

Window::Window(Index center, Index radius) : center_(center), radius_(radius) {
  if (radius < 0) {
    throw std::invalid_argument("window radius must be nonnegative, got " +
                                std::to_string(radius));
  }
}

bool Window::contains(Index k) const {
  const Index d = k >= center_ ? k - center_ : center_ - k;
  return d <= radius_;
}

void require_valid_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("exponent p must satisfy 1 <= p < inf");
  }
}

Exponents::Exponents(double p, double q) : p_(p), q_(q) {
  require_valid_p(p);
  if (!(q >= p) || !std::isfinite(q)) {
    throw std::invalid_argument("exponents must satisfy 1 <= p <= q < inf");
  }
}

namespace {

std::optional<Interval> scan_support(Index offset,
                                     const std::vector<double>& values) {
  auto nonzero = [](double v) { return v != 0.0; };
  auto first = std::find_if(values.begin(), values.end(), nonzero);
  if (first == values.end()) return std::nullopt;
  auto last = std::find_if(values.rbegin(), values.rend(), nonzero);
  const Index lo = offset + (first - values.begin());
  const Index hi = offset + static_cast<Index>(values.size()) - 1 -
                   (last - values.rbegin());
  return Interval{lo, hi};
}

}  // namespace

Sequence::Sequence(Index offset, std::vector<double> values)
    : offset_(offset), values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("sequence values must be finite");
    }
  }
  support_ = scan_support(offset_, values_);
}

Sequence Sequence::from_complex(Index offset,
                                std::span<const std::complex<double>> values) {
  std::vector<double> moduli(values.size());
  std::transform(values.begin(), values.end(), moduli.begin(),
                 [](const std::complex<double>& z) { return std::abs(z); });
  return Sequence(offset, std::move(moduli));
}

double Sequence::operator[](Index k) const {
  if (k < offset_ || k >= offset_ + static_cast<Index>(values_.size())) {
    return 0.0;
  }
  return values_[static_cast<std::size_t>(k - offset_)];
}

Sequence Sequence::scaled(double alpha) const {
  std::vector<double> out(values_);
  for (double& v : out) v *= alpha;
  return Sequence(offset_, std::move(out));
}

Sequence operator+(const Sequence& x, const Sequence& y) {
  if (x.values_.empty()) return y;
  if (y.values_.empty()) return x;
  const Index lo = std::min(x.offset_, y.offset_);
  const Index hi =
      std::max(x.offset_ + static_cast<Index>(x.values_.size()),
               y.offset_ + static_cast<Index>(y.values_.size()));
  std::vector<double> sum(static_cast<std::size_t>(hi - lo));
  for (Index k = lo; k < hi; ++k) {
    sum[static_cast<std::size_t>(k - lo)] = x[k] + y[k];
  }
  return Sequence(lo, std::move(sum));
}

Sequence operator-(const Sequence& x) { return x.scaled(-1.0); }

PowerPrefixSums::PowerPrefixSums(const Sequence& x, double p) {
  require_valid_p(p);
  const auto& support = x.support_bounds();
  if (!support) return;
  base_ = support->lo;
  const auto n = static_cast<std::size_t>(support->length());
  hi_.assign(n + 1, 0.0);
  lo_.assign(n + 1, 0.0);
  double sum = 0.0;
  double carry = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double term = std::pow(std::abs(x[base_ + static_cast<Index>(i)]), p);
    // TwoSum: sum + term == next + err exactly.
    const double next = sum + term;
    const double shifted = next - sum;
    const double err = (sum - (next - shifted)) + (term - shifted);
    sum = next;
    carry += err;
    hi_[i + 1] = sum;
    lo_[i + 1] = carry;
  }
}

double PowerPrefixSums::total() const {
  return hi_.empty() ? 0.0 : hi_.back() + lo_.back();
}

double PowerPrefixSums::range_sum(Index lo, Index hi) const {
  if (hi_.empty()) return 0.0;
  const Index last = base_ + static_cast<Index>(hi_.size()) - 2;
  lo = std::max(lo, base_);
  hi = std::min(hi, last);
  if (lo > hi) return 0.0;
  const auto r = static_cast<std::size_t>(hi - base_ + 1);
  const auto l = static_cast<std::size_t>(lo - base_);
  return (hi_[r] - hi_[l]) + (lo_[r] - lo_[l]);
}

double PowerPrefixSums::window_sum(const Window& w) const {
  return range_sum(w.lo(), w.hi());
}

double window_psum(const Sequence& x, const Window& w, double p) {
  return PowerPrefixSums(x, p).window_sum(w);
}

double lp_norm(const Sequence& x, double p) {
  require_valid_p(p);
  double sum = 0.0;
  for (double v : x.values()) sum += std::pow(std::abs(v), p);
  return std::pow(sum, 1.0 / p);
}

std::optional<EnumerationBound> enumeration_bound(const Sequence& x) {
  const auto& support = x.support_bounds();
  if (!support) return std::nullopt;
  const Index span = support->hi - support->lo;
  return EnumerationBound{(span + 1) / 2, *support};
}

}  // namespace morrey
