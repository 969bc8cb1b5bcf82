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

#ifndef MORREY_PHI_HPP_
#define MORREY_PHI_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "morrey/sequence.hpp"

namespace morrey {

// Raised when a parameter function is evaluated past its declared horizon.
class HorizonError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Raised when a parameter function fails the empirical G_p membership test.
class MembershipError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class PhiKind { kPower, kLogPerturbed, kTabulated, kCustom };

// kExact: phi is nonincreasing and t^(1/p) phi(t) is nondecreasing for all
// odd t, as promised by whoever built the function. kAlmost: only up to
// constants, which are estimated by check_gp.
enum class Monotonicity { kExact, kAlmost };

// Positive function on odd cardinalities t = 2N+1 >= 1. Immutable and cheap
// to copy.
class PhiFunction {
 public:
  using Evaluator = std::function<double(Index)>;

  // t^(-1/q).
  static PhiFunction power(double q);
  // t^(-1/q) (1 + ln t)^beta.
  static PhiFunction log_perturbed(double q, double beta);
  // values[i] is phi(2i+1); the horizon is the last odd t covered.
  static PhiFunction tabulated(std::vector<double> values);
  static PhiFunction custom(std::string name, Evaluator eval,
                            Monotonicity mode,
                            std::optional<Index> horizon = std::nullopt);
  static PhiFunction constant(double c);

  // Throws std::invalid_argument for even or nonpositive t, HorizonError
  // past the horizon.
  double operator()(Index t) const;

  PhiKind kind() const { return kind_; }
  Monotonicity mode() const { return mode_; }
  // Largest odd t the function is defined for; nullopt when unbounded.
  std::optional<Index> horizon() const { return horizon_; }
  // Short spec string, e.g. "power:2" or "logpert:2:1".
  const std::string& describe() const { return name_; }

 private:
  PhiFunction(PhiKind kind, Monotonicity mode, std::string name,
              Evaluator eval, std::optional<Index> horizon)
      : kind_(kind),
        mode_(mode),
        name_(std::move(name)),
        eval_(std::move(eval)),
        horizon_(horizon) {}

  PhiKind kind_;
  Monotonicity mode_;
  std::string name_;
  Evaluator eval_;
  std::optional<Index> horizon_;
};

// Empirical G_p constants at a finite horizon. All suprema run over odd
// pairs 1 <= 2M+1 <= 2N+1 <= horizon.
struct GpReport {
  double p = 1.0;
  Index horizon = 1;
  // max(1, sup phi(2N+1) / phi(2M+1)).
  double c_dec = 1.0;
  // max(1, sup psi(2M+1) / psi(2N+1)) with psi(t) = t^(1/p) phi(t).
  double c_inc = 1.0;
  // sup of max(r, 1/r), r = phi(t)/phi(t'), over 1/2 <= t/t' <= 2.
  double c_doubling = 1.0;
  // The same constants at the half horizon; used for the growth test.
  double c_dec_half = 1.0;
  double c_inc_half = 1.0;
  bool member = false;
};

// Relative increase between half and full horizon above which a constant
// counts as still growing.
inline constexpr double kGrowthTolerance = 1e-9;

// O(horizon) via running extrema and a monotone deque.
//
// member is true when c_dec and c_inc are finite and neither grows by more
// than kGrowthTolerance between the largest odd t <= horizon/2 and the
// horizon. At a finite horizon every constant is finite, so growth is the
// only observable symptom of non-membership.
GpReport check_gp(const PhiFunction& phi, double p, Index t_max);

double doubling_constant(const PhiFunction& phi, Index t_max);

// sup over odd t <= t_max of phi2(t) / phi1(t).
double phi_ratio_sup(const PhiFunction& phi1, const PhiFunction& phi2,
                     Index t_max);

// Largest odd number <= t / 2, but at least 1.
Index half_horizon(Index t_max);

}  // namespace morrey

#endif  // MORREY_PHI_HPP_
