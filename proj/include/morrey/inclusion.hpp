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

#ifndef MORREY_INCLUSION_HPP_
#define MORREY_INCLUSION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "morrey/families.hpp"
#include "morrey/norms.hpp"
#include "morrey/phi.hpp"
#include "morrey/sequence.hpp"

namespace morrey {

// Relative slack for inequalities that hold exactly in real arithmetic.
inline constexpr double kInclusionSlack = 1e-12;

// The indicator of S_{m0,N0}.
Sequence make_characteristic(Index m0, Index radius);

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = false;
};

InequalityCheck check_inequality(double lhs, double rhs);

// |x|_{l^p_q} <= |x|_{l^p}.
InequalityCheck check_lp_contraction(const Sequence& x, const Exponents& e,
                                     const NormOptions& options = {});
// |x|_{wl^p_q} <= |x|_{wl^p_p}.
InequalityCheck check_weak_lp_contraction(const Sequence& x, const Exponents& e,
                                          const NormOptions& options = {});
// |x|_{l^p1_q} <= |x|_{l^p2_q} for p1 <= p2 <= q.
InequalityCheck check_p_monotone(const Sequence& x, double p1, double p2,
                                 double q, const NormOptions& options = {});
InequalityCheck check_weak_p_monotone(const Sequence& x, double p1, double p2,
                                      double q, const NormOptions& options = {});
// |x|_{wl^p_q} <= |x|_{l^p_q}.
InequalityCheck check_strong_dominates_weak(const Sequence& x,
                                            const Exponents& e,
                                            const NormOptions& options = {});
// |x|_{wl^p_phi} <= |x|_{l^p_phi}.
InequalityCheck check_gen_strong_dominates_weak(const Sequence& x, double p,
                                                const PhiFunction& phi,
                                                const NormOptions& options = {});

// Two-sided estimate for the norms of an indicator:
//   1/phi(t0)     <= |xi|_{l^p_phi}  <= C/phi(t0)
//   1/(2 phi(t0)) <= |xi|_{wl^p_phi} <= C/phi(t0)
// with t0 = 2N0+1 and C = max(c_dec, c_inc). c_dec controls the windows
// with N <= N0 and c_inc those with N >= N0.
struct CharacteristicBounds {
  double lower = 0.0;
  double value = 0.0;
  double upper = 0.0;
  bool ok = false;
  double weak_lower = 0.0;
  double weak_value = 0.0;
  bool weak_ok = false;
  double constant = 1.0;
  Index horizon = 0;
};

// phi must pass check_gp at max(horizon, 2N0+1); MembershipError otherwise.
CharacteristicBounds characteristic_bounds_check(
    const PhiFunction& phi, double p, Index m0, Index radius,
    Index horizon = kDefaultGpHorizon);

// Truncation of x_k = |k|^(-1/q), x_0 = 1, which lies in l^p_q but not in
// l^p for p < q.
struct StrictInclusionExample {
  Sequence sequence;
  NormReport norm;
  // (3 + 2q/(q-p))^(1/p), valid for the untruncated sequence.
  double morrey_bound = 0.0;
  // sum_{|k| <= half_length} |x_k|^p; unbounded in half_length.
  double lp_sum = 0.0;
};

double strict_inclusion_bound(double p, double q);

StrictInclusionExample strict_inclusion_example(double p, double q,
                                                Index half_length,
                                                const NormOptions& options = {});

struct LadderRung {
  Index half_length = 0;
  double value = 0.0;
  double lp_sum = 0.0;
};

// Truncations of lengths 2^k + 1, k = 1..levels. Values are monotone lower
// bounds for the norm of the infinite sequence.
std::vector<LadderRung> strict_inclusion_ladder(double p, double q, int levels,
                                                const NormOptions& options = {});

// Truncation of x_k = |k|^(-1/p), x_0 = 1, in wl^p_p.
struct WeakExample {
  NormReport norm;
  double value = 0.0;
  // value < 3.
  bool ok = false;
};

WeakExample weak_example_check(double p, Index half_length,
                               const NormOptions& options = {});

enum class NormFlavor { kStrong, kWeak };

struct FamilySpec {
  std::size_t random_count = 200;
  std::uint64_t seed = 0x5eed;
  std::size_t max_length = 64;
  bool indicators = true;
  bool examples = true;
};

struct Witness {
  std::string descriptor;
  double norm1 = 0.0;
  double norm2 = 0.0;
  double ratio = 0.0;
};

// Empirical check of: phi2 <~ phi1  <=>  |.|_{p1,phi1} <~ |.|_{p2,phi2}.
struct EquivalenceVerdict {
  NormFlavor flavor = NormFlavor::kStrong;
  double p1 = 1.0;
  double p2 = 1.0;
  std::string phi1;
  std::string phi2;
  Index horizon = 0;
  // sup phi2/phi1 at the horizon and at half of it.
  double ratio_constant = 0.0;
  double ratio_constant_half = 0.0;
  // ratio_constant stopped growing over the second half of the horizon.
  bool dominated = false;
  // max over the family of |x|_{p1,phi1} / |x|_{p2,phi2}.
  double norm_constant = 0.0;
  std::string norm_constant_witness;
  // Product of the tail bound factors of both norms (1 when both exact).
  double margin = 1.0;
  std::size_t family_size = 0;
  std::string family;
  // Members violating |x|_{p1,phi1} <= ratio_constant margin |x|_{p2,phi2}.
  std::size_t violations = 0;
  // Indicator ladder plus the norm_constant argmax.
  std::vector<Witness> witnesses;
  // norm_constant <= margin * ratio_constant.
  bool consistent = false;
};

// Requires p1 <= p2 and both phi in G_p at t_max; the family members must
// fit in windows of cardinality <= t_max.
EquivalenceVerdict equivalence_test(double p1, const PhiFunction& phi1,
                                    double p2, const PhiFunction& phi2,
                                    const FamilySpec& family, Index t_max,
                                    NormFlavor flavor = NormFlavor::kStrong,
                                    const NormOptions& options = {});

// Search harness for p1 < p2 < q: largest |x|_{l^p2_q} / |x|_{l^p1_q} over
// a random family. A growing ratio would hint at a strict inclusion; no
// claim is made either way.
struct GapSearch {
  double max_ratio = 0.0;
  std::string witness;
  std::size_t examined = 0;
};

GapSearch search_p_inclusion_gap(double p1, double p2, double q,
                                 const FamilySpec& family,
                                 const NormOptions& options = {});

}  // namespace morrey

#endif  // MORREY_INCLUSION_HPP_
