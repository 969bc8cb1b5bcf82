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

#include "morrey/inclusion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace morrey {

namespace {

Index odd_at_least(Index t) { return t % 2 == 0 ? t + 1 : t; }

GpReport require_member(const PhiFunction& phi, double p, Index horizon) {
  GpReport gp = check_gp(phi, p, horizon);
  if (!gp.member) {
    throw MembershipError("phi " + phi.describe() + " fails the G_p check for p=" +
                          std::to_string(p) + " at horizon " +
                          std::to_string(horizon));
  }
  return gp;
}

double flavored_norm(const Sequence& x, double p, const PhiFunction& phi,
                     NormFlavor flavor, const NormOptions& options,
                     double* tail) {
  const NormReport r = flavor == NormFlavor::kStrong
                           ? gen_morrey_norm(x, p, phi, options)
                           : gen_weak_norm(x, p, phi, options);
  if (r.tail_bound_factor) *tail = std::max(*tail, *r.tail_bound_factor);
  return r.value;
}

}  // namespace

Sequence make_characteristic(Index m0, Index radius) {
  const Window w(m0, radius);
  return Sequence(w.lo(), std::vector<double>(
                              static_cast<std::size_t>(w.cardinality()), 1.0));
}

InequalityCheck check_inequality(double lhs, double rhs) {
  return {lhs, rhs, lhs <= rhs * (1.0 + kInclusionSlack)};
}

InequalityCheck check_lp_contraction(const Sequence& x, const Exponents& e,
                                     const NormOptions& options) {
  return check_inequality(morrey_norm(x, e, options).value, lp_norm(x, e.p()));
}

InequalityCheck check_weak_lp_contraction(const Sequence& x, const Exponents& e,
                                          const NormOptions& options) {
  return check_inequality(
      weak_morrey_norm(x, e, options).value,
      weak_morrey_norm(x, Exponents(e.p(), e.p()), options).value);
}

InequalityCheck check_p_monotone(const Sequence& x, double p1, double p2,
                                 double q, const NormOptions& options) {
  if (p1 > p2) throw std::invalid_argument("p-monotonicity needs p1 <= p2");
  return check_inequality(morrey_norm(x, Exponents(p1, q), options).value,
                          morrey_norm(x, Exponents(p2, q), options).value);
}

InequalityCheck check_weak_p_monotone(const Sequence& x, double p1, double p2,
                                      double q, const NormOptions& options) {
  if (p1 > p2) throw std::invalid_argument("p-monotonicity needs p1 <= p2");
  return check_inequality(weak_morrey_norm(x, Exponents(p1, q), options).value,
                          weak_morrey_norm(x, Exponents(p2, q), options).value);
}

InequalityCheck check_strong_dominates_weak(const Sequence& x,
                                            const Exponents& e,
                                            const NormOptions& options) {
  return check_inequality(weak_morrey_norm(x, e, options).value,
                          morrey_norm(x, e, options).value);
}

InequalityCheck check_gen_strong_dominates_weak(const Sequence& x, double p,
                                                const PhiFunction& phi,
                                                const NormOptions& options) {
  return check_inequality(gen_weak_norm(x, p, phi, options).value,
                          gen_morrey_norm(x, p, phi, options).value);
}

CharacteristicBounds characteristic_bounds_check(const PhiFunction& phi,
                                                 double p, Index m0,
                                                 Index radius, Index horizon) {
  const Window support(m0, radius);
  const Index t0 = support.cardinality();
  CharacteristicBounds out;
  out.horizon = std::max(odd_at_least(horizon), t0);
  const GpReport gp = require_member(phi, p, out.horizon);
  out.constant = std::max(gp.c_dec, gp.c_inc);

  const Sequence xi = make_characteristic(m0, radius);
  NormOptions options;
  options.gp_horizon = out.horizon;
  const double inv_phi = 1.0 / phi(t0);
  out.lower = inv_phi;
  out.upper = out.constant * inv_phi;
  out.value = gen_morrey_norm(xi, p, phi, options).value;
  out.ok = out.lower <= out.value * (1.0 + kInclusionSlack) &&
           out.value <= out.upper * (1.0 + kInclusionSlack);
  out.weak_lower = 0.5 * inv_phi;
  out.weak_value = gen_weak_norm(xi, p, phi, options).value;
  out.weak_ok = out.weak_lower <= out.weak_value * (1.0 + kInclusionSlack) &&
                out.weak_value <= out.upper * (1.0 + kInclusionSlack);
  return out;
}

double strict_inclusion_bound(double p, double q) {
  return std::pow(3.0 + 2.0 * q / (q - p), 1.0 / p);
}

StrictInclusionExample strict_inclusion_example(double p, double q,
                                                Index half_length,
                                                const NormOptions& options) {
  const Exponents e(p, q);
  if (!(p < q)) {
    throw std::invalid_argument("the strict inclusion example needs p < q");
  }
  StrictInclusionExample out;
  out.sequence = power_decay(1.0 / q, half_length);
  out.norm = morrey_norm(out.sequence, e, options);
  out.morrey_bound = strict_inclusion_bound(p, q);
  for (double v : out.sequence.values()) out.lp_sum += std::pow(std::abs(v), p);
  return out;
}

std::vector<LadderRung> strict_inclusion_ladder(double p, double q, int levels,
                                                const NormOptions& options) {
  std::vector<LadderRung> rungs;
  for (int k = 1; k <= levels; ++k) {
    const Index half_length = Index{1} << (k - 1);
    const auto example = strict_inclusion_example(p, q, half_length, options);
    rungs.push_back({half_length, example.norm.value, example.lp_sum});
  }
  return rungs;
}

WeakExample weak_example_check(double p, Index half_length,
                               const NormOptions& options) {
  require_valid_p(p);
  WeakExample out;
  out.norm = weak_morrey_norm(power_decay(1.0 / p, half_length),
                              Exponents(p, p), options);
  out.value = out.norm.value;
  out.ok = out.value < 3.0;
  return out;
}

EquivalenceVerdict equivalence_test(double p1, const PhiFunction& phi1,
                                    double p2, const PhiFunction& phi2,
                                    const FamilySpec& family, Index t_max,
                                    NormFlavor flavor,
                                    const NormOptions& options) {
  require_valid_p(p1);
  require_valid_p(p2);
  if (p1 > p2) throw std::invalid_argument("equivalence test needs p1 <= p2");
  require_member(phi1, p1, t_max);
  require_member(phi2, p2, t_max);

  EquivalenceVerdict v;
  v.flavor = flavor;
  v.p1 = p1;
  v.p2 = p2;
  v.phi1 = phi1.describe();
  v.phi2 = phi2.describe();
  v.horizon = t_max;
  v.ratio_constant = phi_ratio_sup(phi1, phi2, t_max);
  v.ratio_constant_half = phi_ratio_sup(phi1, phi2, half_horizon(t_max));
  v.dominated =
      v.ratio_constant <= v.ratio_constant_half * (1.0 + kGrowthTolerance);

  std::vector<FamilyMember> members;
  const Index max_radius = (t_max - 1) / 2;
  if (family.indicators) {
    for (Index n0 = 0; n0 <= max_radius; ++n0) {
      members.push_back({"indicator[0," + std::to_string(n0) + "]",
                         make_characteristic(0, n0)});
    }
  }
  if (family.random_count > 0) {
    const auto max_length = std::min<std::size_t>(
        family.max_length, static_cast<std::size_t>(t_max - 1));
    if (max_length > 0) {
      for (auto& m : random_family(family.random_count, family.seed, max_length)) {
        members.push_back(std::move(m));
      }
    }
  }
  if (family.examples) {
    members.push_back({"power_decay[0.5," + std::to_string(max_radius) + "]",
                       power_decay(0.5, max_radius)});
    members.push_back({"power_decay[1/p2," + std::to_string(max_radius) + "]",
                       power_decay(1.0 / p2, max_radius)});
  }
  if (members.empty()) {
    throw std::invalid_argument("equivalence test needs a nonempty family");
  }
  v.family_size = members.size();
  v.family = "indicators=" + std::to_string(family.indicators ? max_radius + 1 : 0) +
             " random=" + std::to_string(family.random_count) +
             " seed=" + std::to_string(family.seed) +
             " examples=" + std::to_string(family.examples ? 2 : 0);

  NormOptions norm_options = options;
  norm_options.gp_horizon = t_max;
  double tail1 = 1.0;
  double tail2 = 1.0;
  std::vector<Witness> evaluated;
  evaluated.reserve(members.size());
  for (const auto& m : members) {
    const double n1 = flavored_norm(m.sequence, p1, phi1, flavor, norm_options, &tail1);
    const double n2 = flavored_norm(m.sequence, p2, phi2, flavor, norm_options, &tail2);
    evaluated.push_back({m.descriptor, n1, n2, n2 > 0.0 ? n1 / n2 : 0.0});
  }
  v.margin = tail1 * tail2;

  const Witness* worst = nullptr;
  for (const Witness& w : evaluated) {
    if (w.norm2 == 0.0) continue;
    if (!worst || w.ratio > worst->ratio) worst = &w;
    if (w.norm1 > v.ratio_constant * v.margin * w.norm2 * (1.0 + kInclusionSlack)) {
      ++v.violations;
    }
  }
  if (worst) {
    v.norm_constant = worst->ratio;
    v.norm_constant_witness = worst->descriptor;
  }

  // The characteristic-sequence ladder: under domination the ratio stays
  // bounded; otherwise it tracks phi2/phi1 and grows with N0.
  if (family.indicators) {
    for (Index n0 = 0; n0 <= max_radius; n0 = n0 == 0 ? 1 : 2 * n0) {
      v.witnesses.push_back(evaluated[static_cast<std::size_t>(n0)]);
    }
  } else {
    for (Index n0 = 0; n0 <= max_radius; n0 = n0 == 0 ? 1 : 2 * n0) {
      const Sequence xi = make_characteristic(0, n0);
      double unused = 1.0;
      const double n1 = flavored_norm(xi, p1, phi1, flavor, norm_options, &unused);
      const double n2 = flavored_norm(xi, p2, phi2, flavor, norm_options, &unused);
      v.witnesses.push_back({"indicator[0," + std::to_string(n0) + "]", n1, n2,
                             n1 / n2});
    }
  }
  if (worst) v.witnesses.push_back(*worst);

  v.consistent =
      v.norm_constant <= v.margin * v.ratio_constant * (1.0 + kInclusionSlack);
  return v;
}

GapSearch search_p_inclusion_gap(double p1, double p2, double q,
                                 const FamilySpec& family,
                                 const NormOptions& options) {
  if (!(p1 < p2 && p2 < q)) {
    throw std::invalid_argument("gap search needs p1 < p2 < q");
  }
  GapSearch out;
  for (const auto& m : random_family(family.random_count, family.seed,
                                     family.max_length)) {
    const double low = morrey_norm(m.sequence, Exponents(p1, q), options).value;
    if (low == 0.0) continue;
    const double high = morrey_norm(m.sequence, Exponents(p2, q), options).value;
    ++out.examined;
    if (high / low > out.max_ratio) {
      out.max_ratio = high / low;
      out.witness = m.descriptor;
    }
  }
  return out;
}

}  // namespace morrey
