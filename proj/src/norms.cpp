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

#include "morrey/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "window_search.hpp"

namespace morrey {

namespace {

// c_inc at most this far above 1 still counts as exactly monotone.
constexpr double kExactTolerance = 1e-12;

double classical_factor(Index cardinality, const Exponents& e) {
  return std::pow(static_cast<double>(cardinality), e.scaling());
}

// 1 / (phi(t) t^(1/p)): the generalized window quantity is this times the
// p-sum to the power 1/p.
double gen_factor(Index cardinality, double p, const PhiFunction& phi) {
  const double t = static_cast<double>(cardinality);
  return 1.0 / (phi(cardinality) * std::pow(t, 1.0 / p));
}

double weak_level_value(double factor, const std::vector<double>& moduli,
                        double p, double* gamma) {
  // moduli sorted descending; the count for level v is the index one past
  // the last entry equal to v.
  double best = 0.0;
  for (std::size_t i = 0; i < moduli.size();) {
    const double level = moduli[i];
    while (i < moduli.size() && moduli[i] == level) ++i;
    const double value =
        factor * (level * std::pow(static_cast<double>(i), 1.0 / p));
    if (value > best) {
      best = value;
      *gamma = level;
    }
  }
  return best;
}

WeakWindowValue weak_window_with_factor(const Sequence& x, const Window& w,
                                        double factor, double p) {
  std::vector<double> moduli;
  for (Index k = w.lo(); k <= w.hi(); ++k) {
    const double v = std::abs(x[k]);
    if (v != 0.0) moduli.push_back(v);
  }
  if (moduli.empty()) return {};
  std::sort(moduli.begin(), moduli.end(), std::greater<>());
  double gamma = 0.0;
  const double value = weak_level_value(factor, moduli, p, &gamma);
  return {value, gamma};
}

NormReport to_report(const detail::SearchHit& hit, bool weak) {
  NormReport report;
  if (!hit.found) return report;
  report.value = hit.value;
  report.arg_window = Window(hit.center, hit.radius);
  if (weak) report.arg_gamma = hit.gamma;
  return report;
}

struct PhiVerdict {
  bool exact = false;
  double c_inc = 1.0;
};

Index choose_gp_horizon(const PhiFunction& phi, Index needed,
                        const NormOptions& options) {
  Index horizon = options.gp_horizon.value_or(std::max(kDefaultGpHorizon, needed));
  if (horizon % 2 == 0) ++horizon;
  if (const auto limit = phi.horizon()) {
    if (*limit < needed) {
      throw HorizonError("phi " + phi.describe() + " has horizon " +
                         std::to_string(*limit) + " but windows up to " +
                         std::to_string(needed) + " are required");
    }
    if (!options.gp_horizon) horizon = std::min(horizon, *limit);
  }
  return horizon;
}

PhiVerdict admit_phi(const PhiFunction& phi, double p, Index needed,
                     const NormOptions& options) {
  const Index horizon = choose_gp_horizon(phi, needed, options);
  const GpReport gp = check_gp(phi, p, horizon);
  if (!gp.member) {
    throw MembershipError("phi " + phi.describe() + " is not in G_p for p=" +
                          std::to_string(p) + " at horizon " +
                          std::to_string(horizon) + " (c_dec=" +
                          std::to_string(gp.c_dec) + ", c_inc=" +
                          std::to_string(gp.c_inc) + ")");
  }
  PhiVerdict verdict;
  verdict.c_inc = gp.c_inc;
  verdict.exact = phi.mode() == Monotonicity::kExact &&
                  gp.c_inc <= 1.0 + kExactTolerance;
  return verdict;
}

enum class Kind { kStrong, kWeak };

NormReport gen_norm(const Sequence& x, double p, const PhiFunction& phi,
                    const NormOptions& options, Kind kind) {
  require_valid_p(p);
  const auto bound = enumeration_bound(x);
  const Index needed = bound ? 2 * bound->max_radius + 1 : 1;
  const PhiVerdict verdict = admit_phi(phi, p, needed, options);

  NormReport report;
  if (bound) {
    std::vector<double> factors(static_cast<std::size_t>(bound->max_radius) + 1);
    for (std::size_t n = 0; n < factors.size(); ++n) {
      factors[n] = gen_factor(static_cast<Index>(2 * n + 1), p, phi);
    }
    const auto hit =
        kind == Kind::kStrong
            ? detail::search_strong(x, p, factors, bound->centers, options.threads)
            : detail::search_weak(x, p, factors, bound->centers, options.threads);
    report = to_report(hit, kind == Kind::kWeak);
  }
  // Past the bounded family every window sees the whole support, and the
  // factor can exceed its value at the largest searched radius by at most
  // c_inc.
  if (!verdict.exact && !x.is_zero()) {
    report.exact = false;
    report.tail_bound_factor = std::max(1.0, verdict.c_inc);
  }
  return report;
}

std::vector<double> classical_factors(const EnumerationBound& bound,
                                      const Exponents& e) {
  std::vector<double> factors(static_cast<std::size_t>(bound.max_radius) + 1);
  for (std::size_t n = 0; n < factors.size(); ++n) {
    factors[n] = classical_factor(static_cast<Index>(2 * n + 1), e);
  }
  return factors;
}

}  // namespace

double morrey_window_quantity(const Sequence& x, const Window& w,
                              const Exponents& e) {
  const double sum = window_psum(x, w, e.p());
  if (sum == 0.0) return 0.0;
  return classical_factor(w.cardinality(), e) * std::pow(sum, 1.0 / e.p());
}

WeakWindowValue weak_window_quantity(const Sequence& x, const Window& w,
                                     const Exponents& e) {
  return weak_window_with_factor(x, w, classical_factor(w.cardinality(), e),
                                 e.p());
}

double gen_window_quantity(const Sequence& x, const Window& w, double p,
                           const PhiFunction& phi) {
  const double sum = window_psum(x, w, p);
  if (sum == 0.0) return 0.0;
  return gen_factor(w.cardinality(), p, phi) * std::pow(sum, 1.0 / p);
}

WeakWindowValue gen_weak_window_quantity(const Sequence& x, const Window& w,
                                         double p, const PhiFunction& phi) {
  require_valid_p(p);
  return weak_window_with_factor(x, w, gen_factor(w.cardinality(), p, phi), p);
}

NormReport morrey_norm(const Sequence& x, const Exponents& e,
                       const NormOptions& options) {
  const auto bound = enumeration_bound(x);
  if (!bound) return {};
  const auto factors = classical_factors(*bound, e);
  return to_report(detail::search_strong(x, e.p(), factors, bound->centers,
                                         options.threads),
                   false);
}

NormReport weak_morrey_norm(const Sequence& x, const Exponents& e,
                            const NormOptions& options) {
  const auto bound = enumeration_bound(x);
  if (!bound) return {};
  const auto factors = classical_factors(*bound, e);
  return to_report(detail::search_weak(x, e.p(), factors, bound->centers,
                                       options.threads),
                   true);
}

NormReport gen_morrey_norm(const Sequence& x, double p, const PhiFunction& phi,
                           const NormOptions& options) {
  return gen_norm(x, p, phi, options, Kind::kStrong);
}

NormReport gen_weak_norm(const Sequence& x, double p, const PhiFunction& phi,
                         const NormOptions& options) {
  return gen_norm(x, p, phi, options, Kind::kWeak);
}

QuasiTriangle quasi_triangle_check(const Sequence& x, const Sequence& y,
                                   const Exponents& e,
                                   const NormOptions& options) {
  QuasiTriangle out;
  out.lhs = weak_morrey_norm(x + y, e, options).value;
  out.rhs = 2.0 * (weak_morrey_norm(x, e, options).value +
                   weak_morrey_norm(y, e, options).value);
  out.ok = out.lhs <= out.rhs * (1.0 + 1e-9);
  return out;
}

}  // namespace morrey
