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

#ifndef MORREY_NORMS_HPP_
#define MORREY_NORMS_HPP_

#include <optional>

#include "morrey/phi.hpp"
#include "morrey/sequence.hpp"

namespace morrey {

// Result of a norm computation plus the window (and level) attaining it.
//
// arg_gamma follows the "sup as gamma rises to v" convention: the weak
// quantity is a sup over the open condition |x_k| > gamma, so it is reached
// in the limit gamma -> v from below with the count of entries >= v.
//
// exact is false only for generalized norms whose phi is almost monotone;
// then the true norm is at most tail_bound_factor * value.
struct NormReport {
  double value = 0.0;
  std::optional<Window> arg_window;
  std::optional<double> arg_gamma;
  bool exact = true;
  std::optional<double> tail_bound_factor;
};

struct NormOptions {
  // Worker threads for the window search. Results do not depend on it.
  unsigned threads = 1;
  // Horizon for the G_p check run by the generalized norms. Defaults to
  // max(201, cardinality of the largest searched window).
  std::optional<Index> gp_horizon;
};

inline constexpr Index kDefaultGpHorizon = 201;

struct WeakWindowValue {
  double value = 0.0;
  // Maximizing level; empty when the window misses the support.
  std::optional<double> gamma;
};

// |S|^(1/q-1/p) (sum_{k in S} |x_k|^p)^(1/p).
double morrey_window_quantity(const Sequence& x, const Window& w,
                              const Exponents& e);

// sup over gamma > 0 of |S|^(1/q-1/p) gamma |{k in S : |x_k| > gamma}|^(1/p),
// evaluated as the max over distinct nonzero |x_k| = v in S of
// |S|^(1/q-1/p) v c(v)^(1/p) with c(v) = |{k in S : |x_k| >= v}|.
WeakWindowValue weak_window_quantity(const Sequence& x, const Window& w,
                                     const Exponents& e);

// (1/phi(|S|)) ((1/|S|) sum_{k in S} |x_k|^p)^(1/p).
double gen_window_quantity(const Sequence& x, const Window& w, double p,
                           const PhiFunction& phi);

WeakWindowValue gen_weak_window_quantity(const Sequence& x, const Window& w,
                                         double p, const PhiFunction& phi);

// Norms of l^p_q and wl^p_q. Always exact. Witness ties are broken by
// smallest radius, then smallest center, then largest gamma.
NormReport morrey_norm(const Sequence& x, const Exponents& e,
                       const NormOptions& options = {});
NormReport weak_morrey_norm(const Sequence& x, const Exponents& e,
                            const NormOptions& options = {});

// Norms of l^p_phi and wl^p_phi. phi is checked for G_p membership first;
// MembershipError if it fails, HorizonError if phi does not reach the
// largest searched window.
NormReport gen_morrey_norm(const Sequence& x, double p, const PhiFunction& phi,
                           const NormOptions& options = {});
NormReport gen_weak_norm(const Sequence& x, double p, const PhiFunction& phi,
                         const NormOptions& options = {});

struct QuasiTriangle {
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = false;
};

// lhs = |x+y|_w, rhs = 2 (|x|_w + |y|_w) for the weak l^p_q quasi-norm.
QuasiTriangle quasi_triangle_check(const Sequence& x, const Sequence& y,
                                   const Exponents& e,
                                   const NormOptions& options = {});

}  // namespace morrey

#endif  // MORREY_NORMS_HPP_
