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

#ifndef MORREY_ORACLE_HPP_
#define MORREY_ORACLE_HPP_

#include "morrey/phi.hpp"
#include "morrey/sequence.hpp"

// Brute-force reference norms for tests. Nothing here touches the norm
// engine: no prefix sums, no pruning, sums taken term by term in index order.
namespace morrey::oracle {

inline constexpr int kDefaultGammaGrid = 3;

// Max of the window quantity over m in [a - m_pad, b + m_pad] and
// N in [0, ceil((b-a)/2) + N_pad], [a, b] the support.
double oracle_morrey_norm(const Sequence& x, const Exponents& e, Index m_pad = 0,
                          Index N_pad = 0);

// Weak quantity on a finite gamma grid per window: v (1 - 10^-(5+j)) for
// every distinct nonzero |x_k| = v in the window and j = 1..gamma_grid, the
// midpoints between consecutive distinct values, and half the smallest one.
// Approaches the weak norm from below.
double oracle_weak_norm(const Sequence& x, const Exponents& e,
                        int gamma_grid = kDefaultGammaGrid, Index m_pad = 0,
                        Index N_pad = 0);

// Generalized variants; phi must be defined up to 2(N_max + N_pad) + 1.
double oracle_gen_morrey_norm(const Sequence& x, double p,
                              const PhiFunction& phi, Index m_pad = 0,
                              Index N_pad = 0);
double oracle_gen_weak_norm(const Sequence& x, double p, const PhiFunction& phi,
                            int gamma_grid = kDefaultGammaGrid, Index m_pad = 0,
                            Index N_pad = 0);

}  // namespace morrey::oracle

#endif  // MORREY_ORACLE_HPP_
