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

#include "morrey/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace morrey::oracle {

namespace {

struct Range {
  Index a = 0;
  Index b = -1;
  bool empty() const { return b < a; }
};

// Scans the stored block directly instead of trusting support_bounds().
Range scan_support(const Sequence& x) {
  Range r;
  const auto vals = x.values();
  bool seen = false;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] == 0.0) continue;
    const Index k = x.offset() + static_cast<Index>(i);
    if (!seen) r.a = k;
    r.b = k;
    seen = true;
  }
  return r;
}

// Calls visit(m, N) for every window in the padded family.
void for_each_window(const Range& s, Index m_pad, Index N_pad,
                     const std::function<void(Index, Index)>& visit) {
  const Index span = s.b - s.a;
  const Index n_max = span / 2 + span % 2 + N_pad;
  for (Index m = s.a - m_pad; m <= s.b + m_pad; ++m) {
    for (Index N = 0; N <= n_max; ++N) visit(m, N);
  }
}

double window_power_sum(const Sequence& x, Index m, Index N, double p) {
  double sum = 0.0;
  for (Index k = m - N; k <= m + N; ++k) sum += std::pow(std::fabs(x[k]), p);
  return sum;
}

// sup over the gamma grid of gamma * #{k in window : |x_k| > gamma}^(1/p).
double grid_weak_value(const Sequence& x, Index m, Index N, double p,
                       int gamma_grid) {
  std::vector<double> mags;
  for (Index k = m - N; k <= m + N; ++k) {
    const double a = std::fabs(x[k]);
    if (a > 0.0) mags.push_back(a);
  }
  if (mags.empty()) return 0.0;
  std::sort(mags.begin(), mags.end());
  std::vector<double> distinct = mags;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<double> gammas;
  for (double v : distinct) {
    double eps = 1e-5;
    for (int j = 1; j <= gamma_grid; ++j) {
      eps /= 10.0;
      gammas.push_back(v * (1.0 - eps));
    }
  }
  for (std::size_t i = 0; i + 1 < distinct.size(); ++i) {
    gammas.push_back(0.5 * (distinct[i] + distinct[i + 1]));
  }
  gammas.push_back(0.5 * distinct.front());

  double best = 0.0;
  for (double g : gammas) {
    const auto above = mags.end() - std::upper_bound(mags.begin(), mags.end(), g);
    if (above == 0) continue;
    best = std::max(best, g * std::pow(static_cast<double>(above), 1.0 / p));
  }
  return best;
}

void require_grid(int gamma_grid) {
  if (gamma_grid < 2) throw std::invalid_argument("gamma_grid must be >= 2");
}

}  // namespace

double oracle_morrey_norm(const Sequence& x, const Exponents& e, Index m_pad,
                          Index N_pad) {
  const Range s = scan_support(x);
  if (s.empty()) return 0.0;
  double best = 0.0;
  for_each_window(s, m_pad, N_pad, [&](Index m, Index N) {
    const double t = static_cast<double>(2 * N + 1);
    const double v = std::pow(window_power_sum(x, m, N, e.p()), 1.0 / e.p()) *
                     std::pow(t, 1.0 / e.q() - 1.0 / e.p());
    best = std::max(best, v);
  });
  return best;
}

double oracle_weak_norm(const Sequence& x, const Exponents& e, int gamma_grid,
                        Index m_pad, Index N_pad) {
  require_grid(gamma_grid);
  const Range s = scan_support(x);
  if (s.empty()) return 0.0;
  double best = 0.0;
  for_each_window(s, m_pad, N_pad, [&](Index m, Index N) {
    const double t = static_cast<double>(2 * N + 1);
    const double v = grid_weak_value(x, m, N, e.p(), gamma_grid) *
                     std::pow(t, 1.0 / e.q() - 1.0 / e.p());
    best = std::max(best, v);
  });
  return best;
}

double oracle_gen_morrey_norm(const Sequence& x, double p,
                              const PhiFunction& phi, Index m_pad,
                              Index N_pad) {
  const Range s = scan_support(x);
  if (s.empty()) return 0.0;
  double best = 0.0;
  for_each_window(s, m_pad, N_pad, [&](Index m, Index N) {
    const Index t = 2 * N + 1;
    const double mean = window_power_sum(x, m, N, p) / static_cast<double>(t);
    best = std::max(best, std::pow(mean, 1.0 / p) / phi(t));
  });
  return best;
}

double oracle_gen_weak_norm(const Sequence& x, double p, const PhiFunction& phi,
                            int gamma_grid, Index m_pad, Index N_pad) {
  require_grid(gamma_grid);
  const Range s = scan_support(x);
  if (s.empty()) return 0.0;
  double best = 0.0;
  for_each_window(s, m_pad, N_pad, [&](Index m, Index N) {
    const Index t = 2 * N + 1;
    const double v = grid_weak_value(x, m, N, p, gamma_grid) /
                     (phi(t) * std::pow(static_cast<double>(t), 1.0 / p));
    best = std::max(best, v);
  });
  return best;
}

}  // namespace morrey::oracle
