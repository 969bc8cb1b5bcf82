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

#include "morrey/phi.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <memory>
#include <sstream>

namespace morrey {

namespace {

std::string format_number(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

void require_odd_horizon(Index t_max, Index minimum) {
  if (t_max < minimum || t_max % 2 == 0) {
    throw std::invalid_argument("horizon must be an odd integer >= " +
                                std::to_string(minimum) + ", got " +
                                std::to_string(t_max));
  }
}

std::vector<double> sample(const PhiFunction& phi, Index t_max) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>((t_max + 1) / 2));
  for (Index t = 1; t <= t_max; t += 2) values.push_back(phi(t));
  return values;
}

// Running c_dec / c_inc over t = 1, 3, ..., stopping at t_max.
struct RunningConstants {
  double c_dec = 1.0;
  double c_inc = 1.0;
};

RunningConstants running_constants(const std::vector<double>& phi, double p,
                                   std::size_t count) {
  RunningConstants out;
  double phi_min = std::numeric_limits<double>::infinity();
  double psi_max = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(2 * i + 1);
    const double psi = std::pow(t, 1.0 / p) * phi[i];
    phi_min = std::min(phi_min, phi[i]);
    psi_max = std::max(psi_max, psi);
    out.c_dec = std::max(out.c_dec, phi[i] / phi_min);
    out.c_inc = std::max(out.c_inc, psi_max / psi);
  }
  return out;
}

}  // namespace

PhiFunction PhiFunction::power(double q) {
  if (!(q >= 1.0) || !std::isfinite(q)) {
    throw std::invalid_argument("power phi needs 1 <= q < inf");
  }
  return PhiFunction(
      PhiKind::kPower, Monotonicity::kExact, "power:" + format_number(q),
      [q](Index t) { return std::pow(static_cast<double>(t), -1.0 / q); },
      std::nullopt);
}

PhiFunction PhiFunction::log_perturbed(double q, double beta) {
  if (!(q >= 1.0) || !std::isfinite(q) || !std::isfinite(beta)) {
    throw std::invalid_argument("logpert phi needs 1 <= q < inf, finite beta");
  }
  return PhiFunction(
      PhiKind::kLogPerturbed, Monotonicity::kAlmost,
      "logpert:" + format_number(q) + ":" + format_number(beta),
      [q, beta](Index t) {
        const double td = static_cast<double>(t);
        return std::pow(td, -1.0 / q) * std::pow(1.0 + std::log(td), beta);
      },
      std::nullopt);
}

PhiFunction PhiFunction::tabulated(std::vector<double> values) {
  if (values.empty()) {
    throw std::invalid_argument("tabulated phi needs at least one value");
  }
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("tabulated phi values must be positive");
    }
  }
  const auto horizon = static_cast<Index>(2 * values.size() - 1);
  auto table = std::make_shared<const std::vector<double>>(std::move(values));
  return PhiFunction(
      PhiKind::kTabulated, Monotonicity::kAlmost,
      "tabulated:" + std::to_string(horizon),
      [table](Index t) { return (*table)[static_cast<std::size_t>(t / 2)]; },
      horizon);
}

PhiFunction PhiFunction::custom(std::string name, Evaluator eval,
                                Monotonicity mode,
                                std::optional<Index> horizon) {
  return PhiFunction(PhiKind::kCustom, mode, std::move(name), std::move(eval),
                     horizon);
}

PhiFunction PhiFunction::constant(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw std::invalid_argument("constant phi must be positive");
  }
  return custom(
      "constant:" + format_number(c), [c](Index) { return c; },
      Monotonicity::kExact);
}

double PhiFunction::operator()(Index t) const {
  if (t < 1 || t % 2 == 0) {
    throw std::invalid_argument("phi is only defined on odd t >= 1, got " +
                                std::to_string(t));
  }
  if (horizon_ && t > *horizon_) {
    throw HorizonError("phi " + name_ + " evaluated at t=" + std::to_string(t) +
                       " beyond its horizon " + std::to_string(*horizon_));
  }
  const double v = eval_(t);
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::domain_error("phi " + name_ + " is not positive at t=" +
                            std::to_string(t));
  }
  return v;
}

Index half_horizon(Index t_max) {
  Index half = t_max / 2;
  if (half % 2 == 0) --half;
  return std::max<Index>(half, 1);
}

GpReport check_gp(const PhiFunction& phi, double p, Index t_max) {
  require_valid_p(p);
  require_odd_horizon(t_max, 3);
  const std::vector<double> values = sample(phi, t_max);

  GpReport report;
  report.p = p;
  report.horizon = t_max;
  const auto half_count = static_cast<std::size_t>((half_horizon(t_max) + 1) / 2);
  const RunningConstants half = running_constants(values, p, half_count);
  const RunningConstants full = running_constants(values, p, values.size());
  report.c_dec_half = half.c_dec;
  report.c_inc_half = half.c_inc;
  report.c_dec = full.c_dec;
  report.c_inc = full.c_inc;
  report.c_doubling = doubling_constant(phi, t_max);

  const bool finite = std::isfinite(report.c_dec) && std::isfinite(report.c_inc);
  const bool settled =
      report.c_dec <= report.c_dec_half * (1.0 + kGrowthTolerance) &&
      report.c_inc <= report.c_inc_half * (1.0 + kGrowthTolerance);
  report.member = finite && settled;
  return report;
}

double doubling_constant(const PhiFunction& phi, Index t_max) {
  require_odd_horizon(t_max, 1);
  const std::vector<double> values = sample(phi, t_max);
  // For each t, partners t' <= t with 2t' >= t form a window whose ends
  // only move right; monotone deques give its min and max in O(1).
  std::deque<std::size_t> lows;
  std::deque<std::size_t> highs;
  std::size_t left = 0;
  double worst = 1.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    while (!lows.empty() && values[lows.back()] >= values[i]) lows.pop_back();
    lows.push_back(i);
    while (!highs.empty() && values[highs.back()] <= values[i]) highs.pop_back();
    highs.push_back(i);
    const std::size_t t = 2 * i + 1;
    while (2 * (2 * left + 1) < t) ++left;
    while (lows.front() < left) lows.pop_front();
    while (highs.front() < left) highs.pop_front();
    worst = std::max({worst, values[i] / values[lows.front()],
                      values[highs.front()] / values[i]});
  }
  return worst;
}

double phi_ratio_sup(const PhiFunction& phi1, const PhiFunction& phi2,
                     Index t_max) {
  require_odd_horizon(t_max, 1);
  double sup = 0.0;
  for (Index t = 1; t <= t_max; t += 2) {
    sup = std::max(sup, phi2(t) / phi1(t));
  }
  return sup;
}

}  // namespace morrey
