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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances and runtime limits are fixed below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "morrey/families.hpp"
#include "morrey/inclusion.hpp"
#include "morrey/io.hpp"
#include "morrey/norms.hpp"
#include "morrey/oracle.hpp"
#include "morrey/phi.hpp"

namespace {

using namespace morrey;
using nlohmann::json;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

bool rel_close(double a, double b, double rel) {
  return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b));
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

constexpr std::uint64_t kFamilySeed = 0x5eed;

const std::vector<Exponents>& oracle_exponents() {
  static const std::vector<Exponents> grid{{1, 1}, {1, 2}, {2, 4}, {1.5, 3}};
  return grid;
}

// Criterion 1: indicator closed form.
Outcome indicator_closed_form() {
  Outcome out;
  for (Index m0 = -5; m0 <= 5; ++m0) {
    for (Index n0 = 0; n0 <= 10; ++n0) {
      const Sequence xi = make_characteristic(m0, n0);
      for (double p : {1.0, 2.0}) {
        for (double q : {2.0, 4.0}) {
          const double value = morrey_norm(xi, {p, q}).value;
          const double closed = std::pow(2.0 * n0 + 1, 1.0 / q);
          if (!rel_close(value, closed, 1e-12)) {
            out.fail("m0=" + std::to_string(m0) + " N0=" + std::to_string(n0) +
                     " value " + fmt(value) + " vs " + fmt(closed));
          }
        }
      }
    }
  }
  if (out.ok) out.detail = "484 cases within 1e-12";
  return out;
}

// Criterion 2: engine vs brute-force oracles.
Outcome oracle_equivalence() {
  Outcome out;
  double worst_strong = 0.0;
  double worst_gap = 0.0;
  for (const auto& m : random_family(500, kFamilySeed, 64)) {
    for (const auto& e : oracle_exponents()) {
      const double fast = morrey_norm(m.sequence, e).value;
      const double slow = oracle::oracle_morrey_norm(m.sequence, e);
      const double rel = std::fabs(fast - slow) / std::max(fast, slow);
      worst_strong = std::max(worst_strong, rel);
      if (rel > 1e-9) out.fail(m.descriptor + " strong " + fmt(fast) + " vs " + fmt(slow));

      const double weak = weak_morrey_norm(m.sequence, e).value;
      const double grid = oracle::oracle_weak_norm(m.sequence, e);
      const double gap = (weak - grid) / weak;
      worst_gap = std::max(worst_gap, gap);
      if (weak < grid) out.fail(m.descriptor + " weak below oracle");
      if (gap >= 1e-4) out.fail(m.descriptor + " weak gap " + fmt(gap));
    }
  }
  if (out.ok) {
    out.detail = "500 sequences x 4 exponent pairs; max strong rel diff " +
                 fmt(worst_strong) + ", max weak rel gap " + fmt(worst_gap);
  }
  return out;
}

// Criterion 3: bounded Morrey norm of |k|^(-1/q) with diverging l^p sums.
Outcome strict_inclusion_bound_check() {
  Outcome out;
  std::string summary;
  for (auto [p, q] : {std::pair{1.0, 2.0}, {2.0, 4.0}, {1.0, 4.0}}) {
    const double bound = strict_inclusion_bound(p, q);
    double previous_norm = 0.0;
    double previous_sum = 0.0;
    for (Index hl : {100, 1000, 10000, 100000}) {
      const auto ex = strict_inclusion_example(p, q, hl);
      const double v = ex.norm.value;
      if (v < previous_norm) out.fail("norm decreased at half-length " + std::to_string(hl));
      if (v > bound) out.fail("norm " + fmt(v) + " exceeds bound " + fmt(bound));
      if (p == 1.0 && q == 2.0 && previous_sum > 0.0 && ex.lp_sum / previous_sum <= 1.5) {
        out.fail("l^1 partial sum ratio " + fmt(ex.lp_sum / previous_sum));
      }
      if (ex.lp_sum <= previous_sum) out.fail("l^p partial sums stalled");
      previous_norm = v;
      previous_sum = ex.lp_sum;
    }
    summary += "(" + fmt(p) + "," + fmt(q) + "): " + fmt(previous_norm) + " <= " +
               fmt(bound) + "; ";
  }
  if (out.ok) out.detail = summary;
  return out;
}

// Criterion 4: weak norm of |k|^(-1/p) in wl^p_p against the bound 3.
Outcome weak_example_bound() {
  Outcome out;
  std::string summary;
  for (double p : {1.0, 2.0, 3.0}) {
    const WeakExample ex = weak_example_check(p, 10000);
    summary += "p=" + fmt(p) + ": " + fmt(ex.value) + "; ";
    if (!ex.ok) out.fail("p=" + fmt(p) + " value " + fmt(ex.value) + " is not < 3");
  }
  if (!out.ok) out.detail += " (" + summary + ")";
  else out.detail = summary;
  return out;
}

// Criterion 5: homogeneity, triangle, quasi-triangle, definiteness.
Outcome norm_axioms() {
  Outcome out;
  const auto family = random_family(400, kFamilySeed + 5, 64);
  const std::vector<Exponents> grid{{1, 2}, {2, 4}, {1, 1}};
  for (std::size_t i = 0; i + 1 < family.size(); i += 2) {
    const Sequence& x = family[i].sequence;
    const Sequence& y = family[i + 1].sequence;
    for (const auto& e : grid) {
      const double nx = morrey_norm(x, e).value;
      const double wx = weak_morrey_norm(x, e).value;
      for (double alpha : {-2.0, 0.5, 10.0}) {
        const Sequence ax = x.scaled(alpha);
        if (!rel_close(morrey_norm(ax, e).value, std::fabs(alpha) * nx, 1e-12) ||
            !rel_close(weak_morrey_norm(ax, e).value, std::fabs(alpha) * wx, 1e-12)) {
          out.fail("homogeneity " + family[i].descriptor);
        }
      }
      const double nxy = morrey_norm(x + y, e).value;
      if (nxy > nx + morrey_norm(y, e).value + 1e-9) {
        out.fail("triangle " + family[i].descriptor);
      }
      if (!quasi_triangle_check(x, y, e).ok) out.fail("quasi-triangle " + family[i].descriptor);
      if (!(nx > 0.0) || !(wx > 0.0)) out.fail("definiteness " + family[i].descriptor);
    }
  }
  for (const auto& e : grid) {
    if (morrey_norm(Sequence(), e).value != 0.0 ||
        weak_morrey_norm(Sequence(), e).value != 0.0 ||
        morrey_norm(Sequence(3, {0.0, 0.0}), e).value != 0.0) {
      out.fail("zero sequence");
    }
  }
  if (out.ok) out.detail = "200 pairs x 3 exponent pairs";
  return out;
}

// Criterion 6: inclusion chain with 1e-12 slack.
Outcome inclusion_chain() {
  Outcome out;
  for (const auto& m : random_family(200, kFamilySeed + 6, 64)) {
    const auto& x = m.sequence;
    const bool ok = check_p_monotone(x, 1, 2, 4).ok &&
                    check_lp_contraction(x, {2, 4}).ok &&
                    check_weak_p_monotone(x, 1, 2, 4).ok &&
                    check_weak_lp_contraction(x, {2, 4}).ok &&
                    check_strong_dominates_weak(x, {1, 4}).ok &&
                    check_strong_dominates_weak(x, {2, 4}).ok;
    if (!ok) out.fail(m.descriptor);
  }
  if (out.ok) out.detail = "200 sequences, p1=1 p2=2 q=4";
  return out;
}

// Criterion 7: two-sided bounds on indicator norms.
Outcome characteristic_bounds() {
  Outcome out;
  const std::vector<PhiFunction> phis{PhiFunction::power(2), PhiFunction::power(4),
                                      PhiFunction::log_perturbed(2, 1)};
  std::size_t cases = 0;
  for (const auto& phi : phis) {
    for (double p : {1.0, 2.0}) {
      if (!check_gp(phi, p, 201).member) {
        out.fail(phi.describe() + " not in G_p at p=" + fmt(p));
        continue;
      }
      for (Index n0 = 0; n0 <= 50; ++n0) {
        const auto b = characteristic_bounds_check(phi, p, 0, n0, 201);
        ++cases;
        if (!b.ok) out.fail(phi.describe() + " N0=" + std::to_string(n0));
        if (b.weak_value < 0.5 / phi(2 * n0 + 1)) {
          out.fail(phi.describe() + " weak N0=" + std::to_string(n0));
        }
      }
    }
  }
  if (out.ok) out.detail = std::to_string(cases) + " cases";
  return out;
}

// Criterion 8: both directions of the equivalence theorem.
Outcome equivalence_directions() {
  Outcome out;
  const FamilySpec family;
  const auto positive = equivalence_test(1, PhiFunction::power(3), 2,
                                         PhiFunction::power(3), family, 201);
  if (positive.ratio_constant != 1.0) out.fail("ratio constant " + fmt(positive.ratio_constant));
  if (positive.violations != 0) {
    out.fail(std::to_string(positive.violations) + " domination violations");
  }
  const auto negative = equivalence_test(1, PhiFunction::power(2), 1,
                                         PhiFunction::power(3), family, 201);
  if (negative.dominated) out.fail("power(3) reported as dominated by power(2)");
  double at32 = 0.0;
  for (const Witness& w : negative.witnesses) {
    if (w.descriptor == "indicator[0,32]") at32 = w.ratio;
    if (w.descriptor.rfind("indicator[0,", 0) == 0) {
      const Index n0 = std::stoll(w.descriptor.substr(12));
      const double expected = std::pow(2.0 * n0 + 1, 1.0 / 6.0);
      if (!rel_close(w.ratio, expected, 1e-12)) out.fail("witness " + w.descriptor);
    }
  }
  if (!(at32 > 2.0)) out.fail("indicator ratio at N0=32 is " + fmt(at32));
  if (out.ok) {
    out.detail = "positive: " + std::to_string(positive.family_size) +
                 " members, norm constant " + fmt(positive.norm_constant) +
                 "; negative: ratio at N0=32 " + fmt(at32);
  }
  return out;
}

// Criterion 9: reports identical for 1, 4 and 8 threads.
Outcome determinism() {
  Outcome out;
  const auto family = random_family(500, kFamilySeed, 64);
  std::vector<std::string> dumps;
  for (unsigned threads : {1u, 4u, 8u}) {
    NormOptions options;
    options.threads = threads;
    json all = json::array();
    for (const auto& m : family) {
      for (const auto& e : oracle_exponents()) {
        all.push_back(to_json(morrey_norm(m.sequence, e, options)));
        all.push_back(to_json(weak_morrey_norm(m.sequence, e, options)));
      }
    }
    // Long inputs make the worker pool split radii across threads.
    for (auto [p, q] : {std::pair{1.0, 2.0}, {2.0, 4.0}}) {
      const Sequence x = power_decay(1.0 / q, 2000);
      all.push_back(to_json(morrey_norm(x, {p, q}, options)));
      all.push_back(to_json(weak_morrey_norm(x, {p, q}, options)));
    }
    dumps.push_back(all.dump());
  }
  if (dumps[0] != dumps[1] || dumps[0] != dumps[2]) out.fail("JSON differs across threads");
  if (out.ok) out.detail = std::to_string(dumps[0].size()) + " bytes, identical at 1/4/8 threads";
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "indicator closed form", 1.0, indicator_closed_form},
      {2, "oracle equivalence", 30.0, oracle_equivalence},
      {3, "strict inclusion bound", 60.0, strict_inclusion_bound_check},
      {4, "weak example bound", 10.0, weak_example_bound},
      {5, "norm axioms", 10.0, norm_axioms},
      {6, "inclusion chain", 10.0, inclusion_chain},
      {7, "characteristic bounds", 10.0, characteristic_bounds},
      {8, "equivalence theorem", 30.0, equivalence_directions},
      {9, "determinism", 60.0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit_seconds) {
      outcome.fail("runtime " + fmt(seconds) + " s over limit " + fmt(c.limit_seconds) + " s");
    }
    if (!outcome.ok) ++failures;
    std::printf("%s criterion %d (%s) [%.3f s / %.0f s]: %s\n", outcome.ok ? "PASS" : "FAIL",
                c.id, c.name, seconds, c.limit_seconds, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
