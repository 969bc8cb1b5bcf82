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

// Command-line front end for the Morrey norm library.
//
//   morrey norm --input FILE --norm {lpq|wlpq|lp-phi|wlp-phi} --p P [--q Q]
//               [--phi SPEC] [--threads K] [--pretty]
//   morrey check inclusion --which KIND [parameters]
//   morrey check equivalence --p1 P --phi1 SPEC --p2 P --phi2 SPEC
//               [--horizon T]
//
// Exit codes: 0 success, 1 phi not in G_p, 2 invalid input, 3 failed check.

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "morrey/families.hpp"
#include "morrey/inclusion.hpp"
#include "morrey/io.hpp"
#include "morrey/norms.hpp"
#include "morrey/phi.hpp"
#include "morrey/sequence.hpp"

namespace {

using nlohmann::json;
using namespace morrey;

constexpr int kExitOk = 0;
constexpr int kExitMembership = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCheckFailed = 3;

struct CommonArgs {
  unsigned threads = 0;
  bool pretty = false;
};

struct NormArgs {
  std::string input;
  std::string norm;
  double p = 0.0;
  std::optional<double> q;
  std::string phi;
};

struct InclusionArgs {
  std::string which;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<double> p1;
  std::optional<double> p2;
  std::string phi;
  std::string input;
  Index m0 = 0;
  std::optional<Index> n0;
  Index horizon = kDefaultGpHorizon;
  std::vector<Index> half_lengths;
  std::size_t count = 200;
  std::uint64_t seed = 0x5eed;
};

struct EquivalenceArgs {
  double p1 = 0.0;
  double p2 = 0.0;
  std::string phi1;
  std::string phi2;
  Index horizon = kDefaultGpHorizon;
  std::string flavor = "strong";
  std::size_t count = 200;
  std::uint64_t seed = 0x5eed;
};

unsigned resolve_threads(unsigned flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("MORREY_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("MORREY_THREADS must be a positive integer");
  }
  return 1;
}

double need(const std::optional<double>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("missing ") + flag);
  return *v;
}

std::string render_scalar(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

// Two-column key/value table; nested objects are flattened with dotted keys.
void print_table(const json& doc, const std::string& prefix, std::ostream& out) {
  for (const auto& [key, value] : doc.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      print_table(value, name, out);
    } else if (value.is_array() && !value.empty() && value[0].is_object()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        print_table(value[i], name + "[" + std::to_string(i) + "]", out);
      }
    } else {
      out << std::left << std::setw(36) << name << ' ' << render_scalar(value)
          << '\n';
    }
  }
}

void emit(const json& doc, bool pretty) {
  if (pretty) {
    print_table(doc, "", std::cout);
  } else {
    std::cout << doc.dump() << '\n';
  }
}

int run_norm(const NormArgs& a, const CommonArgs& c) {
  NormOptions options;
  options.threads = resolve_threads(c.threads);
  const Sequence x = load_sequence_file(a.input);
  NormReport report;
  if (a.norm == "lpq" || a.norm == "wlpq") {
    const Exponents e(a.p, need(a.q, "--q"));
    report = a.norm == "lpq" ? morrey_norm(x, e, options)
                             : weak_morrey_norm(x, e, options);
  } else if (a.norm == "lp-phi" || a.norm == "wlp-phi") {
    if (a.phi.empty()) throw std::invalid_argument("missing --phi");
    const PhiFunction phi = parse_phi_spec(a.phi);
    report = a.norm == "lp-phi" ? gen_morrey_norm(x, a.p, phi, options)
                                : gen_weak_norm(x, a.p, phi, options);
  } else {
    throw std::invalid_argument("unknown norm '" + a.norm + "'");
  }
  emit(to_json(report), c.pretty);
  return kExitOk;
}

// Summary of one inequality over a family: failures plus the member with
// the largest lhs/rhs.
struct FamilyTally {
  std::size_t checked = 0;
  std::size_t failures = 0;
  double worst_ratio = 0.0;
  std::string worst;

  void add(const std::string& descriptor, double lhs, double rhs, bool ok) {
    ++checked;
    if (!ok) ++failures;
    const double ratio = rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? INFINITY : 0.0);
    if (worst.empty() || ratio > worst_ratio) {
      worst_ratio = ratio;
      worst = descriptor;
    }
  }

  json to_json(const char* name) const {
    return {{"inequality", name},
            {"checked", checked},
            {"failures", failures},
            {"max_lhs_over_rhs", worst_ratio},
            {"witness", worst}};
  }
};

std::vector<FamilyMember> inclusion_family(const InclusionArgs& a) {
  if (!a.input.empty()) return {{a.input, load_sequence_file(a.input)}};
  return random_family(a.count, a.seed);
}

int run_inclusion(const InclusionArgs& a, const CommonArgs& c) {
  NormOptions options;
  options.threads = resolve_threads(c.threads);
  json out;
  out["which"] = a.which;
  bool ok = true;

  auto tally_family = [&](const char* name, auto&& check) {
    FamilyTally tally;
    for (const auto& m : inclusion_family(a)) {
      const InequalityCheck r = check(m.sequence);
      tally.add(m.descriptor, r.lhs, r.rhs, r.ok);
    }
    ok = ok && tally.failures == 0;
    return tally.to_json(name);
  };

  if (a.which == "lp-subset") {
    const Exponents e(need(a.p, "--p"), need(a.q, "--q"));
    out["p"] = e.p();
    out["q"] = e.q();
    out["checks"] = json::array(
        {tally_family("|x|_{l^p_q} <= |x|_{l^p}",
                      [&](const Sequence& x) {
                        return check_lp_contraction(x, e, options);
                      }),
         tally_family("|x|_{wl^p_q} <= |x|_{wl^p_p}", [&](const Sequence& x) {
           return check_weak_lp_contraction(x, e, options);
         })});
  } else if (a.which == "p-mono" || a.which == "weak-mono") {
    const double p1 = need(a.p1, "--p1");
    const double p2 = need(a.p2, "--p2");
    const double q = need(a.q, "--q");
    (void)Exponents(p1, q);
    (void)Exponents(p2, q);
    out["p1"] = p1;
    out["p2"] = p2;
    out["q"] = q;
    const bool weak = a.which == "weak-mono";
    out["checks"] = json::array({tally_family(
        weak ? "|x|_{wl^p1_q} <= |x|_{wl^p2_q}" : "|x|_{l^p1_q} <= |x|_{l^p2_q}",
        [&](const Sequence& x) {
          return weak ? check_weak_p_monotone(x, p1, p2, q, options)
                      : check_p_monotone(x, p1, p2, q, options);
        })});
  } else if (a.which == "strong-weak") {
    const double p = need(a.p, "--p");
    json checks = json::array();
    if (a.phi.empty()) {
      const Exponents e(p, need(a.q, "--q"));
      out["q"] = e.q();
      checks.push_back(tally_family("|x|_{wl^p_q} <= |x|_{l^p_q}",
                                    [&](const Sequence& x) {
                                      return check_strong_dominates_weak(x, e, options);
                                    }));
    } else {
      const PhiFunction phi = parse_phi_spec(a.phi);
      out["phi"] = phi.describe();
      checks.push_back(tally_family(
          "|x|_{wl^p_phi} <= |x|_{l^p_phi}", [&](const Sequence& x) {
            return check_gen_strong_dominates_weak(x, p, phi, options);
          }));
    }
    out["p"] = p;
    out["checks"] = checks;
  } else if (a.which == "quasi-triangle") {
    const Exponents e(need(a.p, "--p"), need(a.q, "--q"));
    out["p"] = e.p();
    out["q"] = e.q();
    const auto family = random_family(2 * a.count, a.seed);
    FamilyTally tally;
    for (std::size_t i = 0; i + 1 < family.size(); i += 2) {
      const QuasiTriangle r =
          quasi_triangle_check(family[i].sequence, family[i + 1].sequence, e, options);
      tally.add(family[i].descriptor + "+" + family[i + 1].descriptor, r.lhs,
                r.rhs, r.ok);
    }
    ok = tally.failures == 0;
    out["checks"] =
        json::array({tally.to_json("|x+y|_{wl^p_q} <= 2(|x|_{wl^p_q} + |y|_{wl^p_q})")});
  } else if (a.which == "char-bounds") {
    const double p = need(a.p, "--p");
    if (a.phi.empty()) throw std::invalid_argument("missing --phi");
    const PhiFunction phi = parse_phi_spec(a.phi);
    out["p"] = p;
    out["phi"] = phi.describe();
    out["m0"] = a.m0;
    const Index first = a.n0 ? *a.n0 : 0;
    const Index last = a.n0 ? *a.n0 : (a.horizon - 1) / 4;
    if (first < 0) throw std::invalid_argument("--N0 must be nonnegative");
    json rows = json::array();
    for (Index n0 = first; n0 <= last; ++n0) {
      const CharacteristicBounds b =
          characteristic_bounds_check(phi, p, a.m0, n0, a.horizon);
      json row = to_json(b);
      row["N0"] = n0;
      rows.push_back(row);
      ok = ok && b.ok && b.weak_ok;
    }
    out["bounds"] = rows;
  } else if (a.which == "strict-example") {
    const double p = need(a.p, "--p");
    const double q = need(a.q, "--q");
    const std::vector<Index> lengths =
        a.half_lengths.empty() ? std::vector<Index>{100, 1000, 10000} : a.half_lengths;
    out["p"] = p;
    out["q"] = q;
    out["bound"] = strict_inclusion_bound(p, q);
    json rows = json::array();
    double previous = 0.0;
    for (Index hl : lengths) {
      if (hl > kMaxHalfLength) {
        throw std::invalid_argument("half_length exceeds the cap");
      }
      const auto ex = strict_inclusion_example(p, q, hl, options);
      const bool row_ok = ex.norm.value <= ex.morrey_bound * (1.0 + kInclusionSlack) &&
                          ex.norm.value >= previous * (1.0 - kInclusionSlack);
      previous = ex.norm.value;
      ok = ok && row_ok;
      json row = to_json(ex.norm);
      row["half_length"] = hl;
      row["lp_sum"] = ex.lp_sum;
      row["ok"] = row_ok;
      rows.push_back(row);
    }
    out["truncations"] = rows;
  } else if (a.which == "weak-example") {
    const double p = need(a.p, "--p");
    const Index hl = a.half_lengths.empty() ? 10000 : a.half_lengths.front();
    if (hl > kMaxHalfLength) throw std::invalid_argument("half_length exceeds the cap");
    const WeakExample ex = weak_example_check(p, hl, options);
    out["p"] = p;
    out["half_length"] = hl;
    out["norm"] = to_json(ex.norm);
    out["bound"] = 3.0;
    ok = ex.ok;
  } else {
    throw std::invalid_argument("unknown --which '" + a.which + "'");
  }
  out["ok"] = ok;
  emit(out, c.pretty);
  return ok ? kExitOk : kExitCheckFailed;
}

int run_equivalence(const EquivalenceArgs& a, const CommonArgs& c) {
  NormOptions options;
  options.threads = resolve_threads(c.threads);
  if (a.horizon < 3 || a.horizon % 2 == 0) {
    throw std::invalid_argument("--horizon must be odd and >= 3");
  }
  NormFlavor flavor;
  if (a.flavor == "strong") {
    flavor = NormFlavor::kStrong;
  } else if (a.flavor == "weak") {
    flavor = NormFlavor::kWeak;
  } else {
    throw std::invalid_argument("--flavor must be strong or weak");
  }
  FamilySpec family;
  family.random_count = a.count;
  family.seed = a.seed;
  const EquivalenceVerdict v =
      equivalence_test(a.p1, parse_phi_spec(a.phi1), a.p2, parse_phi_spec(a.phi2),
                       family, a.horizon, flavor, options);
  emit(to_json(v), c.pretty);
  const bool ok = v.dominated && v.violations == 0 && v.consistent;
  return ok ? kExitOk : kExitCheckFailed;
}

void report_error(const std::string& message) {
  std::cerr << json{{"error", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Morrey space norms and inclusion checks"};
  app.require_subcommand(1);
  // Global flags are accepted after the subcommand too.
  app.fallthrough();
  CommonArgs common;
  app.add_option("--threads", common.threads,
                 "worker threads (default: MORREY_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--pretty", common.pretty, "print a table instead of JSON");

  NormArgs norm;
  auto* norm_cmd = app.add_subcommand("norm", "compute a norm");
  norm_cmd->add_option("--input", norm.input, "sequence JSON file")->required();
  norm_cmd->add_option("--norm", norm.norm, "lpq | wlpq | lp-phi | wlp-phi")->required();
  norm_cmd->add_option("--p", norm.p, "exponent p >= 1")->required();
  norm_cmd->add_option("--q", norm.q, "exponent q >= p");
  norm_cmd->add_option("--phi", norm.phi, "power:Q | logpert:Q:B | file:PATH");

  auto* check_cmd = app.add_subcommand("check", "verify inclusions");
  check_cmd->require_subcommand(1);

  InclusionArgs inc;
  auto* inc_cmd = check_cmd->add_subcommand("inclusion", "inclusion inequalities");
  inc_cmd
      ->add_option("--which", inc.which,
                   "lp-subset | p-mono | weak-mono | strong-weak | char-bounds | "
                   "strict-example | weak-example | quasi-triangle")
      ->required();
  inc_cmd->add_option("--p", inc.p);
  inc_cmd->add_option("--q", inc.q);
  inc_cmd->add_option("--p1", inc.p1);
  inc_cmd->add_option("--p2", inc.p2);
  inc_cmd->add_option("--phi", inc.phi);
  inc_cmd->add_option("--input", inc.input, "check one sequence instead of the family");
  inc_cmd->add_option("--m0", inc.m0);
  inc_cmd->add_option("--N0", inc.n0, "single radius for char-bounds");
  inc_cmd->add_option("--horizon", inc.horizon, "G_p horizon for char-bounds");
  inc_cmd->add_option("--half-length", inc.half_lengths, "truncation half-lengths");
  inc_cmd->add_option("--count", inc.count, "random family size");
  inc_cmd->add_option("--seed", inc.seed, "random family seed");

  EquivalenceArgs eq;
  auto* eq_cmd = check_cmd->add_subcommand("equivalence", "domination vs norm bounds");
  eq_cmd->add_option("--p1", eq.p1)->required();
  eq_cmd->add_option("--phi1", eq.phi1)->required();
  eq_cmd->add_option("--p2", eq.p2)->required();
  eq_cmd->add_option("--phi2", eq.phi2)->required();
  eq_cmd->add_option("--horizon", eq.horizon);
  eq_cmd->add_option("--flavor", eq.flavor, "strong | weak");
  eq_cmd->add_option("--count", eq.count, "random family size");
  eq_cmd->add_option("--seed", eq.seed, "random family seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error(e.what());
    return kExitInvalid;
  }

  try {
    if (norm_cmd->parsed()) return run_norm(norm, common);
    if (inc_cmd->parsed()) return run_inclusion(inc, common);
    if (eq_cmd->parsed()) return run_equivalence(eq, common);
  } catch (const MembershipError& e) {
    report_error(e.what());
    return kExitMembership;
  } catch (const std::exception& e) {
    report_error(e.what());
    return kExitInvalid;
  }
  return kExitInvalid;
}
