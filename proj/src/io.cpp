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

#include "morrey/io.hpp"

#include <cmath>
#include <complex>
#include <fstream>

namespace morrey {

using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw FormatError(std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

Index integer_field(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_integer()) {
    throw FormatError(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<Index>();
}

double real_field(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number()) {
    throw FormatError(std::string("field \"") + key + "\" must be a number");
  }
  const double d = v.get<double>();
  if (!std::isfinite(d)) {
    throw FormatError(std::string("field \"") + key + "\" must be finite");
  }
  return d;
}

double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v)) {
    throw std::invalid_argument("bad " + what + " '" + text + "'");
  }
  return v;
}

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

const char* flavor_name(NormFlavor f) {
  return f == NormFlavor::kStrong ? "strong" : "weak";
}

}  // namespace

Sequence parse_sequence_json(const json& doc) {
  const json& kind = field(doc, "kind");
  if (!kind.is_string()) throw FormatError("field \"kind\" must be a string");
  const std::string k = kind.get<std::string>();

  if (k == "explicit") {
    const Index offset = integer_field(doc, "offset");
    const json& values = field(doc, "values");
    if (!values.is_array()) throw FormatError("\"values\" must be an array");
    // Entries are reals or [re, im] pairs; the latter are reduced to moduli.
    bool complex_input = false;
    for (const json& v : values) complex_input |= v.is_array();
    if (!complex_input) {
      std::vector<double> reals;
      reals.reserve(values.size());
      for (const json& v : values) {
        if (!v.is_number()) throw FormatError("explicit values must be numbers");
        reals.push_back(v.get<double>());
      }
      return Sequence(offset, std::move(reals));
    }
    std::vector<std::complex<double>> zs;
    zs.reserve(values.size());
    for (const json& v : values) {
      if (v.is_number()) {
        zs.emplace_back(v.get<double>(), 0.0);
      } else if (v.is_array() && v.size() == 2 && v[0].is_number() &&
                 v[1].is_number()) {
        zs.emplace_back(v[0].get<double>(), v[1].get<double>());
      } else {
        throw FormatError("complex values must be [re, im] pairs");
      }
    }
    return Sequence::from_complex(offset, zs);
  }
  if (k == "power_decay") {
    const double exponent = real_field(doc, "exponent");
    const Index half_length = integer_field(doc, "half_length");
    if (half_length > kMaxHalfLength) {
      throw FormatError("half_length exceeds " + std::to_string(kMaxHalfLength));
    }
    return power_decay(exponent, half_length);
  }
  if (k == "indicator") {
    return make_characteristic(integer_field(doc, "m0"),
                               integer_field(doc, "N0"));
  }
  throw FormatError("unknown sequence kind \"" + k + "\"");
}

Sequence load_sequence_file(const std::string& path) {
  return parse_sequence_json(read_json_file(path));
}

PhiFunction parse_phi_json(const json& doc) {
  const json& kind = field(doc, "kind");
  if (!kind.is_string() || kind.get<std::string>() != "tabulated") {
    throw FormatError("phi file kind must be \"tabulated\"");
  }
  const json& entries = field(doc, "values");
  if (!entries.is_array() || entries.empty()) {
    throw FormatError("phi table must be a nonempty array");
  }
  std::vector<double> values;
  values.reserve(entries.size());
  Index expected = 1;
  for (const json& e : entries) {
    const Index t = integer_field(e, "t");
    if (t % 2 == 0) {
      throw FormatError("phi table index t=" + std::to_string(t) + " is even");
    }
    if (t != expected) {
      throw FormatError("phi table must list t = 1, 3, 5, ... in order; got " +
                        std::to_string(t) + " where " +
                        std::to_string(expected) + " was expected");
    }
    const double v = real_field(e, "phi");
    if (!(v > 0.0)) throw FormatError("phi values must be positive");
    values.push_back(v);
    expected += 2;
  }
  return PhiFunction::tabulated(std::move(values));
}

PhiFunction load_phi_file(const std::string& path) {
  return parse_phi_json(read_json_file(path));
}

PhiFunction parse_phi_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("bad phi spec '" + spec + "'");
  }
  const std::string head = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (head == "file") return load_phi_file(rest);
  if (head == "power") return PhiFunction::power(parse_real(rest, "power exponent"));
  if (head == "logpert") {
    const auto c2 = rest.find(':');
    if (c2 == std::string::npos) {
      throw std::invalid_argument("logpert spec needs logpert:Q:B");
    }
    return PhiFunction::log_perturbed(
        parse_real(rest.substr(0, c2), "logpert exponent"),
        parse_real(rest.substr(c2 + 1), "logpert beta"));
  }
  throw std::invalid_argument("unknown phi kind '" + head + "'");
}

json to_json(const NormReport& r) {
  json out;
  out["value"] = r.value;
  if (r.arg_window) {
    out["arg_window"] = {{"m", r.arg_window->center()},
                         {"N", r.arg_window->radius()}};
  } else {
    out["arg_window"] = nullptr;
  }
  out["arg_gamma"] = optional_number(r.arg_gamma);
  out["exact"] = r.exact;
  out["tail_bound_factor"] = optional_number(r.tail_bound_factor);
  return out;
}

json to_json(const GpReport& r) {
  return {{"p", r.p},
          {"horizon", r.horizon},
          {"c_dec", r.c_dec},
          {"c_inc", r.c_inc},
          {"c_doubling", r.c_doubling},
          {"c_dec_half", r.c_dec_half},
          {"c_inc_half", r.c_inc_half},
          {"member", r.member}};
}

json to_json(const InequalityCheck& c) {
  return {{"lhs", c.lhs}, {"rhs", c.rhs}, {"ok", c.ok}};
}

json to_json(const CharacteristicBounds& b) {
  return {{"lower", b.lower},       {"value", b.value},
          {"upper", b.upper},       {"ok", b.ok},
          {"weak_lower", b.weak_lower}, {"weak_value", b.weak_value},
          {"weak_ok", b.weak_ok},   {"constant", b.constant},
          {"horizon", b.horizon}};
}

json to_json(const EquivalenceVerdict& v) {
  json witnesses = json::array();
  for (const Witness& w : v.witnesses) {
    witnesses.push_back({{"descriptor", w.descriptor},
                         {"norm1", w.norm1},
                         {"norm2", w.norm2},
                         {"ratio", w.ratio}});
  }
  return {{"flavor", flavor_name(v.flavor)},
          {"p1", v.p1},
          {"p2", v.p2},
          {"phi1", v.phi1},
          {"phi2", v.phi2},
          {"horizon", v.horizon},
          {"ratio_constant", v.ratio_constant},
          {"ratio_constant_half", v.ratio_constant_half},
          {"dominated", v.dominated},
          {"norm_constant", v.norm_constant},
          {"norm_constant_witness", v.norm_constant_witness},
          {"margin", v.margin},
          {"family_size", v.family_size},
          {"family", v.family},
          {"violations", v.violations},
          {"witnesses", witnesses},
          {"consistent", v.consistent}};
}

}  // namespace morrey
