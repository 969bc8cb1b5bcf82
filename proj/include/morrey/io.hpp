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

#ifndef MORREY_IO_HPP_
#define MORREY_IO_HPP_

#include <string>

#include <json.hpp>

#include "morrey/inclusion.hpp"
#include "morrey/norms.hpp"
#include "morrey/phi.hpp"
#include "morrey/sequence.hpp"

namespace morrey {

// Malformed input file or document.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// power_decay truncations beyond this are refused.
inline constexpr Index kMaxHalfLength = 10'000'000;

// Sequence documents:
//   {"kind":"explicit","offset":int,"values":[real,...]}
//   {"kind":"power_decay","exponent":real,"half_length":int}
//   {"kind":"indicator","m0":int,"N0":int}
Sequence parse_sequence_json(const nlohmann::json& doc);
Sequence load_sequence_file(const std::string& path);

// {"kind":"tabulated","values":[{"t":1,"phi":1.0},{"t":3,"phi":...},...]}
// with t = 1, 3, 5, ... consecutive.
PhiFunction parse_phi_json(const nlohmann::json& doc);
PhiFunction load_phi_file(const std::string& path);

// "power:Q", "logpert:Q:B" or "file:PATH".
PhiFunction parse_phi_spec(const std::string& spec);

nlohmann::json to_json(const NormReport& report);
nlohmann::json to_json(const GpReport& report);
nlohmann::json to_json(const InequalityCheck& check);
nlohmann::json to_json(const CharacteristicBounds& bounds);
nlohmann::json to_json(const EquivalenceVerdict& verdict);

}  // namespace morrey

#endif  // MORREY_IO_HPP_
