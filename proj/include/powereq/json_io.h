// Copyright 2026 The Authors.
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

// JSON file formats and text rendering.
//
// Structure:
//   {"kind": "graph", "universe": ["a","b"],
//    "relations": {"E": {"arity": 2, "tuples": [["a","b"],["b","a"]]}}}
// Base system:
//   {"variables": ["x","y"],
//    "equations": [{"rel": "E", "args": [{"var":"x"}, {"const":"a"}]},
//                  {"eq": [{"var":"x"}, {"var":"y"}]}]}
// Power system: as a base system, but constants are
//   {"prefix": ["b","c"], "cycle": ["a"]}   ({"const":"a"} means [a,a,...])
// and an entry may be a staircase family:
//   {"family": {"rel": "E", "args": [{"var":"x"},
//       {"staircase": {"generator": ["b","c"],
//                      "tail": {"prefix": [], "cycle": ["a"]}}}]}}
// Unknown keys are rejected. Elements are always referred to by label.

#ifndef POWEREQ_JSON_IO_H_
#define POWEREQ_JSON_IO_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "powereq/algebraic_set.h"
#include "powereq/noetherian.h"
#include "powereq/power.h"
#include "powereq/signatures.h"
#include "powereq/solver.h"
#include "powereq/structure.h"
#include "powereq/wrap.h"

namespace powereq {

using Json = nlohmann::json;

// Malformed or inconsistent input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses text; syntax errors become InputError with line and column.
Json ParseJson(std::string_view text);
Json ReadJsonFile(const std::string& path);

struct StructureFile {
  StructureKind kind = StructureKind::kGeneric;
  FiniteStructure structure;
};

StructureFile StructureFromJson(const Json& j);
Json ToJson(const StructureFile& file);

EquationSystem SystemFromJson(const Json& j, const FiniteStructure& structure);
Json ToJson(const EquationSystem& system, const FiniteStructure& structure);

PowerSystem PowerSystemFromJson(const Json& j, const FiniteStructure& structure);
Json ToJson(const PowerSystem& system, const FiniteStructure& structure);

PowerElement PowerElementFromJson(const Json& j, const FiniteStructure& structure);
Json ToJson(const PowerElement& element, const FiniteStructure& structure);

Json ToJson(const ValidationReport& report, const FiniteStructure& structure);
Json ToJson(const AlgebraicSet& set, const std::vector<std::string>& variables,
            const FiniteStructure& structure);
Json ToJson(const ConsistencyVerdict& verdict, const PowerSystem& system,
            const FiniteStructure& structure);

Json ToJson(const NoetherianVerdict& verdict, const FiniteStructure& structure,
            const std::optional<WitnessPackage>& witness = std::nullopt);
NoetherianVerdict VerdictFromJson(const Json& j, const FiniteStructure& structure);

Json ToJson(const WitnessPackage& package, const FiniteStructure& structure);
Json ToJson(const WrapResult& result, const FiniteStructure& structure);

// Human-readable forms: "E(x,a)", "x = y", "E(x,[b,c,a,a,...])".
std::string FormatElement(const PowerElement& element, const FiniteStructure& structure);
std::string FormatEquation(const Equation& eq, const std::vector<std::string>& variables,
                           const FiniteStructure& structure);
std::string FormatEquation(const PowerEquation& eq, const std::vector<std::string>& variables,
                           const FiniteStructure& structure);

}  // namespace powereq

#endif  // POWEREQ_JSON_IO_H_
