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

#include "powereq/fixtures.h"

#include <utility>
#include <vector>

#include "powereq/signatures.h"

namespace powereq::fixtures {

namespace {
constexpr int a = 0, b = 1, c = 2;
}  // namespace

FiniteStructure K3() {
  const std::pair<int, int> edges[] = {{a, b}, {b, c}, {c, a}};
  return MakeGraph({"a", "b", "c"}, edges);
}

FiniteStructure P4() {
  const std::pair<int, int> edges[] = {{0, 1}, {1, 2}, {2, 3}};
  return MakeGraph({"u1", "u2", "u3", "u4"}, edges);
}

FiniteStructure C5() {
  const std::pair<int, int> edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  return MakeGraph({"v1", "v2", "v3", "v4", "v5"}, edges);
}

FiniteStructure Chain2() {
  const std::pair<int, int> strict[] = {{a, b}};
  return MakePoset({"a", "b"}, strict);
}

FiniteStructure FreeMatroid2() { return MakeMatroid({"a", "b"}, {{a}, {b}, {a, b}}); }

FiniteStructure FreeMatroid3() {
  return MakeMatroid({"a", "b", "c"},
                     {{a}, {b}, {c}, {a, b}, {a, c}, {b, c}, {a, b, c}});
}

FiniteStructure Rank1Matroid3() { return MakeMatroid({"a", "b", "c"}, {{a}, {b}, {c}}); }

PowerSystem WrapExampleSystem() {
  const Staircase stair{{b, c}, PowerElement::Constant(a)};
  return {{"x"}, {}, {Relation<Staircase>(0, {Variable{0}, stair})}};
}

PowerSystem WrapExampleExpected() {
  auto edge = [](PowerElement constant) {
    return Relation<PowerElement>(0, {Variable{0}, std::move(constant)});
  };
  return {{"x"},
          {edge(PowerElement({b, c}, {a})), edge(PowerElement::Constant(a)),
           edge(PowerElement({b, c}, {b, a})), edge(PowerElement({b}, {c, a}))},
          {}};
}

}  // namespace powereq::fixtures
