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

// Axiom checks for graphs, posets and matroids, plus the graph utilities the
// Noetherian criteria need.
//
// Graphs use {E/2} with both orientations of every edge stored. Posets use
// {<=/2}. Matroids use {P1/1, ..., Pm/m} where Pn holds on every ordering of
// an independent n-set; predicates above the cap m are taken to be empty,
// which describes the rank-m truncation and is again a matroid.

#ifndef POWEREQ_SIGNATURES_H_
#define POWEREQ_SIGNATURES_H_

#include <array>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "powereq/structure.h"

namespace powereq {

struct Violation {
  std::string axiom;
  Tuple witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  StructureKind kind = StructureKind::kGeneric;
  bool passed = true;
  std::vector<Violation> violations;

  friend bool operator==(const ValidationReport&,
                         const ValidationReport&) = default;
};

// Axiom names reported in violations.
inline constexpr char kNoLoops[] = "no loops";
inline constexpr char kSymmetry[] = "symmetry";
inline constexpr char kReflexivity[] = "reflexivity";
inline constexpr char kAntisymmetry[] = "antisymmetry";
inline constexpr char kTransitivity[] = "transitivity";
inline constexpr char kDistinctArguments[] = "distinct arguments";
inline constexpr char kHereditary[] = "hereditary";
inline constexpr char kExchange[] = "exchange";

// Checks every axiom of `kind` over the whole universe and returns all
// violations, each with a concrete witness tuple:
//   no loops (x), symmetry (x,y), reflexivity (x), antisymmetry (x,y),
//   transitivity (x,y,z), distinct arguments (x1..xn),
//   hereditary (x1..xn), exchange (x1..xn, y1..yn+1).
// Throws std::invalid_argument when the signature is not the canonical one
// for `kind`. Generic structures always pass.
ValidationReport Validate(const FiniteStructure& structure, StructureKind kind);

// True iff the witness of `violation` really breaks the named axiom.
bool ViolationHolds(const FiniteStructure& structure, const Violation& violation);

// Throws std::invalid_argument unless Validate passes.
void RequireValid(const FiniteStructure& structure, StructureKind kind);

// Lexicographically least (x1,x2,x3) with E(x1,x2), E(x2,x3), E(x3,x1).
std::optional<std::array<int, 3>> HasTriangle(const FiniteStructure& graph);

inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

// All-pairs shortest path lengths by breadth-first search;
// kInfiniteDistance across components.
std::vector<std::vector<int>> GraphDistances(const FiniteStructure& graph);

// Vertices x0..x(n+1); edges x0-xi and xi-x(n+1) for 1 <= i <= n, i.e. the
// complete bipartite graph K_{2,n}.
FiniteStructure StarBipartiteGraph(int n);

// Same universe, E(a,b) iff P2(a,b).
FiniteStructure MatroidUnderlyingGraph(const FiniteStructure& matroid);

// Builders. Edges are stored in both orientations.
FiniteStructure MakeGraph(std::vector<std::string> universe,
                          std::span<const std::pair<int, int>> edges);
// `strict` lists pairs a < b; reflexive pairs are added, nothing else is
// closed, so pass a transitive relation.
FiniteStructure MakePoset(std::vector<std::string> universe,
                          std::span<const std::pair<int, int>> strict);
// Independent sets (nonempty) of a matroid; the arity cap is |universe|.
FiniteStructure MakeMatroid(std::vector<std::string> universe,
                            const std::vector<std::set<int>>& independent);

// Disjoint union of two graphs; labels of `b` get `suffix` appended.
FiniteStructure DisjointUnion(const FiniteStructure& a, const FiniteStructure& b,
                              const std::string& suffix = "'");

}  // namespace powereq

#endif  // POWEREQ_SIGNATURES_H_
