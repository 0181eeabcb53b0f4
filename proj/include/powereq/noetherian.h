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

// Deciding whether the direct power of a finite graph, poset or matroid is
// equationally Noetherian, with counterexample families that certify the
// negative answers.
//
// Graphs: Noetherian iff the quasi-identity
//   E(x1,x2) & E(x2,x3) & E(x3,x4) -> E(x4,x1)
// holds for all x1..x4 (repeats allowed).
// Posets: any strict pair a < b is an obstruction; no converse is known, so
// trivial posets get NO_OBSTRUCTION_FOUND rather than NOETHERIAN.
// Matroids: Noetherian iff no independent triple exists and the graph of
// independent pairs satisfies the graph quasi-identity.

#ifndef POWEREQ_NOETHERIAN_H_
#define POWEREQ_NOETHERIAN_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powereq/power.h"
#include "powereq/structure.h"

namespace powereq {

// Lexicographically least (x1,x2,x3,x4) violating the quasi-identity, or
// nullopt when it holds.
std::optional<std::array<int, 4>> GraphQuasiIdentity(const FiniteStructure& graph);

// Triangle-free and every finite distance <= 3. Diagnostic only: P4 and C5
// pass this check yet fail the quasi-identity.
bool GraphStructuralCheck(const FiniteStructure& graph);

enum class NoetherianStatus { kNoetherian, kNotNoetherian, kNoObstructionFound };

std::string_view StatusName(NoetherianStatus status);
std::optional<NoetherianStatus> ParseStatus(std::string_view name);

struct Certificate {
  enum class Kind { kTranscript, kQuadruple, kTriple, kPair };
  Kind kind = Kind::kTranscript;
  std::vector<int> elements;
  std::string transcript;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct NoetherianVerdict {
  StructureKind kind = StructureKind::kGeneric;
  NoetherianStatus status = NoetherianStatus::kNoObstructionFound;
  Certificate certificate;

  friend bool operator==(const NoetherianVerdict&, const NoetherianVerdict&) = default;
};

NoetherianVerdict GraphPowerNoetherian(const FiniteStructure& graph);
NoetherianVerdict PosetPowerNoetherian(const FiniteStructure& poset);
NoetherianVerdict MatroidPowerNoetherian(const FiniteStructure& matroid);

// Validates the structure as `kind` and dispatches. Throws
// std::invalid_argument for generic structures or failed validation.
NoetherianVerdict PowerNoetherian(const FiniteStructure& structure, StructureKind kind);

// True iff a NOT_NOETHERIAN certificate really is an obstruction in
// `structure` (violating quadruple, independent triple, or strict pair).
bool CertificateHolds(const FiniteStructure& structure, StructureKind kind,
                      const Certificate& certificate);

// An infinite single-variable system with no equivalent finite subsystem,
// and for each n a point that solves its first n members but not member n+1.
//
//   graph quadruple (a1,a2,a3,a4): E(x, stair(gen [a4], tail a2)),
//       point(n) = [a3 x (n-1), a1, a1, ...]
//   poset pair (a,b):              x <= stair(gen [a], tail b),
//       point(n) = [a x (n-1), b, b, ...]
//   matroid triple (a,b,c):        P2(x, stair(gen [b], tail a)),
//       point(n) = [c x (n-1), b, b, ...]
struct WitnessPackage {
  StructureKind kind = StructureKind::kGeneric;
  StaircaseFamily family;
  int lead = 0;
  int rest = 0;

  PowerElement WitnessPoint(std::size_t n) const;
  // Members 1..n as explicit equations over the variable "x".
  PowerSystem Truncated(std::size_t n) const;
  // The whole family over the variable "x".
  PowerSystem FullSystem() const;
};

// Throws std::invalid_argument unless the certificate holds.
WitnessPackage BuildWitnessFamily(const FiniteStructure& structure,
                                  StructureKind kind, const Certificate& certificate);

struct WitnessCheck {
  bool satisfies_first_n = false;
  bool violates_next = false;
  // First coordinate where member n+1 fails at the witness point.
  std::optional<std::size_t> violated_coordinate;

  bool ok() const { return satisfies_first_n && violates_next; }
};

WitnessCheck CheckWitness(const FiniteStructure& structure,
                          const WitnessPackage& package, std::size_t n);

inline bool VerifyWitness(const FiniteStructure& structure,
                          const WitnessPackage& package, std::size_t n) {
  return CheckWitness(structure, package, n).ok();
}

}  // namespace powereq

#endif  // POWEREQ_NOETHERIAN_H_
