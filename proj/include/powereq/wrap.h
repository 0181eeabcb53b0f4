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

// Compressing an infinite system over a direct power of a finite structure
// into a finite equivalent one.
//
// The procedure:
//   1. M: one representative per solution set occurring among the
//      projections pi_l(S). A finite structure has at most 2^(k^n) such
//      sets, so M is finite.
//   2. S0: source equations of S whose projections cover M, chosen greedily
//      (most uncovered classes first). Each m in M records the pair
//      (coordinate i, source) with pi_i(source) = m.
//   3. For each m = pi_i(E) in M, with I0 the coordinates whose projection
//      contains m's class and I1 the rest: D_m is E with every constant
//      replaced by the sequence that is pi_i(constant) on I0 and equal to
//      the original constant on I1.
//   S' = S0 plus all D_m, deduplicated. Every pi_l(S') then has exactly the
//   solution sets of pi_l(S), hence S' ~ S over the power, and
//   |S'| <= 2|M| <= 2^(k^n + 1).

#ifndef POWEREQ_WRAP_H_
#define POWEREQ_WRAP_H_

#include <cstddef>
#include <vector>

#include "powereq/algebraic_set.h"
#include "powereq/periodic.h"
#include "powereq/power.h"
#include "powereq/solver.h"

namespace powereq {

struct SourcePair {
  std::size_t coordinate = 0;
  SourceRef source;

  friend auto operator<=>(const SourcePair&, const SourcePair&) = default;
};

struct MEntry {
  // Class of the representative; its solution set is the key of the entry.
  ClassId cls;
  Equation representative;
  SourcePair source;
};

struct WrapStep {
  std::size_t m_index = 0;
  IndexSet in_class;   // I0
  IndexSet outside;    // I1
  std::vector<PowerElement> constants;
  PowerEquation equation;
};

struct WrapTrace {
  Horizon horizon;
  std::vector<MEntry> m;
  std::vector<SourcePair> k;
  std::vector<SourceRef> s0_sources;
  std::vector<PowerEquation> s0;
  std::vector<WrapStep> steps;
};

struct CoordinateMismatch {
  std::size_t coordinate = 0;
  AlgebraicSet original;
  AlgebraicSet wrapped;
};

struct WrapVerification {
  bool passed = true;
  Horizon horizon;
  // Coordinates checked: [0, stabilization + 2 * period).
  std::size_t checked = 0;
  std::vector<CoordinateMismatch> mismatches;
};

struct WrapResult {
  PowerSystem s_prime;
  WrapTrace trace;
  WrapVerification verification;
  bool verified = false;
  bool bound_ok = false;
};

// Steps 1 and 2 above: M in discovery order (coordinate, then source order),
// each entry carrying its S0 source pair.
std::vector<MEntry> ComputeM(const FiniteStructure& structure, const PowerSystem& system);

// Distinct sources of `m`, in source order, with their equations.
std::vector<SourceRef> S0Sources(const std::vector<MEntry>& m);
std::vector<PowerEquation> BuildS0(const PowerSystem& system, const std::vector<MEntry>& m);

// Checks pi_i(original) ~ pi_i(wrapped) for every i below the joint horizon
// and one further period. By periodicity of all constants a pass is a proof
// of equivalence over the power.
WrapVerification VerifyWrap(const FiniteStructure& structure, const PowerSystem& original,
                            const PowerSystem& wrapped);

// |M| <= 2^(k^n), |S'| <= 2|M| and |S'| <= 2^(k^n + 1).
bool BoundCheck(const FiniteStructure& structure, const PowerSystem& system,
                const WrapResult& result);

WrapResult Wrap(const FiniteStructure& structure, const PowerSystem& system);

}  // namespace powereq

#endif  // POWEREQ_WRAP_H_
