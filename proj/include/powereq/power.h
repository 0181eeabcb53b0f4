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

// Equations over the direct power A^N.
//
// Relations on the power hold iff they hold at every coordinate, so a system
// over the power is solved coordinate by coordinate: a point solves S iff its
// i-th coordinate solves the projection pi_i(S) for every i. All constants
// here are eventually periodic and infinite systems are given as staircase
// families, so the projections repeat after a computable horizon and every
// question below is decided by finitely many base-level checks.

#ifndef POWEREQ_POWER_H_
#define POWEREQ_POWER_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "powereq/equation.h"
#include "powereq/periodic.h"
#include "powereq/solver.h"
#include "powereq/structure.h"

namespace powereq {

// Member n >= 1 of a staircase has coordinates 0..n-2 drawn from the
// repeating generator and coordinates >= n-1 from the tail, restarted at its
// beginning. Member 1 is the tail itself.
struct Staircase {
  std::vector<int> generator;
  PowerElement tail;

  int ValueAt(std::size_t member, std::size_t coordinate) const;
  PowerElement Member(std::size_t n) const;

  friend auto operator<=>(const Staircase&, const Staircase&) = default;
  friend bool operator==(const Staircase&, const Staircase&) = default;
};

using PowerEquation = Atom<PowerElement>;

// An infinite list of power equations {member(n) | n >= 1}; every constant
// slot is a staircase and all slots share the member index.
using StaircaseFamily = Atom<Staircase>;

// Throws std::invalid_argument for n == 0.
PowerEquation StaircaseMember(const StaircaseFamily& family, std::size_t n);

Equation ProjectEquation(const PowerEquation& eq, std::size_t coordinate);

struct PowerSystem {
  std::vector<std::string> variables;
  std::vector<PowerEquation> equations;
  std::vector<StaircaseFamily> families;

  friend bool operator==(const PowerSystem&, const PowerSystem&) = default;
};

void CheckWellFormed(const FiniteStructure& structure, const PowerSystem& system);

// Where an equation of a power system comes from: an explicit equation, or
// member n of a family.
struct SourceRef {
  enum class Kind { kExplicit, kFamily };
  Kind kind = Kind::kExplicit;
  std::size_t index = 0;
  std::size_t member = 0;

  static SourceRef Explicit(std::size_t j) { return {Kind::kExplicit, j, 0}; }
  static SourceRef FamilyMember(std::size_t f, std::size_t n) {
    return {Kind::kFamily, f, n};
  }

  friend auto operator<=>(const SourceRef&, const SourceRef&) = default;
};

PowerEquation Materialize(const PowerSystem& system, const SourceRef& source);

// Coordinates >= stabilization repeat with the given period.
struct Horizon {
  std::size_t stabilization = 0;
  std::size_t period = 1;

  std::size_t end() const { return stabilization + period; }
  // The coordinate below end() that behaves like i.
  std::size_t Reduce(std::size_t i) const {
    return i < stabilization ? i : stabilization + (i - stabilization) % period;
  }

  friend bool operator==(const Horizon&, const Horizon&) = default;
};

Horizon Join(const Horizon& a, const Horizon& b);

// From the system's defining data: explicit constants contribute their
// prefix and cycle; a family whose tails stabilize at P with period Q has
// seen every tail value from coordinate P + Q - 1 on, and its generators are
// periodic from 0. The period is the lcm of every cycle and generator
// length.
Horizon SystemHorizon(const PowerSystem& system);
Horizon PointHorizon(std::span<const PowerElement> point);

struct ProjectedEquation {
  SourceRef source;
  Equation equation;
};

// Every distinct equation of pi_i(S), tagged with its first source. A family
// contributes members 1..i+1 (tail values) and member i+2, which stands for
// all later members since they agree at coordinate i.
std::vector<ProjectedEquation> ProjectSystem(const PowerSystem& system,
                                             std::size_t coordinate);

// pi_i(S) as a base system.
EquationSystem ProjectToBase(const PowerSystem& system, std::size_t coordinate);

// Classes of pi_i(S) for every coordinate up to the horizon.
struct CoordinateProfile {
  Horizon horizon;
  std::vector<std::set<ClassId>> classes;

  const std::set<ClassId>& At(std::size_t i) const {
    return classes[horizon.Reduce(i)];
  }
};

// Classes of pi_i(S), computed directly from the data at coordinate i.
std::set<ClassId> ProfileAt(Classifier& classifier, const PowerSystem& system,
                            std::size_t coordinate);

// Builds the profile and certifies the period by recomputing one extra
// period; throws std::logic_error if that comparison ever disagrees.
CoordinateProfile ComputeProfile(const FiniteStructure& structure,
                                 const PowerSystem& system);

// Whether the point (one power element per variable) solves the whole
// system. Checks every coordinate below the joint horizon of the system and
// the point, which is exact. Throws std::invalid_argument on arity mismatch.
bool Satisfies(const FiniteStructure& structure, const PowerSystem& system,
               std::span<const PowerElement> point);

struct InconsistencyCertificate {
  std::size_t coordinate = 0;
  std::vector<SourceRef> sources;
  std::vector<PowerEquation> equations;
  // pi_coordinate of `equations`: inconsistent, every proper subset consistent.
  std::vector<Equation> projected_core;
};

struct ConsistencyVerdict {
  bool consistent = true;
  std::optional<InconsistencyCertificate> certificate;
};

// S is consistent iff every projection is. Scans coordinates in order and
// reports a minimal inconsistent core of the first inconsistent projection,
// lifted back to its source equations.
ConsistencyVerdict CheckConsistency(const FiniteStructure& structure,
                                    const PowerSystem& system);

// Equivalence over the power: both systems are inconsistent, or every
// coordinate projection has the same solution set. Throws
// std::invalid_argument when the variable lists differ.
bool PowerEquivalent(const FiniteStructure& structure, const PowerSystem& s1,
                     const PowerSystem& s2);

}  // namespace powereq

#endif  // POWEREQ_POWER_H_
