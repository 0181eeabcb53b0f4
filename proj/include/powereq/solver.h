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

// Brute-force solving of equation systems over a finite structure.
//
// Every operation enumerates all k^n assignments. At the sizes this library
// targets (k <= 10, n <= 3) that is exact and fast, and it is the reference
// the power-level code is checked against.

#ifndef POWEREQ_SOLVER_H_
#define POWEREQ_SOLVER_H_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "powereq/algebraic_set.h"
#include "powereq/equation.h"
#include "powereq/structure.h"

namespace powereq {

// Throws std::invalid_argument if an equation names an unknown relation, has
// the wrong number of arguments, or uses an out-of-range variable or
// constant.
void CheckWellFormed(const FiniteStructure& structure, const Equation& eq,
                     std::size_t variable_count);
void CheckWellFormed(const FiniteStructure& structure,
                     const EquationSystem& system);

// Truth of `eq` under `assignment` (indexed by variable). Throws
// std::out_of_range when a variable of `eq` is unbound, i.e. its index is
// past the end of `assignment` or mapped to a negative value.
bool Evaluate(const FiniteStructure& structure, const Equation& eq,
              std::span<const int> assignment);

AlgebraicSet SolveEquation(const FiniteStructure& structure, const Equation& eq,
                           std::size_t variable_count);

// Intersection of the per-equation solution sets; the full space for an
// empty system.
AlgebraicSet Solve(const FiniteStructure& structure, const EquationSystem& system);

// Throws std::invalid_argument when the variable lists differ.
bool Equivalent(const FiniteStructure& structure, const EquationSystem& s1,
                const EquationSystem& s2);

// Two equations share a class iff they have the same shape and the same
// solution set.
struct ClassId {
  AtomShape shape;
  AlgebraicSet solutions;

  friend auto operator<=>(const ClassId&, const ClassId&) = default;
  friend bool operator==(const ClassId&, const ClassId&) = default;
};

ClassId ClassOf(const FiniteStructure& structure, const Equation& eq,
                std::size_t variable_count);

// Memoizes solution sets of single equations. Holds a reference to the
// structure, which must outlive it.
class Classifier {
 public:
  Classifier(const FiniteStructure& structure, std::size_t variable_count)
      : structure_(structure), variable_count_(variable_count) {}

  const AlgebraicSet& Solutions(const Equation& eq);
  ClassId ClassOf(const Equation& eq) { return {ShapeOf(eq), Solutions(eq)}; }
  AlgebraicSet Solve(std::span<const Equation> equations);

  const FiniteStructure& structure() const { return structure_; }
  std::size_t variable_count() const { return variable_count_; }

 private:
  const FiniteStructure& structure_;
  std::size_t variable_count_;
  std::map<Equation, AlgebraicSet> cache_;
};

// Deletion-based minimization: indices (into system.equations, ascending)
// of an inconsistent sublist all of whose proper sublists are consistent.
// nullopt when the system is consistent.
std::optional<std::vector<std::size_t>> MinimalInconsistentCore(
    const FiniteStructure& structure, const EquationSystem& system);

std::optional<EquationSystem> MinimalInconsistentSubset(
    const FiniteStructure& structure, const EquationSystem& system);

}  // namespace powereq

#endif  // POWEREQ_SOLVER_H_
