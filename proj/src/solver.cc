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

#include "powereq/solver.h"

#include <stdexcept>
#include <string>

namespace powereq {
namespace {

int Value(const Term<int>& term, std::span<const int> assignment) {
  if (const auto* v = std::get_if<Variable>(&term)) {
    if (v->index < 0 || static_cast<std::size_t>(v->index) >= assignment.size() ||
        assignment[v->index] < 0) {
      throw std::out_of_range("unbound variable #" + std::to_string(v->index));
    }
    return assignment[v->index];
  }
  return std::get<int>(term);
}

// Odometer over A^n in cell order.
template <typename F>
void ForEachPoint(int k, std::size_t n, F&& visit) {
  std::vector<int> point(n, 0);
  std::size_t cell = 0;
  while (true) {
    visit(cell, std::span<const int>(point));
    ++cell;
    std::size_t i = n;
    while (i > 0) {
      if (++point[i - 1] < k) break;
      point[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
  }
}

}  // namespace

void CheckWellFormed(const FiniteStructure& structure, const Equation& eq,
                     std::size_t variable_count) {
  if (eq.is_equality()) {
    if (eq.args.size() != 2) throw std::invalid_argument("equality needs 2 arguments");
  } else {
    if (eq.relation < 0 || eq.relation >= structure.signature().size()) {
      throw std::invalid_argument("unknown relation id " + std::to_string(eq.relation));
    }
    const Symbol& symbol = structure.signature().symbol(eq.relation);
    if (static_cast<int>(eq.args.size()) != symbol.arity) {
      throw std::invalid_argument(symbol.name + " expects " +
                                  std::to_string(symbol.arity) + " arguments, got " +
                                  std::to_string(eq.args.size()));
    }
  }
  for (const auto& term : eq.args) {
    if (const auto* v = std::get_if<Variable>(&term)) {
      if (v->index < 0 || static_cast<std::size_t>(v->index) >= variable_count) {
        throw std::invalid_argument("variable index out of range");
      }
    } else {
      const int c = std::get<int>(term);
      if (c < 0 || c >= structure.size()) {
        throw std::invalid_argument("constant out of range");
      }
    }
  }
}

void CheckWellFormed(const FiniteStructure& structure, const EquationSystem& system) {
  for (const Equation& eq : system.equations) {
    CheckWellFormed(structure, eq, system.variables.size());
  }
}

bool Evaluate(const FiniteStructure& structure, const Equation& eq,
              std::span<const int> assignment) {
  if (eq.is_equality()) {
    return Value(eq.args[0], assignment) == Value(eq.args[1], assignment);
  }
  int buffer[16];
  std::vector<int> heap;
  int* values = buffer;
  if (eq.args.size() > std::size(buffer)) {
    heap.resize(eq.args.size());
    values = heap.data();
  }
  for (std::size_t i = 0; i < eq.args.size(); ++i) {
    values[i] = Value(eq.args[i], assignment);
  }
  return structure.Holds(eq.relation, std::span<const int>(values, eq.args.size()));
}

AlgebraicSet SolveEquation(const FiniteStructure& structure, const Equation& eq,
                           std::size_t variable_count) {
  AlgebraicSet out(structure.size(), static_cast<int>(variable_count));
  ForEachPoint(structure.size(), variable_count,
               [&](std::size_t cell, std::span<const int> point) {
                 if (Evaluate(structure, eq, point)) out.Insert(cell);
               });
  return out;
}

AlgebraicSet Solve(const FiniteStructure& structure, const EquationSystem& system) {
  CheckWellFormed(structure, system);
  const std::size_t n = system.variables.size();
  AlgebraicSet out(structure.size(), static_cast<int>(n), /*full=*/true);
  for (const Equation& eq : system.equations) {
    out &= SolveEquation(structure, eq, n);
    if (out.empty()) break;
  }
  return out;
}

bool Equivalent(const FiniteStructure& structure, const EquationSystem& s1,
                const EquationSystem& s2) {
  if (s1.variables != s2.variables) {
    throw std::invalid_argument("equivalence needs identical variable lists");
  }
  return Solve(structure, s1) == Solve(structure, s2);
}

ClassId ClassOf(const FiniteStructure& structure, const Equation& eq,
                std::size_t variable_count) {
  CheckWellFormed(structure, eq, variable_count);
  return {ShapeOf(eq), SolveEquation(structure, eq, variable_count)};
}

const AlgebraicSet& Classifier::Solutions(const Equation& eq) {
  auto it = cache_.find(eq);
  if (it == cache_.end()) {
    CheckWellFormed(structure_, eq, variable_count_);
    it = cache_.emplace(eq, SolveEquation(structure_, eq, variable_count_)).first;
  }
  return it->second;
}

AlgebraicSet Classifier::Solve(std::span<const Equation> equations) {
  AlgebraicSet out(structure_.size(), static_cast<int>(variable_count_), true);
  for (const Equation& eq : equations) {
    out &= Solutions(eq);
    if (out.empty()) break;
  }
  return out;
}

std::optional<std::vector<std::size_t>> MinimalInconsistentCore(
    const FiniteStructure& structure, const EquationSystem& system) {
  CheckWellFormed(structure, system);
  Classifier classifier(structure, system.variables.size());
  auto inconsistent = [&](const std::vector<std::size_t>& indices) {
    std::vector<Equation> eqs;
    eqs.reserve(indices.size());
    for (std::size_t i : indices) eqs.push_back(system.equations[i]);
    return classifier.Solve(eqs).empty();
  };

  std::vector<std::size_t> core(system.equations.size());
  for (std::size_t i = 0; i < core.size(); ++i) core[i] = i;
  if (!inconsistent(core)) return std::nullopt;

  // Inconsistency is monotone under adding equations, so one pass of
  // deletions leaves a minimal core.
  for (std::size_t pos = 0; pos < core.size();) {
    std::vector<std::size_t> trial = core;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
    if (inconsistent(trial)) {
      core = std::move(trial);
    } else {
      ++pos;
    }
  }
  return core;
}

std::optional<EquationSystem> MinimalInconsistentSubset(
    const FiniteStructure& structure, const EquationSystem& system) {
  auto core = MinimalInconsistentCore(structure, system);
  if (!core) return std::nullopt;
  EquationSystem out{system.variables, {}};
  for (std::size_t i : *core) out.equations.push_back(system.equations[i]);
  return out;
}

}  // namespace powereq
