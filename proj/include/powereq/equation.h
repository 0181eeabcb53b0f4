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

// Atomic formulas with variables and constants.
//
// One template serves every constant type: base equations carry universe
// indices, power equations carry eventually periodic sequences, and
// staircase families carry staircase descriptors. Variables are indices into
// the variable list of the enclosing system.

#ifndef POWEREQ_EQUATION_H_
#define POWEREQ_EQUATION_H_

#include <compare>
#include <string>
#include <variant>
#include <vector>

namespace powereq {

struct Variable {
  int index = 0;

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

template <typename Constant>
using Term = std::variant<Variable, Constant>;

// Relation id meaning "equality atom".
inline constexpr int kEquality = -1;

template <typename Constant>
struct Atom {
  int relation = kEquality;
  std::vector<Term<Constant>> args;

  bool is_equality() const { return relation == kEquality; }

  friend auto operator<=>(const Atom&, const Atom&) = default;
  friend bool operator==(const Atom&, const Atom&) = default;
};

template <typename Constant>
Atom<Constant> Relation(int relation, std::vector<Term<Constant>> args) {
  return {relation, std::move(args)};
}

template <typename Constant>
Atom<Constant> Equality(Term<Constant> lhs, Term<Constant> rhs) {
  return {kEquality, {std::move(lhs), std::move(rhs)}};
}

// Replaces every constant c by f(c).
template <typename Constant, typename F>
auto MapConstants(const Atom<Constant>& atom, F&& f)
    -> Atom<std::decay_t<decltype(f(std::declval<const Constant&>()))>> {
  using Out = std::decay_t<decltype(f(std::declval<const Constant&>()))>;
  Atom<Out> out{atom.relation, {}};
  out.args.reserve(atom.args.size());
  for (const auto& term : atom.args) {
    if (const auto* v = std::get_if<Variable>(&term)) {
      out.args.emplace_back(*v);
    } else {
      out.args.emplace_back(f(std::get<Constant>(term)));
    }
  }
  return out;
}

// Base equations: constants are universe element indices.
using Equation = Atom<int>;

inline constexpr int kConstantSlot = -1;

// The relation plus, per argument, the variable index or kConstantSlot.
struct AtomShape {
  int relation = kEquality;
  std::vector<int> slots;

  friend auto operator<=>(const AtomShape&, const AtomShape&) = default;
  friend bool operator==(const AtomShape&, const AtomShape&) = default;
};

template <typename Constant>
AtomShape ShapeOf(const Atom<Constant>& atom) {
  AtomShape shape{atom.relation, {}};
  for (const auto& term : atom.args) {
    const auto* v = std::get_if<Variable>(&term);
    shape.slots.push_back(v ? v->index : kConstantSlot);
  }
  return shape;
}

struct EquationSystem {
  std::vector<std::string> variables;
  std::vector<Equation> equations;

  friend bool operator==(const EquationSystem&, const EquationSystem&) = default;
};

}  // namespace powereq

#endif  // POWEREQ_EQUATION_H_
