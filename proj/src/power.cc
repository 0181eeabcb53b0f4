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

#include "powereq/power.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace powereq {
namespace {

void CheckElement(const FiniteStructure& structure, const PowerElement& e) {
  auto in_range = [&](int v) { return v >= 0 && v < structure.size(); };
  if (!std::all_of(e.prefix().begin(), e.prefix().end(), in_range) ||
      !std::all_of(e.cycle().begin(), e.cycle().end(), in_range)) {
    throw std::invalid_argument("power constant has an out-of-range coordinate");
  }
}

// Base-level shape check on the first projection.
template <typename C>
void CheckShape(const FiniteStructure& structure, const Atom<C>& atom,
                std::size_t variable_count) {
  Atom<int> probe = MapConstants(atom, [](const C&) { return 0; });
  CheckWellFormed(structure, probe, variable_count);
}

}  // namespace

int Staircase::ValueAt(std::size_t member, std::size_t coordinate) const {
  if (coordinate + 1 < member) return generator[coordinate % generator.size()];
  return tail.At(coordinate - (member - 1));
}

PowerElement Staircase::Member(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("staircase members are numbered from 1");
  if (generator.empty()) throw std::invalid_argument("staircase generator is empty");
  std::vector<int> prefix;
  prefix.reserve(n - 1 + tail.prefix().size());
  for (std::size_t i = 0; i + 1 < n; ++i) prefix.push_back(generator[i % generator.size()]);
  prefix.insert(prefix.end(), tail.prefix().begin(), tail.prefix().end());
  return PowerElement(std::move(prefix), tail.cycle());
}

PowerEquation StaircaseMember(const StaircaseFamily& family, std::size_t n) {
  if (n == 0) throw std::invalid_argument("staircase members are numbered from 1");
  return MapConstants(family, [n](const Staircase& s) { return s.Member(n); });
}

Equation ProjectEquation(const PowerEquation& eq, std::size_t coordinate) {
  return MapConstants(eq, [coordinate](const PowerElement& c) { return c.At(coordinate); });
}

void CheckWellFormed(const FiniteStructure& structure, const PowerSystem& system) {
  const std::size_t n = system.variables.size();
  for (const PowerEquation& eq : system.equations) {
    CheckShape(structure, eq, n);
    for (const auto& term : eq.args) {
      if (const auto* c = std::get_if<PowerElement>(&term)) CheckElement(structure, *c);
    }
  }
  for (const StaircaseFamily& family : system.families) {
    CheckShape(structure, family, n);
    for (const auto& term : family.args) {
      if (const auto* s = std::get_if<Staircase>(&term)) {
        if (s->generator.empty()) throw std::invalid_argument("staircase generator is empty");
        CheckElement(structure, PowerElement({}, s->generator));
        CheckElement(structure, s->tail);
      }
    }
  }
}

PowerEquation Materialize(const PowerSystem& system, const SourceRef& source) {
  if (source.kind == SourceRef::Kind::kExplicit) return system.equations.at(source.index);
  return StaircaseMember(system.families.at(source.index), source.member);
}

Horizon Join(const Horizon& a, const Horizon& b) {
  return {std::max(a.stabilization, b.stabilization), std::lcm(a.period, b.period)};
}

Horizon SystemHorizon(const PowerSystem& system) {
  Horizon h;
  for (const PowerEquation& eq : system.equations) {
    for (const auto& term : eq.args) {
      if (const auto* c = std::get_if<PowerElement>(&term)) {
        h = Join(h, {c->stabilization(), c->period()});
      }
    }
  }
  for (const StaircaseFamily& family : system.families) {
    std::size_t tail_p = 0, tail_q = 1, gen_q = 1;
    bool has_constant = false;
    for (const auto& term : family.args) {
      if (const auto* s = std::get_if<Staircase>(&term)) {
        has_constant = true;
        tail_p = std::max(tail_p, s->tail.stabilization());
        tail_q = std::lcm(tail_q, s->tail.period());
        gen_q = std::lcm(gen_q, s->generator.size());
      }
    }
    if (!has_constant) continue;
    // Tail tuples at offsets 0..i are all seen once i >= tail_p + tail_q - 1.
    h = Join(h, {tail_p + tail_q - 1, std::lcm(tail_q, gen_q)});
  }
  return h;
}

Horizon PointHorizon(std::span<const PowerElement> point) {
  Horizon h;
  for (const PowerElement& e : point) h = Join(h, {e.stabilization(), e.period()});
  return h;
}

std::vector<ProjectedEquation> ProjectSystem(const PowerSystem& system,
                                             std::size_t coordinate) {
  std::vector<ProjectedEquation> out;
  std::set<Equation> seen;
  auto add = [&](SourceRef source, Equation eq) {
    if (seen.insert(eq).second) out.push_back({source, std::move(eq)});
  };
  for (std::size_t j = 0; j < system.equations.size(); ++j) {
    add(SourceRef::Explicit(j), ProjectEquation(system.equations[j], coordinate));
  }
  for (std::size_t f = 0; f < system.families.size(); ++f) {
    const StaircaseFamily& family = system.families[f];
    for (std::size_t n = 1; n <= coordinate + 2; ++n) {
      add(SourceRef::FamilyMember(f, n),
          MapConstants(family, [&](const Staircase& s) { return s.ValueAt(n, coordinate); }));
    }
  }
  return out;
}

EquationSystem ProjectToBase(const PowerSystem& system, std::size_t coordinate) {
  EquationSystem out{system.variables, {}};
  for (auto& projected : ProjectSystem(system, coordinate)) {
    out.equations.push_back(std::move(projected.equation));
  }
  return out;
}

std::set<ClassId> ProfileAt(Classifier& classifier, const PowerSystem& system,
                            std::size_t coordinate) {
  std::set<ClassId> out;
  for (const auto& projected : ProjectSystem(system, coordinate)) {
    out.insert(classifier.ClassOf(projected.equation));
  }
  return out;
}

CoordinateProfile ComputeProfile(const FiniteStructure& structure,
                                 const PowerSystem& system) {
  CheckWellFormed(structure, system);
  Classifier classifier(structure, system.variables.size());
  CoordinateProfile profile;
  profile.horizon = SystemHorizon(system);
  const Horizon& h = profile.horizon;
  for (std::size_t i = 0; i < h.end(); ++i) {
    profile.classes.push_back(ProfileAt(classifier, system, i));
  }
  for (std::size_t i = h.stabilization; i < h.end(); ++i) {
    if (ProfileAt(classifier, system, i + h.period) != profile.classes[i]) {
      throw std::logic_error("coordinate profile is not periodic at " + std::to_string(i));
    }
  }
  return profile;
}

bool Satisfies(const FiniteStructure& structure, const PowerSystem& system,
               std::span<const PowerElement> point) {
  if (point.size() != system.variables.size()) {
    throw std::invalid_argument("point has " + std::to_string(point.size()) +
                                " coordinates, system has " +
                                std::to_string(system.variables.size()) + " variables");
  }
  const Horizon h = Join(SystemHorizon(system), PointHorizon(point));
  std::vector<int> assignment(point.size());
  for (std::size_t i = 0; i < h.end(); ++i) {
    for (std::size_t v = 0; v < point.size(); ++v) assignment[v] = point[v].At(i);
    for (const auto& projected : ProjectSystem(system, i)) {
      if (!Evaluate(structure, projected.equation, assignment)) return false;
    }
  }
  return true;
}

ConsistencyVerdict CheckConsistency(const FiniteStructure& structure,
                                    const PowerSystem& system) {
  CheckWellFormed(structure, system);
  Classifier classifier(structure, system.variables.size());
  const Horizon h = SystemHorizon(system);
  for (std::size_t i = 0; i < h.end(); ++i) {
    const auto projected = ProjectSystem(system, i);
    EquationSystem base{system.variables, {}};
    for (const auto& p : projected) base.equations.push_back(p.equation);
    if (!classifier.Solve(base.equations).empty()) continue;

    auto core = MinimalInconsistentCore(structure, base);
    InconsistencyCertificate cert;
    cert.coordinate = i;
    for (std::size_t idx : *core) {
      cert.sources.push_back(projected[idx].source);
      cert.equations.push_back(Materialize(system, projected[idx].source));
      cert.projected_core.push_back(projected[idx].equation);
    }
    return {false, std::move(cert)};
  }
  return {true, std::nullopt};
}

bool PowerEquivalent(const FiniteStructure& structure, const PowerSystem& s1,
                     const PowerSystem& s2) {
  if (s1.variables != s2.variables) {
    throw std::invalid_argument("systems have different variable lists");
  }
  const bool c1 = CheckConsistency(structure, s1).consistent;
  const bool c2 = CheckConsistency(structure, s2).consistent;
  if (!c1 || !c2) return c1 == c2;
  Classifier classifier(structure, s1.variables.size());
  const Horizon h = Join(SystemHorizon(s1), SystemHorizon(s2));
  for (std::size_t i = 0; i < h.end(); ++i) {
    if (classifier.Solve(ProjectToBase(s1, i).equations) !=
        classifier.Solve(ProjectToBase(s2, i).equations)) {
      return false;
    }
  }
  return true;
}

}  // namespace powereq
