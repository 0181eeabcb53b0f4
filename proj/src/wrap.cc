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

#include "powereq/wrap.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace powereq {
namespace {

Horizon EquationHorizon(const PowerEquation& eq) {
  Horizon h;
  for (const auto& term : eq.args) {
    if (const auto* c = std::get_if<PowerElement>(&term)) {
      h = Join(h, {c->stabilization(), c->period()});
    }
  }
  return h;
}

// Solution sets met among the projections, numbered in discovery order.
class ClassIndex {
 public:
  ClassIndex(const FiniteStructure& structure, std::size_t variable_count)
      : classifier_(structure, variable_count) {}

  std::size_t Intern(const Equation& eq) {
    const AlgebraicSet& set = classifier_.Solutions(eq);
    auto [it, inserted] = index_.emplace(set, sets_.size());
    if (inserted) sets_.push_back(set);
    return it->second;
  }

  std::size_t Find(const Equation& eq) {
    auto it = index_.find(classifier_.Solutions(eq));
    if (it == index_.end()) throw std::logic_error("projection outside the discovered classes");
    return it->second;
  }

  std::size_t size() const { return sets_.size(); }
  Classifier& classifier() { return classifier_; }

 private:
  Classifier classifier_;
  std::map<AlgebraicSet, std::size_t> index_;
  std::vector<AlgebraicSet> sets_;
};

struct Coverage {
  SourceRef source;
  // class index -> least coordinate where the source projects into it.
  std::map<std::size_t, std::size_t> first;
};

Coverage CoverageOf(ClassIndex& classes, const PowerSystem& system, const SourceRef& source) {
  Coverage cov{source, {}};
  const PowerEquation eq = Materialize(system, source);
  const Horizon h = EquationHorizon(eq);
  for (std::size_t l = 0; l < h.end(); ++l) {
    cov.first.emplace(classes.Find(ProjectEquation(eq, l)), l);
  }
  return cov;
}

std::vector<SourceRef> Candidates(const PowerSystem& system, const Horizon& h) {
  std::vector<SourceRef> out;
  for (std::size_t j = 0; j < system.equations.size(); ++j) out.push_back(SourceRef::Explicit(j));
  // Members past h.end() + 1 cover nothing that member h.end() + 1 does not.
  for (std::size_t f = 0; f < system.families.size(); ++f) {
    for (std::size_t n = 1; n <= h.end() + 1; ++n) out.push_back(SourceRef::FamilyMember(f, n));
  }
  return out;
}

// Class indices present in pi_l(S) for l below the horizon.
std::vector<std::set<std::size_t>> PresentClasses(ClassIndex& classes, const PowerSystem& system,
                                                  const Horizon& h) {
  std::vector<std::set<std::size_t>> present(h.end());
  for (std::size_t l = 0; l < h.end(); ++l) {
    for (const auto& projected : ProjectSystem(system, l)) {
      present[l].insert(classes.Intern(projected.equation));
    }
  }
  return present;
}

std::vector<MEntry> ComputeMWith(ClassIndex& classes, const PowerSystem& system,
                                 const Horizon& h) {
  PresentClasses(classes, system, h);
  const std::size_t class_count = classes.size();

  std::vector<Coverage> covers;
  for (const SourceRef& source : Candidates(system, h)) {
    covers.push_back(CoverageOf(classes, system, source));
  }

  // Greedy cover; ties go to the earliest candidate in source order.
  std::vector<bool> covered(class_count, false);
  std::size_t remaining = class_count;
  std::vector<const Coverage*> chosen;
  while (remaining > 0) {
    const Coverage* best = nullptr;
    std::size_t best_gain = 0;
    for (const Coverage& cov : covers) {
      std::size_t gain = 0;
      for (const auto& [cls, l] : cov.first) gain += covered[cls] ? 0 : 1;
      if (gain > best_gain) {
        best = &cov;
        best_gain = gain;
      }
    }
    if (!best) throw std::logic_error("sources do not cover the projected classes");
    chosen.push_back(best);
    for (const auto& [cls, l] : best->first) {
      if (!covered[cls]) {
        covered[cls] = true;
        --remaining;
      }
    }
  }

  std::vector<MEntry> m;
  for (std::size_t cls = 0; cls < class_count; ++cls) {
    std::optional<SourcePair> pair;
    for (const Coverage* cov : chosen) {
      auto it = cov->first.find(cls);
      if (it == cov->first.end()) continue;
      SourcePair candidate{it->second, cov->source};
      if (!pair || candidate < *pair) pair = candidate;
    }
    const Equation rep = ProjectEquation(Materialize(system, pair->source), pair->coordinate);
    m.push_back({classes.classifier().ClassOf(rep), rep, *pair});
  }
  return m;
}

// 2^e compared against `value`, without overflow.
bool AtMostPowerOfTwo(std::size_t value, unsigned long long e) {
  return e >= 63 || value <= (std::size_t{1} << e);
}

}  // namespace

std::vector<MEntry> ComputeM(const FiniteStructure& structure, const PowerSystem& system) {
  CheckWellFormed(structure, system);
  ClassIndex classes(structure, system.variables.size());
  return ComputeMWith(classes, system, SystemHorizon(system));
}

std::vector<SourceRef> S0Sources(const std::vector<MEntry>& m) {
  std::set<SourceRef> sources;
  for (const MEntry& e : m) sources.insert(e.source.source);
  return {sources.begin(), sources.end()};
}

std::vector<PowerEquation> BuildS0(const PowerSystem& system, const std::vector<MEntry>& m) {
  std::vector<PowerEquation> s0;
  for (const SourceRef& source : S0Sources(m)) s0.push_back(Materialize(system, source));
  return s0;
}

WrapVerification VerifyWrap(const FiniteStructure& structure, const PowerSystem& original,
                            const PowerSystem& wrapped) {
  if (original.variables != wrapped.variables) {
    throw std::invalid_argument("systems have different variable lists");
  }
  CheckWellFormed(structure, original);
  CheckWellFormed(structure, wrapped);
  WrapVerification report;
  report.horizon = Join(SystemHorizon(original), SystemHorizon(wrapped));
  report.checked = report.horizon.stabilization + 2 * report.horizon.period;
  Classifier classifier(structure, original.variables.size());
  for (std::size_t i = 0; i < report.checked; ++i) {
    AlgebraicSet lhs = classifier.Solve(ProjectToBase(original, i).equations);
    AlgebraicSet rhs = classifier.Solve(ProjectToBase(wrapped, i).equations);
    if (lhs != rhs) report.mismatches.push_back({i, std::move(lhs), std::move(rhs)});
  }
  report.passed = report.mismatches.empty();
  return report;
}

bool BoundCheck(const FiniteStructure& structure, const PowerSystem& system,
                const WrapResult& result) {
  unsigned long long cells = 1;
  for (std::size_t i = 0; i < system.variables.size() && cells < 64; ++i) {
    cells *= static_cast<unsigned long long>(structure.size());
  }
  const std::size_t m = result.trace.m.size();
  const std::size_t size = result.s_prime.equations.size();
  return AtMostPowerOfTwo(m, cells) && size <= 2 * m && AtMostPowerOfTwo(size, cells + 1) &&
         result.s_prime.families.empty();
}

WrapResult Wrap(const FiniteStructure& structure, const PowerSystem& system) {
  CheckWellFormed(structure, system);
  WrapResult result;
  WrapTrace& trace = result.trace;
  trace.horizon = SystemHorizon(system);
  const Horizon& h = trace.horizon;

  ClassIndex classes(structure, system.variables.size());
  trace.m = ComputeMWith(classes, system, h);
  const auto present = PresentClasses(classes, system, h);
  for (const MEntry& e : trace.m) trace.k.push_back(e.source);
  trace.s0_sources = S0Sources(trace.m);
  trace.s0 = BuildS0(system, trace.m);

  for (std::size_t s = 0; s < trace.m.size(); ++s) {
    const MEntry& entry = trace.m[s];
    const std::size_t cls = classes.Find(entry.representative);
    std::vector<bool> prefix, cycle;
    for (std::size_t l = 0; l < h.end(); ++l) {
      (l < h.stabilization ? prefix : cycle).push_back(present[l].count(cls) > 0);
    }
    WrapStep step;
    step.m_index = s;
    step.in_class = IndexSet(std::move(prefix), std::move(cycle));
    step.outside = Complement(step.in_class);

    const std::size_t i = entry.source.coordinate;
    const PowerEquation source = Materialize(system, entry.source.source);
    step.equation = MapConstants(source, [&](const PowerElement& c) {
      const int at_i = c.At(i);
      return Combine(step.in_class, c, [at_i](bool in, int v) { return in ? at_i : v; });
    });
    for (const auto& term : step.equation.args) {
      if (const auto* c = std::get_if<PowerElement>(&term)) step.constants.push_back(*c);
    }
    trace.steps.push_back(std::move(step));
  }

  result.s_prime.variables = system.variables;
  std::set<PowerEquation> seen;
  auto add = [&](const PowerEquation& eq) {
    if (seen.insert(eq).second) result.s_prime.equations.push_back(eq);
  };
  for (const PowerEquation& eq : trace.s0) add(eq);
  for (const WrapStep& step : trace.steps) add(step.equation);

  result.verification = VerifyWrap(structure, system, result.s_prime);
  result.verified = result.verification.passed;
  result.bound_ok = BoundCheck(structure, system, result);
  return result;
}

}  // namespace powereq
