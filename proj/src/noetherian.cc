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

#include "powereq/noetherian.h"

#include <stdexcept>

#include "powereq/signatures.h"

namespace powereq {
namespace {

bool Edge(const FiniteStructure& g, int symbol, int a, int b) {
  const int t[] = {a, b};
  return g.Holds(symbol, t);
}

std::optional<std::array<int, 4>> QuasiIdentityOn(const FiniteStructure& s, int symbol) {
  const int k = s.size();
  for (int x1 = 0; x1 < k; ++x1) {
    for (int x2 = 0; x2 < k; ++x2) {
      if (!Edge(s, symbol, x1, x2)) continue;
      for (int x3 = 0; x3 < k; ++x3) {
        if (!Edge(s, symbol, x2, x3)) continue;
        for (int x4 = 0; x4 < k; ++x4) {
          if (Edge(s, symbol, x3, x4) && !Edge(s, symbol, x4, x1)) {
            return std::array{x1, x2, x3, x4};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::string QuadrupleCount(const FiniteStructure& s) {
  const long long k = s.size();
  return std::to_string(k * k * k * k);
}

std::optional<std::array<int, 3>> IndependentTriple(const FiniteStructure& m) {
  if (m.signature().size() < 3 || m.tuples(2).empty()) return std::nullopt;
  const Tuple& t = m.tuples(2).front();
  return std::array{t[0], t[1], t[2]};
}

std::optional<std::pair<int, int>> StrictPair(const FiniteStructure& p) {
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      if (a != b && Edge(p, 0, a, b)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

int SymbolId(const FiniteStructure& s, std::string_view name) {
  auto id = s.signature().Find(name);
  if (!id) throw std::invalid_argument("structure has no symbol " + std::string(name));
  return *id;
}

StaircaseFamily SingleVariableFamily(int relation, int generator, int tail) {
  Staircase stair{{generator}, PowerElement::Constant(tail)};
  return Relation<Staircase>(relation, {Variable{0}, stair});
}

}  // namespace

std::optional<std::array<int, 4>> GraphQuasiIdentity(const FiniteStructure& graph) {
  return QuasiIdentityOn(graph, SymbolId(graph, kEdgeSymbol));
}

bool GraphStructuralCheck(const FiniteStructure& graph) {
  if (HasTriangle(graph)) return false;
  for (const auto& row : GraphDistances(graph)) {
    for (int d : row) {
      if (d != kInfiniteDistance && d > 3) return false;
    }
  }
  return true;
}

std::string_view StatusName(NoetherianStatus status) {
  switch (status) {
    case NoetherianStatus::kNoetherian:
      return "NOETHERIAN";
    case NoetherianStatus::kNotNoetherian:
      return "NOT_NOETHERIAN";
    case NoetherianStatus::kNoObstructionFound:
      return "NO_OBSTRUCTION_FOUND";
  }
  return "NO_OBSTRUCTION_FOUND";
}

std::optional<NoetherianStatus> ParseStatus(std::string_view name) {
  for (auto s : {NoetherianStatus::kNoetherian, NoetherianStatus::kNotNoetherian,
                 NoetherianStatus::kNoObstructionFound}) {
    if (StatusName(s) == name) return s;
  }
  return std::nullopt;
}

NoetherianVerdict GraphPowerNoetherian(const FiniteStructure& graph) {
  NoetherianVerdict verdict{StructureKind::kGraph, NoetherianStatus::kNoetherian, {}};
  if (auto quad = GraphQuasiIdentity(graph)) {
    verdict.status = NoetherianStatus::kNotNoetherian;
    verdict.certificate = {Certificate::Kind::kQuadruple, {quad->begin(), quad->end()}, ""};
  } else {
    verdict.certificate.transcript =
        "quasi-identity E(x1,x2) & E(x2,x3) & E(x3,x4) -> E(x4,x1) holds on all " +
        QuadrupleCount(graph) + " quadruples";
  }
  return verdict;
}

NoetherianVerdict PosetPowerNoetherian(const FiniteStructure& poset) {
  NoetherianVerdict verdict{StructureKind::kPoset, NoetherianStatus::kNoObstructionFound, {}};
  if (auto pair = StrictPair(poset)) {
    verdict.status = NoetherianStatus::kNotNoetherian;
    verdict.certificate = {Certificate::Kind::kPair, {pair->first, pair->second}, ""};
  } else {
    verdict.certificate.transcript = "no strict pair a < b; no obstruction known";
  }
  return verdict;
}

NoetherianVerdict MatroidPowerNoetherian(const FiniteStructure& matroid) {
  NoetherianVerdict verdict{StructureKind::kMatroid, NoetherianStatus::kNoetherian, {}};
  if (auto triple = IndependentTriple(matroid)) {
    verdict.status = NoetherianStatus::kNotNoetherian;
    verdict.certificate = {Certificate::Kind::kTriple, {triple->begin(), triple->end()}, ""};
    return verdict;
  }
  const FiniteStructure graph = MatroidUnderlyingGraph(matroid);
  if (auto quad = GraphQuasiIdentity(graph)) {
    verdict.status = NoetherianStatus::kNotNoetherian;
    verdict.certificate = {Certificate::Kind::kQuadruple, {quad->begin(), quad->end()}, ""};
  } else {
    verdict.certificate.transcript =
        "no independent triple; quasi-identity holds for P2 on all " +
        QuadrupleCount(matroid) + " quadruples";
  }
  return verdict;
}

NoetherianVerdict PowerNoetherian(const FiniteStructure& structure, StructureKind kind) {
  RequireValid(structure, kind);
  switch (kind) {
    case StructureKind::kGraph:
      return GraphPowerNoetherian(structure);
    case StructureKind::kPoset:
      return PosetPowerNoetherian(structure);
    case StructureKind::kMatroid:
      return MatroidPowerNoetherian(structure);
    case StructureKind::kGeneric:
      break;
  }
  throw std::invalid_argument("no Noetherian criterion for generic structures");
}

bool CertificateHolds(const FiniteStructure& s, StructureKind kind, const Certificate& c) {
  const auto& e = c.elements;
  for (int v : e) {
    if (v < 0 || v >= s.size()) return false;
  }
  switch (c.kind) {
    case Certificate::Kind::kQuadruple: {
      if (e.size() != 4) return false;
      int symbol;
      if (kind == StructureKind::kGraph) {
        symbol = SymbolId(s, kEdgeSymbol);
      } else if (kind == StructureKind::kMatroid && s.signature().size() >= 2) {
        symbol = 1;
      } else {
        return false;
      }
      return Edge(s, symbol, e[0], e[1]) && Edge(s, symbol, e[1], e[2]) &&
             Edge(s, symbol, e[2], e[3]) && !Edge(s, symbol, e[3], e[0]);
    }
    case Certificate::Kind::kTriple:
      return kind == StructureKind::kMatroid && e.size() == 3 &&
             s.signature().size() >= 3 && s.Holds(2, e);
    case Certificate::Kind::kPair:
      return kind == StructureKind::kPoset && e.size() == 2 && e[0] != e[1] &&
             Edge(s, SymbolId(s, kOrderSymbol), e[0], e[1]);
    case Certificate::Kind::kTranscript:
      return false;
  }
  return false;
}

PowerElement WitnessPackage::WitnessPoint(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("witness points are numbered from 1");
  return PowerElement(std::vector<int>(n - 1, lead), {rest});
}

PowerSystem WitnessPackage::Truncated(std::size_t n) const {
  PowerSystem system{{"x"}, {}, {}};
  for (std::size_t m = 1; m <= n; ++m) system.equations.push_back(StaircaseMember(family, m));
  return system;
}

PowerSystem WitnessPackage::FullSystem() const { return {{"x"}, {}, {family}}; }

WitnessPackage BuildWitnessFamily(const FiniteStructure& structure, StructureKind kind,
                                  const Certificate& certificate) {
  if (!CertificateHolds(structure, kind, certificate)) {
    throw std::invalid_argument("certificate is not an obstruction in this structure");
  }
  const auto& e = certificate.elements;
  WitnessPackage package;
  package.kind = kind;
  switch (certificate.kind) {
    case Certificate::Kind::kQuadruple: {
      const int relation = kind == StructureKind::kGraph ? SymbolId(structure, kEdgeSymbol) : 1;
      package.family = SingleVariableFamily(relation, e[3], e[1]);
      package.lead = e[2];
      package.rest = e[0];
      break;
    }
    case Certificate::Kind::kPair:
      package.family = SingleVariableFamily(SymbolId(structure, kOrderSymbol), e[0], e[1]);
      package.lead = e[0];
      package.rest = e[1];
      break;
    case Certificate::Kind::kTriple:
      package.family = SingleVariableFamily(1, e[1], e[0]);
      package.lead = e[2];
      package.rest = e[1];
      break;
    case Certificate::Kind::kTranscript:
      throw std::invalid_argument("transcripts carry no obstruction");
  }
  return package;
}

WitnessCheck CheckWitness(const FiniteStructure& structure, const WitnessPackage& package,
                          std::size_t n) {
  WitnessCheck check;
  const PowerElement point = package.WitnessPoint(n);
  const PowerElement pt[] = {point};
  check.satisfies_first_n = Satisfies(structure, package.Truncated(n), pt);

  const PowerEquation next = StaircaseMember(package.family, n + 1);
  const PowerSystem next_system{{"x"}, {next}, {}};
  check.violates_next = !Satisfies(structure, next_system, pt);
  if (check.violates_next) {
    const Horizon h = Join(SystemHorizon(next_system), PointHorizon(pt));
    for (std::size_t i = 0; i < h.end(); ++i) {
      const int assignment[] = {point.At(i)};
      if (!Evaluate(structure, ProjectEquation(next, i), assignment)) {
        check.violated_coordinate = i;
        break;
      }
    }
  }
  return check;
}

}  // namespace powereq
