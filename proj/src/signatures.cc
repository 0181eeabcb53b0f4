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

#include "powereq/signatures.h"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string_view>

namespace powereq {
namespace {

bool HasRepeat(std::span<const int> t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return true;
    }
  }
  return false;
}

Tuple Drop(std::span<const int> t, std::size_t i) {
  Tuple out(t.begin(), t.end());
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

// Matroid signatures are exactly P1..Pm for some m >= 1.
bool IsMatroidSignature(const Signature& sig) {
  return sig.size() >= 1 && sig == Signature::Matroid(sig.size());
}

const Signature& Expected(StructureKind kind, const Signature& actual) {
  static const Signature graph = Signature::Graph();
  static const Signature poset = Signature::Poset();
  switch (kind) {
    case StructureKind::kGraph:
      return graph;
    case StructureKind::kPoset:
      return poset;
    default:
      return actual;
  }
}

void CheckSignature(const FiniteStructure& s, StructureKind kind) {
  if (kind == StructureKind::kGeneric) return;
  if (kind == StructureKind::kMatroid) {
    if (!IsMatroidSignature(s.signature())) {
      throw std::invalid_argument("expected matroid signature {P1/1, ..., Pm/m}, got " +
                                  s.signature().ToString());
    }
    return;
  }
  const Signature& expected = Expected(kind, s.signature());
  if (s.signature() != expected) {
    throw std::invalid_argument("expected " + std::string(KindName(kind)) +
                                " signature " + expected.ToString() + ", got " +
                                s.signature().ToString());
  }
}

// Pn, or false when n exceeds the cap.
bool Independent(const FiniteStructure& m, std::span<const int> t) {
  const int n = static_cast<int>(t.size());
  if (n < 1 || n > m.signature().size()) return false;
  return m.Holds(n - 1, t);
}

bool ExchangeFails(const FiniteStructure& m, std::span<const int> x,
                   std::span<const int> y) {
  if (!Independent(m, x) || !Independent(m, y)) return false;
  Tuple extended(x.begin(), x.end());
  extended.push_back(0);
  for (int yi : y) {
    extended.back() = yi;
    if (Independent(m, extended)) return false;
  }
  return true;
}

void ValidateGraph(const FiniteStructure& g, ValidationReport& report) {
  const int k = g.size();
  for (int x = 0; x < k; ++x) {
    const int t[] = {x, x};
    if (g.Holds(0, t)) report.violations.push_back({kNoLoops, {x}});
  }
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      const int xy[] = {x, y};
      const int yx[] = {y, x};
      if (g.Holds(0, xy) && !g.Holds(0, yx)) {
        report.violations.push_back({kSymmetry, {x, y}});
      }
    }
  }
}

void ValidatePoset(const FiniteStructure& p, ValidationReport& report) {
  const int k = p.size();
  auto le = [&](int a, int b) {
    const int t[] = {a, b};
    return p.Holds(0, t);
  };
  for (int x = 0; x < k; ++x) {
    if (!le(x, x)) report.violations.push_back({kReflexivity, {x}});
  }
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      if (x != y && le(x, y) && le(y, x)) {
        report.violations.push_back({kAntisymmetry, {x, y}});
      }
    }
  }
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      if (!le(x, y)) continue;
      for (int z = 0; z < k; ++z) {
        if (le(y, z) && !le(x, z)) {
          report.violations.push_back({kTransitivity, {x, y, z}});
        }
      }
    }
  }
}

// Only tuples present in the tables can trigger an axiom, so scanning the
// tables covers every assignment over the universe.
void ValidateMatroid(const FiniteStructure& m, ValidationReport& report) {
  const int cap = m.signature().size();
  for (int n = 1; n <= cap; ++n) {
    for (const Tuple& t : m.tuples(n - 1)) {
      if (HasRepeat(t)) report.violations.push_back({kDistinctArguments, t});
    }
  }
  for (int n = 2; n <= cap; ++n) {
    for (const Tuple& t : m.tuples(n - 1)) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (!Independent(m, Drop(t, i))) {
          report.violations.push_back({kHereditary, t});
          break;
        }
      }
    }
  }
  for (int n = 1; n < cap; ++n) {
    for (const Tuple& x : m.tuples(n - 1)) {
      for (const Tuple& y : m.tuples(n)) {
        if (ExchangeFails(m, x, y)) {
          Tuple w = x;
          w.insert(w.end(), y.begin(), y.end());
          report.violations.push_back({kExchange, std::move(w)});
        }
      }
    }
  }
}

}  // namespace

ValidationReport Validate(const FiniteStructure& structure, StructureKind kind) {
  CheckSignature(structure, kind);
  ValidationReport report;
  report.kind = kind;
  switch (kind) {
    case StructureKind::kGraph:
      ValidateGraph(structure, report);
      break;
    case StructureKind::kPoset:
      ValidatePoset(structure, report);
      break;
    case StructureKind::kMatroid:
      ValidateMatroid(structure, report);
      break;
    case StructureKind::kGeneric:
      break;
  }
  report.passed = report.violations.empty();
  return report;
}

bool ViolationHolds(const FiniteStructure& s, const Violation& v) {
  const Tuple& w = v.witness;
  auto holds2 = [&](int a, int b) {
    const int t[] = {a, b};
    return s.Holds(0, t);
  };
  const std::string_view axiom = v.axiom;
  if (axiom == kNoLoops) return w.size() == 1 && holds2(w[0], w[0]);
  if (axiom == kSymmetry) {
    return w.size() == 2 && holds2(w[0], w[1]) && !holds2(w[1], w[0]);
  }
  if (axiom == kReflexivity) return w.size() == 1 && !holds2(w[0], w[0]);
  if (axiom == kAntisymmetry) {
    return w.size() == 2 && w[0] != w[1] && holds2(w[0], w[1]) &&
           holds2(w[1], w[0]);
  }
  if (axiom == kTransitivity) {
    return w.size() == 3 && holds2(w[0], w[1]) && holds2(w[1], w[2]) &&
           !holds2(w[0], w[2]);
  }
  if (axiom == kDistinctArguments) return Independent(s, w) && HasRepeat(w);
  if (axiom == kHereditary) {
    if (w.size() < 2 || !Independent(s, w)) return false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!Independent(s, Drop(w, i))) return true;
    }
    return false;
  }
  if (axiom == kExchange) {
    if (w.size() % 2 == 0) return false;
    const std::size_t n = w.size() / 2;
    return ExchangeFails(s, std::span(w).first(n), std::span(w).subspan(n));
  }
  return false;
}

void RequireValid(const FiniteStructure& structure, StructureKind kind) {
  const ValidationReport report = Validate(structure, kind);
  if (!report.passed) {
    const Violation& v = report.violations.front();
    throw std::invalid_argument("structure is not a valid " +
                                std::string(KindName(kind)) + ": axiom '" +
                                v.axiom + "' fails");
  }
}

std::optional<std::array<int, 3>> HasTriangle(const FiniteStructure& graph) {
  const int k = graph.size();
  auto edge = [&](int a, int b) {
    const int t[] = {a, b};
    return graph.Holds(0, t);
  };
  for (int x1 = 0; x1 < k; ++x1) {
    for (int x2 = 0; x2 < k; ++x2) {
      if (!edge(x1, x2)) continue;
      for (int x3 = 0; x3 < k; ++x3) {
        if (edge(x2, x3) && edge(x3, x1)) return std::array{x1, x2, x3};
      }
    }
  }
  return std::nullopt;
}

std::vector<std::vector<int>> GraphDistances(const FiniteStructure& graph) {
  const int k = graph.size();
  std::vector<std::vector<int>> adjacency(k);
  for (const Tuple& t : graph.tuples(0)) adjacency[t[0]].push_back(t[1]);

  std::vector<std::vector<int>> dist(k, std::vector<int>(k, kInfiniteDistance));
  for (int source = 0; source < k; ++source) {
    auto& d = dist[source];
    d[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adjacency[u]) {
        if (d[v] == kInfiniteDistance) {
          d[v] = d[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return dist;
}

FiniteStructure StarBipartiteGraph(int n) {
  if (n < 1) throw std::invalid_argument("star bipartite graph needs n >= 1");
  std::vector<std::string> labels;
  for (int i = 0; i <= n + 1; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, n + 1);
  }
  return MakeGraph(std::move(labels), edges);
}

FiniteStructure MatroidUnderlyingGraph(const FiniteStructure& matroid) {
  CheckSignature(matroid, StructureKind::kMatroid);
  std::vector<Tuple> edges;
  if (matroid.signature().size() >= 2) edges = matroid.tuples(1);
  return FiniteStructure(Signature::Graph(), matroid.universe(), {std::move(edges)});
}

FiniteStructure MakeGraph(std::vector<std::string> universe,
                          std::span<const std::pair<int, int>> edges) {
  std::vector<Tuple> table;
  for (auto [a, b] : edges) {
    table.push_back({a, b});
    table.push_back({b, a});
  }
  return FiniteStructure(Signature::Graph(), std::move(universe), {std::move(table)});
}

FiniteStructure MakePoset(std::vector<std::string> universe,
                          std::span<const std::pair<int, int>> strict) {
  std::vector<Tuple> table;
  for (int x = 0; x < static_cast<int>(universe.size()); ++x) table.push_back({x, x});
  for (auto [a, b] : strict) table.push_back({a, b});
  return FiniteStructure(Signature::Poset(), std::move(universe), {std::move(table)});
}

FiniteStructure MakeMatroid(std::vector<std::string> universe,
                            const std::vector<std::set<int>>& independent) {
  const int cap = static_cast<int>(universe.size());
  std::vector<std::vector<Tuple>> tables(cap);
  for (const std::set<int>& s : independent) {
    if (s.empty()) continue;
    if (static_cast<int>(s.size()) > cap) {
      throw std::invalid_argument("independent set larger than the universe");
    }
    Tuple t(s.begin(), s.end());
    do {
      tables[t.size() - 1].push_back(t);
    } while (std::next_permutation(t.begin(), t.end()));
  }
  return FiniteStructure(Signature::Matroid(cap), std::move(universe),
                         std::move(tables));
}

FiniteStructure DisjointUnion(const FiniteStructure& a, const FiniteStructure& b,
                              const std::string& suffix) {
  if (a.signature() != b.signature()) {
    throw std::invalid_argument("disjoint union needs equal signatures");
  }
  std::vector<std::string> universe = a.universe();
  for (const std::string& label : b.universe()) universe.push_back(label + suffix);
  std::vector<std::vector<Tuple>> tables;
  for (int s = 0; s < a.signature().size(); ++s) {
    std::vector<Tuple> table = a.tuples(s);
    for (Tuple t : b.tuples(s)) {
      for (int& v : t) v += a.size();
      table.push_back(std::move(t));
    }
    tables.push_back(std::move(table));
  }
  return FiniteStructure(a.signature(), std::move(universe), std::move(tables));
}

}  // namespace powereq
