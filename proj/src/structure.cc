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

#include "powereq/structure.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace powereq {
namespace {

constexpr std::size_t kDenseCellLimit = std::size_t{1} << 22;

// k^arity, or nullopt once it passes kDenseCellLimit.
std::optional<std::size_t> CellCount(int k, int arity) {
  std::size_t cells = 1;
  for (int i = 0; i < arity; ++i) {
    cells *= static_cast<std::size_t>(k);
    if (cells > kDenseCellLimit) return std::nullopt;
  }
  return cells;
}

std::size_t Encode(std::span<const int> args, int k) {
  std::size_t cell = 0;
  for (int v : args) cell = cell * k + v;
  return cell;
}

}  // namespace

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  for (const Symbol& s : symbols_) {
    if (s.arity < 1) {
      throw std::invalid_argument("symbol '" + s.name + "' has arity < 1");
    }
    if (s.name.empty()) throw std::invalid_argument("empty symbol name");
    if (!seen.insert(s.name).second) {
      throw std::invalid_argument("duplicate symbol '" + s.name + "'");
    }
  }
}

Signature Signature::Graph() {
  return Signature({{std::string(kEdgeSymbol), 2}});
}

Signature Signature::Poset() {
  return Signature({{std::string(kOrderSymbol), 2}});
}

Signature Signature::Matroid(int max_arity) {
  if (max_arity < 1) throw std::invalid_argument("matroid arity cap must be >= 1");
  std::vector<Symbol> symbols;
  for (int n = 1; n <= max_arity; ++n) symbols.push_back({MatroidSymbolName(n), n});
  return Signature(std::move(symbols));
}

std::optional<int> Signature::Find(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (symbols_[i].name == name) return i;
  }
  return std::nullopt;
}

std::string Signature::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out += ", ";
    out += symbols_[i].name + "/" + std::to_string(symbols_[i].arity);
  }
  return out + "}";
}

std::string MatroidSymbolName(int arity) { return "P" + std::to_string(arity); }

std::string_view KindName(StructureKind kind) {
  switch (kind) {
    case StructureKind::kGraph:
      return "graph";
    case StructureKind::kPoset:
      return "poset";
    case StructureKind::kMatroid:
      return "matroid";
    case StructureKind::kGeneric:
      return "generic";
  }
  return "generic";
}

std::optional<StructureKind> ParseKind(std::string_view name) {
  for (StructureKind kind : {StructureKind::kGraph, StructureKind::kPoset,
                             StructureKind::kMatroid, StructureKind::kGeneric}) {
    if (KindName(kind) == name) return kind;
  }
  return std::nullopt;
}

FiniteStructure::FiniteStructure(Signature signature,
                                 std::vector<std::string> universe,
                                 std::vector<std::vector<Tuple>> tables)
    : signature_(std::move(signature)),
      universe_(std::move(universe)),
      tables_(std::move(tables)) {
  if (universe_.empty()) throw std::invalid_argument("universe must be nonempty");
  std::set<std::string> seen;
  for (const std::string& label : universe_) {
    if (!seen.insert(label).second) {
      throw std::invalid_argument("duplicate universe element '" + label + "'");
    }
  }
  if (static_cast<int>(tables_.size()) != signature_.size()) {
    throw std::invalid_argument("expected one table per symbol of " +
                                signature_.ToString());
  }
  const int k = size();
  dense_.resize(tables_.size());
  for (int s = 0; s < signature_.size(); ++s) {
    const Symbol& symbol = signature_.symbol(s);
    auto& table = tables_[s];
    for (const Tuple& t : table) {
      if (static_cast<int>(t.size()) != symbol.arity) {
        throw std::invalid_argument("tuple of length " + std::to_string(t.size()) +
                                    " in table of " + symbol.name + "/" +
                                    std::to_string(symbol.arity));
      }
      for (int v : t) {
        if (v < 0 || v >= k) {
          throw std::invalid_argument("tuple entry out of range in table of " +
                                      symbol.name);
        }
      }
    }
    std::sort(table.begin(), table.end());
    table.erase(std::unique(table.begin(), table.end()), table.end());
    if (auto cells = CellCount(k, symbol.arity)) {
      dense_[s].assign(*cells, false);
      for (const Tuple& t : table) dense_[s][Encode(t, k)] = true;
    }
  }
}

FiniteStructure FiniteStructure::FromLabels(
    Signature signature, std::vector<std::string> universe,
    const std::map<std::string, std::vector<std::vector<std::string>>>& tables) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    index.emplace(universe[i], static_cast<int>(i));
  }
  std::vector<std::vector<Tuple>> indexed(signature.size());
  for (const auto& [name, rows] : tables) {
    auto symbol = signature.Find(name);
    if (!symbol) {
      throw std::invalid_argument("relation '" + name + "' not in signature " +
                                  signature.ToString());
    }
    for (const auto& row : rows) {
      Tuple t;
      for (const std::string& label : row) {
        auto it = index.find(label);
        if (it == index.end()) {
          throw std::invalid_argument("unknown element '" + label +
                                      "' in relation " + name);
        }
        t.push_back(it->second);
      }
      indexed[*symbol].push_back(std::move(t));
    }
  }
  return FiniteStructure(std::move(signature), std::move(universe),
                         std::move(indexed));
}

std::optional<int> FiniteStructure::IndexOf(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (universe_[i] == label) return i;
  }
  return std::nullopt;
}

bool FiniteStructure::Holds(int symbol, std::span<const int> args) const {
  const auto& dense = dense_.at(symbol);
  if (!dense.empty()) return dense[Encode(args, size())];
  const auto& table = tables_[symbol];
  return std::binary_search(table.begin(), table.end(),
                            Tuple(args.begin(), args.end()));
}

std::vector<std::string> FiniteStructure::Labels(
    std::span<const int> elements) const {
  std::vector<std::string> out;
  out.reserve(elements.size());
  for (int e : elements) out.push_back(label(e));
  return out;
}

}  // namespace powereq
