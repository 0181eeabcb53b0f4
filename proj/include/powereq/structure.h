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

// Relational signatures and finite structures over them.
//
// A FiniteStructure has a universe of k labelled elements, addressed
// internally by dense indices 0..k-1, and one table of tuples per symbol of
// its signature. Equality is always available and is not a symbol.

#ifndef POWEREQ_STRUCTURE_H_
#define POWEREQ_STRUCTURE_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace powereq {

struct Symbol {
  std::string name;
  int arity = 0;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

inline constexpr std::string_view kEdgeSymbol = "E";
inline constexpr std::string_view kOrderSymbol = "<=";

class Signature {
 public:
  Signature() = default;
  // Throws std::invalid_argument on duplicate names or arity < 1.
  explicit Signature(std::vector<Symbol> symbols);

  static Signature Graph();
  static Signature Poset();
  // P1/1, ..., Pm/m.
  static Signature Matroid(int max_arity);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  const Symbol& symbol(int id) const { return symbols_.at(id); }
  int size() const { return static_cast<int>(symbols_.size()); }
  std::optional<int> Find(std::string_view name) const;

  // "{E/2}" style rendering, used in error messages.
  std::string ToString() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Symbol> symbols_;
};

std::string MatroidSymbolName(int arity);

enum class StructureKind { kGraph, kPoset, kMatroid, kGeneric };

std::string_view KindName(StructureKind kind);
std::optional<StructureKind> ParseKind(std::string_view name);

using Tuple = std::vector<int>;

class FiniteStructure {
 public:
  // `tables[s]` holds the tuples of symbol s. Tuples are sorted and
  // deduplicated. Throws std::invalid_argument when the universe is empty,
  // labels repeat, a table is missing, or a tuple has the wrong length or an
  // out-of-range entry.
  FiniteStructure(Signature signature, std::vector<std::string> universe,
                  std::vector<std::vector<Tuple>> tables);

  // Same, with tuples given by element label and tables keyed by symbol
  // name. Symbols absent from `tables` get empty tables.
  static FiniteStructure FromLabels(
      Signature signature, std::vector<std::string> universe,
      const std::map<std::string, std::vector<std::vector<std::string>>>&
          tables);

  int size() const { return static_cast<int>(universe_.size()); }
  const Signature& signature() const { return signature_; }
  const std::vector<std::string>& universe() const { return universe_; }
  const std::string& label(int element) const { return universe_.at(element); }
  std::optional<int> IndexOf(std::string_view label) const;

  const std::vector<Tuple>& tuples(int symbol) const {
    return tables_.at(symbol);
  }
  bool Holds(int symbol, std::span<const int> args) const;

  std::vector<std::string> Labels(std::span<const int> elements) const;

  friend bool operator==(const FiniteStructure& a, const FiniteStructure& b) {
    return a.signature_ == b.signature_ && a.universe_ == b.universe_ &&
           a.tables_ == b.tables_;
  }

 private:
  Signature signature_;
  std::vector<std::string> universe_;
  std::vector<std::vector<Tuple>> tables_;
  // Bit per cell of k^arity when that is small enough; empty otherwise and
  // lookups fall back to binary search in the sorted table.
  std::vector<std::vector<bool>> dense_;
};

}  // namespace powereq

#endif  // POWEREQ_STRUCTURE_H_
