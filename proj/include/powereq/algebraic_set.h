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

#ifndef POWEREQ_ALGEBRAIC_SET_H_
#define POWEREQ_ALGEBRAIC_SET_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace powereq {

// A subset of A^n as a bitset over the k^n cells. Cell order is
// lexicographic in the point, first variable most significant.
class AlgebraicSet {
 public:
  AlgebraicSet() = default;
  AlgebraicSet(int universe_size, int arity, bool full = false);

  int universe_size() const { return k_; }
  int arity() const { return n_; }
  std::size_t cell_count() const { return cells_; }

  std::size_t Encode(std::span<const int> point) const;
  std::vector<int> Decode(std::size_t cell) const;

  bool Contains(std::size_t cell) const {
    return (words_[cell >> 6] >> (cell & 63)) & 1u;
  }
  bool Contains(std::span<const int> point) const { return Contains(Encode(point)); }
  void Insert(std::size_t cell) { words_[cell >> 6] |= std::uint64_t{1} << (cell & 63); }

  AlgebraicSet& operator&=(const AlgebraicSet& other);

  bool empty() const;
  std::size_t count() const;
  bool IsSubsetOf(const AlgebraicSet& other) const;
  std::vector<std::vector<int>> Points() const;

  friend auto operator<=>(const AlgebraicSet&, const AlgebraicSet&) = default;
  friend bool operator==(const AlgebraicSet&, const AlgebraicSet&) = default;

 private:
  int k_ = 0;
  int n_ = 0;
  std::size_t cells_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace powereq

#endif  // POWEREQ_ALGEBRAIC_SET_H_
