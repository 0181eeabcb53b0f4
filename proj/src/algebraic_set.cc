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

#include "powereq/algebraic_set.h"

#include <bit>
#include <stdexcept>

namespace powereq {

AlgebraicSet::AlgebraicSet(int universe_size, int arity, bool full)
    : k_(universe_size), n_(arity), cells_(1) {
  if (k_ < 1 || n_ < 0) throw std::invalid_argument("bad algebraic set shape");
  for (int i = 0; i < n_; ++i) {
    cells_ *= static_cast<std::size_t>(k_);
    if (cells_ > (std::size_t{1} << 32)) {
      throw std::invalid_argument("affine space too large to enumerate");
    }
  }
  words_.assign((cells_ + 63) / 64, 0);
  if (full) {
    for (auto& w : words_) w = ~std::uint64_t{0};
    if (cells_ % 64) words_.back() = (std::uint64_t{1} << (cells_ % 64)) - 1;
  }
}

std::size_t AlgebraicSet::Encode(std::span<const int> point) const {
  std::size_t cell = 0;
  for (int v : point) cell = cell * k_ + v;
  return cell;
}

std::vector<int> AlgebraicSet::Decode(std::size_t cell) const {
  std::vector<int> point(n_);
  for (int i = n_ - 1; i >= 0; --i) {
    point[i] = static_cast<int>(cell % k_);
    cell /= k_;
  }
  return point;
}

AlgebraicSet& AlgebraicSet::operator&=(const AlgebraicSet& other) {
  if (other.k_ != k_ || other.n_ != n_) {
    throw std::invalid_argument("intersecting algebraic sets of different spaces");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

bool AlgebraicSet::empty() const {
  for (auto w : words_) {
    if (w) return false;
  }
  return true;
}

std::size_t AlgebraicSet::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool AlgebraicSet::IsSubsetOf(const AlgebraicSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::vector<std::vector<int>> AlgebraicSet::Points() const {
  std::vector<std::vector<int>> out;
  for (std::size_t cell = 0; cell < cells_; ++cell) {
    if (Contains(cell)) out.push_back(Decode(cell));
  }
  return out;
}

}  // namespace powereq
