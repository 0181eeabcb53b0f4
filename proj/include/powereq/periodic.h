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

#ifndef POWEREQ_PERIODIC_H_
#define POWEREQ_PERIODIC_H_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace powereq {

// The infinite sequence prefix, cycle, cycle, ... indexed from 0.
//
// Always held in canonical form: the cycle has minimal length and the prefix
// is as short as possible. Two sequences are equal as infinite sequences iff
// their canonical forms are equal, so the defaulted comparisons are exact.
template <typename T>
class PeriodicSequence {
 public:
  PeriodicSequence() : cycle_{T{}} {}
  PeriodicSequence(std::vector<T> prefix, std::vector<T> cycle)
      : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
    if (cycle_.empty()) throw std::invalid_argument("cycle must be nonempty");
    Canonicalize();
  }

  static PeriodicSequence Constant(T value) { return {{}, {value}}; }

  T At(std::size_t i) const {
    if (i < prefix_.size()) return prefix_[i];
    return cycle_[(i - prefix_.size()) % cycle_.size()];
  }

  const std::vector<T>& prefix() const { return prefix_; }
  const std::vector<T>& cycle() const { return cycle_; }
  // At(i + period()) == At(i) for every i >= stabilization().
  std::size_t stabilization() const { return prefix_.size(); }
  std::size_t period() const { return cycle_.size(); }

  friend auto operator<=>(const PeriodicSequence&, const PeriodicSequence&) = default;
  friend bool operator==(const PeriodicSequence&, const PeriodicSequence&) = default;

 private:
  void Canonicalize() {
    const std::size_t n = cycle_.size();
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      bool periodic = true;
      for (std::size_t j = d; j < n && periodic; ++j) periodic = cycle_[j] == cycle_[j - d];
      if (periodic) {
        cycle_.resize(d);
        break;
      }
    }
    while (!prefix_.empty() && prefix_.back() == cycle_.back()) {
      prefix_.pop_back();
      std::rotate(cycle_.begin(), cycle_.end() - 1, cycle_.end());
    }
  }

  std::vector<T> prefix_;
  std::vector<T> cycle_;
};

// Pointwise f(a[i], b[i]).
template <typename A, typename B, typename F>
auto Combine(const PeriodicSequence<A>& a, const PeriodicSequence<B>& b, F&& f)
    -> PeriodicSequence<std::decay_t<decltype(f(a.At(0), b.At(0)))>> {
  using R = std::decay_t<decltype(f(a.At(0), b.At(0)))>;
  const std::size_t p = std::max(a.stabilization(), b.stabilization());
  const std::size_t q = std::lcm(a.period(), b.period());
  std::vector<R> prefix, cycle;
  prefix.reserve(p);
  cycle.reserve(q);
  for (std::size_t i = 0; i < p; ++i) prefix.push_back(f(a.At(i), b.At(i)));
  for (std::size_t i = p; i < p + q; ++i) cycle.push_back(f(a.At(i), b.At(i)));
  return {std::move(prefix), std::move(cycle)};
}

// Elements of the direct power A^N that this library can represent.
using PowerElement = PeriodicSequence<int>;

// Eventually periodic subsets of N, as membership sequences.
using IndexSet = PeriodicSequence<bool>;

inline IndexSet Complement(const IndexSet& s) {
  return Combine(s, IndexSet::Constant(true), [](bool x, bool) { return !x; });
}

inline IndexSet Intersect(const IndexSet& a, const IndexSet& b) {
  return Combine(a, b, [](bool x, bool y) { return x && y; });
}

}  // namespace powereq

#endif  // POWEREQ_PERIODIC_H_
