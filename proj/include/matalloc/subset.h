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

#ifndef MATALLOC_SUBSET_H_
#define MATALLOC_SUBSET_H_

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace matalloc {

// Subsets of a ground set {0..n-1}, n <= 64, as bitmasks.
using Subset = std::uint64_t;
inline constexpr int kMaxGround = 64;

// Nonnegative integer vector indexed by ground elements.
using IntVector = std::vector<std::int64_t>;

inline constexpr Subset Bit(int i) { return Subset{1} << i; }
inline constexpr Subset FullSet(int n) {
  return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}
inline constexpr bool Contains(Subset s, int i) { return (s >> i) & 1; }
inline constexpr bool IsSubsetOf(Subset a, Subset b) { return (a & ~b) == 0; }
inline int Popcount(Subset s) { return std::popcount(s); }

std::vector<int> Elements(Subset s);
Subset FromElements(std::span<const int> elements);
std::string SubsetToString(Subset s);

// Calls fn(t) for every t ⊆ s, in increasing bitmask order.
template <typename Fn>
void ForEachSubsetOf(Subset s, Fn&& fn) {
  Subset t = 0;
  while (true) {
    fn(t);
    if (t == s) break;
    t = (t - s) & s;
  }
}

std::int64_t Sum(const IntVector& x, Subset s);
std::int64_t Total(const IntVector& x);
Subset Support(const IntVector& x);
// b on every element of s, zero elsewhere.
IntVector ScaledIndicator(int n, std::int64_t b, Subset s);
bool Dominates(const IntVector& y, const IntVector& x);

}  // namespace matalloc

#endif  // MATALLOC_SUBSET_H_
