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
#include "matalloc/subset.h"

#include <sstream>

#include "matalloc/errors.h"

namespace matalloc {

std::vector<int> Elements(Subset s) {
  std::vector<int> out;
  out.reserve(Popcount(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Subset FromElements(std::span<const int> elements) {
  Subset s = 0;
  for (int e : elements) {
    if (e < 0 || e >= kMaxGround) {
      throw ContractError("element index " + std::to_string(e) +
                          " out of range");
    }
    s |= Bit(e);
  }
  return s;
}

std::string SubsetToString(Subset s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int e : Elements(s)) {
    if (!first) out << ",";
    out << e;
    first = false;
  }
  out << "}";
  return out.str();
}

std::int64_t Sum(const IntVector& x, Subset s) {
  std::int64_t total = 0;
  while (s != 0) {
    total += x[std::countr_zero(s)];
    s &= s - 1;
  }
  return total;
}

std::int64_t Total(const IntVector& x) {
  std::int64_t total = 0;
  for (auto v : x) total += v;
  return total;
}

Subset Support(const IntVector& x) {
  Subset s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) s |= Bit(static_cast<int>(i));
  }
  return s;
}

IntVector ScaledIndicator(int n, std::int64_t b, Subset s) {
  IntVector x(n, 0);
  for (int e : Elements(s)) x[e] = b;
  return x;
}

bool Dominates(const IntVector& y, const IntVector& x) {
  if (y.size() != x.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] < x[i]) return false;
  }
  return true;
}

}  // namespace matalloc
