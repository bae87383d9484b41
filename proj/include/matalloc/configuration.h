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


#ifndef MATALLOC_CONFIGURATION_H_
#define MATALLOC_CONFIGURATION_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "matalloc/rational.h"

namespace matalloc {

// Multiset of value types: (value, count) pairs sorted by value, counts > 0,
// values > 0.
struct Configuration {
  std::vector<std::pair<Rational, std::int64_t>> counts;

  Rational Total() const {
    Rational total = 0;
    for (const auto& [v, c] : counts) total += v * c;
    return total;
  }
  std::int64_t Count(const Rational& v) const {
    for (const auto& [value, c] : counts) {
      if (value == v) return c;
    }
    return 0;
  }
  bool operator==(const Configuration& other) const {
    return counts == other.counts;
  }
};

// Per-player list of allowed configurations.
using ConfigCollection = std::vector<std::vector<Configuration>>;

}  // namespace matalloc

#endif  // MATALLOC_CONFIGURATION_H_
