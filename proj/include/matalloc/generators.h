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


#ifndef MATALLOC_GENERATORS_H_
#define MATALLOC_GENERATORS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "matalloc/instance.h"

namespace matalloc {

struct GenParams {
  int entities = 4;  // players, machines, or core ground size
  int items = 6;
  std::int64_t max_value = 5;
  Rational u = 1;  // small value/size of two-value flavors
  Rational w = 3;  // big value/size
  std::int64_t b = 1;
  std::int64_t max_scale = 2;  // largest polymatroid weight or scale
};

// Ground E of size m, r(X) = |X| except r(E) = m - 1, f(X) = |X|.
CoreCoverInstance GenGapInstance(int m, std::int64_t b = 1);

// Flavor names accepted by GenRandom, in a stable order.
const std::vector<std::string>& GeneratorFlavors();

// Deterministic per (flavor, seed, params). Throws ContractError for an
// unknown flavor.
Instance GenRandom(const std::string& flavor, std::uint64_t seed,
                   const GenParams& params);

// Building blocks, exposed for tests.
std::int64_t RandomInt(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);
MatroidPtr RandomMatroid(int n, std::mt19937_64& rng);
PolymatroidPtr RandomPolymatroid(int n, std::int64_t max_scale,
                                 std::mt19937_64& rng);

}  // namespace matalloc

#endif  // MATALLOC_GENERATORS_H_
