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

#ifndef MATALLOC_CAPS_H_
#define MATALLOC_CAPS_H_

#include <cstdint>
#include <string>

namespace matalloc {

// Size limits for every exhaustive routine. Exceeding one raises
// CapExceeded; nothing silently samples.
struct Caps {
  int sfm_ground = 24;                        // subset enumeration
  int expansion = 64;                         // unit expansion copies
  std::int64_t classical_enum = 10'000'000;   // brute-force assignments
  std::int64_t matroid_enum = 1'000'000;      // brute-force basis tuples
  int lp_variables = 200;
  std::int64_t configurations = 100'000;      // per player
  std::int64_t guess_grid = 1 << 16;
};

const Caps& GetCaps();
void SetCaps(const Caps& caps);

// Applies "key=value,key=value" overrides. Keys: ground, expansion,
// enum, matroid-enum, lp, configs, grid. Throws ContractError.
Caps ParseCapsOverride(const std::string& spec, Caps base);

}  // namespace matalloc

#endif  // MATALLOC_CAPS_H_
