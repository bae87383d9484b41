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


#include "matalloc/generators.h"

#include <algorithm>
#include <utility>

#include "matalloc/errors.h"

namespace matalloc {
namespace {

bool Coin(std::mt19937_64& rng) { return (rng() & 1) != 0; }

PolymatroidPtr NonTrivialPolymatroid(int n, std::int64_t max_scale,
                                     std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto p = RandomPolymatroid(n, max_scale, rng);
    if (n == 0 || p->Value(p->ground()) > 0) return p;
  }
  return MakeModular(IntVector(n, 1));
}

// Entities eligible for one item; never empty when n > 0.
std::vector<bool> RandomEligibility(int n, std::mt19937_64& rng) {
  std::vector<bool> ok(n);
  bool any = false;
  for (int i = 0; i < n; ++i) {
    ok[i] = Coin(rng);
    any = any || ok[i];
  }
  if (!any && n > 0) ok[RandomInt(rng, 0, n - 1)] = true;
  return ok;
}

Rational TwoValue(const GenParams& p, std::mt19937_64& rng) {
  return Coin(rng) ? p.w : p.u;
}

AllocationInstance Classical(InstanceType type, bool restricted,
                             bool two_value, std::uint64_t seed,
                             const GenParams& p) {
  std::mt19937_64 rng(seed);
  AllocationInstance inst;
  inst.type = type;
  inst.entities = p.entities;
  const bool santa = type == InstanceType::kSanta;
  for (int j = 0; j < p.items; ++j) {
    Item item;
    if (restricted) {
      Rational v = two_value ? TwoValue(p, rng)
                             : Rational(RandomInt(rng, 1, p.max_value));
      auto ok = RandomEligibility(p.entities, rng);
      for (int i = 0; i < p.entities; ++i) {
        if (ok[i]) {
          item.values.emplace_back(v);
        } else if (santa) {
          item.values.emplace_back(Rational(0));
        } else {
          item.values.emplace_back(std::nullopt);
        }
      }
    } else {
      auto ok = santa ? std::vector<bool>(p.entities, true)
                      : RandomEligibility(p.entities, rng);
      for (int i = 0; i < p.entities; ++i) {
        if (!ok[i]) {
          item.values.emplace_back(std::nullopt);
          continue;
        }
        std::int64_t lo = santa ? 0 : 1;
        item.values.emplace_back(Rational(RandomInt(rng, lo, p.max_value)));
      }
    }
    inst.items.push_back(std::move(item));
  }
  return inst;
}

AllocationInstance MatroidFlavor(InstanceType type, bool two_value,
                                 std::uint64_t seed, const GenParams& p) {
  std::mt19937_64 rng(seed);
  AllocationInstance inst;
  inst.type = type;
  inst.entities = p.entities;
  for (int j = 0; j < p.items; ++j) {
    Item item;
    item.value = two_value ? TwoValue(p, rng)
                           : Rational(RandomInt(rng, 1, p.max_value));
    item.polymatroid = NonTrivialPolymatroid(p.entities, p.max_scale, rng);
    inst.items.push_back(std::move(item));
  }
  return inst;
}

// Every player owns a planted bundle worth at least 1; other values are
// multiples of 1/4 up to max_value/4.
AllocationInstance PlantedSanta(std::uint64_t seed, const GenParams& p) {
  if (p.items < p.entities) {
    throw ContractError("planted Santa needs at least as many items as players");
  }
  std::mt19937_64 rng(seed);
  AllocationInstance inst;
  inst.type = InstanceType::kSanta;
  inst.entities = p.entities;
  std::vector<int> owner(p.items);
  for (int j = 0; j < p.items; ++j) {
    owner[j] = j < p.entities ? j : static_cast<int>(RandomInt(rng, 0, p.entities - 1));
  }
  std::shuffle(owner.begin(), owner.end(), rng);
  for (int j = 0; j < p.items; ++j) {
    Item item;
    for (int i = 0; i < p.entities; ++i) {
      item.values.emplace_back(MakeRational(RandomInt(rng, 0, p.max_value), 4));
    }
    inst.items.push_back(std::move(item));
  }
  for (int i = 0; i < p.entities; ++i) {
    Rational total = 0;
    int first = -1;
    for (int j = 0; j < p.items; ++j) {
      if (owner[j] != i) continue;
      if (first < 0) first = j;
      total += *inst.items[j].values[i];
    }
    if (total < 1) *inst.items[first].values[i] += 1 - total;
  }
  return inst;
}

CoreCoverInstance RandomCore(std::uint64_t seed, const GenParams& p) {
  std::mt19937_64 rng(seed);
  CoreCoverInstance core;
  core.b = std::max<std::int64_t>(1, p.b);
  core.matroid = RandomMatroid(p.entities, rng);
  core.polymatroid = RandomPolymatroid(p.entities, core.b + 1, rng);
  return core;
}

// Core instance shaped like the two-value reduction: the matroid is induced
// by the big-value resources (players coverable one resource each), the
// polymatroid sums the small-value resources.
CoreCoverInstance TwoValueCore(std::uint64_t seed, const GenParams& p) {
  std::mt19937_64 rng(seed);
  std::vector<PolymatroidPtr> big;
  std::vector<PolymatroidPtr> small;
  for (int j = 0; j < p.items; ++j) {
    auto poly = NonTrivialPolymatroid(p.entities, p.max_scale, rng);
    (Coin(rng) ? big : small).push_back(std::move(poly));
  }
  CoreCoverInstance core;
  core.b = RandomInt(rng, 1, std::max<std::int64_t>(1, p.b));
  core.matroid = big.empty() ? MakeUniform(p.entities, 0)
                             : MakeInduced(MakeSum(std::move(big)));
  core.polymatroid = small.empty() ? MakeZeroPolymatroid(p.entities)
                                   : MakeSum(std::move(small));
  return core;
}

}  // namespace

std::int64_t RandomInt(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw ContractError("RandomInt: empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

MatroidPtr RandomMatroid(int n, std::mt19937_64& rng) {
  if (n == 0) return MakeFree(0);
  switch (RandomInt(rng, 0, 3)) {
    case 0:
      return MakeUniform(n, static_cast<int>(RandomInt(rng, 1, n)));
    case 1: {
      int k = static_cast<int>(RandomInt(rng, 1, std::max(1, n / 2)));
      std::vector<std::vector<int>> blocks(k);
      for (int e = 0; e < n; ++e) blocks[RandomInt(rng, 0, k - 1)].push_back(e);
      std::vector<std::vector<int>> kept;
      std::vector<int> caps;
      for (auto& block : blocks) {
        if (block.empty()) continue;
        caps.push_back(static_cast<int>(
            RandomInt(rng, 1, std::min<std::int64_t>(2, block.size()))));
        kept.push_back(std::move(block));
      }
      return MakePartition(n, std::move(kept), std::move(caps));
    }
    case 2: {
      int vertices = static_cast<int>(RandomInt(rng, 2, std::max(2, n)));
      std::vector<std::pair<int, int>> edges;
      for (int e = 0; e < n; ++e) {
        int a = static_cast<int>(RandomInt(rng, 0, vertices - 1));
        int c = static_cast<int>(RandomInt(rng, 0, vertices - 2));
        if (c >= a) ++c;
        edges.emplace_back(a, c);
      }
      return MakeGraphic(vertices, std::move(edges));
    }
    default: {
      int right = static_cast<int>(RandomInt(rng, 1, n));
      std::vector<std::vector<int>> adjacency(n);
      for (int e = 0; e < n; ++e) {
        int degree = static_cast<int>(RandomInt(rng, 1, std::min(2, right)));
        for (int d = 0; d < degree; ++d) {
          int v = static_cast<int>(RandomInt(rng, 0, right - 1));
          if (std::find(adjacency[e].begin(), adjacency[e].end(), v) ==
              adjacency[e].end()) {
            adjacency[e].push_back(v);
          }
        }
      }
      return MakeTransversal(right, std::move(adjacency));
    }
  }
}

PolymatroidPtr RandomPolymatroid(int n, std::int64_t max_scale,
                                 std::mt19937_64& rng) {
  max_scale = std::max<std::int64_t>(1, max_scale);
  switch (RandomInt(rng, 0, 2)) {
    case 0: {
      IntVector weights(n);
      for (auto& w : weights) w = RandomInt(rng, 0, max_scale);
      return MakeModular(std::move(weights));
    }
    case 1: {
      int k = static_cast<int>(RandomInt(rng, 1, n + 1));
      IntVector weights(k);
      for (auto& w : weights) w = RandomInt(rng, 1, max_scale);
      std::vector<std::vector<int>> covers(n);
      for (int e = 0; e < n; ++e) {
        for (int t = 0; t < k; ++t) {
          if (Coin(rng)) covers[e].push_back(t);
        }
      }
      return MakeCoverage(std::move(covers), std::move(weights));
    }
    default: {
      auto m = RandomMatroid(n, rng);
      return MakeScaledRank(std::move(m), RandomInt(rng, 1, max_scale));
    }
  }
}

CoreCoverInstance GenGapInstance(int m, std::int64_t b) {
  if (m < 2) throw ContractError("gap instance needs m >= 2");
  if (m > 24) throw CapExceeded("gap instance explicit table needs m <= 24");
  std::vector<int> table(std::size_t{1} << m);
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = Popcount(mask);
  }
  table.back() = m - 1;
  CoreCoverInstance core;
  core.matroid = MakeExplicitMatroid(m, std::move(table));
  core.polymatroid = MakeModular(IntVector(m, 1));
  core.b = b;
  return core;
}

const std::vector<std::string>& GeneratorFlavors() {
  static const std::vector<std::string> kFlavors = {
      "restricted-santa",     "unrelated-santa",
      "two-value-santa",      "planted-unrelated-santa",
      "restricted-makespan",  "unrelated-makespan",
      "two-value-makespan",   "santa-matroid",
      "makespan-matroid",     "two-value-santa-matroid",
      "two-value-makespan-matroid", "core-cover",
      "two-value-core-cover", "gap"};
  return kFlavors;
}

Instance GenRandom(const std::string& flavor, std::uint64_t seed,
                   const GenParams& params) {
  if (params.entities < 0 || params.entities > kMaxGround || params.items < 0) {
    throw ContractError("generator sizes out of range");
  }
  if (flavor == "restricted-santa") {
    return Classical(InstanceType::kSanta, true, false, seed, params);
  }
  if (flavor == "unrelated-santa") {
    return Classical(InstanceType::kSanta, false, false, seed, params);
  }
  if (flavor == "two-value-santa") {
    return Classical(InstanceType::kSanta, true, true, seed, params);
  }
  if (flavor == "planted-unrelated-santa") return PlantedSanta(seed, params);
  if (flavor == "restricted-makespan") {
    return Classical(InstanceType::kMakespan, true, false, seed, params);
  }
  if (flavor == "unrelated-makespan") {
    return Classical(InstanceType::kMakespan, false, false, seed, params);
  }
  if (flavor == "two-value-makespan") {
    return Classical(InstanceType::kMakespan, true, true, seed, params);
  }
  if (flavor == "santa-matroid") {
    return MatroidFlavor(InstanceType::kSantaMatroid, false, seed, params);
  }
  if (flavor == "makespan-matroid") {
    return MatroidFlavor(InstanceType::kMakespanMatroid, false, seed, params);
  }
  if (flavor == "two-value-santa-matroid") {
    return MatroidFlavor(InstanceType::kSantaMatroid, true, seed, params);
  }
  if (flavor == "two-value-makespan-matroid") {
    return MatroidFlavor(InstanceType::kMakespanMatroid, true, seed, params);
  }
  if (flavor == "core-cover") return RandomCore(seed, params);
  if (flavor == "two-value-core-cover") return TwoValueCore(seed, params);
  if (flavor == "gap") return GenGapInstance(params.entities, params.b);
  throw ContractError("unknown generator flavor '" + flavor + "'");
}

}  // namespace matalloc
