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

#ifndef MATALLOC_INSTANCE_H_
#define MATALLOC_INSTANCE_H_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "matalloc/matroid.h"
#include "matalloc/polymatroid.h"
#include "matalloc/rational.h"
#include "matalloc/subset.h"

namespace matalloc {

enum class InstanceType {
  kSanta,
  kMakespan,
  kSantaMatroid,
  kMakespanMatroid,
  kCoreCover,
};

std::string InstanceTypeName(InstanceType type);

// One resource (Santa) or job (Makespan).
struct Item {
  // Classical flavors: value or size per entity; nullopt is +infinity and
  // only allowed for Makespan.
  std::vector<ExtRational> values;
  // Matroid flavors: a single value or size and the polymatroid over
  // entities.
  Rational value = 0;
  PolymatroidPtr polymatroid;
};

// Santa Claus (max-min) or Makespan (min-max) over `entities` players or
// machines.
struct AllocationInstance {
  InstanceType type = InstanceType::kSanta;
  int entities = 0;
  std::vector<Item> items;

  bool is_santa() const {
    return type == InstanceType::kSanta || type == InstanceType::kSantaMatroid;
  }
  bool is_matroid() const {
    return type == InstanceType::kSantaMatroid ||
           type == InstanceType::kMakespanMatroid;
  }
  int num_items() const { return static_cast<int>(items.size()); }

  // Value or size of one unit of item j on entity i.
  ExtRational Weight(int j, int i) const;
  // Polymatroid governing item j. Classical items get the rank function of
  // "exactly one allowed entity"; Santa allows every player and Makespan
  // the machines with finite size.
  PolymatroidPtr ItemPolymatroid(int j) const;
};

struct CoreCoverInstance {
  MatroidPtr matroid;
  PolymatroidPtr polymatroid;
  std::int64_t b = 1;
  int size() const { return matroid ? matroid->size() : 0; }
};

using Instance = std::variant<AllocationInstance, CoreCoverInstance>;

// x[j] is item j's vector over entities.
struct Allocation {
  std::vector<IntVector> x;
};

// Throws ContractError on a malformed instance.
void ValidateInstance(const AllocationInstance& inst);
void ValidateInstance(const CoreCoverInstance& inst);

// Empty string when feasible, otherwise the first violation. Santa-matroid
// items need x_j in P_j; Makespan-matroid items need a basis; classical
// items go to exactly one entity (with finite size for Makespan).
std::string CheckAllocation(const AllocationInstance& inst,
                            const Allocation& alloc);

// Σ_j weight(j, i) x_j(i); nullopt if an infinite size is used.
ExtRational EntityLoad(const AllocationInstance& inst, const Allocation& alloc,
                       int entity);
// Minimum player value (0 with no players).
Rational SantaObjective(const AllocationInstance& inst,
                        const Allocation& alloc);
// Maximum machine load (0 with no machines, nullopt for infinity).
ExtRational MakespanObjective(const AllocationInstance& inst,
                              const Allocation& alloc);

// Allocation giving item j wholly to entity owner[j].
Allocation AllocationFromOwners(const AllocationInstance& inst,
                                const std::vector<int>& owner);

}  // namespace matalloc

#endif  // MATALLOC_INSTANCE_H_
