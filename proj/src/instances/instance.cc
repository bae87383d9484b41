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

#include "matalloc/instance.h"

#include <string>

#include "matalloc/errors.h"
#include "matalloc/polyops.h"

namespace matalloc {

std::string InstanceTypeName(InstanceType type) {
  switch (type) {
    case InstanceType::kSanta:
      return "santa";
    case InstanceType::kMakespan:
      return "makespan";
    case InstanceType::kSantaMatroid:
      return "santa-matroid";
    case InstanceType::kMakespanMatroid:
      return "makespan-matroid";
    case InstanceType::kCoreCover:
      return "core-cover";
  }
  return "unknown";
}

ExtRational AllocationInstance::Weight(int j, int i) const {
  if (is_matroid()) return items[j].value;
  return items[j].values[i];
}

PolymatroidPtr AllocationInstance::ItemPolymatroid(int j) const {
  if (is_matroid()) return items[j].polymatroid;
  std::vector<int> allowed;
  std::vector<int> banned;
  for (int i = 0; i < entities; ++i) {
    if (is_santa() || items[j].values[i].has_value()) {
      allowed.push_back(i);
    } else {
      banned.push_back(i);
    }
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> capacities;
  if (!allowed.empty()) {
    blocks.push_back(allowed);
    capacities.push_back(1);
  }
  if (!banned.empty()) {
    blocks.push_back(banned);
    capacities.push_back(0);
  }
  return MakeScaledRank(MakePartition(entities, blocks, capacities), 1);
}

void ValidateInstance(const AllocationInstance& inst) {
  if (inst.type == InstanceType::kCoreCover) {
    throw ContractError("allocation instance cannot have core-cover type");
  }
  if (inst.entities < 0 || inst.entities > kMaxGround) {
    throw ContractError("entity count outside [0, 64]");
  }
  for (int j = 0; j < inst.num_items(); ++j) {
    const Item& item = inst.items[j];
    std::string where = "item " + std::to_string(j);
    if (inst.is_matroid()) {
      if (!item.polymatroid) throw ContractError(where + " lacks polymatroid");
      if (item.polymatroid->size() != inst.entities) {
        throw ContractError(where + " polymatroid ground size mismatch");
      }
      if (item.value < 0) throw ContractError(where + " has negative value");
    } else {
      if (static_cast<int>(item.values.size()) != inst.entities) {
        throw ContractError(where + " has wrong number of values");
      }
      bool finite = false;
      for (const auto& v : item.values) {
        if (!v.has_value()) {
          if (inst.is_santa()) {
            throw ContractError(where + " has an infinite Santa value");
          }
          continue;
        }
        if (*v < 0) throw ContractError(where + " has a negative value");
        finite = true;
      }
      if (!inst.is_santa() && !finite && inst.entities > 0) {
        throw ContractError(where + " fits on no machine");
      }
    }
  }
}

void ValidateInstance(const CoreCoverInstance& inst) {
  if (!inst.matroid || !inst.polymatroid) {
    throw ContractError("core cover instance lacks matroid or polymatroid");
  }
  if (inst.matroid->size() != inst.polymatroid->size()) {
    throw ContractError("core cover: ground sizes differ");
  }
  if (inst.b < 1) throw ContractError("core cover: b must be at least 1");
}

std::string CheckAllocation(const AllocationInstance& inst,
                            const Allocation& alloc) {
  if (alloc.x.size() != inst.items.size()) return "wrong number of items";
  for (int j = 0; j < inst.num_items(); ++j) {
    const IntVector& x = alloc.x[j];
    std::string where = "item " + std::to_string(j);
    if (static_cast<int>(x.size()) != inst.entities) {
      return where + ": wrong vector size";
    }
    for (auto v : x) {
      if (v < 0) return where + ": negative entry";
    }
    if (inst.is_matroid()) {
      const Polymatroid& p = *inst.items[j].polymatroid;
      if (inst.is_santa() ? !Member(p, x) : !IsBasis(p, x)) {
        return where + (inst.is_santa() ? ": not in its polymatroid"
                                        : ": not a basis");
      }
    } else {
      if (Total(x) != 1 && inst.entities > 0) {
        return where + ": not assigned to exactly one entity";
      }
      for (int i = 0; i < inst.entities; ++i) {
        if (x[i] > 0 && !inst.items[j].values[i].has_value()) {
          return where + ": assigned to a machine of infinite size";
        }
      }
    }
  }
  return "";
}

ExtRational EntityLoad(const AllocationInstance& inst, const Allocation& alloc,
                       int entity) {
  Rational total = 0;
  for (int j = 0; j < inst.num_items(); ++j) {
    std::int64_t units = alloc.x[j][entity];
    if (units == 0) continue;
    ExtRational w = inst.Weight(j, entity);
    if (!w.has_value()) return std::nullopt;
    total += *w * units;
  }
  return total;
}

Rational SantaObjective(const AllocationInstance& inst,
                        const Allocation& alloc) {
  Rational best = 0;
  for (int i = 0; i < inst.entities; ++i) {
    Rational v = *EntityLoad(inst, alloc, i);
    if (i == 0 || v < best) best = v;
  }
  return best;
}

ExtRational MakespanObjective(const AllocationInstance& inst,
                              const Allocation& alloc) {
  ExtRational worst = Rational(0);
  for (int i = 0; i < inst.entities; ++i) {
    worst = ExtMax(worst, EntityLoad(inst, alloc, i));
  }
  return worst;
}

Allocation AllocationFromOwners(const AllocationInstance& inst,
                                const std::vector<int>& owner) {
  Allocation alloc;
  alloc.x.assign(inst.num_items(), IntVector(inst.entities, 0));
  for (int j = 0; j < inst.num_items(); ++j) {
    if (owner[j] >= 0) alloc.x[j][owner[j]] = 1;
  }
  return alloc;
}

}  // namespace matalloc
