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


#include "matalloc/merge.h"

#include <algorithm>

#include "matalloc/errors.h"
#include "matalloc/intersect.h"
#include "matalloc/polyops.h"

namespace matalloc {

MergedInstance MergeEqualValue(const AllocationInstance& inst) {
  if (!inst.is_matroid()) {
    throw ContractError("merge_equal_value needs a matroid-flavor instance");
  }
  MergedInstance out;
  out.merged.type = inst.type;
  out.merged.entities = inst.entities;
  for (int j = 0; j < inst.num_items(); ++j) {
    auto it = std::find_if(out.groups.begin(), out.groups.end(),
                           [&](const std::vector<int>& g) {
                             return inst.items[g.front()].value ==
                                    inst.items[j].value;
                           });
    if (it == out.groups.end()) {
      out.groups.push_back({j});
    } else {
      it->push_back(j);
    }
  }
  for (const auto& group : out.groups) {
    Item item;
    item.value = inst.items[group.front()].value;
    if (group.size() == 1) {
      item.polymatroid = inst.items[group.front()].polymatroid;
    } else {
      std::vector<PolymatroidPtr> parts;
      for (int j : group) parts.push_back(inst.items[j].polymatroid);
      item.polymatroid = MakeSum(std::move(parts));
    }
    out.merged.items.push_back(std::move(item));
  }
  return out;
}

Allocation SplitMergedAllocation(const AllocationInstance& original,
                                 const MergedInstance& merged,
                                 const Allocation& alloc) {
  if (alloc.x.size() != merged.groups.size()) {
    throw ContractError("split: allocation does not match merged instance");
  }
  Allocation out;
  out.x.assign(original.num_items(), IntVector(original.entities, 0));
  for (std::size_t g = 0; g < merged.groups.size(); ++g) {
    const auto& group = merged.groups[g];
    const IntVector& y = alloc.x[g];
    if (group.size() == 1) {
      out.x[group.front()] = y;
      continue;
    }
    std::vector<PolymatroidPtr> parts;
    for (int j : group) parts.push_back(original.items[j].polymatroid);
    IntVector target = y;
    if (original.is_santa()) {
      const Polymatroid& sum = *merged.merged.items[g].polymatroid;
      if (!Member(sum, y)) {
        throw ContractError("split: vector outside the merged polymatroid");
      }
      target = GreedyBasisAbove(sum, y);
    }
    auto pieces = DecomposeMergedBasis(parts, target);
    // Trim the excess introduced by extending y; lowering stays feasible.
    for (int e = 0; e < original.entities; ++e) {
      std::int64_t excess = target[e] - y[e];
      for (std::size_t k = 0; k < pieces.size() && excess > 0; ++k) {
        std::int64_t cut = std::min(excess, pieces[k][e]);
        pieces[k][e] -= cut;
        excess -= cut;
      }
    }
    for (std::size_t k = 0; k < group.size(); ++k) {
      out.x[group[k]] = std::move(pieces[k]);
    }
  }
  return out;
}

}  // namespace matalloc
