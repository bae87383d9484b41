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


#ifndef MATALLOC_MERGE_H_
#define MATALLOC_MERGE_H_

#include <vector>

#include "matalloc/instance.h"

namespace matalloc {

struct MergedInstance {
  AllocationInstance merged;
  // groups[g] lists original item indices merged into item g, ascending.
  std::vector<std::vector<int>> groups;
};

// Groups matroid-flavor items by value (first occurrence order); each group's
// polymatroid is the sum of its members'. Singleton groups keep the original
// oracle.
MergedInstance MergeEqualValue(const AllocationInstance& inst);

// Splits an allocation of the merged instance back into one vector per
// original item. Makespan needs bases; Santa vectors are first extended to a
// basis of the sum, decomposed, then trimmed back so per-entity units match.
Allocation SplitMergedAllocation(const AllocationInstance& original,
                                 const MergedInstance& merged,
                                 const Allocation& alloc);

}  // namespace matalloc

#endif  // MATALLOC_MERGE_H_
