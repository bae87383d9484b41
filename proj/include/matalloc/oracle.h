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


#ifndef MATALLOC_ORACLE_H_
#define MATALLOC_ORACLE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matalloc/configuration.h"
#include "matalloc/instance.h"

namespace matalloc {

struct OptReport {
  // Santa: best minimum value. Makespan: best maximum load.
  Rational value = 0;
  Allocation witness;
  std::uint64_t search_nodes = 0;
  std::uint64_t search_space = 0;  // leaves of the unpruned search tree
  double elapsed_seconds = 0;
};

// Exhaustive optimum. Classical flavors enumerate item-to-entity maps
// (product of option counts capped by Caps::classical_enum); matroid flavors
// enumerate the integer bases of each item's polymatroid (product capped by
// Caps::matroid_enum). Branch and bound never changes the optimum. Throws
// CapExceeded beyond the caps.
OptReport BruteOptSanta(const AllocationInstance& inst);
OptReport BruteOptMakespan(const AllocationInstance& inst);

// All integer bases of p in lexicographic order.
std::vector<IntVector> EnumerateBases(const Polymatroid& p,
                                      std::uint64_t limit);

// feasible[S] is true when θ·S lies in P, i.e. f(T) ≥ θ|T| for all T ⊆ S.
std::vector<bool> UniformLoadTable(const Polymatroid& p, const Rational& theta);

// max_load[S] = largest integer b with b·S in P (min over nonempty T ⊆ S of
// floor(f(T)/|T|)); max_load[∅] is INT64_MAX.
std::vector<std::int64_t> MaxUniformLoadTable(const Polymatroid& p);

// Largest b admitting a cover (I_M independent, y in P, y(i) ≥ b off I_M);
// nullopt when the matroid alone covers E.
std::optional<std::int64_t> BruteMaxCoverB(const Matroid& m,
                                           const Polymatroid& p);

// Best Santa value over allocations where each player's received multiset of
// positive values matches one of its configurations exactly. Players with
// an empty configuration list make the instance infeasible (value -1).
// Resources may stay unassigned; in the witness they go to no one.
OptReport BruteOptConfigurations(const AllocationInstance& inst,
                                 const ConfigCollection& configs);

struct AxiomReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Exhaustive for n ≤ 12 (throws ContractError beyond): r(∅)=0, unit
// increase, submodularity via the local form on (S, i, j).
AxiomReport CheckMatroidAxioms(const Matroid& m);
// f(∅)=0, monotone, submodular (local form), plus the augmentation property
// on `samples` random pairs of members.
AxiomReport CheckPolymatroidAxioms(const Polymatroid& p, int samples = 32,
                                   std::uint64_t seed = 1);

}  // namespace matalloc

#endif  // MATALLOC_ORACLE_H_
