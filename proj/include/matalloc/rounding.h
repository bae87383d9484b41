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


#ifndef MATALLOC_ROUNDING_H_
#define MATALLOC_ROUNDING_H_

#include <optional>
#include <string>
#include <vector>

#include "matalloc/instance.h"
#include "matalloc/instance_json.h"
#include "matalloc/rational.h"

namespace matalloc {

// x[j][i]: fraction of item j on entity i.
using FractionalAssignment = FractionalMatrix;

// Empty when x is a feasible assignment-LP point for threshold t, otherwise
// the first violation. Santa items need x_j in P_j, Makespan items a basis.
std::string CheckFractional(const AllocationInstance& inst,
                            const FractionalAssignment& x, const Rational& t);

// Per-entity fractional load Σ_j weight(j, i) x_j(i). Makespan entries with
// infinite size must carry x = 0.
std::vector<Rational> FractionalLoads(const AllocationInstance& inst,
                                      const FractionalAssignment& x);

// Feasibility of the assignment LP at threshold t. Makespan drops the
// (item, machine) pairs with size above t.
std::optional<FractionalAssignment> SolveAssignmentLp(
    const AllocationInstance& inst, const Rational& t);

struct LpOptimum {
  Rational t;
  FractionalAssignment x;
};
// Santa: largest feasible t. Makespan: smallest t among the thresholds at
// which pairs with size above t are dropped. nullopt when infeasible.
std::optional<LpOptimum> OptimizeAssignmentLp(const AllocationInstance& inst);

// Per-entity slot structure of the rounding gadget.
struct GadgetSlot {
  int item = -1;  // -1 for the zero-value padding slot
  Rational weight = 0;
  Rational fraction = 0;
  std::int64_t degree = 0;
  Rational remainder = 0;
};
struct RoundingGadget {
  bool santa = true;
  std::vector<std::vector<GadgetSlot>> slots;  // [entity][position]
};
RoundingGadget BuildGadget(const AllocationInstance& inst,
                           const FractionalAssignment& x);

// Integral allocation with every player value at least its fractional value
// minus the largest value it has positive fraction of. Throws ContractError
// on infeasible x and InternalError when the guarantee is not met.
Allocation RoundSanta(const AllocationInstance& inst,
                      const FractionalAssignment& x);
// Integral allocation with every machine load at most its fractional load
// plus the largest size it has positive fraction of.
Allocation RoundMakespan(const AllocationInstance& inst,
                         const FractionalAssignment& x);

struct LstResult {
  Allocation allocation;
  Rational lp_threshold;  // smallest feasible LP threshold
  ExtRational makespan;
};
// Makespan within lp_threshold + largest used size.
LstResult LstBaseline(const AllocationInstance& inst);

}  // namespace matalloc

#endif  // MATALLOC_ROUNDING_H_
