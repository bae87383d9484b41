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


#include "matalloc/rounding.h"

#include <algorithm>
#include <set>

#include "matalloc/errors.h"
#include "matalloc/intersect.h"
#include "matalloc/lp.h"
#include "matalloc/polyops.h"

namespace matalloc {
namespace {

bool Usable(const AllocationInstance& inst, int j, int i,
            const std::optional<Rational>& prune_above) {
  ExtRational w = inst.Weight(j, i);
  if (!w.has_value()) return false;
  if (!inst.is_santa() && prune_above.has_value() && *w > *prune_above) {
    return false;
  }
  return inst.ItemPolymatroid(j)->Value(Bit(i)) > 0;
}

struct AssignmentLp {
  LinearProgram lp;
  std::vector<std::vector<int>> var;  // [item][entity], -1 when absent
  bool trivially_infeasible = false;
};

// Builds the assignment constraints; the load rows are left to the caller.
AssignmentLp BuildAssignmentLp(const AllocationInstance& inst,
                               const std::optional<Rational>& prune_above) {
  AssignmentLp out;
  const int n = inst.entities;
  out.var.assign(inst.num_items(), std::vector<int>(n, -1));
  for (int j = 0; j < inst.num_items(); ++j) {
    PolymatroidPtr p = inst.ItemPolymatroid(j);
    Subset support = 0;
    for (int i = 0; i < n; ++i) {
      if (Usable(inst, j, i, prune_above)) {
        out.var[j][i] = out.lp.AddVariable();
        support |= Bit(i);
      }
    }
    const std::int64_t full = p->Value(p->ground());
    if (p->Value(support) != full) {
      // Some of the rank sits on pruned entities; no basis is reachable.
      out.trivially_infeasible = true;
      continue;
    }
    if (!inst.is_matroid()) {
      LinearProgram::Row row;
      for (int i : Elements(support)) row.push_back({out.var[j][i], 1});
      out.lp.AddConstraint(row, LpSense::kEqual, 1);
      continue;
    }
    ForEachSubsetOf(support, [&](Subset s) {
      if (s == 0) return;
      LinearProgram::Row row;
      for (int i : Elements(s)) row.push_back({out.var[j][i], 1});
      if (s == support) {
        out.lp.AddConstraint(row, LpSense::kEqual, full);
      } else if (Popcount(s) > 1 || p->Value(s) < full) {
        out.lp.AddConstraint(row, LpSense::kLessEqual, p->Value(s));
      }
    });
  }
  return out;
}

LinearProgram::Row LoadRow(const AllocationInstance& inst,
                           const AssignmentLp& alp, int i) {
  LinearProgram::Row row;
  for (int j = 0; j < inst.num_items(); ++j) {
    if (alp.var[j][i] >= 0) row.push_back({alp.var[j][i], *inst.Weight(j, i)});
  }
  return row;
}

FractionalAssignment Extract(const AllocationInstance& inst,
                             const AssignmentLp& alp, const LpResult& res) {
  FractionalAssignment x(inst.num_items(),
                         std::vector<Rational>(inst.entities, 0));
  for (int j = 0; j < inst.num_items(); ++j) {
    for (int i = 0; i < inst.entities; ++i) {
      if (alp.var[j][i] >= 0) x[j][i] = res.x[alp.var[j][i]];
    }
  }
  return x;
}

bool IsIntegral(const FractionalAssignment& x) {
  for (const auto& row : x) {
    for (const auto& v : row) {
      if (denominator(v) != 1) return false;
    }
  }
  return true;
}

Allocation ToAllocation(const FractionalAssignment& x) {
  Allocation alloc;
  for (const auto& row : x) {
    IntVector v;
    for (const auto& q : row) v.push_back(FloorToInt64(q));
    alloc.x.push_back(v);
  }
  return alloc;
}

// Largest weight with positive fraction on each entity.
std::vector<Rational> LargestUsedWeight(const AllocationInstance& inst,
                                        const FractionalAssignment& x) {
  std::vector<Rational> out(inst.entities, 0);
  for (int j = 0; j < inst.num_items(); ++j) {
    for (int i = 0; i < inst.entities; ++i) {
      if (x[j][i] > 0) out[i] = std::max(out[i], *inst.Weight(j, i));
    }
  }
  return out;
}

void RequireFeasible(const AllocationInstance& inst,
                     const FractionalAssignment& x) {
  // Loads are checked by the guarantee, so only the item constraints matter.
  Rational t = 0;
  if (!inst.is_santa()) {
    for (const auto& v : FractionalLoads(inst, x)) t = std::max(t, v);
  }
  std::string why = CheckFractional(inst, x, t);
  if (!why.empty()) throw ContractError("fractional assignment: " + why);
}

struct GadgetEdge {
  int item;
  int entity;
  int slot;  // index into the entity's slots
};

Allocation RoundWithGadget(const AllocationInstance& inst,
                           const FractionalAssignment& x) {
  RoundingGadget gadget = BuildGadget(inst, x);
  const bool santa = gadget.santa;
  std::vector<GadgetEdge> edges;
  IntVector caps;
  std::vector<std::vector<int>> slot_index(inst.entities);
  int num_slots = 0;
  for (int i = 0; i < inst.entities; ++i) {
    const auto& slots = gadget.slots[i];
    for (std::size_t k = 0; k < slots.size(); ++k) {
      slot_index[i].push_back(slots[k].degree > 0 ? num_slots++ : -1);
    }
    for (int k = 0; k < static_cast<int>(slots.size()); ++k) {
      int item = slots[k].item;
      if (item < 0) continue;
      std::int64_t single = inst.ItemPolymatroid(item)->Value(Bit(i));
      // Second edge: the nearest later (Santa) or earlier (Makespan) slot
      // with positive degree. Remainders carry across zero-degree slots.
      int other = -1;
      if (santa) {
        for (int t = k + 1; t < static_cast<int>(slots.size()); ++t) {
          if (slots[t].degree > 0) {
            other = t;
            break;
          }
        }
      } else {
        for (int t = k - 1; t >= 0; --t) {
          if (slots[t].degree > 0) {
            other = t;
            break;
          }
        }
      }
      for (int target : {k, other}) {
        if (target < 0) continue;
        std::int64_t cap = std::min(slots[target].degree, single);
        if (cap <= 0) continue;
        edges.push_back({item, i, target});
        caps.push_back(cap);
      }
    }
  }
  if (edges.size() > static_cast<std::size_t>(kMaxGround)) {
    throw CapExceeded("rounding gadget has " + std::to_string(edges.size()) +
                      " edges (limit 64)");
  }
  const int num_edges = static_cast<int>(edges.size());
  std::vector<PulledBackPolymatroid::Block> left(inst.num_items());
  std::vector<PulledBackPolymatroid::Block> right(num_slots);
  for (int j = 0; j < inst.num_items(); ++j) {
    left[j].inner = inst.ItemPolymatroid(j);
  }
  std::int64_t degree_total = 0;
  for (int i = 0; i < inst.entities; ++i) {
    for (std::size_t k = 0; k < gadget.slots[i].size(); ++k) {
      int s = slot_index[i][k];
      if (s < 0) continue;
      right[s].inner = MakeModular({gadget.slots[i][k].degree});
      degree_total += gadget.slots[i][k].degree;
    }
  }
  for (int e = 0; e < num_edges; ++e) {
    left[edges[e].item].members.push_back(e);
    left[edges[e].item].targets.push_back(edges[e].entity);
    int s = slot_index[edges[e].entity][edges[e].slot];
    right[s].members.push_back(e);
    right[s].targets.push_back(0);
  }
  CommonVector common =
      PolymatroidIntersectionMax(MakePulledBack(num_edges, std::move(left)),
                                 MakePulledBack(num_edges, std::move(right)),
                                 caps);
  Allocation alloc;
  alloc.x.assign(inst.num_items(), IntVector(inst.entities, 0));
  for (int e = 0; e < num_edges; ++e) {
    alloc.x[edges[e].item][edges[e].entity] += common.x[e];
  }
  if (santa) {
    if (Total(common.x) != degree_total) {
      throw InternalError("rounding gadget: degree constraints not tight");
    }
    if (!inst.is_matroid()) {
      // Unplaced resources go to the player holding their largest fraction.
      for (int j = 0; j < inst.num_items(); ++j) {
        if (Total(alloc.x[j]) > 0 || inst.entities == 0) continue;
        int best = 0;
        for (int i = 1; i < inst.entities; ++i) {
          if (x[j][i] > x[j][best]) best = i;
        }
        alloc.x[j][best] = 1;
      }
    }
  } else {
    for (int j = 0; j < inst.num_items(); ++j) {
      if (!IsBasis(*inst.ItemPolymatroid(j), alloc.x[j])) {
        throw InternalError("rounding gadget: left side is not a basis");
      }
    }
  }
  return alloc;
}

void CheckGuarantee(const AllocationInstance& inst,
                    const FractionalAssignment& x, const Allocation& alloc) {
  std::string why = CheckAllocation(inst, alloc);
  if (!why.empty()) throw InternalError("rounded allocation: " + why);
  std::vector<Rational> frac = FractionalLoads(inst, x);
  std::vector<Rational> largest = LargestUsedWeight(inst, x);
  for (int i = 0; i < inst.entities; ++i) {
    ExtRational load = EntityLoad(inst, alloc, i);
    bool ok = inst.is_santa() ? *load >= frac[i] - largest[i]
                              : load.has_value() && *load <= frac[i] + largest[i];
    if (!ok) {
      throw InternalError("rounding guarantee violated on entity " +
                          std::to_string(i));
    }
  }
}

}  // namespace

std::vector<Rational> FractionalLoads(const AllocationInstance& inst,
                                      const FractionalAssignment& x) {
  std::vector<Rational> load(inst.entities, 0);
  if (static_cast<int>(x.size()) != inst.num_items()) {
    throw ContractError("fractional assignment: wrong number of items");
  }
  for (int j = 0; j < inst.num_items(); ++j) {
    if (static_cast<int>(x[j].size()) != inst.entities) {
      throw ContractError("fractional assignment: wrong vector size");
    }
    for (int i = 0; i < inst.entities; ++i) {
      if (x[j][i] == 0) continue;
      ExtRational w = inst.Weight(j, i);
      if (!w.has_value()) {
        throw ContractError("fractional assignment uses an infinite size");
      }
      load[i] += *w * x[j][i];
    }
  }
  return load;
}

std::string CheckFractional(const AllocationInstance& inst,
                            const FractionalAssignment& x, const Rational& t) {
  if (static_cast<int>(x.size()) != inst.num_items()) {
    return "wrong number of items";
  }
  for (int j = 0; j < inst.num_items(); ++j) {
    std::string where = "item " + std::to_string(j);
    if (static_cast<int>(x[j].size()) != inst.entities) {
      return where + ": wrong vector size";
    }
    for (int i = 0; i < inst.entities; ++i) {
      if (x[j][i] < 0) return where + ": negative entry";
      if (x[j][i] > 0 && !inst.Weight(j, i).has_value()) {
        return where + ": fraction on a machine of infinite size";
      }
    }
    PolymatroidPtr item = inst.ItemPolymatroid(j);
    const Polymatroid& p = *item;
    if (inst.is_santa() ? !MemberFractional(p, x[j])
                        : !IsBasisFractional(p, x[j])) {
      return where + (inst.is_santa() ? ": outside its polymatroid"
                                      : ": not a basis");
    }
  }
  std::vector<Rational> load = FractionalLoads(inst, x);
  for (int i = 0; i < inst.entities; ++i) {
    if (inst.is_santa() ? load[i] < t : load[i] > t) {
      return "entity " + std::to_string(i) + " load " + ToString(load[i]) +
             (inst.is_santa() ? " below " : " above ") + ToString(t);
    }
  }
  return "";
}

std::optional<FractionalAssignment> SolveAssignmentLp(
    const AllocationInstance& inst, const Rational& t) {
  ValidateInstance(inst);
  AssignmentLp alp = BuildAssignmentLp(inst, t);
  if (alp.trivially_infeasible) return std::nullopt;
  for (int i = 0; i < inst.entities; ++i) {
    alp.lp.AddConstraint(LoadRow(inst, alp, i),
                         inst.is_santa() ? LpSense::kGreaterEqual
                                         : LpSense::kLessEqual,
                         t);
  }
  LpResult res = alp.lp.Solve();
  if (res.status != LpStatus::kOptimal) return std::nullopt;
  return Extract(inst, alp, res);
}

std::optional<LpOptimum> OptimizeAssignmentLp(const AllocationInstance& inst) {
  ValidateInstance(inst);
  auto solve = [&](const std::optional<Rational>& prune)
      -> std::optional<LpOptimum> {
    AssignmentLp alp = BuildAssignmentLp(inst, prune);
    if (alp.trivially_infeasible) return std::nullopt;
    int t = alp.lp.AddVariable();
    for (int i = 0; i < inst.entities; ++i) {
      LinearProgram::Row row = LoadRow(inst, alp, i);
      row.push_back({t, -1});
      alp.lp.AddConstraint(row,
                           inst.is_santa() ? LpSense::kGreaterEqual
                                           : LpSense::kLessEqual,
                           0);
    }
    alp.lp.SetObjective({{t, 1}}, inst.is_santa());
    LpResult res = alp.lp.Solve();
    if (res.status != LpStatus::kOptimal) return std::nullopt;
    return LpOptimum{res.x[t], Extract(inst, alp, res)};
  };
  if (inst.is_santa()) {
    if (inst.entities == 0) return LpOptimum{0, FractionalAssignment(inst.num_items())};
    return solve(std::nullopt);
  }
  std::set<Rational> thresholds = {0};
  for (int j = 0; j < inst.num_items(); ++j) {
    for (int i = 0; i < inst.entities; ++i) {
      ExtRational w = inst.Weight(j, i);
      if (w.has_value()) thresholds.insert(*w);
    }
  }
  std::optional<LpOptimum> best;
  for (const Rational& s : thresholds) {
    if (best.has_value() && s >= best->t) break;
    auto res = solve(s);
    if (!res.has_value()) continue;
    res->t = std::max(res->t, s);
    if (!best.has_value() || res->t < best->t) best = res;
  }
  return best;
}

RoundingGadget BuildGadget(const AllocationInstance& inst,
                           const FractionalAssignment& x) {
  RoundingGadget g;
  g.santa = inst.is_santa();
  g.slots.resize(inst.entities);
  for (int i = 0; i < inst.entities; ++i) {
    std::vector<int> order;
    for (int j = 0; j < inst.num_items(); ++j) {
      if (x[j][i] > 0) order.push_back(j);
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return *inst.Weight(a, i) > *inst.Weight(b, i);
    });
    auto& slots = g.slots[i];
    for (int j : order) {
      GadgetSlot s;
      s.item = j;
      s.weight = *inst.Weight(j, i);
      s.fraction = x[j][i];
      slots.push_back(s);
    }
    slots.push_back(GadgetSlot{});  // zero-weight padding
    Rational remainder = 0;
    for (auto& s : slots) {
      if (g.santa) {
        Rational level = remainder + s.fraction;
        s.degree = FloorToInt64(level);
        remainder = level - s.degree;
      } else {
        Rational level = s.fraction - remainder;
        s.degree = std::max<std::int64_t>(0, CeilToInt64(level));
        remainder = s.degree - level;
      }
      s.remainder = remainder;
    }
  }
  return g;
}

Allocation RoundSanta(const AllocationInstance& inst,
                      const FractionalAssignment& x) {
  if (!inst.is_santa()) throw ContractError("round_santa needs a Santa instance");
  RequireFeasible(inst, x);
  Allocation alloc = IsIntegral(x) ? ToAllocation(x) : RoundWithGadget(inst, x);
  if (IsIntegral(x) && !inst.is_matroid()) {
    // Integral classical input may leave a resource unassigned.
    for (int j = 0; j < inst.num_items(); ++j) {
      if (Total(alloc.x[j]) == 0 && inst.entities > 0) alloc.x[j][0] = 1;
    }
  }
  CheckGuarantee(inst, x, alloc);
  return alloc;
}

Allocation RoundMakespan(const AllocationInstance& inst,
                         const FractionalAssignment& x) {
  if (inst.is_santa()) {
    throw ContractError("round_makespan needs a Makespan instance");
  }
  RequireFeasible(inst, x);
  Allocation alloc = IsIntegral(x) ? ToAllocation(x) : RoundWithGadget(inst, x);
  CheckGuarantee(inst, x, alloc);
  return alloc;
}

LstResult LstBaseline(const AllocationInstance& inst) {
  if (inst.is_santa()) throw ContractError("lst_baseline needs Makespan");
  auto opt = OptimizeAssignmentLp(inst);
  if (!opt.has_value()) throw ContractError("assignment LP is infeasible");
  LstResult out;
  out.lp_threshold = opt->t;
  out.allocation = RoundMakespan(inst, opt->x);
  out.makespan = MakespanObjective(inst, out.allocation);
  return out;
}

}  // namespace matalloc
