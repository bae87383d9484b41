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

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "matalloc/caps.h"
#include "matalloc/errors.h"
#include "matalloc/intersect.h"
#include "matalloc/polyops.h"
#include "matalloc/reductions.h"
#include "matalloc/rounding.h"

namespace matalloc {
namespace {

void RequireTwoItems(const AllocationInstance& inst, InstanceType type,
                     const char* what) {
  if (inst.type != type) {
    throw ContractError(std::string(what) + ": expected a " +
                        InstanceTypeName(type) + " instance");
  }
  ValidateInstance(inst);
  if (inst.num_items() != 2) {
    throw ContractError(std::string(what) + ": needs exactly two items, got " +
                        std::to_string(inst.num_items()));
  }
}

void RequireValid(const AllocationInstance& inst, const Allocation& alloc,
                  const char* what) {
  std::string err = CheckAllocation(inst, alloc);
  if (!err.empty()) throw ContractError(std::string(what) + ": " + err);
}

IntVector Constant(int n, std::int64_t c) { return IntVector(n, c); }

MatroidDualBundle BuildDuals(const AllocationInstance& inst, IntVector k,
                             InstanceType target_type) {
  const int n = inst.entities;
  MatroidDualBundle out;
  out.source = inst;
  out.k = k;
  out.target.type = target_type;
  out.target.entities = n;
  out.t = -1;
  for (int j = 0; j < 2; ++j) {
    PolymatroidPtr capped = MakeUniformlyCapped(inst.items[j].polymatroid, k[j]);
    out.capped.push_back(capped);
    Item item;
    item.value = inst.items[j].value;
    item.polymatroid = MakeDual(capped, Constant(n, k[j]));
    out.target.items.push_back(std::move(item));
    out.t += k[j] * inst.items[j].value;
  }
  return out;
}

// Σ_j w_j f_j as a sum of w_j copies of each f_j.
PolymatroidPtr Weighted(const AllocationInstance& inst, int item,
                        std::int64_t weight) {
  std::vector<PolymatroidPtr> parts(weight, inst.items[item].polymatroid);
  if (parts.empty()) return MakeZeroPolymatroid(inst.entities);
  if (parts.size() == 1) return parts.front();
  return MakeSum(std::move(parts));
}

// Splits y ∈ P(Σ parts) into per-part vectors after extending to a basis.
std::vector<IntVector> Split(const std::vector<PolymatroidPtr>& parts,
                             const IntVector& y) {
  if (parts.empty()) {
    if (Total(y) != 0) throw InternalError("nonzero vector with no parts");
    return {};
  }
  PolymatroidPtr sum = parts.size() == 1 ? parts.front() : MakeSum(parts);
  if (!Member(*sum, y)) throw InternalError("vector outside the merged polymatroid");
  IntVector basis = GreedyBasisAbove(*sum, y);
  return DecomposeMergedBasis(parts, basis);
}

BigInt Lcm(const BigInt& a, const BigInt& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace

// ---- matroid reductions with two items --------------------------------------

MatroidDualBundle MatroidMakespanToSanta(const AllocationInstance& inst) {
  RequireTwoItems(inst, InstanceType::kMakespanMatroid, "matroid_makespan_to_santa");
  IntVector k(2, 0);
  for (int j = 0; j < 2; ++j) {
    const Item& item = inst.items[j];
    if (item.value <= 0) throw ContractError("job sizes must be positive");
    k[j] = FloorToInt64(1 / item.value);
    const Polymatroid& p = *item.polymatroid;
    PolymatroidPtr capped = MakeUniformlyCapped(item.polymatroid, k[j]);
    if (capped->Value(capped->ground()) != p.Value(p.ground())) {
      throw GuessRejected("job " + std::to_string(j) +
                          ": no basis keeps every load within 1");
    }
  }
  return BuildDuals(inst, k, InstanceType::kSantaMatroid);
}

MatroidMakespanTranslation MatroidMakespanFromSanta(
    const MatroidDualBundle& bundle, const Allocation& santa_solution) {
  RequireValid(bundle.target, santa_solution, "matroid_makespan_from_santa");
  const int n = bundle.target.entities;
  MatroidMakespanTranslation out;
  out.santa_value = SantaObjective(bundle.target, santa_solution);
  out.santa_completed.x.resize(2);
  out.schedule.x.resize(2);
  for (int j = 0; j < 2; ++j) {
    IntVector dual =
        GreedyBasisAbove(*bundle.target.items[j].polymatroid, santa_solution.x[j]);
    IntVector y(n);
    for (int e = 0; e < n; ++e) y[e] = bundle.k[j] - dual[e];
    if (!IsBasis(*bundle.source.items[j].polymatroid, y)) {
      throw InternalError("complement of the dual basis is not a basis");
    }
    out.santa_completed.x[j] = std::move(dual);
    out.schedule.x[j] = std::move(y);
  }
  out.makespan = MakespanObjective(bundle.source, out.schedule);
  for (const Rational& total :
       DualIdentityTotals(bundle, out.schedule, out.santa_completed)) {
    if (total != 1 + bundle.t) throw InternalError("dual identity violated");
  }
  const Rational bound = 1 + bundle.t - out.santa_value;
  if (!out.makespan || *out.makespan > bound) {
    throw InternalError("makespan " + ToString(out.makespan) +
                        " exceeds 1 + t - value = " + ToString(bound));
  }
  return out;
}

MatroidDualBundle MatroidSantaToMakespan(const AllocationInstance& inst) {
  RequireTwoItems(inst, InstanceType::kSantaMatroid, "matroid_santa_to_makespan");
  IntVector k(2, 0);
  Rational top = 0;
  for (int j = 0; j < 2; ++j) {
    const Rational& v = inst.items[j].value;
    if (v <= 0 || denominator(Rational(1 / v)) != 1) {
      throw ContractError("resource values must be 1/b for integers b");
    }
    k[j] = ToInt64(numerator(Rational(1 / v)));
    top = std::max(top, v);
  }
  if (top != 1) throw ContractError("largest resource value must be 1");
  return BuildDuals(inst, k, InstanceType::kMakespanMatroid);
}

MatroidSantaTranslation MatroidSantaFromMakespan(const MatroidDualBundle& bundle,
                                                 const Allocation& schedule) {
  RequireValid(bundle.target, schedule, "matroid_santa_from_makespan");
  const int n = bundle.target.entities;
  MatroidSantaTranslation out;
  out.makespan = MakespanObjective(bundle.target, schedule);
  if (!out.makespan || *out.makespan >= 2) {
    throw ContractError("makespan " + ToString(out.makespan) + " is not below 2");
  }
  out.capped.x.resize(2);
  out.allocation.x.resize(2);
  for (int j = 0; j < 2; ++j) {
    IntVector y(n);
    for (int e = 0; e < n; ++e) y[e] = bundle.k[j] - schedule.x[j][e];
    if (!IsBasis(*bundle.capped[j], y)) {
      throw InternalError("cap minus dual basis is not a capped basis");
    }
    out.allocation.x[j] = GreedyBasisAbove(*bundle.source.items[j].polymatroid, y);
    out.capped.x[j] = std::move(y);
  }
  for (const Rational& total : DualIdentityTotals(bundle, out.capped, schedule)) {
    if (total != 1 + bundle.t) throw InternalError("dual identity violated");
  }
  out.value = SantaObjective(bundle.source, out.allocation);
  if (out.value < 2 - *out.makespan) {
    throw InternalError("value " + ToString(out.value) + " < 2 - makespan");
  }
  return out;
}

std::vector<Rational> DualIdentityTotals(const MatroidDualBundle& bundle,
                                         const Allocation& primal,
                                         const Allocation& dual) {
  const int n = bundle.source.entities;
  std::vector<Rational> out(n, 0);
  for (int j = 0; j < 2; ++j) {
    const Rational& v = bundle.source.items[j].value;
    for (int e = 0; e < n; ++e) out[e] += v * (primal.x[j][e] + dual.x[j][e]);
  }
  return out;
}

// ---- reduction to the core cover problem ------------------------------------

std::string CoreCaseName(CoreCase c) {
  switch (c) {
    case CoreCase::kEmpty: return "empty";
    case CoreCase::kAnyResource: return "any-resource";
    case CoreCase::kCover: return "cover";
    case CoreCase::kFractional: return "fractional";
    case CoreCase::kHeavyLight: return "heavy-light";
  }
  return "?";
}

PolymatroidPtr WeightedSumPolymatroid(const AllocationInstance& inst,
                                      const std::vector<int>& items,
                                      const std::vector<std::int64_t>& weights) {
  if (items.size() != weights.size()) throw ContractError("weights size mismatch");
  std::vector<PolymatroidPtr> parts;
  for (std::size_t q = 0; q < items.size(); ++q) {
    if (weights[q] < 0) throw ContractError("negative weight");
    for (std::int64_t c = 0; c < weights[q]; ++c) {
      parts.push_back(inst.items[items[q]].polymatroid);
    }
  }
  if (parts.empty()) return MakeZeroPolymatroid(inst.entities);
  if (parts.size() == 1) return parts.front();
  return MakeSum(std::move(parts));
}

CoreReduction ReduceToCore(const AllocationInstance& inst, const Rational& guess,
                           const CoreOptions& options) {
  if (inst.type != InstanceType::kSantaMatroid) {
    throw ContractError("reduce_to_core needs a resource-matroid Santa instance");
  }
  ValidateInstance(inst);
  const int m = inst.entities;
  const int items = inst.num_items();
  CoreReduction out;
  out.alpha = options.alpha ? *options.alpha : SoundnessAlpha(options.search.eps);
  if (out.alpha < 2) throw ContractError("reduce_to_core needs alpha >= 2");
  out.allocation.x.assign(items, IntVector(m, 0));
  if (guess <= 0 || m == 0) {
    out.value = SantaObjective(inst, out.allocation);
    return out;
  }

  std::vector<int> positive;
  std::vector<Rational> values;
  BigInt scale = 1;
  for (int j = 0; j < items; ++j) {
    const Rational& v = inst.items[j].value;
    if (v <= 0) continue;
    positive.push_back(j);
    values.push_back(v);
    scale = Lcm(scale, denominator(v));
  }
  if (positive.empty()) throw GuessRejected("no resource has positive value");
  out.scale = Rational(scale);
  std::vector<std::int64_t> scaled(items, 0);
  for (int j : positive) scaled[j] = ToInt64(numerator(Rational(inst.items[j].value * out.scale)));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const Rational u = values.front();
  const Rational w = values.back();
  const Rational threshold = guess / out.alpha;

  auto item_parts = [&](const std::vector<int>& list) {
    std::vector<PolymatroidPtr> parts;
    for (int j : list) parts.push_back(inst.items[j].polymatroid);
    return parts;
  };
  auto place = [&](const std::vector<int>& list, const std::vector<IntVector>& split) {
    for (std::size_t q = 0; q < list.size(); ++q) out.allocation.x[list[q]] = split[q];
  };
  auto run_cover = [&](MatroidPtr matroid, PolymatroidPtr poly, std::int64_t b) {
    out.core = CoreCoverInstance{std::move(matroid), std::move(poly), std::max<std::int64_t>(b, 1)};
    out.cover = SolveCover(*out.core, options.search);
    if (!out.cover->success) {
      throw GuessRejected("core cover failed at b = " + std::to_string(out.core->b) +
                          (out.cover->diagnostic.empty() ? "" : ": " + out.cover->diagnostic));
    }
  };
  // Rounds a fractional basis y of Σ scaled_j f_j over `list`, scaled units.
  auto round_light = [&](const std::vector<int>& list, const IntVector& y) {
    if (list.empty()) return;
    std::vector<PolymatroidPtr> parts;
    for (int j : list) parts.push_back(Weighted(inst, j, scaled[j]));
    std::vector<IntVector> split = Split(parts, y);
    AllocationInstance sub;
    sub.type = InstanceType::kSantaMatroid;
    sub.entities = m;
    FractionalAssignment x;
    for (std::size_t q = 0; q < list.size(); ++q) {
      sub.items.push_back(inst.items[list[q]]);
      std::vector<Rational> row(m);
      for (int e = 0; e < m; ++e) row[e] = Rational(split[q][e]) / scaled[list[q]];
      x.push_back(std::move(row));
    }
    Allocation rounded = RoundSanta(sub, x);
    place(list, rounded.x);
  };
  auto finish = [&](CoreCase kind, const Rational& promised) {
    out.kind = kind;
    out.promised = promised;
    std::string err = CheckAllocation(inst, out.allocation);
    if (!err.empty()) throw InternalError("reduce_to_core: " + err);
    out.value = SantaObjective(inst, out.allocation);
    if (out.value < promised) {
      throw InternalError("reduce_to_core (" + CoreCaseName(kind) + "): value " +
                          ToString(out.value) + " < " + ToString(promised));
    }
    return out;
  };

  if (values.size() <= 2 && !options.heavy_light) {
    if (threshold <= u) {
      std::vector<std::int64_t> ones(positive.size(), 1);
      PolymatroidPtr all = WeightedSumPolymatroid(inst, positive, ones);
      IntVector want = Constant(m, 1);
      if (!Member(*all, want)) throw GuessRejected("some player cannot get any resource");
      place(positive, Split(item_parts(positive), want));
      return finish(CoreCase::kAnyResource, u);
    }
    std::vector<int> heavy, light;
    for (int j : positive) (inst.items[j].value == w ? heavy : light).push_back(j);
    if (threshold <= w) {
      PolymatroidPtr big = WeightedSumPolymatroid(inst, heavy, std::vector<std::int64_t>(heavy.size(), 1));
      PolymatroidPtr small = WeightedSumPolymatroid(inst, light, std::vector<std::int64_t>(light.size(), 1));
      const std::int64_t b = CeilToInt64(threshold / u);
      run_cover(MakeInduced(big), small, b);
      place(heavy, Split(item_parts(heavy), ScaledIndicator(m, 1, out.cover->im)));
      place(light, Split(item_parts(light), out.cover->y));
      return finish(CoreCase::kCover, std::min(w, u * out.core->b));
    }
    std::vector<std::int64_t> weights;
    for (int j : positive) weights.push_back(scaled[j]);
    out.light = WeightedSumPolymatroid(inst, positive, weights);
    const Polymatroid& f3 = *out.light;
    std::int64_t lo = 0, hi = f3.Value(f3.ground()) / m;
    while (lo < hi) {
      std::int64_t mid = lo + (hi - lo + 1) / 2;
      if (Member(f3, Constant(m, mid))) lo = mid; else hi = mid - 1;
    }
    out.max_uniform = lo;
    if (Rational(lo) < guess * out.scale) {
      throw GuessRejected("max uniform load " + std::to_string(lo) +
                          " is below the scaled guess");
    }
    round_light(positive, GreedyBasisAbove(f3, Constant(m, lo)));
    return finish(CoreCase::kFractional, guess - w);
  }

  std::vector<int> heavy, light;
  for (int j : positive) {
    (inst.items[j].value >= guess / (2 * out.alpha) ? heavy : light).push_back(j);
  }
  std::vector<std::int64_t> light_weights;
  for (int j : light) light_weights.push_back(scaled[j]);
  out.light = WeightedSumPolymatroid(inst, light, light_weights);
  PolymatroidPtr big = WeightedSumPolymatroid(inst, heavy, std::vector<std::int64_t>(heavy.size(), 1));
  run_cover(MakeInduced(big), out.light, CeilToInt64(guess * out.scale / out.alpha));
  place(heavy, Split(item_parts(heavy), ScaledIndicator(m, 1, out.cover->im)));
  round_light(light, GreedyBasisAbove(*out.light, out.cover->y));
  return finish(CoreCase::kHeavyLight, guess / (2 * out.alpha));
}

// ---- guess loop -------------------------------------------------------------

std::optional<RestrictedSantaMatroid> RestrictedSantaAsMatroid(
    const AllocationInstance& inst) {
  if (inst.type != InstanceType::kSanta) {
    throw ContractError("restricted_santa_as_matroid: expected a santa instance");
  }
  ValidateInstance(inst);
  RestrictedSantaMatroid out;
  out.matroid.type = InstanceType::kSantaMatroid;
  out.matroid.entities = inst.entities;
  const int m = inst.entities;
  for (int j = 0; j < inst.num_items(); ++j) {
    Rational v = 0;
    Subset allowed = 0;
    for (int i = 0; i < m; ++i) {
      const Rational& w = *inst.items[j].values[i];
      if (w == 0) continue;
      if (v != 0 && w != v) return std::nullopt;
      v = w;
      allowed |= Bit(i);
    }
    if (allowed == 0) continue;
    Item item;
    item.value = v;
    item.polymatroid = MakeScaledRank(MakeZeroed(MakeUniform(m, 1), FullSet(m) & ~allowed), 1);
    out.matroid.items.push_back(std::move(item));
    out.item_of.push_back(j);
  }
  return out;
}

Allocation ClassicalFromRestricted(const AllocationInstance& classical,
                                   const RestrictedSantaMatroid& bundle,
                                   const Allocation& alloc) {
  if (alloc.x.size() != bundle.item_of.size()) {
    throw ContractError("classical_from_restricted: allocation has wrong item count");
  }
  std::vector<int> owner(classical.num_items(), -1);
  for (std::size_t k = 0; k < alloc.x.size(); ++k) {
    for (int i = 0; i < classical.entities; ++i) {
      if (alloc.x[k][i] > 0) owner[bundle.item_of[k]] = i;
    }
  }
  for (int j = 0; j < classical.num_items(); ++j) {
    if (owner[j] >= 0) continue;
    for (int i = 0; i < classical.entities; ++i) {
      if (owner[j] < 0 || *classical.Weight(j, i) > *classical.Weight(j, owner[j])) owner[j] = i;
    }
  }
  return AllocationFromOwners(classical, owner);
}

std::vector<Rational> GuessGrid(const AllocationInstance& inst) {
  const std::int64_t cap = GetCaps().guess_grid;
  std::set<Rational> sums = {Rational(0)};
  for (int j = 0; j < inst.num_items(); ++j) {
    const Item& item = inst.items[j];
    std::set<Rational> adds;
    if (inst.is_matroid()) {
      std::int64_t most = 0;
      const Polymatroid& p = *item.polymatroid;
      for (int e = 0; e < p.size(); ++e) most = std::max(most, p.Value(Bit(e)));
      for (std::int64_t c = 1; c <= most && item.value > 0; ++c) adds.insert(item.value * c);
    } else {
      for (const auto& v : item.values) {
        if (v && *v > 0) adds.insert(*v);
      }
    }
    std::set<Rational> next = sums;
    for (const Rational& s : sums) {
      for (const Rational& a : adds) {
        next.insert(s + a);
        if (static_cast<std::int64_t>(next.size()) > cap) {
          throw CapExceeded("guess grid exceeds " + std::to_string(cap) + " points");
        }
      }
    }
    sums = std::move(next);
  }
  return {sums.begin(), sums.end()};
}

std::vector<Rational> IntegerGrid(std::int64_t lo, std::int64_t hi) {
  if (hi >= lo && hi - lo + 1 > GetCaps().guess_grid) {
    throw CapExceeded("guess grid exceeds cap");
  }
  std::vector<Rational> out;
  for (std::int64_t v = lo; v <= hi; ++v) out.emplace_back(v);
  return out;
}

}  // namespace matalloc
