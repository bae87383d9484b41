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

#ifndef MATALLOC_REDUCTIONS_H_
#define MATALLOC_REDUCTIONS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matalloc/configuration.h"
#include "matalloc/errors.h"
#include "matalloc/instance.h"
#include "matalloc/localsearch.h"
#include "matalloc/rational.h"

namespace matalloc {

// ---- configuration rounding ------------------------------------------------

// Largest power of 1/(1+eps) not above v; values >= 1 map to 1 and values
// below 1/((1+eps)n) map to 0.
Rational RoundValueDown(const Rational& v, const Rational& eps, int resources);

// {floor((1+eps)^l), ceil((1+eps)^l) : (1+eps)^l <= n}, ascending, no zero.
std::vector<std::int64_t> ConfigCountOptions(const Rational& eps, int resources);

// ceil(1/eps^3).
std::int64_t ValueClassCount(const Rational& eps);

struct ConfigRoundResult {
  AllocationInstance rounded;
  ConfigCollection configs;
  std::vector<Rational> types;  // distinct positive rounded values, descending
};

// Classical Santa only. Counts per value type are limited to the player's
// number of resources of that type; the per-player total is capped by
// Caps::configurations.
ConfigRoundResult ConfigRound(const AllocationInstance& inst,
                              const Rational& eps);

// ---- Santa with configurations -> Makespan gadget --------------------------

struct SantaMakespanBundle {
  AllocationInstance santa;     // classical Santa, values as given
  ConfigCollection configs;     // configurations with total >= 1 only
  AllocationInstance makespan;  // the gadget
  // Machines: configuration machines first, then one per resource.
  std::vector<std::pair<int, int>> config_machine;  // -> (player, config)
  int resource_machine_offset = 0;
  // Jobs: one per player first, then configuration jobs.
  struct ConfigJob {
    int player = 0;
    int config = 0;
    Rational value;
  };
  std::vector<ConfigJob> config_jobs;  // job index = players + position
  int players() const { return santa.entities; }
};

SantaMakespanBundle SantaToMakespan(const AllocationInstance& inst,
                                    const ConfigCollection& configs);

// Requires makespan < 2 on the gadget; every player ends with value at least
// 2 - makespan in the bundle's Santa instance (checked).
Allocation SantaFromMakespanSolution(const SantaMakespanBundle& bundle,
                                     const Allocation& schedule);

// ---- two-value Makespan -> Santa --------------------------------------------

struct TwoValueSizes {
  Rational u;  // small
  Rational w;  // big
};

// Distinct finite sizes (or values, for Santa) of a classical instance,
// ignoring zeros when `skip_zero`. Throws ContractError for more than two.
TwoValueSizes TwoValueOf(const AllocationInstance& inst, bool skip_zero);

struct TwoValueMakespanBundle {
  AllocationInstance makespan;
  AllocationInstance santa;
  Rational u, w, t;
  std::int64_t k = 0;
  int machines = 0;
  int jobs = 0;
  // Santa players: machine players 0..machines-1, then job players.
  // Resources: big resource of machine i at i, small resources of machine i
  // at machines + i*k + l.
  int machine_of_resource(int r) const {
    return r < machines ? r : static_cast<int>((r - machines) / k);
  }
};

// k = min(floor(1/u), jobs) with u = 0 giving k = jobs; t = w + k*u - 1.
// Requires w > 1/2 (smaller big sizes belong to lst_baseline).
TwoValueMakespanBundle TwoValueMakespanToSanta(const AllocationInstance& inst);

struct TwoValueMakespanTranslation {
  Allocation schedule;
  Rational santa_value;  // value of the given Santa solution
  Rational bound;        // 1 + t - santa_value
  ExtRational makespan;
};

// Each job player keeps one resource (highest value, lowest index).
TwoValueMakespanTranslation TwoValueSantaFromMakespan(
    const TwoValueMakespanBundle& bundle, const Allocation& santa_solution);

// ---- two-value Santa via a Makespan solver ----------------------------------

using MakespanSolver = std::function<Allocation(const AllocationInstance&)>;

struct TwoValueSantaResult {
  int which_case = 0;  // 1 additive rounding, 2 matching, 3 gadget
  Allocation allocation;
  Rational value;
  std::int64_t b = 0;  // case 3 only
  std::optional<SantaMakespanBundle> bundle;
};

// Instance normalized so that OPT >= 1; the solver must return a gadget
// schedule of makespan at most 2 - 1/alpha, otherwise ContractError.
// Throws GuessRejected when no player assignment of value >= 1 can exist.
TwoValueSantaResult TwoValueSantaToMakespan(const AllocationInstance& inst,
                                            const Rational& alpha,
                                            const MakespanSolver& solver);

// ---- matroid reductions with two items --------------------------------------

struct MatroidDualBundle {
  AllocationInstance source;  // instance being reduced
  AllocationInstance target;  // built instance over the same entities
  IntVector k;                // per item: cap and dual offset
  std::vector<PolymatroidPtr> capped;
  Rational t;                 // k1*p1 + k2*p2 - 1
};

// Two-job Makespan with OPT <= 1 to a Santa instance with values p1, p2.
// GuessRejected if capping at k_j = floor(1/p_j) loses the rank.
MatroidDualBundle MatroidMakespanToSanta(const AllocationInstance& inst);

struct MatroidMakespanTranslation {
  Allocation schedule;
  Allocation santa_completed;  // dual bases after extension
  Rational santa_value;
  ExtRational makespan;
};

MatroidMakespanTranslation MatroidMakespanFromSanta(
    const MatroidDualBundle& bundle, const Allocation& santa_solution);

// Two-resource Santa with values exactly 1 and 1/b to a Makespan instance
// with sizes 1 and 1/b over duals of the capped polymatroids.
MatroidDualBundle MatroidSantaToMakespan(const AllocationInstance& inst);

struct MatroidSantaTranslation {
  Allocation allocation;
  Allocation capped;  // cap - dual schedule, before extension
  ExtRational makespan;
  Rational value;
};

// Needs makespan < 2; asserts value >= 2 - makespan.
MatroidSantaTranslation MatroidSantaFromMakespan(
    const MatroidDualBundle& bundle, const Allocation& schedule);

// p1*y1 + p2*y2 + p1*ybar1 + p2*ybar2 per entity.
std::vector<Rational> DualIdentityTotals(const MatroidDualBundle& bundle,
                                         const Allocation& primal,
                                         const Allocation& dual);

// ---- reduction to the core cover problem ------------------------------------

enum class CoreCase {
  kEmpty,          // guess <= 0 or no players
  kAnyResource,    // guess/alpha <= u
  kCover,          // u < guess/alpha <= w
  kFractional,     // guess/alpha > w
  kHeavyLight,     // more than two values, or forced
};
std::string CoreCaseName(CoreCase c);

struct CoreOptions {
  std::optional<Rational> alpha;  // defaults to SoundnessAlpha(search.eps)
  SearchOptions search;
  bool heavy_light = false;       // use the split even for two values
};

struct CoreReduction {
  CoreCase kind = CoreCase::kEmpty;
  Rational alpha;
  Rational scale = 1;  // values were multiplied by this to become integers
  std::optional<CoreCoverInstance> core;
  std::optional<CoverResult> cover;
  PolymatroidPtr light;        // fractional / heavy-light: weighted sum
  std::int64_t max_uniform = 0;  // fractional case: max b with b*E in P3
  Allocation allocation;
  Rational value;
  Rational promised;           // value the case guarantees
};

// Restricted resource-matroid Santa. Throws GuessRejected when the guess is
// refuted.
CoreReduction ReduceToCore(const AllocationInstance& inst,
                           const Rational& guess, const CoreOptions& options);

// Σ_j v_j f_j over the listed matroid items, with integer v_j.
PolymatroidPtr WeightedSumPolymatroid(const AllocationInstance& inst,
                                      const std::vector<int>& items,
                                      const std::vector<std::int64_t>& weights);

// ---- guess loop -------------------------------------------------------------

// Restricted classical Santa (every v_ij in {0, v_j}) as a Santa-matroid
// instance: resource j may go to one player that values it. Resources no
// one values are dropped; item_of[k] is the classical index of item k.
struct RestrictedSantaMatroid {
  AllocationInstance matroid;
  std::vector<int> item_of;
};
std::optional<RestrictedSantaMatroid> RestrictedSantaAsMatroid(
    const AllocationInstance& inst);
// Maps a matroid allocation back; unused resources go to the player
// valuing them most.
Allocation ClassicalFromRestricted(const AllocationInstance& classical,
                                   const RestrictedSantaMatroid& bundle,
                                   const Allocation& alloc);

// Distinct sums of item contributions, ascending, starting at 0. Classical
// items add one of their positive values; matroid items add c*v for c up to
// their largest singleton rank. Throws CapExceeded past Caps::guess_grid.
std::vector<Rational> GuessGrid(const AllocationInstance& inst);
std::vector<Rational> IntegerGrid(std::int64_t lo, std::int64_t hi);

template <class Solution>
struct GuessOutcome {
  std::optional<Rational> guess;
  std::optional<Solution> solution;
  int calls = 0;
  std::string diagnostic;
};

// Binary search for the last grid point where `solver` succeeds, assuming
// success is monotone. nullopt or GuessRejected counts as failure.
template <class Solution>
GuessOutcome<Solution> GuessLoop(
    const std::vector<Rational>& grid,
    const std::function<std::optional<Solution>(const Rational&)>& solver) {
  GuessOutcome<Solution> out;
  auto attempt = [&](const Rational& t) -> std::optional<Solution> {
    ++out.calls;
    try {
      return solver(t);
    } catch (const GuessRejected&) {
      return std::nullopt;
    }
  };
  std::int64_t lo = 0;
  std::int64_t hi = static_cast<std::int64_t>(grid.size()) - 1;
  while (lo <= hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    std::optional<Solution> s = attempt(grid[mid]);
    if (s) {
      out.guess = grid[mid];
      out.solution = std::move(s);
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  if (!out.guess) out.diagnostic = "solver never succeeded on the grid";
  return out;
}

}  // namespace matalloc

#endif  // MATALLOC_REDUCTIONS_H_
