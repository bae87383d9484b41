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
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "matalloc/caps.h"
#include "matalloc/errors.h"
#include "matalloc/reductions.h"
#include "matalloc/rounding.h"

namespace matalloc {
namespace {

void RequireClassical(const AllocationInstance& inst, InstanceType type,
                      const char* what) {
  if (inst.type != type) {
    throw ContractError(std::string(what) + ": expected a " +
                        InstanceTypeName(type) + " instance");
  }
  ValidateInstance(inst);
}

// Owner of each classical item, -1 if unassigned.
std::vector<int> Owners(const Allocation& alloc) {
  std::vector<int> owner(alloc.x.size(), -1);
  for (std::size_t j = 0; j < alloc.x.size(); ++j) {
    for (std::size_t i = 0; i < alloc.x[j].size(); ++i) {
      if (alloc.x[j][i] > 0) owner[j] = static_cast<int>(i);
    }
  }
  return owner;
}

// Unassigned Santa resources go to the player valuing them most.
void AssignLeftovers(const AllocationInstance& inst, std::vector<int>& owner) {
  for (std::size_t j = 0; j < owner.size(); ++j) {
    if (owner[j] >= 0) continue;
    for (int i = 0; i < inst.entities; ++i) {
      if (owner[j] < 0 || *inst.Weight(j, i) > *inst.Weight(j, owner[j])) {
        owner[j] = i;
      }
    }
  }
}

void RequireValid(const AllocationInstance& inst, const Allocation& alloc,
                  const char* what) {
  std::string err = CheckAllocation(inst, alloc);
  if (!err.empty()) throw ContractError(std::string(what) + ": " + err);
}

// Kuhn's augmenting paths; match[left] = right or -1.
std::vector<int> MaxBipartiteMatching(
    int left, int right, const std::vector<std::vector<int>>& adj) {
  std::vector<int> match_left(left, -1), match_right(right, -1);
  for (int l = 0; l < left; ++l) {
    std::vector<char> seen(right, 0);
    std::function<bool(int)> try_augment = [&](int u) {
      for (int r : adj[u]) {
        if (seen[r]) continue;
        seen[r] = 1;
        if (match_right[r] < 0 || try_augment(match_right[r])) {
          match_right[r] = u;
          match_left[u] = r;
          return true;
        }
      }
      return false;
    };
    try_augment(l);
  }
  return match_left;
}

}  // namespace

// ---- configuration rounding ------------------------------------------------

Rational RoundValueDown(const Rational& v, const Rational& eps, int resources) {
  if (eps <= 0) throw ContractError("config rounding needs eps > 0");
  if (resources < 1) throw ContractError("config rounding needs resources >= 1");
  if (v >= 1) return 1;
  if (v < 1 / ((1 + eps) * resources)) return 0;
  const Rational ratio = 1 / (1 + eps);
  Rational p = 1;
  while (p > v) p *= ratio;
  return p;
}

std::vector<std::int64_t> ConfigCountOptions(const Rational& eps,
                                             int resources) {
  if (eps <= 0) throw ContractError("config rounding needs eps > 0");
  std::vector<std::int64_t> out;
  for (Rational p = 1; p <= resources; p *= (1 + eps)) {
    out.push_back(FloorToInt64(p));
    out.push_back(CeilToInt64(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t ValueClassCount(const Rational& eps) {
  if (eps <= 0) throw ContractError("config rounding needs eps > 0");
  return CeilToInt64(1 / (eps * eps * eps));
}

ConfigRoundResult ConfigRound(const AllocationInstance& inst,
                              const Rational& eps) {
  RequireClassical(inst, InstanceType::kSanta, "config_round");
  if (eps <= 0) throw ContractError("config rounding needs eps > 0");
  const int m = inst.entities;
  const int n = inst.num_items();
  ConfigRoundResult out;
  out.rounded = inst;
  out.configs.assign(m, {});
  if (n == 0) {
    for (auto& list : out.configs) list.push_back(Configuration{});
    return out;
  }
  for (auto& item : out.rounded.items) {
    for (auto& v : item.values) v = RoundValueDown(*v, eps, n);
  }
  for (const auto& item : out.rounded.items) {
    for (const auto& v : item.values) {
      if (*v > 0) out.types.push_back(*v);
    }
  }
  std::sort(out.types.begin(), out.types.end(), std::greater<>());
  out.types.erase(std::unique(out.types.begin(), out.types.end()),
                  out.types.end());
  const int tau = static_cast<int>(out.types.size());
  const std::vector<std::int64_t> options = ConfigCountOptions(eps, n);
  const std::int64_t kappa = ValueClassCount(eps);
  const std::int64_t cap = GetCaps().configurations;

  for (int i = 0; i < m; ++i) {
    std::vector<std::int64_t> mult(tau, 0);
    for (const auto& item : out.rounded.items) {
      const Rational& v = *item.values[i];
      if (v <= 0) continue;
      auto it = std::find(out.types.begin(), out.types.end(), v);
      ++mult[it - out.types.begin()];
    }
    std::vector<std::int64_t> counts(tau, 0);
    // Last nonzero count per value class; counts must strictly increase
    // toward smaller values inside a class.
    std::vector<std::int64_t> last(std::min<std::int64_t>(kappa, tau + 1), 0);
    auto& list = out.configs[i];
    auto rec = [&](auto&& self, int t) -> void {
      if (t == tau) {
        Configuration c;
        for (int s = 0; s < tau; ++s) {
          if (counts[s] > 0) c.counts.emplace_back(out.types[s], counts[s]);
        }
        list.push_back(std::move(c));
        if (static_cast<std::int64_t>(list.size()) > cap) {
          throw CapExceeded("config_round: player " + std::to_string(i) +
                            " exceeds " + std::to_string(cap) +
                            " configurations");
        }
        return;
      }
      const std::size_t cls = static_cast<std::size_t>(t % kappa);
      counts[t] = 0;
      self(self, t + 1);
      for (std::int64_t c : options) {
        if (c > mult[t]) break;
        if (last[cls] != 0 && c <= last[cls]) continue;
        std::int64_t saved = last[cls];
        counts[t] = c;
        last[cls] = c;
        self(self, t + 1);
        last[cls] = saved;
      }
      counts[t] = 0;
    };
    rec(rec, 0);
  }
  return out;
}

// ---- Santa with configurations -> Makespan gadget --------------------------

SantaMakespanBundle SantaToMakespan(const AllocationInstance& inst,
                                    const ConfigCollection& configs) {
  RequireClassical(inst, InstanceType::kSanta, "santa_to_makespan");
  const int m = inst.entities;
  const int n = inst.num_items();
  if (static_cast<int>(configs.size()) != m) {
    throw ContractError("santa_to_makespan: one configuration list per player");
  }
  SantaMakespanBundle out;
  out.santa = inst;
  out.configs.assign(m, {});
  for (int i = 0; i < m; ++i) {
    for (const Configuration& c : configs[i]) {
      for (const auto& [v, cnt] : c.counts) {
        if (v <= 0 || cnt < 0) {
          throw ContractError("santa_to_makespan: bad configuration entry");
        }
      }
      if (c.Total() >= 1) out.configs[i].push_back(c);
    }
    if (out.configs[i].empty()) {
      throw ContractError("santa_to_makespan: player " + std::to_string(i) +
                          " has no configuration of value >= 1");
    }
    for (int c = 0; c < static_cast<int>(out.configs[i].size()); ++c) {
      out.config_machine.emplace_back(i, c);
    }
  }
  out.resource_machine_offset = static_cast<int>(out.config_machine.size());
  const int machines = out.resource_machine_offset + n;

  AllocationInstance& mk = out.makespan;
  mk.type = InstanceType::kMakespan;
  mk.entities = machines;
  for (int i = 0; i < m; ++i) {
    Item job;
    job.values.assign(machines, std::nullopt);
    for (int h = 0; h < out.resource_machine_offset; ++h) {
      if (out.config_machine[h].first == i) job.values[h] = Rational(1);
    }
    mk.items.push_back(std::move(job));
  }
  for (int h = 0; h < out.resource_machine_offset; ++h) {
    auto [i, c] = out.config_machine[h];
    const Configuration& conf = out.configs[i][c];
    const Rational total = conf.Total();
    for (const auto& [v, cnt] : conf.counts) {
      for (std::int64_t r = 0; r < cnt; ++r) {
        Item job;
        job.values.assign(machines, std::nullopt);
        job.values[h] = v / total;
        for (int j = 0; j < n; ++j) {
          if (*inst.items[j].values[i] == v) {
            job.values[out.resource_machine_offset + j] = Rational(1);
          }
        }
        mk.items.push_back(std::move(job));
        out.config_jobs.push_back({i, c, v});
      }
    }
  }
  return out;
}

Allocation SantaFromMakespanSolution(const SantaMakespanBundle& bundle,
                                     const Allocation& schedule) {
  RequireValid(bundle.makespan, schedule, "santa_from_makespan_solution");
  const ExtRational makespan = MakespanObjective(bundle.makespan, schedule);
  if (!makespan || *makespan >= 2) {
    throw ContractError("santa_from_makespan_solution: makespan " +
                        ToString(makespan) + " is not below 2");
  }
  const int m = bundle.players();
  const std::vector<int> machine = Owners(schedule);
  std::vector<int> owner(bundle.santa.num_items(), -1);
  for (int i = 0; i < m; ++i) {
    const int h = machine[i];
    if (h < 0 || h >= bundle.resource_machine_offset ||
        bundle.config_machine[h].first != i) {
      throw ContractError("player job " + std::to_string(i) +
                          " is not on one of its configuration machines");
    }
    const int c = bundle.config_machine[h].second;
    for (std::size_t q = 0; q < bundle.config_jobs.size(); ++q) {
      const auto& job = bundle.config_jobs[q];
      if (job.player != i || job.config != c) continue;
      const int at = machine[m + q];
      if (at < bundle.resource_machine_offset) continue;
      const int r = at - bundle.resource_machine_offset;
      if (owner[r] >= 0) {
        throw InternalError("resource machine " + std::to_string(r) +
                            " holds two chosen configuration jobs");
      }
      owner[r] = i;
    }
  }
  AssignLeftovers(bundle.santa, owner);
  Allocation alloc = AllocationFromOwners(bundle.santa, owner);
  const Rational bound = 2 - *makespan;
  for (int i = 0; i < m; ++i) {
    Rational value = *EntityLoad(bundle.santa, alloc, i);
    if (value < bound) {
      throw InternalError("player " + std::to_string(i) + " gets " +
                          ToString(value) + " < " + ToString(bound));
    }
  }
  return alloc;
}

// ---- two-value Makespan -> Santa --------------------------------------------

TwoValueSizes TwoValueOf(const AllocationInstance& inst, bool skip_zero) {
  if (inst.is_matroid()) throw ContractError("two-value check needs a classical instance");
  std::vector<Rational> seen;
  for (const auto& item : inst.items) {
    for (const auto& v : item.values) {
      if (!v || (skip_zero && *v == 0)) continue;
      if (std::find(seen.begin(), seen.end(), *v) == seen.end()) {
        seen.push_back(*v);
      }
    }
  }
  std::sort(seen.begin(), seen.end());
  if (seen.empty()) throw ContractError("instance has no finite nonzero entries");
  if (seen.size() > 2) {
    throw ContractError("instance is not two-value: " +
                        std::to_string(seen.size()) + " distinct entries");
  }
  return {seen.front(), seen.back()};
}

TwoValueMakespanBundle TwoValueMakespanToSanta(const AllocationInstance& inst) {
  RequireClassical(inst, InstanceType::kMakespan, "twovalue_makespan_to_santa");
  TwoValueSizes sizes = TwoValueOf(inst, false);
  if (sizes.w <= MakeRational(1, 2)) {
    throw ContractError("big size " + ToString(sizes.w) +
                        " <= 1/2; use lst_baseline");
  }
  TwoValueMakespanBundle out;
  out.makespan = inst;
  out.u = sizes.u;
  out.w = sizes.w;
  out.machines = inst.entities;
  out.jobs = inst.num_items();
  out.k = out.jobs;
  if (out.u > 0) out.k = std::min<std::int64_t>(FloorToInt64(1 / out.u), out.jobs);
  out.t = out.w + out.k * out.u - 1;

  const int m = out.machines;
  const int n = out.jobs;
  AllocationInstance& s = out.santa;
  s.type = InstanceType::kSanta;
  s.entities = m + n;
  auto size_is = [&](int j, int i, const Rational& p) {
    const ExtRational& v = inst.items[j].values[i];
    return v && *v == p;
  };
  for (int i = 0; i < m; ++i) {
    Item big;
    big.values.assign(m + n, Rational(0));
    big.values[i] = out.w;
    for (int j = 0; j < n; ++j) {
      if (size_is(j, i, out.w)) big.values[m + j] = out.w;
    }
    s.items.push_back(std::move(big));
  }
  for (int i = 0; i < m; ++i) {
    for (std::int64_t l = 0; l < out.k; ++l) {
      Item small;
      small.values.assign(m + n, Rational(0));
      small.values[i] = out.u;
      if (out.u != out.w) {
        for (int j = 0; j < n; ++j) {
          if (size_is(j, i, out.u)) small.values[m + j] = out.w;
        }
      }
      s.items.push_back(std::move(small));
    }
  }
  return out;
}

TwoValueMakespanTranslation TwoValueSantaFromMakespan(
    const TwoValueMakespanBundle& bundle, const Allocation& santa_solution) {
  RequireValid(bundle.santa, santa_solution, "twovalue_santa_from_makespan");
  TwoValueMakespanTranslation out;
  out.santa_value = SantaObjective(bundle.santa, santa_solution);
  out.bound = 1 + bundle.t - out.santa_value;
  const int m = bundle.machines;
  const std::vector<int> owner = Owners(santa_solution);
  std::vector<int> job_machine(bundle.jobs, -1);
  for (int j = 0; j < bundle.jobs; ++j) {
    int kept = -1;
    for (int r = 0; r < bundle.santa.num_items(); ++r) {
      if (owner[r] != m + j) continue;
      const Rational& v = *bundle.santa.items[r].values[m + j];
      if (v <= 0) continue;
      if (kept < 0 || v > *bundle.santa.items[kept].values[m + j]) kept = r;
    }
    if (kept < 0) {
      throw ContractError("job player " + std::to_string(j) +
                          " holds no resource");
    }
    job_machine[j] = bundle.machine_of_resource(kept);
  }
  out.schedule = AllocationFromOwners(bundle.makespan, job_machine);
  out.makespan = MakespanObjective(bundle.makespan, out.schedule);
  for (int i = 0; i < m; ++i) {
    ExtRational load = EntityLoad(bundle.makespan, out.schedule, i);
    if (!load || *load > out.bound) {
      throw InternalError("machine " + std::to_string(i) + " load " +
                          ToString(load) + " exceeds 1 + t - value = " +
                          ToString(out.bound));
    }
  }
  return out;
}

// ---- two-value Santa via a Makespan solver ----------------------------------

TwoValueSantaResult TwoValueSantaToMakespan(const AllocationInstance& inst,
                                            const Rational& alpha,
                                            const MakespanSolver& solver) {
  RequireClassical(inst, InstanceType::kSanta, "twovalue_santa_to_makespan");
  if (alpha < 2) throw ContractError("twovalue_santa_to_makespan needs alpha >= 2");
  const int m = inst.entities;
  const int n = inst.num_items();
  TwoValueSantaResult out;
  if (m == 0) {
    out.which_case = 2;
    out.allocation.x.assign(n, IntVector{});
    return out;
  }
  TwoValueSizes vals;
  try {
    vals = TwoValueOf(inst, true);
  } catch (const ContractError&) {
    bool any = false;
    for (const auto& item : inst.items) {
      for (const auto& v : item.values) any = any || *v > 0;
    }
    if (any) throw;
    throw GuessRejected("no positive values; OPT < 1");
  }
  const Rational& u = vals.u;
  const Rational& w = vals.w;
  const Rational target = 1 / alpha;

  auto finish = [&](int which) {
    out.which_case = which;
    out.value = SantaObjective(inst, out.allocation);
    if (out.value < target) {
      throw InternalError("case " + std::to_string(which) + " value " +
                          ToString(out.value) + " < 1/alpha");
    }
    return out;
  };

  if (w < target) {
    std::optional<LpOptimum> lp = OptimizeAssignmentLp(inst);
    if (!lp || lp->t < 1) throw GuessRejected("assignment LP optimum below 1");
    out.allocation = RoundSanta(inst, lp->x);
    return finish(1);
  }

  std::vector<std::vector<int>> adj(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (*inst.items[j].values[i] == w) adj[i].push_back(j);
    }
  }
  std::vector<int> match = MaxBipartiteMatching(m, n, adj);
  if (std::all_of(match.begin(), match.end(), [](int r) { return r >= 0; })) {
    std::vector<int> owner(n, -1);
    for (int i = 0; i < m; ++i) owner[match[i]] = i;
    AssignLeftovers(inst, owner);
    out.allocation = AllocationFromOwners(inst, owner);
    return finish(2);
  }
  if (u == w) throw GuessRejected("no cover by big resources; OPT < 1");

  out.b = CeilToInt64(1 / u);
  AllocationInstance scaled = inst;
  const Rational small = MakeRational(1, out.b);
  for (auto& item : scaled.items) {
    for (auto& v : item.values) {
      if (*v == w) v = Rational(1);
      else if (*v == u) v = small;
    }
  }
  ConfigCollection configs(m);
  for (int i = 0; i < m; ++i) {
    configs[i].push_back(Configuration{{{Rational(1), 1}}});
    if (out.b > 1) configs[i].push_back(Configuration{{{small, out.b}}});
  }
  out.bundle = SantaToMakespan(scaled, configs);
  Allocation schedule = solver(out.bundle->makespan);
  std::string err = CheckAllocation(out.bundle->makespan, schedule);
  if (!err.empty()) throw ContractError("makespan solver: " + err);
  ExtRational makespan = MakespanObjective(out.bundle->makespan, schedule);
  if (!makespan || *makespan > 2 - target) {
    throw ContractError("makespan solver returned makespan " +
                        ToString(makespan) + " > 2 - 1/alpha");
  }
  out.allocation = SantaFromMakespanSolution(*out.bundle, schedule);
  return finish(3);
}

}  // namespace matalloc
