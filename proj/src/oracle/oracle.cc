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


#include "matalloc/oracle.h"

#include <algorithm>
#include <chrono>
#include <limits>
#include <random>
#include <utility>

#include "matalloc/caps.h"
#include "matalloc/errors.h"
#include "matalloc/polyops.h"

namespace matalloc {
namespace {

struct Option {
  IntVector x;
  std::vector<std::pair<int, Rational>> adds;  // entity, load increase
};

using OptionTable = std::vector<std::vector<Option>>;

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::uint64_t CheckedProduct(const OptionTable& options, std::int64_t cap,
                             const char* what) {
  long double product = 1;
  for (const auto& list : options) {
    product *= static_cast<long double>(std::max<std::size_t>(1, list.size()));
    if (product > static_cast<long double>(cap)) {
      throw CapExceeded(std::string(what) + ": search space exceeds cap " +
                        std::to_string(cap));
    }
  }
  return static_cast<std::uint64_t>(product);
}

Option SingleOwner(int entities, int owner, const Rational& w) {
  Option o;
  o.x.assign(entities, 0);
  o.x[owner] = 1;
  if (w != 0) o.adds.emplace_back(owner, w);
  return o;
}

OptionTable BuildOptions(const AllocationInstance& inst,
                         std::uint64_t* space) {
  OptionTable table(inst.num_items());
  if (inst.is_matroid()) {
    std::int64_t cap = GetCaps().matroid_enum;
    for (int j = 0; j < inst.num_items(); ++j) {
      const Item& item = inst.items[j];
      for (IntVector& basis :
           EnumerateBases(*item.polymatroid, static_cast<std::uint64_t>(cap))) {
        Option o;
        for (int i = 0; i < inst.entities; ++i) {
          if (basis[i] > 0 && item.value != 0) {
            o.adds.emplace_back(i, item.value * basis[i]);
          }
        }
        o.x = std::move(basis);
        table[j].push_back(std::move(o));
      }
    }
    *space = CheckedProduct(table, cap, "matroid brute force");
    return table;
  }
  for (int j = 0; j < inst.num_items(); ++j) {
    const Item& item = inst.items[j];
    int zero_owner = -1;
    for (int i = 0; i < inst.entities; ++i) {
      const ExtRational& w = item.values[i];
      if (!w.has_value()) continue;
      if (inst.is_santa() && *w == 0) {
        // All zero-value owners are interchangeable; keep the first.
        if (zero_owner < 0) zero_owner = i;
        continue;
      }
      table[j].push_back(SingleOwner(inst.entities, i, *w));
    }
    if (zero_owner >= 0) {
      table[j].push_back(SingleOwner(inst.entities, zero_owner, 0));
    }
  }
  *space = CheckedProduct(table, GetCaps().classical_enum,
                          "classical brute force");
  return table;
}

class BranchAndBound {
 public:
  BranchAndBound(const AllocationInstance& inst, const OptionTable& options)
      : inst_(inst), options_(options), loads_(inst.entities, Rational(0)),
        choice_(inst.num_items(), 0) {
    // potential_[j][i]: most item j..n-1 can still add to entity i.
    const int n = inst.num_items();
    potential_.assign(n + 1, std::vector<Rational>(inst.entities, Rational(0)));
    for (int j = n - 1; j >= 0; --j) {
      potential_[j] = potential_[j + 1];
      std::vector<Rational> best(inst.entities, Rational(0));
      for (const Option& o : options[j]) {
        for (const auto& [i, w] : o.adds) best[i] = std::max(best[i], w);
      }
      for (int i = 0; i < inst.entities; ++i) potential_[j][i] += best[i];
    }
  }

  OptReport Run() {
    OptReport report;
    for (const auto& list : options_) {
      if (list.empty()) {
        throw ContractError("brute force: an item has no feasible placement");
      }
    }
    Search(0);
    report.value = found_ ? best_ : Rational(0);
    report.search_nodes = nodes_;
    report.witness.x.resize(inst_.num_items());
    for (int j = 0; j < inst_.num_items(); ++j) {
      report.witness.x[j] = options_[j][best_choice_.empty() ? 0 : best_choice_[j]].x;
    }
    return report;
  }

 private:
  Rational Objective() const {
    if (loads_.empty()) return 0;
    if (inst_.is_santa()) return *std::min_element(loads_.begin(), loads_.end());
    return *std::max_element(loads_.begin(), loads_.end());
  }

  bool Prunable(int j) const {
    if (!found_ || loads_.empty()) return false;
    if (inst_.is_santa()) {
      Rational bound = loads_[0] + potential_[j][0];
      for (std::size_t i = 1; i < loads_.size(); ++i) {
        bound = std::min(bound, loads_[i] + potential_[j][i]);
      }
      return bound <= best_;
    }
    return *std::max_element(loads_.begin(), loads_.end()) >= best_;
  }

  Rational Score(const Option& o) const {
    // Santa: prefer feeding the poorest entity; Makespan: the lowest peak.
    Rational score = inst_.is_santa() ? Rational(0) : Rational(0);
    bool first = true;
    for (const auto& [i, w] : o.adds) {
      Rational after = loads_[i] + w;
      if (inst_.is_santa()) {
        if (first || loads_[i] < score) score = loads_[i];
      } else {
        score = std::max(score, after);
      }
      first = false;
    }
    return score;
  }

  void Search(int j) {
    ++nodes_;
    if (j == inst_.num_items()) {
      Rational value = Objective();
      bool better = !found_ || (inst_.is_santa() ? value > best_ : value < best_);
      if (better) {
        found_ = true;
        best_ = value;
        best_choice_ = choice_;
      }
      return;
    }
    if (Prunable(j)) return;
    const auto& list = options_[j];
    std::vector<int> order(list.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    std::vector<Rational> scores;
    for (const Option& o : list) scores.push_back(Score(o));
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      bool a_empty = list[a].adds.empty();
      bool b_empty = list[b].adds.empty();
      if (a_empty != b_empty) return inst_.is_santa() ? b_empty : a_empty;
      return scores[a] < scores[b];
    });
    for (int k : order) {
      for (const auto& [i, w] : list[k].adds) loads_[i] += w;
      choice_[j] = k;
      Search(j + 1);
      for (const auto& [i, w] : list[k].adds) loads_[i] -= w;
      if (Prunable(j)) return;
    }
  }

  const AllocationInstance& inst_;
  const OptionTable& options_;
  std::vector<std::vector<Rational>> potential_;
  std::vector<Rational> loads_;
  std::vector<int> choice_;
  std::vector<int> best_choice_;
  Rational best_ = 0;
  bool found_ = false;
  std::uint64_t nodes_ = 0;
};

OptReport BruteOpt(const AllocationInstance& inst, bool santa) {
  ValidateInstance(inst);
  if (inst.is_santa() != santa) {
    throw ContractError(santa ? "expected a Santa instance"
                              : "expected a Makespan instance");
  }
  auto start = std::chrono::steady_clock::now();
  std::uint64_t space = 0;
  OptionTable options = BuildOptions(inst, &space);
  OptReport report = BranchAndBound(inst, options).Run();
  report.search_space = space;
  report.elapsed_seconds = SecondsSince(start);
  std::string err = CheckAllocation(inst, report.witness);
  if (!err.empty()) throw InternalError("brute force witness invalid: " + err);
  return report;
}

void CheckGroundLimit(int n, int limit, const char* what) {
  if (n > limit) {
    throw CapExceeded(std::string(what) + ": ground size " + std::to_string(n) +
                      " exceeds " + std::to_string(limit));
  }
}

}  // namespace

std::vector<IntVector> EnumerateBases(const Polymatroid& p,
                                      std::uint64_t limit) {
  const int n = p.size();
  CheckGroundLimit(n, GetCaps().sfm_ground, "basis enumeration");
  const std::int64_t full = p.Value(p.ground());
  std::vector<IntVector> out;
  IntVector x(n, 0);
  std::vector<std::int64_t> singleton(n);
  for (int i = 0; i < n; ++i) singleton[i] = p.Value(Bit(i));
  // Elements i..n-1 can hold at most f({i..n-1}) units in total.
  std::vector<std::int64_t> tail(n + 1, 0);
  for (int i = 0; i < n; ++i) tail[i] = p.Value(FullSet(n) & ~FullSet(i));
  std::int64_t prefix = 0;
  auto recurse = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (prefix == full) {
        out.push_back(x);
        if (out.size() > limit) {
          throw CapExceeded("basis enumeration exceeds cap " +
                            std::to_string(limit));
        }
      }
      return;
    }
    for (std::int64_t v = 0; v <= singleton[i]; ++v) {
      x[i] = v;
      prefix += v;
      bool viable = prefix + tail[i + 1] >= full && Member(p, x);
      if (viable) self(self, i + 1);
      prefix -= v;
      if (!viable && prefix + v + tail[i + 1] >= full) break;
    }
    x[i] = 0;
  };
  recurse(recurse, 0);
  return out;
}

OptReport BruteOptSanta(const AllocationInstance& inst) {
  return BruteOpt(inst, true);
}

OptReport BruteOptMakespan(const AllocationInstance& inst) {
  return BruteOpt(inst, false);
}

std::vector<bool> UniformLoadTable(const Polymatroid& p, const Rational& theta) {
  const int n = p.size();
  CheckGroundLimit(n, GetCaps().sfm_ground, "uniform load table");
  std::vector<bool> ok(std::size_t{1} << n, true);
  for (Subset s = 1; s < (Subset{1} << n); ++s) {
    bool good = Rational(p.Value(s)) >= theta * Popcount(s);
    for (Subset rest = s; good && rest != 0; rest &= rest - 1) {
      good = ok[s & ~(rest & -rest)];
    }
    ok[s] = good;
  }
  return ok;
}

std::vector<std::int64_t> MaxUniformLoadTable(const Polymatroid& p) {
  const int n = p.size();
  CheckGroundLimit(n, GetCaps().sfm_ground, "uniform load table");
  std::vector<std::int64_t> best(std::size_t{1} << n,
                                 std::numeric_limits<std::int64_t>::max());
  for (Subset s = 1; s < (Subset{1} << n); ++s) {
    std::int64_t v = p.Value(s) / Popcount(s);
    for (Subset rest = s; rest != 0; rest &= rest - 1) {
      v = std::min(v, best[s & ~(rest & -rest)]);
    }
    best[s] = v;
  }
  return best;
}

std::optional<std::int64_t> BruteMaxCoverB(const Matroid& m,
                                           const Polymatroid& p) {
  if (m.size() != p.size()) {
    throw ContractError("max cover: ground sizes differ");
  }
  const int n = m.size();
  auto table = MaxUniformLoadTable(p);
  std::int64_t best = 0;
  for (Subset ind = 0; ind < (Subset{1} << n); ++ind) {
    if (!m.IsIndependent(ind)) continue;
    best = std::max(best, table[FullSet(n) & ~ind]);
  }
  if (best == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return best;
}

OptReport BruteOptConfigurations(const AllocationInstance& inst,
                                 const ConfigCollection& configs) {
  if (inst.type != InstanceType::kSanta) {
    throw ContractError("configuration optimum needs a classical Santa instance");
  }
  if (static_cast<int>(configs.size()) != inst.entities) {
    throw ContractError("configuration collection size mismatch");
  }
  auto start = std::chrono::steady_clock::now();
  const int m = inst.entities;
  const int n = inst.num_items();
  long double space = 1;
  for (int j = 0; j < n; ++j) {
    space *= m + 1;
    if (space > static_cast<long double>(GetCaps().classical_enum)) {
      throw CapExceeded("configuration brute force exceeds cap");
    }
  }
  // Value types in play and per-player count ceilings.
  std::vector<Rational> types;
  for (const auto& item : inst.items) {
    for (const auto& v : item.values) {
      if (*v > 0) types.push_back(*v);
    }
  }
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  auto type_of = [&](const Rational& v) {
    return static_cast<int>(std::lower_bound(types.begin(), types.end(), v) -
                            types.begin());
  };
  const int k = static_cast<int>(types.size());
  std::vector<std::vector<std::int64_t>> ceiling(m, std::vector<std::int64_t>(k, 0));
  std::vector<std::vector<std::vector<std::int64_t>>> wanted(m);
  for (int i = 0; i < m; ++i) {
    for (const Configuration& c : configs[i]) {
      std::vector<std::int64_t> counts(k, 0);
      bool usable = true;
      for (const auto& [v, cnt] : c.counts) {
        auto it = std::lower_bound(types.begin(), types.end(), v);
        if (it == types.end() || *it != v) {
          usable = false;  // needs a value no resource offers
          break;
        }
        counts[it - types.begin()] = cnt;
      }
      if (!usable) continue;
      for (int t = 0; t < k; ++t) ceiling[i][t] = std::max(ceiling[i][t], counts[t]);
      wanted[i].push_back(std::move(counts));
    }
  }
  std::vector<std::vector<int>> item_type(n, std::vector<int>(m, -1));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      const Rational& v = *inst.items[j].values[i];
      if (v > 0) item_type[j][i] = type_of(v);
    }
  }

  OptReport report;
  report.search_space = static_cast<std::uint64_t>(space);
  std::vector<std::vector<std::int64_t>> have(m, std::vector<std::int64_t>(k, 0));
  std::vector<int> owner(n, -1);
  std::vector<int> best_owner;
  Rational best = -1;
  auto recurse = [&](auto&& self, int j) -> void {
    ++report.search_nodes;
    if (j == n) {
      Rational worst = -1;
      for (int i = 0; i < m; ++i) {
        const auto& list = wanted[i];
        auto it = std::find(list.begin(), list.end(), have[i]);
        if (it == list.end()) return;
        Rational total = 0;
        for (int t = 0; t < k; ++t) total += types[t] * (*it)[t];
        if (worst < 0 || total < worst) worst = total;
      }
      if (m == 0) worst = 0;
      if (worst > best) {
        best = worst;
        best_owner = owner;
      }
      return;
    }
    owner[j] = -1;
    self(self, j + 1);
    for (int i = 0; i < m; ++i) {
      int t = item_type[j][i];
      if (t < 0 || have[i][t] >= ceiling[i][t]) continue;
      ++have[i][t];
      owner[j] = i;
      self(self, j + 1);
      owner[j] = -1;
      --have[i][t];
    }
  };
  recurse(recurse, 0);
  report.value = best;
  report.witness.x.assign(n, IntVector(m, 0));
  for (int j = 0; j < n && !best_owner.empty(); ++j) {
    if (best_owner[j] >= 0) report.witness.x[j][best_owner[j]] = 1;
  }
  report.elapsed_seconds = SecondsSince(start);
  return report;
}

AxiomReport CheckMatroidAxioms(const Matroid& m) {
  const int n = m.size();
  if (n > 12) throw ContractError("axiom check supports n <= 12");
  AxiomReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    if (report.violations.size() < 20) report.violations.push_back(std::move(msg));
  };
  if (m.Rank(0) != 0) fail("r(empty) != 0");
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    int rs = m.Rank(s);
    for (int i = 0; i < n; ++i) {
      if (Contains(s, i)) continue;
      int ri = m.Rank(s | Bit(i));
      if (ri < rs || ri > rs + 1) {
        fail("unit increase violated at S=" + SubsetToString(s) +
             ", i=" + std::to_string(i));
      }
      for (int j = i + 1; j < n; ++j) {
        if (Contains(s, j)) continue;
        if (ri + m.Rank(s | Bit(j)) < m.Rank(s | Bit(i) | Bit(j)) + rs) {
          fail("submodularity violated at S=" + SubsetToString(s) +
               ", i=" + std::to_string(i) + ", j=" + std::to_string(j));
        }
      }
    }
  }
  return report;
}

AxiomReport CheckPolymatroidAxioms(const Polymatroid& p, int samples,
                                   std::uint64_t seed) {
  const int n = p.size();
  if (n > 12) throw ContractError("axiom check supports n <= 12");
  AxiomReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    if (report.violations.size() < 20) report.violations.push_back(std::move(msg));
  };
  if (p.Value(0) != 0) fail("f(empty) != 0");
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    std::int64_t fs = p.Value(s);
    for (int i = 0; i < n; ++i) {
      if (Contains(s, i)) continue;
      std::int64_t fi = p.Value(s | Bit(i));
      if (fi < fs) {
        fail("monotonicity violated at S=" + SubsetToString(s) +
             ", i=" + std::to_string(i));
      }
      for (int j = i + 1; j < n; ++j) {
        if (Contains(s, j)) continue;
        if (fi + p.Value(s | Bit(j)) < p.Value(s | Bit(i) | Bit(j)) + fs) {
          fail("submodularity violated at S=" + SubsetToString(s) +
               ", i=" + std::to_string(i) + ", j=" + std::to_string(j));
        }
      }
    }
  }
  if (!report.ok) return report;

  std::mt19937_64 rng(seed);
  auto random_member = [&]() {
    IntVector x(n, 0);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (int e : order) {
      std::int64_t slack = std::numeric_limits<std::int64_t>::max();
      ForEachSubsetOf(FullSet(n) & ~Bit(e), [&](Subset t) {
        slack = std::min(slack, p.Value(t | Bit(e)) - Sum(x, t | Bit(e)));
      });
      x[e] += static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(slack + 1));
    }
    return x;
  };
  for (int s = 0; s < samples; ++s) {
    IntVector x = random_member();
    IntVector y = random_member();
    if (Total(x) == Total(y)) continue;
    if (Total(x) > Total(y)) std::swap(x, y);
    bool augmented = false;
    for (int i = 0; i < n && !augmented; ++i) {
      if (x[i] >= y[i]) continue;
      ++x[i];
      augmented = Member(p, x);
      --x[i];
    }
    if (!augmented) fail("augmentation property violated on sampled pair");
  }
  return report;
}

}  // namespace matalloc
