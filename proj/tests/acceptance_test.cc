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

// Acceptance runner: one PASS/FAIL line per criterion, exit 1 on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matalloc/caps.h"
#include "matalloc/errors.h"
#include "matalloc/generators.h"
#include "matalloc/localsearch.h"
#include "matalloc/merge.h"
#include "matalloc/oracle.h"
#include "matalloc/polyops.h"
#include "matalloc/reductions.h"
#include "matalloc/rounding.h"

namespace matalloc {
namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return MakeRational(p, q); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Counts checks and keeps the first violation message.
class Tally {
 public:
  void Check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++violations_;
    if (first_.empty()) first_ = what;
  }
  std::int64_t violations() const { return violations_; }
  std::int64_t checks() const { return checks_; }
  std::string First() const { return first_.empty() ? "" : "; first: " + first_; }

 private:
  std::int64_t checks_ = 0;
  std::int64_t violations_ = 0;
  std::string first_;
};

template <typename T>
std::string Str(const T& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

AllocationInstance Classical(InstanceType type, std::vector<std::vector<ExtRational>> rows,
                             int entities) {
  AllocationInstance inst;
  inst.type = type;
  inst.entities = entities;
  for (auto& row : rows) {
    Item item;
    item.values = std::move(row);
    inst.items.push_back(std::move(item));
  }
  return inst;
}

AllocationInstance TwoItemMatroid(InstanceType type, Rational v1, Rational v2, int n,
                                  std::mt19937_64& rng) {
  AllocationInstance inst;
  inst.type = type;
  inst.entities = n;
  for (const Rational& v : {v1, v2}) {
    Item item;
    item.value = v;
    item.polymatroid = RandomPolymatroid(n, 2, rng);
    inst.items.push_back(item);
  }
  return inst;
}

// ---- criteria 1 and 7 ----

struct CoreOutcome {
  Outcome approx;
  Outcome nodes;
};

CoreOutcome CoreApproximation() {
  const Rational eps = R(1, 10);
  const Rational alpha = 4 + 40 * eps;
  SearchOptions options;
  options.eps = eps;
  Tally ratio, certs, sound, covers, nodes;
  Rational worst = 0;
  std::uint64_t max_nodes = 0;
  int instances = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    GenParams params;
    params.entities = 4 + static_cast<int>(seed % 7);
    params.b = 1 + static_cast<std::int64_t>(seed % 3);
    auto inst = std::get<CoreCoverInstance>(GenRandom("two-value-core-cover", seed, params));
    const int n = inst.size();
    const std::string tag = "seed " + std::to_string(seed);
    std::optional<std::int64_t> opt = BruteMaxCoverB(*inst.matroid, *inst.polymatroid);
    std::map<std::int64_t, bool> seen;
    auto run = [&](std::int64_t b) {
      auto it = seen.find(b);
      if (it != seen.end()) return it->second;
      CoreCoverInstance copy = inst;
      copy.b = b;
      CoverResult r = SolveCover(copy, options);
      max_nodes = std::max(max_nodes, r.max_call_nodes);
      nodes.Check(WithinNodeBound(r.max_call_nodes, n, eps),
                  tag + " b " + std::to_string(b) + " nodes " + std::to_string(r.max_call_nodes));
      if (r.success) {
        bool ok = copy.matroid->IsIndependent(r.im) && Member(*copy.polymatroid, r.y);
        for (int i = 0; i < n && ok; ++i) ok = Contains(r.im, i) || r.y[i] >= b;
        covers.Check(ok, tag + " invalid cover at b " + std::to_string(b));
      }
      for (const CoverFailure& f : r.failures) {
        CertificateReport rep = VerifyCertificate(f.certificate, f.state, eps);
        certs.Check(rep.ok(), tag + " " + rep.Describe());
        if (n <= 8) {
          sound.Check(ExhaustiveSoundness(f.state, eps, alpha), tag + " unsound certificate");
        }
      }
      seen[b] = r.success;
      return r.success;
    };
    ++instances;
    bool own = run(inst.b);
    if (!opt.has_value()) {
      ratio.Check(own, tag + " matroid covers E but the search failed");
      continue;
    }
    // No cover exists above opt; these runs exercise failures and recursion.
    for (std::int64_t b = *opt + 1; b <= *opt + 3; ++b) {
      covers.Check(!run(b), tag + " success above opt at b " + std::to_string(b));
    }
    std::int64_t best = 0;
    for (std::int64_t b = *opt; b >= 1; --b) {
      if (run(b)) {
        best = b;
        break;
      }
    }
    if (*opt > 0) {
      Rational r = Rational(*opt) / std::max<std::int64_t>(best, 1);
      if (best == 0) r = Rational(*opt) * 1000;
      worst = std::max(worst, r);
    }
    ratio.Check(alpha * best >= *opt,
                tag + " b*=" + std::to_string(best) + " opt=" + std::to_string(*opt));
  }
  CoreOutcome out;
  const std::int64_t bad = ratio.violations() + certs.violations() + sound.violations() +
                           covers.violations();
  out.approx.pass = bad == 0 && instances >= 300;
  out.approx.detail = std::to_string(instances) + " instances, worst opt/b* " + Str(worst) +
                      " (bound " + Str(alpha) + "), " + std::to_string(certs.checks()) +
                      " certificates, " + std::to_string(sound.checks()) +
                      " exhaustive soundness checks, " + std::to_string(bad) + " violations" +
                      ratio.First() + certs.First() + sound.First() + covers.First();
  out.nodes.pass = nodes.violations() == 0 && nodes.checks() > 0;
  out.nodes.detail = std::to_string(nodes.checks()) + " solver runs, max nodes per call " +
                     std::to_string(max_nodes) + ", " + std::to_string(nodes.violations()) +
                     " over bound" + nodes.First();
  return out;
}

// ---- criterion 2 ----

Outcome GapInstance() {
  Tally t;
  for (int m = 2; m <= 4; ++m) {
    CoreCoverInstance gap = GenGapInstance(m);
    auto opt = BruteMaxCoverB(*gap.matroid, *gap.polymatroid);
    t.Check(opt == std::optional<std::int64_t>(1), "m " + std::to_string(m) + " opt");
    for (std::int64_t b = 1; b <= 5; ++b) {
      t.Check(VerifyMiniatureCertificate(*gap.matroid, *gap.polymatroid, b, 0, FullSet(m)),
              "m " + std::to_string(m) + " b " + std::to_string(b) + " certificate");
      t.Check(NoCoverOfSetAt(*gap.matroid, *gap.polymatroid, FullSet(m), Rational(3 * b)),
              "m " + std::to_string(m) + " b " + std::to_string(b) + " cover at 3b exists");
    }
  }
  return {t.violations() == 0,
          "m in {2,3,4}, b in 1..5, " + std::to_string(t.checks()) + " checks, " +
              std::to_string(t.violations()) + " violations" + t.First()};
}

// ---- criterion 3 ----

PolymatroidPtr PropertyPolymatroid(int index, int n, std::mt19937_64& rng) {
  switch (index % 4) {
    case 0: {
      const int k = static_cast<int>(RandomInt(rng, 1, 6));
      std::vector<std::vector<int>> covers(n);
      for (auto& c : covers) {
        for (int item = 0; item < k; ++item) {
          if (RandomInt(rng, 0, 1)) c.push_back(item);
        }
      }
      IntVector weights(k);
      for (auto& w : weights) w = RandomInt(rng, 1, 3);
      return MakeCoverage(covers, weights);
    }
    case 1:
      return MakeScaledRank(RandomMatroid(n, rng), RandomInt(rng, 1, 3));
    case 2: {
      std::vector<std::optional<std::int64_t>> caps(n);
      for (auto& c : caps) {
        if (RandomInt(rng, 0, 1)) c = RandomInt(rng, 0, 3);
      }
      return MakeCapped(RandomPolymatroid(n, 3, rng), caps);
    }
    default: {
      PolymatroidPtr p = RandomPolymatroid(n, 3, rng);
      IntVector z(n);
      for (int e = 0; e < n; ++e) z[e] = p->Value(Bit(e)) + RandomInt(rng, 0, 2);
      return MakeDual(p, z);
    }
  }
}

Outcome CappedMarginalSuites() {
  constexpr int kMaxCap = 4;
  Tally f1, f2, f3, dp;
  std::mt19937_64 rng(2026);
  for (int index = 0; index < 1000; ++index) {
    const int n = 1 + index % 8;
    PolymatroidPtr p = PropertyPolymatroid(index, n, rng);
    const std::vector<std::int64_t> f = ValueTable(*p);
    const Subset full = FullSet(n);
    const std::size_t sets = std::size_t{1} << n;
    // capped[h][x][s]: min over t ⊆ s∩x of f(s \ t) + h|t|.
    std::vector<std::vector<std::vector<std::int64_t>>> capped(
        kMaxCap + 1, std::vector<std::vector<std::int64_t>>(sets, std::vector<std::int64_t>(sets)));
    for (int h = 0; h <= kMaxCap; ++h) {
      for (Subset x = 0; x <= full; ++x) {
        auto& d = capped[h][x];
        for (Subset s = 0; s <= full; ++s) {
          std::int64_t best = f[s];
          for (int i : Elements(s & x)) best = std::min(best, d[s & ~Bit(i)] + h);
          d[s] = best;
        }
      }
    }
    auto marg = [&](int h, Subset x, Subset y) {
      return capped[h][x][x | y] - capped[h][x][x];
    };
    const std::string tag = "polymatroid " + std::to_string(index);
    for (int s = 0; s < 10; ++s) {
      Subset x = static_cast<Subset>(RandomInt(rng, 0, full));
      Subset y = static_cast<Subset>(RandomInt(rng, 0, full)) & ~x;
      int h = static_cast<int>(RandomInt(rng, 0, kMaxCap));
      dp.Check(marg(h, x, y) == CappedMarginal(*p, y, h, x), tag + " table mismatch");
    }
    for (Subset x = 0; x <= full; ++x) {
      ForEachSubsetOf(full & ~x, [&](Subset y) {
        for (int h = 1; h <= kMaxCap; ++h) {
          const std::int64_t base = marg(h, x, y);
          ForEachSubsetOf(x, [&](Subset xs) {
            if (marg(h, xs, y) < base) f1.Check(false, tag + " contraction monotonicity");
          });
          for (int hs = 0; hs < h; ++hs) {
            f1.Check(marg(hs, x, y) >= base, tag + " cap monotonicity");
          }
        }
      });
      for (int h = 1; h <= kMaxCap; ++h) {
        Subset low = 0;
        for (int i : Elements(x)) {
          if (marg(h, x & ~Bit(i), Bit(i)) < h) low |= Bit(i);
        }
        for (int i : Elements(x)) {
          const bool below = marg(h, low & ~Bit(i), Bit(i)) < h;
          f2.Check(below == Contains(low, i), tag + " blocking fixpoint");
        }
        const std::int64_t bound = h * Popcount(x);
        ForEachSubsetOf(low, [&](Subset xs) {
          f3.Check(xs == 0 ? f[xs] <= bound : f[xs] < bound, tag + " value bound");
        });
      }
    }
  }
  const std::int64_t bad = f1.violations() + f2.violations() + f3.violations() + dp.violations();
  return {bad == 0, "1000 polymatroids n<=8 h<=4, checks monotonicity " + std::to_string(f1.checks()) +
                        " / blocking fixpoint " + std::to_string(f2.checks()) + " / value bound " +
                        std::to_string(f3.checks()) + ", " + std::to_string(bad) +
                        " violations" + f1.First() + f2.First() + f3.First() + dp.First()};
}

// ---- criterion 4 ----

Allocation BruteSchedule(const AllocationInstance& inst) {
  return BruteOptMakespan(inst).witness;
}

Outcome Reductions() {
  Tally gadget, mk_to_santa, santa_to_mk, dual_mk, dual_santa;
  int gadget_translated = 0;
  std::mt19937_64 rng(404);

  // Santa -> Makespan configuration gadget.
  for (int round = 0; round < 100; ++round) {
    std::vector<std::vector<ExtRational>> rows;
    for (int j = 0; j < 3; ++j) {
      rows.push_back({R(RandomInt(rng, 1, 2), 2), R(RandomInt(rng, 1, 2), 2)});
    }
    auto inst = Classical(InstanceType::kSanta, rows, 2);
    ConfigCollection configs(2);
    for (int i = 0; i < 2; ++i) {
      configs[i].push_back(Configuration{{{R(1), 1}}});
      configs[i].push_back(Configuration{{{R(1, 2), 2}}});
    }
    SantaMakespanBundle g = SantaToMakespan(inst, configs);
    OptReport opt = BruteOptMakespan(g.makespan);
    Rational config_opt = BruteOptConfigurations(inst, configs).value;
    const std::string tag = "gadget round " + std::to_string(round);
    if (config_opt >= 1) gadget.Check(opt.value <= 1, tag + " makespan above 1");
    if (opt.value >= 2) continue;
    Allocation alloc = SantaFromMakespanSolution(g, opt.witness);
    gadget.Check(CheckAllocation(inst, alloc).empty(), tag + " invalid allocation");
    // makespan 2 - 1/alpha gives value >= 1/alpha
    gadget.Check(SantaObjective(inst, alloc) >= 2 - opt.value, tag + " value bound");
    ++gadget_translated;
  }

  // Two-value Makespan -> Santa.
  const std::vector<std::pair<Rational, Rational>> pairs = {
      {R(2, 5), R(7, 10)}, {R(1, 3), R(1)}, {R(1, 2), R(3, 4)}, {R(0), R(1)}, {R(1, 4), R(3, 5)}};
  for (int round = 0; round < 100; ++round) {
    auto [u, w] = pairs[round % pairs.size()];
    const int machines = 2;
    const int jobs = 2 + round % 2;
    std::vector<std::vector<ExtRational>> rows;
    for (int j = 0; j < jobs; ++j) {
      std::vector<ExtRational> row;
      for (int i = 0; i < machines; ++i) row.emplace_back(RandomInt(rng, 0, 1) ? w : u);
      rows.push_back(row);
    }
    rows[0][0] = u;
    rows[1][1] = w;
    auto inst = Classical(InstanceType::kMakespan, rows, machines);
    auto bundle = TwoValueMakespanToSanta(inst);
    const std::string tag = "two-value makespan round " + std::to_string(round);
    Rational mk_opt = BruteOptMakespan(inst).value;
    OptReport santa = BruteOptSanta(bundle.santa);
    if (mk_opt <= 1) mk_to_santa.Check(santa.value >= bundle.t, tag + " santa below t");
    if (santa.value <= 0) continue;
    auto tr = TwoValueSantaFromMakespan(bundle, santa.witness);
    mk_to_santa.Check(CheckAllocation(inst, tr.schedule).empty(), tag + " invalid schedule");
    mk_to_santa.Check(*tr.makespan <= 1 + bundle.t - santa.value, tag + " additive bound");
    if (bundle.t > 0) {
      // value t/alpha gives makespan 2 - 1/alpha
      Rational a = std::max(Rational(1), bundle.t / santa.value);
      mk_to_santa.Check(*tr.makespan <= 2 - 1 / a, tag + " alpha bound");
    }
  }

  // Two-value Santa -> Makespan through an exact Makespan solver.
  const Rational alpha = 2;
  for (int round = 0, built = 0; built < 100 && round < 1000; ++round) {
    auto [u, w] = pairs[round % pairs.size()];
    const int players = 2;
    const int resources = 2 + round % 3;
    std::vector<std::vector<ExtRational>> rows;
    for (int j = 0; j < resources; ++j) {
      std::vector<ExtRational> row;
      for (int i = 0; i < players; ++i) row.emplace_back(RandomInt(rng, 0, 1) ? w : u);
      rows.push_back(row);
    }
    auto inst = Classical(InstanceType::kSanta, rows, players);
    Rational opt = BruteOptSanta(inst).value;
    if (opt <= 0) continue;
    for (auto& item : inst.items) {
      for (auto& v : item.values) v = *v / opt;
    }
    ++built;
    const std::string tag = "two-value santa round " + std::to_string(round);
    try {
      TwoValueSantaResult r = TwoValueSantaToMakespan(inst, alpha, BruteSchedule);
      santa_to_mk.Check(CheckAllocation(inst, r.allocation).empty(), tag + " invalid allocation");
      santa_to_mk.Check(SantaObjective(inst, r.allocation) >= 1 / alpha,
                        tag + " case " + std::to_string(r.which_case) + " value " +
                            Str(SantaObjective(inst, r.allocation)));
    } catch (const std::exception& e) {
      santa_to_mk.Check(false, tag + " " + e.what());
    }
  }

  // Matroid Makespan -> Santa, dual identity.
  const std::vector<Rational> sizes = {R(1), R(1, 2), R(1, 3), R(3, 5), R(1, 4)};
  int dual_mk_checked = 0;
  for (int round = 0; round < 2000 && dual_mk_checked < 100; ++round) {
    auto inst = TwoItemMatroid(InstanceType::kMakespanMatroid, sizes[round % 5],
                               sizes[(round / 5) % 5], 2 + round % 2, rng);
    if (BruteOptMakespan(inst).value > 1) continue;
    const std::string tag = "matroid makespan round " + std::to_string(round);
    try {
      auto bundle = MatroidMakespanToSanta(inst);
      OptReport santa = BruteOptSanta(bundle.target);
      dual_mk.Check(santa.value >= bundle.t, tag + " santa below t");
      auto tr = MatroidMakespanFromSanta(bundle, santa.witness);
      for (const Rational& total : DualIdentityTotals(bundle, tr.schedule, tr.santa_completed)) {
        dual_mk.Check(total == 1 + bundle.t, tag + " identity total " + Str(total));
      }
      dual_mk.Check(*tr.makespan <= 1, tag + " makespan above 1");
    } catch (const std::exception& e) {
      dual_mk.Check(false, tag + " " + e.what());
    }
    ++dual_mk_checked;
  }

  // Matroid Santa -> Makespan, dual identity.
  int dual_santa_translated = 0;
  for (int round = 0; round < 100; ++round) {
    const std::int64_t b = 1 + round % 3;
    auto inst = TwoItemMatroid(InstanceType::kSantaMatroid, R(1), R(1, b), 2 + round % 3, rng);
    const std::string tag = "matroid santa round " + std::to_string(round);
    auto bundle = MatroidSantaToMakespan(inst);
    OptReport mk = BruteOptMakespan(bundle.target);
    if (BruteOptSanta(inst).value >= 1) dual_santa.Check(mk.value <= 1, tag + " makespan above 1");
    if (mk.value >= 2) continue;
    auto tr = MatroidSantaFromMakespan(bundle, mk.witness);
    for (const Rational& total : DualIdentityTotals(bundle, tr.capped, mk.witness)) {
      dual_santa.Check(total == 1 + bundle.t, tag + " identity total " + Str(total));
    }
    dual_santa.Check(tr.value >= 2 - mk.value, tag + " value bound");
    ++dual_santa_translated;
  }

  const std::int64_t bad = gadget.violations() + mk_to_santa.violations() +
                           santa_to_mk.violations() + dual_mk.violations() +
                           dual_santa.violations();
  return {bad == 0 && dual_mk_checked >= 100,
          "config gadget 100 (" + std::to_string(gadget_translated) +
              " translated), two-value makespan->santa 100, santa->makespan " +
              std::to_string(santa_to_mk.checks() / 2) + ", matroid makespan " +
              std::to_string(dual_mk_checked) + ", matroid santa 100 (" +
              std::to_string(dual_santa_translated) + " translated); " + std::to_string(bad) +
              " violations" + gadget.First() + mk_to_santa.First() + santa_to_mk.First() +
              dual_mk.First() + dual_santa.First()};
}

// ---- criterion 5 ----

Outcome Configurations() {
  const Rational eps = R(1, 4);
  const Rational bound = 1 / Pow(1 + eps, 4);
  Tally t;
  Rational worst = 2;
  std::size_t max_configs = 0;
  int instances = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GenParams p;
    p.entities = 2 + static_cast<int>(seed % 5);
    p.items = std::min<int>(6, p.entities + static_cast<int>(seed % 3));
    p.max_value = 6;
    auto inst = std::get<AllocationInstance>(GenRandom("planted-unrelated-santa", seed, p));
    const std::string tag = "seed " + std::to_string(seed);
    Rational opt = BruteOptSanta(inst).value;
    t.Check(opt >= 1, tag + " planted optimum below 1");
    ConfigRoundResult r = ConfigRound(inst, eps);
    for (const auto& c : r.configs) {
      max_configs = std::max(max_configs, c.size());
      t.Check(static_cast<std::int64_t>(c.size()) <= GetCaps().configurations,
              tag + " configuration cap");
    }
    Rational rounded = BruteOptConfigurations(r.rounded, r.configs).value;
    worst = std::min(worst, rounded);
    t.Check(rounded >= bound, tag + " rounded optimum " + Str(rounded));
    ++instances;
  }
  return {t.violations() == 0 && instances >= 50,
          std::to_string(instances) + " instances, worst config optimum " + Str(worst) +
              " (bound " + Str(bound) + "), max configs per player " +
              std::to_string(max_configs) + ", " + std::to_string(t.violations()) +
              " violations" + t.First()};
}

// ---- criterion 6 ----

Outcome Rounding() {
  const std::vector<std::pair<std::string, bool>> flavors = {
      {"restricted-santa", true},    {"unrelated-santa", true},
      {"santa-matroid", true},       {"restricted-makespan", false},
      {"unrelated-makespan", false}, {"makespan-matroid", false}};
  Tally t;
  int rounded = 0;
  for (std::uint64_t seed = 1; seed <= 210; ++seed) {
    const auto& [flavor, santa] = flavors[seed % flavors.size()];
    GenParams params;
    params.entities = 3;
    params.items = 4 + static_cast<int>(seed % 3);
    auto inst = std::get<AllocationInstance>(GenRandom(flavor, seed, params));
    auto opt = OptimizeAssignmentLp(inst);
    if (!opt.has_value()) continue;
    const std::string tag = flavor + " seed " + std::to_string(seed);
    t.Check(CheckFractional(inst, opt->x, opt->t).empty(), tag + " LP point infeasible");
    Allocation a = santa ? RoundSanta(inst, opt->x) : RoundMakespan(inst, opt->x);
    t.Check(CheckAllocation(inst, a).empty(), tag + " invalid allocation");
    Rational vmax = 0;
    for (int j = 0; j < inst.num_items(); ++j) {
      for (int i = 0; i < inst.entities; ++i) {
        if (opt->x[j][i] > 0) vmax = std::max(vmax, *inst.Weight(j, i));
      }
    }
    for (int i = 0; i < inst.entities; ++i) {
      ExtRational load = EntityLoad(inst, a, i);
      if (santa) {
        t.Check(*load >= opt->t - vmax, tag + " player below T - vmax");
      } else {
        t.Check(load.has_value() && *load <= opt->t + vmax, tag + " machine above T + pmax");
      }
    }
    ++rounded;
  }
  int lst = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    GenParams params;
    params.entities = 3;
    params.items = 5;
    auto inst = std::get<AllocationInstance>(
        GenRandom(seed % 2 ? "restricted-makespan" : "unrelated-makespan", seed, params));
    OptReport brute = BruteOptMakespan(inst);
    LstResult r = LstBaseline(inst);
    t.Check(r.makespan.has_value() && *r.makespan <= 2 * brute.value,
            "two-approximation seed " + std::to_string(seed));
    ++lst;
  }
  return {t.violations() == 0 && rounded >= 200,
          std::to_string(rounded) + " rounded LP optima, " + std::to_string(lst) +
              " makespan runs vs 2*OPT, " + std::to_string(t.violations()) + " violations" +
              t.First()};
}

// ---- criterion 8 ----

Outcome MergeRoundTrip() {
  Tally t;
  int instances = 0;
  int merged_groups = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    GenParams params;
    params.entities = 3;
    params.items = 4 + static_cast<int>(seed % 2);
    params.max_value = 2;
    const char* flavor = seed % 2 ? "santa-matroid" : "makespan-matroid";
    auto inst = std::get<AllocationInstance>(GenRandom(flavor, seed, params));
    MergedInstance m = MergeEqualValue(inst);
    for (const auto& g : m.groups) merged_groups += g.size() > 1;
    OptReport solved = inst.is_santa() ? BruteOptSanta(m.merged) : BruteOptMakespan(m.merged);
    const std::string tag = std::string(flavor) + " seed " + std::to_string(seed);
    Allocation split = SplitMergedAllocation(inst, m, solved.witness);
    t.Check(CheckAllocation(inst, split).empty(), tag + " invalid split");
    for (int j = 0; j < inst.num_items(); ++j) {
      t.Check(IsBasis(*inst.items[j].polymatroid, split.x[j]),
              tag + " item " + std::to_string(j) + " not a basis");
    }
    for (int i = 0; i < inst.entities; ++i) {
      t.Check(EntityLoad(inst, split, i) == EntityLoad(m.merged, solved.witness, i),
              tag + " load changed on entity " + std::to_string(i));
    }
    ++instances;
  }
  return {t.violations() == 0 && instances >= 100,
          std::to_string(instances) + " instances, " + std::to_string(merged_groups) +
              " merged groups, " + std::to_string(t.checks()) + " checks, " +
              std::to_string(t.violations()) + " violations" + t.First()};
}

Outcome Guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

}  // namespace
}  // namespace matalloc

int main() {
  using namespace matalloc;
  using Clock = std::chrono::steady_clock;
  bool all = true;
  auto report = [&](int id, const char* name, const Outcome& o, double seconds) {
    all = all && o.pass;
    std::printf("%s criterion %d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", id, name,
                o.detail.c_str(), seconds);
    std::fflush(stdout);
  };
  auto timed = [&](const std::function<Outcome()>& body, double& seconds) {
    auto start = Clock::now();
    Outcome o = Guarded(body);
    seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return o;
  };

  double s = 0;
  CoreOutcome core;
  Outcome core_guard = timed(
      [&] {
        core = CoreApproximation();
        return core.approx;
      },
      s);
  if (!core_guard.pass && core_guard.detail.rfind("exception", 0) == 0) {
    core.approx = core_guard;
    core.nodes = core_guard;
  }
  core.approx.pass = core.approx.pass && s < 120;
  report(1, "core approximation", core.approx, s);
  double s2 = 0;
  Outcome gap = timed(GapInstance, s2);
  report(2, "gap instance", gap, s2);
  double s3 = 0;
  Outcome marginals = timed(CappedMarginalSuites, s3);
  marginals.pass = marginals.pass && s3 < 60;
  report(3, "capped marginal properties", marginals, s3);
  double s4 = 0;
  Outcome red = timed(Reductions, s4);
  report(4, "reduction guarantees", red, s4);
  double s5 = 0;
  Outcome cfg = timed(Configurations, s5);
  report(5, "configuration reduction", cfg, s5);
  double s6 = 0;
  Outcome rnd = timed(Rounding, s6);
  report(6, "rounding bounds", rnd, s6);
  report(7, "recursion bound", core.nodes, s);
  double s8 = 0;
  Outcome merge = timed(MergeRoundTrip, s8);
  report(8, "merge round trip", merge, s8);
  return all ? 0 : 1;
}
