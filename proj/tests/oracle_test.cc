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

#include <gtest/gtest.h>

#include <random>

#include "matalloc/errors.h"
#include "matalloc/generators.h"
#include "matalloc/instance_json.h"
#include "matalloc/oracle.h"
#include "matalloc/polyops.h"

namespace matalloc {
namespace {

AllocationInstance Parse(const char* text) {
  return std::get<AllocationInstance>(ParseInstance(text));
}

TEST(BruteOptTest, SinglePlayerTakesEverything) {
  AllocationInstance inst =
      Parse(R"({"type":"santa","players":1,"items":[{"values":[1]},{"values":[2]}]})");
  OptReport r = BruteOptSanta(inst);
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(CheckAllocation(inst, r.witness), "");
}

TEST(BruteOptTest, IdenticalMachines) {
  AllocationInstance inst = Parse(
      R"({"type":"makespan","machines":2,"items":[{"values":[3,3]},{"values":[3,3]},{"values":[2,2]}]})");
  OptReport r = BruteOptMakespan(inst);
  EXPECT_EQ(r.value, 5);
  EXPECT_EQ(r.search_space, 8u);
  EXPECT_EQ(*MakespanObjective(inst, r.witness), 5);
}

TEST(BruteOptTest, WrongFlavorRejected) {
  AllocationInstance inst = Parse(R"({"type":"santa","players":1,"items":[]})");
  EXPECT_THROW(BruteOptMakespan(inst), ContractError);
}

TEST(BruteOptTest, CapExceeded) {
  GenParams params;
  params.entities = 10;
  params.items = 10;
  AllocationInstance inst =
      std::get<AllocationInstance>(GenRandom("unrelated-santa", 1, params));
  EXPECT_THROW(BruteOptSanta(inst), CapExceeded);
}

TEST(BruteOptTest, WitnessesRevalidateAndAreReproducible) {
  GenParams params;
  params.entities = 3;
  params.items = 4;
  for (const char* flavor : {"unrelated-santa", "unrelated-makespan", "santa-matroid",
                             "makespan-matroid"}) {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      AllocationInstance inst = std::get<AllocationInstance>(GenRandom(flavor, seed, params));
      OptReport a = inst.is_santa() ? BruteOptSanta(inst) : BruteOptMakespan(inst);
      OptReport b = inst.is_santa() ? BruteOptSanta(inst) : BruteOptMakespan(inst);
      EXPECT_EQ(CheckAllocation(inst, a.witness), "") << flavor << " " << seed;
      EXPECT_EQ(a.value, b.value);
      EXPECT_EQ(a.witness.x, b.witness.x);
      if (inst.is_santa()) {
        EXPECT_EQ(SantaObjective(inst, a.witness), a.value);
      } else {
        EXPECT_EQ(*MakespanObjective(inst, a.witness), a.value);
      }
    }
  }
}

TEST(BruteOptTest, SantaMatchesPlainEnumeration) {
  GenParams params;
  params.entities = 2;
  params.items = 5;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    AllocationInstance inst =
        std::get<AllocationInstance>(GenRandom("unrelated-santa", seed, params));
    Rational best = -1;
    std::vector<int> owner(inst.num_items(), 0);
    for (int mask = 0; mask < (1 << inst.num_items()); ++mask) {
      for (int j = 0; j < inst.num_items(); ++j) owner[j] = (mask >> j) & 1;
      Rational v = SantaObjective(inst, AllocationFromOwners(inst, owner));
      if (v > best) best = v;
    }
    EXPECT_EQ(BruteOptSanta(inst).value, best);
  }
}

// ---- max cover b ----

TEST(MaxCoverTest, Examples) {
  EXPECT_EQ(BruteMaxCoverB(*MakeUniform(2, 0), *MakeModular({5, 5})),
            std::optional<std::int64_t>(5));
  CoreCoverInstance gap = GenGapInstance(2);
  EXPECT_EQ(BruteMaxCoverB(*gap.matroid, *gap.polymatroid), std::optional<std::int64_t>(1));
  EXPECT_EQ(BruteMaxCoverB(*MakeFree(2), *MakeZeroPolymatroid(2)), std::nullopt);
}

TEST(MaxCoverTest, UniformLoadTables) {
  PolymatroidPtr p = MakeModular({2, 1});
  std::vector<std::int64_t> load = MaxUniformLoadTable(*p);
  EXPECT_EQ(load[0b01], 2);
  EXPECT_EQ(load[0b10], 1);
  EXPECT_EQ(load[0b11], 1);
  std::vector<bool> feasible = UniformLoadTable(*p, Rational(3, 2));
  EXPECT_TRUE(feasible[0b01]);
  EXPECT_FALSE(feasible[0b11]);
}

// ---- axioms ----

TEST(AxiomTest, UniformPasses) {
  for (int k = 0; k <= 4; ++k) EXPECT_TRUE(CheckMatroidAxioms(*MakeUniform(4, k)).ok);
}

TEST(AxiomTest, CorruptedTableNamesViolation) {
  AxiomReport r = CheckPolymatroidAxioms(*MakeExplicitPolymatroid(2, {0, 1, 1, 3}));
  EXPECT_FALSE(r.ok);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_NE(r.violations.front().find("submodular"), std::string::npos)
      << r.violations.front();
  AxiomReport m = CheckMatroidAxioms(*MakeExplicitMatroid(2, {0, 1, 1, 2}));
  EXPECT_TRUE(m.ok);
  EXPECT_FALSE(CheckMatroidAxioms(*MakeExplicitMatroid(2, {0, 0, 0, 1})).ok);
}

TEST(AxiomTest, DualOfRandomPolymatroidPasses) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 30; ++round) {
    const int n = 1 + round % 6;
    PolymatroidPtr p = RandomPolymatroid(n, 3, rng);
    IntVector z(n);
    for (int e = 0; e < n; ++e) z[e] = p->Value(Bit(e));
    EXPECT_TRUE(CheckPolymatroidAxioms(*MakeDual(p, z)).ok);
  }
}

TEST(AxiomTest, LargeGroundRejected) {
  EXPECT_THROW(CheckMatroidAxioms(*MakeUniform(13, 2)), ContractError);
}

}  // namespace
}  // namespace matalloc
