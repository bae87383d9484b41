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
#include <stdexcept>

#include "matalloc/caps.h"
#include "matalloc/errors.h"
#include "matalloc/generators.h"
#include "matalloc/matroid.h"
#include "matalloc/oracle.h"
#include "matalloc/polymatroid.h"
#include "matalloc/polyops.h"

namespace matalloc {
namespace {

PolymatroidPtr StepFunction(int n, std::int64_t height) {
  // f(S) = height * [S nonempty]
  return MakeScaledRank(MakeUniform(n, 1), height);
}

// ---- rank ----

TEST(RankTest, UniformRankOne) {
  EXPECT_EQ(MakeUniform(3, 1)->Rank(0b011), 1);
}

TEST(RankTest, GapMatroid) {
  CoreCoverInstance gap = GenGapInstance(2);
  EXPECT_EQ(gap.matroid->Rank(0b11), 1);
  EXPECT_EQ(gap.matroid->Rank(0b01), 1);
  EXPECT_EQ(gap.matroid->Rank(0), 0);
}

TEST(RankTest, TriangleGraph) {
  MatroidPtr tri = MakeGraphic(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(tri->Rank(0b111), 2);
  EXPECT_EQ(tri->Rank(0b011), 2);
}

TEST(RankTest, DerivedKinds) {
  MatroidPtr u = MakeUniform(4, 2);
  MatroidPtr con = MakeContracted(u, 0b0001);
  EXPECT_EQ(con->Rank(0b0110), u->Rank(0b0111) - u->Rank(0b0001));
  MatroidPtr zero = MakeZeroed(u, 0b0010);
  EXPECT_EQ(zero->Rank(0b0010), 0);
  EXPECT_EQ(zero->Rank(0b0111), 2);
  MatroidPtr un = MakeUnion({MakeUniform(3, 1), MakeUniform(3, 1)});
  EXPECT_EQ(un->Rank(0b111), 2);
  MatroidPtr ind = MakeInduced(MakeModular({1, 0, 2}));
  EXPECT_EQ(ind->Rank(0b111), 2);
  EXPECT_FALSE(ind->IsIndependent(0b010));
  MatroidPtr part = MakePartition(4, {{0, 1}, {2, 3}}, {1, 2});
  EXPECT_EQ(part->Rank(0b1111), 3);
  MatroidPtr tr = MakeTransversal(2, {{0}, {0}, {1}});
  EXPECT_EQ(tr->Rank(0b011), 1);
  EXPECT_EQ(tr->Rank(0b101), 2);
}

TEST(RankTest, OutOfRangeThrows) {
  EXPECT_THROW(MakeUniform(2, 1)->Rank(0b100), std::out_of_range);
  EXPECT_THROW(MakeModular({1, 1})->Value(0b100), std::out_of_range);
}

TEST(RankTest, RandomMatroidsSatisfyAxioms) {
  std::mt19937_64 rng(1);
  for (int round = 0; round < 40; ++round) {
    const int n = 1 + round % 8;
    MatroidPtr m = RandomMatroid(n, rng);
    AxiomReport r = CheckMatroidAxioms(*m);
    EXPECT_TRUE(r.ok) << (r.violations.empty() ? "" : r.violations.front());
    EXPECT_TRUE(CheckMatroidAxioms(*MakeContracted(m, Bit(0))).ok);
    EXPECT_TRUE(CheckMatroidAxioms(*MakeZeroed(m, Bit(n - 1))).ok);
  }
}

// ---- polymatroid evaluation ----

TEST(PolyEvalTest, Examples) {
  EXPECT_EQ(MakeModular({2, 2, 2})->Value(0b101), 4);
  CoreCoverInstance gap = GenGapInstance(2);
  EXPECT_EQ(gap.polymatroid->Value(0b11), 2);
  PolymatroidPtr capped = MakeCapped(StepFunction(2, 3), {2, std::nullopt});
  EXPECT_EQ(capped->Value(0b01), 2);
  EXPECT_EQ(capped->Value(0b11), 3);
}

TEST(PolyEvalTest, DerivedKindsSatisfyAxioms) {
  std::mt19937_64 rng(2);
  for (int round = 0; round < 40; ++round) {
    const int n = 1 + round % 7;
    PolymatroidPtr p = RandomPolymatroid(n, 3, rng);
    PolymatroidPtr q = RandomPolymatroid(n, 2, rng);
    IntVector z(n);
    for (int e = 0; e < n; ++e) z[e] = p->Value(Bit(e)) + RandomInt(rng, 0, 2);
    IntVector base = GreedyBasisAbove(*p, IntVector(n, 0));
    for (const PolymatroidPtr& d :
         {p, MakeSum({p, q}), MakeUniformlyCapped(p, 1), MakeDual(p, z),
          MakeContractedPolymatroid(p, IntVector(n, 0)),
          MakeContractedPolymatroid(p, [&] {
            IntVector half = base;
            half[0] = 0;
            return half;
          }())}) {
      AxiomReport r = CheckPolymatroidAxioms(*d);
      EXPECT_TRUE(r.ok) << "round " << round << ": "
                        << (r.violations.empty() ? "" : r.violations.front());
    }
  }
}

// ---- capped marginal ----

TEST(CappedMarginalTest, Examples) {
  PolymatroidPtr f = StepFunction(2, 3);
  EXPECT_EQ(CappedMarginal(*f, 0b10, 2, 0b01), 1);
  EXPECT_EQ(CappedMarginal(*f, 0, 2, 0b01), 0);
  EXPECT_EQ(CappedMarginal(*f, 0b11, 2, 0), f->Value(0b11));
}

TEST(CappedMarginalTest, OverlapUsesTheDifference) {
  PolymatroidPtr f = MakeModular({3, 1, 2});
  EXPECT_EQ(CappedMarginal(*f, 0b011, 1, 0b001), CappedMarginal(*f, 0b010, 1, 0b001));
}

// Capped-marginal properties on random polymatroids.
class CappedMarginalProperty : public ::testing::TestWithParam<int> {};

TEST_P(CappedMarginalProperty, MonotoneInContractionAndCap) {
  std::mt19937_64 rng(100 + GetParam());
  const int n = 2 + GetParam() % 5;
  PolymatroidPtr f = RandomPolymatroid(n, 3, rng);
  const Subset all = FullSet(n);
  for (int trial = 0; trial < 20; ++trial) {
    Subset x = static_cast<Subset>(RandomInt(rng, 0, all));
    Subset xs = x & static_cast<Subset>(RandomInt(rng, 0, all));
    std::int64_t h = RandomInt(rng, 1, 3);
    std::int64_t hs = RandomInt(rng, 0, h - 1);
    ForEachSubsetOf(all & ~x, [&](Subset y) {
      EXPECT_GE(CappedMarginal(*f, y, h, xs), CappedMarginal(*f, y, h, x));
      EXPECT_GE(CappedMarginal(*f, y, hs, x), CappedMarginal(*f, y, h, x));
    });
  }
}

TEST_P(CappedMarginalProperty, BlockingSetIsSelfConsistent) {
  std::mt19937_64 rng(200 + GetParam());
  const int n = 2 + GetParam() % 5;
  PolymatroidPtr f = RandomPolymatroid(n, 3, rng);
  for (int trial = 0; trial < 20; ++trial) {
    Subset x = static_cast<Subset>(RandomInt(rng, 0, FullSet(n)));
    std::int64_t h = RandomInt(rng, 1, 4);
    Subset y = 0;
    for (int i : Elements(x)) {
      if (CappedMarginal(*f, Bit(i), h, x & ~Bit(i)) < h) y |= Bit(i);
    }
    for (int i : Elements(x)) {
      bool low = CappedMarginal(*f, Bit(i), h, y & ~Bit(i)) < h;
      EXPECT_EQ(low, Contains(y, i));
    }
  }
}

TEST_P(CappedMarginalProperty, LowMarginalsBoundTheValue) {
  std::mt19937_64 rng(300 + GetParam());
  const int n = 2 + GetParam() % 5;
  PolymatroidPtr f = RandomPolymatroid(n, 3, rng);
  for (int trial = 0; trial < 20; ++trial) {
    Subset x = static_cast<Subset>(RandomInt(rng, 0, FullSet(n)));
    std::int64_t h = RandomInt(rng, 1, 4);
    Subset low = 0;
    for (int i : Elements(x)) {
      if (CappedMarginal(*f, Bit(i), h, x & ~Bit(i)) < h) low |= Bit(i);
    }
    ForEachSubsetOf(low, [&](Subset xs) {
      std::int64_t bound = h * Popcount(x);
      if (xs == 0) {
        EXPECT_LE(f->Value(xs), bound);
      } else {
        EXPECT_LT(f->Value(xs), bound);
      }
    });
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, CappedMarginalProperty, ::testing::Range(0, 25));

// ---- submodular minimization ----

TEST(SfmTest, Examples) {
  PolymatroidPtr f = MakeModular({2, 2});
  IntVector x = {1, 1};
  SfmResult a = SfmMin([&](Subset s) { return f->Value(s) - Sum(x, s); }, 2);
  EXPECT_EQ(a.value, 0);
  EXPECT_EQ(a.minimizer, 0u);
  SfmResult b = SfmMin([](Subset s) { return Popcount(s) - 2 * Popcount(s & 1); }, 2);
  EXPECT_EQ(b.value, -1);
  EXPECT_EQ(b.minimizer, 0b01u);
  SfmResult c = SfmMin([](Subset) { return 0; }, 3);
  EXPECT_EQ(c.value, 0);
  EXPECT_EQ(c.minimizer, 0u);
}

TEST(SfmTest, GroundLimit) {
  EXPECT_THROW(SfmMin([](Subset) { return 0; }, GetCaps().sfm_ground + 1), CapExceeded);
}

// ---- membership ----

TEST(MemberTest, Examples) {
  EXPECT_TRUE(Member(*MakeModular({2, 2, 2}), {2, 2, 2}));
  CoreCoverInstance gap = GenGapInstance(2);
  EXPECT_FALSE(Member(*gap.polymatroid, {2, 2}));
  EXPECT_TRUE(Member(*gap.polymatroid, {0, 0}));
}

TEST(MemberTest, AgreesWithExhaustiveCheck) {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + round % 6;
    PolymatroidPtr p = RandomPolymatroid(n, 3, rng);
    IntVector x(n);
    for (auto& v : x) v = RandomInt(rng, 0, 3);
    bool expected = true;
    for (Subset s = 0; s <= FullSet(n); ++s) expected = expected && Sum(x, s) <= p->Value(s);
    EXPECT_EQ(Member(*p, x), expected);
  }
}

// ---- greedy basis ----

TEST(GreedyBasisTest, Examples) {
  EXPECT_EQ(GreedyBasisAbove(*MakeModular({2, 2}), {0, 0}), (IntVector{2, 2}));
  EXPECT_EQ(GreedyBasisAbove(*MakeScaledRank(MakeUniform(2, 1), 1), {0, 0}), (IntVector{1, 0}));
  EXPECT_EQ(GreedyBasisAbove(*MakeModular({1, 3}), {1, 3}), (IntVector{1, 3}));
}

TEST(GreedyBasisTest, ResultIsBasisAboveInput) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 40; ++round) {
    const int n = 1 + round % 6;
    PolymatroidPtr p = RandomPolymatroid(n, 3, rng);
    IntVector x(n, 0);
    IntVector y = GreedyBasisAbove(*p, x);
    EXPECT_TRUE(IsBasis(*p, y));
    EXPECT_TRUE(Dominates(y, x));
  }
}

TEST(GreedyBasisTest, RejectsNonMember) {
  EXPECT_THROW(GreedyBasisAbove(*MakeModular({1}), {2}), ContractError);
}

// ---- matroid add greedy ----

TEST(MatroidAddGreedyTest, Examples) {
  std::vector<int> c012 = {0, 1, 2};
  EXPECT_EQ(MatroidAddGreedy(*MakeUniform(3, 2), 0, c012), 0b011u);
  std::vector<int> c12 = {1, 2};
  EXPECT_EQ(MatroidAddGreedy(*MakeUniform(3, 1), 0b001, c12), 0b001u);
  CoreCoverInstance gap = GenGapInstance(2);
  std::vector<int> c1 = {1};
  EXPECT_EQ(MatroidAddGreedy(*gap.matroid, 0b01, c1), 0b01u);
  EXPECT_THROW(MatroidAddGreedy(*MakeUniform(3, 1), 0b011, c12), ContractError);
}

// ---- dual ----

TEST(DualTest, Examples) {
  PolymatroidPtr a = MakeDual(MakeModular({1, 1}), {2, 2});
  for (Subset s = 0; s < 4; ++s) EXPECT_EQ(a->Value(s), Popcount(s));
  EXPECT_EQ(MakeDual(MakeModular({2}), {2})->Value(0b1), 0);
  PolymatroidPtr c = MakeDual(MakeScaledRank(MakeUniform(2, 1), 1), {1, 1});
  EXPECT_EQ(c->Value(0b01), 1);
  EXPECT_EQ(c->Value(0b10), 1);
  EXPECT_EQ(c->Value(0b11), 1);
}

TEST(DualTest, ComplementOfBasisIsDualBasis) {
  std::mt19937_64 rng(6);
  for (int round = 0; round < 40; ++round) {
    const int n = 1 + round % 6;
    PolymatroidPtr p = RandomPolymatroid(n, 3, rng);
    IntVector z(n);
    for (int e = 0; e < n; ++e) z[e] = p->Value(Bit(e)) + RandomInt(rng, 0, 1);
    PolymatroidPtr d = MakeDual(p, z);
    std::vector<IntVector> bases = EnumerateBases(*p, 100000);
    for (const IntVector& x : bases) {
      IntVector rest(n);
      for (int e = 0; e < n; ++e) rest[e] = z[e] - x[e];
      EXPECT_TRUE(IsBasis(*d, rest));
    }
  }
}

}  // namespace
}  // namespace matalloc
