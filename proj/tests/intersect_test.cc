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
#include "matalloc/intersect.h"
#include "matalloc/matroid.h"
#include "matalloc/oracle.h"
#include "matalloc/polymatroid.h"
#include "matalloc/polyops.h"

namespace matalloc {
namespace {

int BruteIntersection(const Matroid& a, const Matroid& b) {
  int best = 0;
  for (Subset s = 0; s <= FullSet(a.size()); ++s) {
    if (a.IsIndependent(s) && b.IsIndependent(s)) best = std::max(best, Popcount(s));
  }
  return best;
}

std::int64_t BruteBox(const Polymatroid& p1, const Polymatroid& p2, const IntVector& caps) {
  const int n = static_cast<int>(caps.size());
  IntVector x(n, 0);
  std::int64_t best = 0;
  while (true) {
    if (Member(p1, x) && Member(p2, x)) best = std::max(best, Sum(x, FullSet(n)));
    int e = 0;
    while (e < n && x[e] == caps[e]) x[e++] = 0;
    if (e == n) break;
    ++x[e];
  }
  return best;
}

// ---- unit expansion ----

TEST(UnitExpandTest, ModularBecomesFree) {
  auto [ground, m] = UnitExpand(MakeModular({2}), {2});
  EXPECT_EQ(ground.size(), 2);
  EXPECT_EQ(m->Rank(0b11), 2);
}

TEST(UnitExpandTest, MatroidIsItsOwnExpansion) {
  auto [ground, m] = UnitExpand(MakeScaledRank(MakeUniform(2, 1), 1), {1, 1});
  EXPECT_EQ(m->Rank(0b01), 1);
  EXPECT_EQ(m->Rank(0b11), 1);
}

TEST(UnitExpandTest, GapPolymatroidCopies) {
  CoreCoverInstance gap = GenGapInstance(2);
  auto [ground, m] = UnitExpand(gap.polymatroid, {2, 2});
  EXPECT_EQ(m->Rank(ground.CopiesFor({2, 0})), 1);
  EXPECT_EQ(m->Rank(FullSet(4)), 2);
}

TEST(UnitExpandTest, GroundMapping) {
  ExpandedGround g = MakeExpandedGround({2, 0, 3});
  EXPECT_EQ(g.size(), 5);
  for (int c = 0; c < g.size(); ++c) {
    int e = g.copy_element[c];
    EXPECT_EQ(g.first_copy[e] + g.copy_number[c], c);
  }
  EXPECT_EQ(g.Counts(g.CopiesFor({1, 0, 2})), (IntVector{1, 0, 2}));
}

TEST(UnitExpandTest, CapEnforced) {
  EXPECT_THROW(UnitExpand(MakeModular({100}), {100}), CapExceeded);
}

TEST(UnitExpandTest, ExpansionsSatisfyMatroidAxioms) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 20; ++round) {
    const int n = 1 + round % 4;
    PolymatroidPtr p = RandomPolymatroid(n, 2, rng);
    IntVector caps(n);
    for (auto& c : caps) c = RandomInt(rng, 0, 2);
    auto [ground, m] = UnitExpand(p, caps);
    EXPECT_TRUE(CheckMatroidAxioms(*m).ok);
  }
}

// ---- matroid intersection ----

TEST(MatroidIntersectionTest, Examples) {
  MatroidPtr u2 = MakeUniform(3, 2);
  EXPECT_EQ(Popcount(MatroidIntersectionMax(*u2, *u2)), 2);
  EXPECT_EQ(Popcount(MatroidIntersectionMax(*MakeUniform(3, 1), *MakeFree(3))), 1);
  MatroidPtr part = MakePartition(4, {{0, 1}, {2, 3}}, {1, 1});
  MatroidPtr match = MakeTransversal(4, {{0}, {1}, {2}, {3}});
  EXPECT_EQ(Popcount(MatroidIntersectionMax(*part, *match)), 2);
}

TEST(MatroidIntersectionTest, MatchesBruteForce) {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 80; ++round) {
    const int n = 1 + round % 10;
    MatroidPtr a = RandomMatroid(n, rng);
    MatroidPtr b = RandomMatroid(n, rng);
    Subset s = MatroidIntersectionMax(*a, *b);
    EXPECT_TRUE(a->IsIndependent(s));
    EXPECT_TRUE(b->IsIndependent(s));
    EXPECT_EQ(Popcount(s), BruteIntersection(*a, *b)) << "round " << round;
  }
}

TEST(MatroidIntersectionTest, MismatchedGroundRejected) {
  EXPECT_THROW(MatroidIntersectionMax(*MakeFree(2), *MakeFree(3)), ContractError);
}

// ---- polymatroid intersection ----

TEST(PolymatroidIntersectionTest, Examples) {
  EXPECT_EQ(PolymatroidIntersectionMax(MakeModular({1, 1}), MakeModular({1, 1}), {1, 1}).x,
            (IntVector{1, 1}));
  EXPECT_EQ(PolymatroidIntersectionMax(MakeModular({2, 0}), MakeModular({1, 1}), {2, 2}).x,
            (IntVector{1, 0}));
  CoreCoverInstance gap = GenGapInstance(2);
  CommonVector c = PolymatroidIntersectionMax(gap.polymatroid, MakeModular({2, 2}), {2, 2});
  EXPECT_EQ(c.x[0] + c.x[1], 2);
}

TEST(PolymatroidIntersectionTest, MatchesBoxEnumeration) {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + round % 5;
    PolymatroidPtr p1 = RandomPolymatroid(n, 2, rng);
    PolymatroidPtr p2 = RandomPolymatroid(n, 2, rng);
    IntVector caps(n);
    for (auto& c : caps) c = RandomInt(rng, 0, 3);
    CommonVector c = PolymatroidIntersectionMax(p1, p2, caps);
    EXPECT_TRUE(Member(*p1, c.x));
    EXPECT_TRUE(Member(*p2, c.x));
    EXPECT_TRUE(Dominates(caps, c.x));
    EXPECT_EQ(Sum(c.x, FullSet(n)), BruteBox(*p1, *p2, caps)) << "round " << round;
  }
}

// ---- decomposition ----

TEST(DecomposeTest, Examples) {
  auto a = DecomposeMergedBasis({MakeModular({1, 0}), MakeModular({0, 1})}, {1, 1});
  EXPECT_EQ(a, (std::vector<IntVector>{{1, 0}, {0, 1}}));
  PolymatroidPtr r = MakeScaledRank(MakeUniform(2, 1), 1);
  auto b = DecomposeMergedBasis({r, r}, {2, 0});
  EXPECT_EQ(b, (std::vector<IntVector>{{1, 0}, {1, 0}}));
  PolymatroidPtr p = MakeModular({1, 2});
  EXPECT_EQ(DecomposeMergedBasis({p}, {1, 2}), (std::vector<IntVector>{{1, 2}}));
}

TEST(DecomposeTest, NonBasisRejected) {
  EXPECT_THROW(DecomposeMergedBasis({MakeModular({1, 1})}, {1, 0}), ContractError);
}

TEST(DecomposeTest, RandomBasesSplitExactly) {
  std::mt19937_64 rng(14);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + round % 4;
    const int k = 1 + round % 3;
    std::vector<PolymatroidPtr> parts;
    for (int j = 0; j < k; ++j) parts.push_back(RandomPolymatroid(n, 2, rng));
    PolymatroidPtr sum = MakeSum(parts);
    IntVector start(n, 0);
    IntVector y = GreedyBasisAbove(*sum, start);
    std::vector<IntVector> split = DecomposeMergedBasis(parts, y);
    ASSERT_EQ(split.size(), parts.size());
    IntVector total(n, 0);
    for (int j = 0; j < k; ++j) {
      EXPECT_TRUE(IsBasis(*parts[j], split[j]));
      for (int e = 0; e < n; ++e) total[e] += split[j][e];
    }
    EXPECT_EQ(total, y);
  }
}

}  // namespace
}  // namespace matalloc
