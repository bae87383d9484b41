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

#include "matalloc/polyops.h"

#include <algorithm>
#include <string>

#include "matalloc/caps.h"
#include "matalloc/errors.h"

namespace matalloc {
namespace {

void CheckEnumerable(int n, const char* what) {
  if (n > GetCaps().sfm_ground) {
    throw CapExceeded(std::string(what) + " needs subset enumeration over " +
                      std::to_string(n) + " elements (cap " +
                      std::to_string(GetCaps().sfm_ground) + ")");
  }
}

void CheckNonnegative(const Polymatroid& p, const IntVector& x) {
  if (static_cast<int>(x.size()) != p.size()) {
    throw ContractError("vector size " + std::to_string(x.size()) +
                        " does not match ground size " +
                        std::to_string(p.size()));
  }
  for (auto v : x) {
    if (v < 0) throw ContractError("vector has a negative entry");
  }
}

}  // namespace

std::int64_t CappedValue(const Polymatroid& p, Subset s, std::int64_t h,
                         Subset x) {
  Subset cappable = s & x;
  CheckEnumerable(Popcount(cappable), "capped evaluation");
  std::int64_t best = p.Value(s);
  ForEachSubsetOf(cappable, [&](Subset t) {
    if (t == 0) return;
    best = std::min(best, p.Value(s & ~t) + h * Popcount(t));
  });
  return best;
}

std::int64_t CappedMarginal(const Polymatroid& p, Subset y, std::int64_t h,
                            Subset x) {
  Subset outside = y & ~x;
  if (outside == 0) return 0;
  return CappedValue(p, outside | x, h, x) - CappedValue(p, x, h, x);
}

int RankMarginal(const Matroid& m, Subset y, Subset x) {
  return m.Rank(y | x) - m.Rank(x);
}

SfmResult SfmMin(const std::function<std::int64_t(Subset)>& g, int n) {
  CheckEnumerable(n, "submodular minimization");
  SfmResult best{0, g(0)};
  Subset limit = FullSet(n);
  for (Subset s = 1; s != 0 && s <= limit; ++s) {
    std::int64_t v = g(s);
    if (v < best.value) best = {s, v};
  }
  return best;
}

bool Member(const Polymatroid& p, const IntVector& x) {
  CheckNonnegative(p, x);
  if (const auto* modular = dynamic_cast<const ModularPolymatroid*>(&p)) {
    for (int i = 0; i < p.size(); ++i) {
      if (x[i] > modular->weights()[i]) return false;
    }
    return true;
  }
  // f is monotone, so only subsets of the support can be violated.
  Subset support = Support(x);
  CheckEnumerable(Popcount(support), "membership");
  bool ok = true;
  ForEachSubsetOf(support, [&](Subset t) {
    if (ok && p.Value(t) < Sum(x, t)) ok = false;
  });
  return ok;
}

bool MemberFractional(const Polymatroid& p, std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != p.size()) {
    throw ContractError("fractional vector size mismatch");
  }
  Subset support = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (x[i] < 0) throw ContractError("fractional vector has negative entry");
    if (x[i] != 0) support |= Bit(i);
  }
  CheckEnumerable(Popcount(support), "membership");
  bool ok = true;
  ForEachSubsetOf(support, [&](Subset t) {
    if (!ok) return;
    Rational total = 0;
    for (int e : Elements(t)) total += x[e];
    if (Rational(p.Value(t)) < total) ok = false;
  });
  return ok;
}

bool IsBasis(const Polymatroid& p, const IntVector& x) {
  return Member(p, x) && Total(x) == p.Value(p.ground());
}

bool IsBasisFractional(const Polymatroid& p, std::span<const Rational> x) {
  if (!MemberFractional(p, x)) return false;
  Rational total = 0;
  for (const auto& v : x) total += v;
  return total == Rational(p.Value(p.ground()));
}

IntVector GreedyBasisAbove(const Polymatroid& p, const IntVector& x) {
  if (!Member(p, x)) {
    throw ContractError("greedy basis: starting vector is not a member");
  }
  IntVector y = x;
  for (int i = 0; i < p.size(); ++i) {
    Subset others = Support(y) & ~Bit(i);
    CheckEnumerable(Popcount(others), "greedy basis");
    std::int64_t slack = -1;
    ForEachSubsetOf(others, [&](Subset t) {
      Subset s = t | Bit(i);
      std::int64_t gap = p.Value(s) - Sum(y, s);
      if (slack < 0 || gap < slack) slack = gap;
    });
    if (slack < 0) throw InternalError("greedy basis left the polymatroid");
    y[i] += slack;
  }
  return y;
}

Subset MatroidAddGreedy(const Matroid& m, Subset independent,
                        std::span<const int> candidates) {
  if (!m.IsIndependent(independent)) {
    throw ContractError("greedy add: starting set " +
                        SubsetToString(independent) + " is dependent");
  }
  Subset current = independent;
  int size = Popcount(current);
  for (int c : candidates) {
    if (c < 0 || c >= m.size()) {
      throw std::out_of_range("greedy add: candidate out of range");
    }
    if (Contains(current, c)) continue;
    if (m.Rank(current | Bit(c)) == size + 1) {
      current |= Bit(c);
      ++size;
    }
  }
  return current;
}

PolymatroidPtr DualPolymatroidOf(PolymatroidPtr p, IntVector z) {
  return MakeDual(std::move(p), std::move(z));
}

}  // namespace matalloc
