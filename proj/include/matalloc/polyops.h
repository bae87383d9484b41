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

#ifndef MATALLOC_POLYOPS_H_
#define MATALLOC_POLYOPS_H_

#include <cstdint>
#include <functional>
#include <span>

#include "matalloc/matroid.h"
#include "matalloc/polymatroid.h"
#include "matalloc/rational.h"
#include "matalloc/subset.h"

namespace matalloc {

// f capped at h on X, evaluated at S:  min over T ⊆ S ∩ X of f(S\T) + h|T|.
std::int64_t CappedValue(const Polymatroid& p, Subset s, std::int64_t h,
                         Subset x);

// f(Y | h·X): marginal of Y over X in the polymatroid capped at h on X.
// Elements of Y inside X are ignored.
std::int64_t CappedMarginal(const Polymatroid& p, Subset y, std::int64_t h,
                            Subset x);

// r(Y | X) = r(Y ∪ X) - r(X).
int RankMarginal(const Matroid& m, Subset y, Subset x);

struct SfmResult {
  Subset minimizer = 0;
  std::int64_t value = 0;
};

// Brute-force minimization of g over all subsets of {0..n-1}. Ties go to
// the smallest bitmask. Throws CapExceeded if n exceeds the ground cap.
SfmResult SfmMin(const std::function<std::int64_t(Subset)>& g, int n);

// x in P iff min_S f(S) - x(S) >= 0. Requires x >= 0.
bool Member(const Polymatroid& p, const IntVector& x);
// Same test for a rational vector (fractional polytope membership).
bool MemberFractional(const Polymatroid& p, std::span<const Rational> x);
bool IsBasis(const Polymatroid& p, const IntVector& x);
bool IsBasisFractional(const Polymatroid& p, std::span<const Rational> x);

// Raises elements in index order as far as membership allows. Requires
// Member(p, x); the result is a basis dominating x.
IntVector GreedyBasisAbove(const Polymatroid& p, const IntVector& x);

// Scans candidates in order and keeps each one that stays independent.
// Throws ContractError if `independent` is dependent.
Subset MatroidAddGreedy(const Matroid& m, Subset independent,
                        std::span<const int> candidates);

// g(S) = z(S) + f(E \ S) - f(E).
PolymatroidPtr DualPolymatroidOf(PolymatroidPtr p, IntVector z);

}  // namespace matalloc

#endif  // MATALLOC_POLYOPS_H_
