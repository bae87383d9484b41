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


#ifndef MATALLOC_LOCALSEARCH_H_
#define MATALLOC_LOCALSEARCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matalloc/instance.h"
#include "matalloc/matroid.h"
#include "matalloc/polymatroid.h"
#include "matalloc/rational.h"
#include "matalloc/subset.h"

namespace matalloc {

struct SearchOptions {
  Rational eps = MakeRational(1, 10);
  // Assert the state, addable-set and blocking-set properties at every step;
  // a breach throws InternalError naming the property.
  bool check_invariants = false;
};

// Input of one augmentation call. The active ground is im ∪ ip ∪ b0;
// elements outside it are ignored.
struct SearchState {
  MatroidPtr matroid;
  PolymatroidPtr polymatroid;
  std::int64_t b = 1;
  Subset im = 0;  // covered by the matroid
  Subset ip = 0;  // covered b times by the polymatroid
  Subset b0 = 0;  // elements we try to move into im
  std::vector<int> order;  // priority over b0, first = highest
  Subset Ground() const { return im | ip | b0; }
  int size() const { return matroid->size(); }
};

struct Certificate {
  Subset z1 = 0;
  Subset z2 = 0;  // z2 ⊆ z1, both disjoint from b0
};

struct AugmentResult {
  bool success = false;
  Subset im = 0;
  Subset ip = 0;
  Certificate certificate;  // set on failure
  std::uint64_t nodes = 0;  // recursion nodes in this call tree
};

struct AddableSets {
  Subset a = 0;
  Subset c = 0;  // includes b0
  std::vector<Subset> layers;
};

// Layered construction of the addable set A and its companion C.
AddableSets BuildAddable(const SearchState& state, const Rational& eps);
// Elements i of ip with f(i | b·(ip ∪ a − i)) < b.
Subset ComputeBlocking(const SearchState& state, Subset a);
// Child input: contracts C \ b0 from the matroid and b·(a ∪ blocking) from
// the polymatroid; blocking joins b0 at lower priority.
SearchState RecurseInput(const SearchState& state, Subset a, Subset c,
                         Subset blocking);
AugmentResult Augment(const SearchState& state, const SearchOptions& options);

struct CertificateReport {
  bool shape = false;  // z2 ⊆ z1 ⊆ ground \ b0
  bool p1 = false;     // r(b0 | z1) < 2ε|b0|
  bool p2 = false;     // r(z1) ≤ |z1| − (1/2 − 2ε)|z2| + ε|b0|
  bool p3 = false;     // f(i | b·(z2 − i)) < b for ≥ (1 − ε)|z2| elements
  bool p4 = false;     // f(i | 2b·z2) < 2b for i in z1 \ z2
  bool ok() const { return shape && p1 && p2 && p3 && p4; }
  std::string Describe() const;
};

CertificateReport VerifyCertificate(const Certificate& cert,
                                    const SearchState& state,
                                    const Rational& eps);

// Smallest integer k ≥ 3 for which the failure argument, evaluated with
// this certificate's actual set sizes and ranks, rules out a solution with
// polymatroid multiplicity k·b covering 3ε|b0| of b0 by the matroid.
// nullopt when no k ≤ 1000 works.
std::optional<std::int64_t> CertificateExcludedMultiple(const Certificate& cert,
                                                        const SearchState& state,
                                                        const Rational& eps);

// Multiplier used by the exhaustive soundness check: 4 + 40ε.
Rational SoundnessAlpha(const Rational& eps);

// True when no I_M* (independent, |b0 ∩ I_M*| ≥ 3ε|b0|) and I_P* with
// I_M* ∪ I_P* ⊇ ground \ b0 and alpha·b·I_P* in P exist. Exhaustive; ground
// size limited by Caps::sfm_ground.
bool ExhaustiveSoundness(const SearchState& state, const Rational& eps,
                         const Rational& alpha);

// Small certificate (x, y) on a core instance: f(x) ≤ b|x|, x ⊆ y,
// r(y) < |y| − |x|/2 and f(i | x) ≤ b for i in y \ x. It rules out any
// cover of y with polymatroid multiplicity 3b.
bool VerifyMiniatureCertificate(const Matroid& m, const Polymatroid& p,
                                std::int64_t b, Subset x, Subset y);
// Exhaustive: no I_M independent with I_P = y \ I_M and 3b·I_P in P.
bool NoCoverOfSetAt(const Matroid& m, const Polymatroid& p, Subset y,
                    const Rational& multiplicity);

struct CoverFailure {
  int element = -1;
  Certificate certificate;
  SearchState state;  // input of the failed top-level call
};

struct CoverResult {
  bool success = false;
  Subset im = 0;
  IntVector y;
  std::vector<CoverFailure> failures;
  int restarts = 0;
  std::uint64_t recursion_nodes = 0;   // summed over calls
  std::uint64_t max_call_nodes = 0;    // largest single call tree
  std::uint64_t oracle_queries = 0;
  std::string diagnostic;
};

// Top-level driver: covers elements one at a time, zeroing the rank of any
// element whose augmentation fails and restarting (at most |E| times).
CoverResult SolveCover(const CoreCoverInstance& inst,
                       const SearchOptions& options);

// ⌈log_{1/(1−ε²)} n⌉; the node bound of one call tree is 2 to this power.
int RecursionDepthExponent(int n, const Rational& eps);
bool WithinNodeBound(std::uint64_t nodes, int n, const Rational& eps);

}  // namespace matalloc

#endif  // MATALLOC_LOCALSEARCH_H_
