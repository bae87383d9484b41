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

#ifndef MATALLOC_INTERSECT_H_
#define MATALLOC_INTERSECT_H_

#include <utility>
#include <vector>

#include "matalloc/matroid.h"
#include "matalloc/polymatroid.h"
#include "matalloc/subset.h"

namespace matalloc {

// Parallel copies of each ground element: element e gets multiplicity[e]
// copies, numbered consecutively starting at first_copy[e].
struct ExpandedGround {
  int original_size = 0;
  IntVector multiplicity;
  std::vector<int> copy_element;
  std::vector<int> copy_number;
  std::vector<int> first_copy;

  int size() const { return static_cast<int>(copy_element.size()); }
  // Number of chosen copies per original element.
  IntVector Counts(Subset copies) const;
  // The first counts[e] copies of every element.
  Subset CopiesFor(const IntVector& counts) const;
};

ExpandedGround MakeExpandedGround(const IntVector& caps);

// Matroid on the copies: r(S) is the multiset rank of the image of S.
class ExpandedMatroid : public Matroid {
 public:
  ExpandedMatroid(PolymatroidPtr polymatroid, ExpandedGround ground);
  MatroidKind kind() const override { return MatroidKind::kExpanded; }
  const ExpandedGround& expanded() const { return expanded_; }
  const PolymatroidPtr& polymatroid() const { return polymatroid_; }

 protected:
  int ComputeRank(Subset x) const override;

 private:
  PolymatroidPtr polymatroid_;
  ExpandedGround expanded_;
};

// Throws CapExceeded when Σ caps exceeds the expansion cap.
std::pair<ExpandedGround, MatroidPtr> UnitExpand(PolymatroidPtr p,
                                                 const IntVector& caps);

// Maximum-cardinality common independent set via shortest augmenting paths
// in the exchange graph. Ties go to the smallest element index.
Subset MatroidIntersectionMax(const Matroid& m1, const Matroid& m2);

struct CommonVector {
  IntVector x;
  bool certified_maximal = false;
};

// argmax x(E) over x in P1 ∩ P2 with x <= caps.
CommonVector PolymatroidIntersectionMax(PolymatroidPtr p1, PolymatroidPtr p2,
                                        const IntVector& caps);

// Splits a basis y of Σ parts into bases y_j of the parts with Σ y_j = y.
// Throws ContractError when y is not a basis of the sum.
std::vector<IntVector> DecomposeMergedBasis(
    const std::vector<PolymatroidPtr>& parts, const IntVector& y);

}  // namespace matalloc

#endif  // MATALLOC_INTERSECT_H_
