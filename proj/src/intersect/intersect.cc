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

#include "matalloc/intersect.h"

#include <algorithm>
#include <deque>
#include <string>

#include "matalloc/caps.h"
#include "matalloc/errors.h"
#include "matalloc/polyops.h"

namespace matalloc {

IntVector ExpandedGround::Counts(Subset copies) const {
  IntVector counts(original_size, 0);
  for (int c : Elements(copies)) ++counts[copy_element[c]];
  return counts;
}

Subset ExpandedGround::CopiesFor(const IntVector& counts) const {
  Subset s = 0;
  for (int e = 0; e < original_size; ++e) {
    for (int k = 0; k < std::min(counts[e], multiplicity[e]); ++k) {
      s |= Bit(first_copy[e] + k);
    }
  }
  return s;
}

ExpandedGround MakeExpandedGround(const IntVector& caps) {
  ExpandedGround g;
  g.original_size = static_cast<int>(caps.size());
  g.multiplicity = caps;
  std::int64_t total = 0;
  for (auto c : caps) {
    if (c < 0) throw ContractError("expansion caps must be nonnegative");
    total += c;
  }
  if (total > GetCaps().expansion) {
    throw CapExceeded("unit expansion needs " + std::to_string(total) +
                      " copies (cap " + std::to_string(GetCaps().expansion) +
                      ")");
  }
  for (int e = 0; e < g.original_size; ++e) {
    g.first_copy.push_back(static_cast<int>(g.copy_element.size()));
    for (int k = 0; k < caps[e]; ++k) {
      g.copy_element.push_back(e);
      g.copy_number.push_back(k);
    }
  }
  return g;
}

ExpandedMatroid::ExpandedMatroid(PolymatroidPtr polymatroid,
                                 ExpandedGround ground)
    : Matroid(ground.size()),
      polymatroid_(std::move(polymatroid)),
      expanded_(std::move(ground)) {
  if (expanded_.original_size != polymatroid_->size()) {
    throw ContractError("expanded ground does not match polymatroid");
  }
  EnableMemo();
}

int ExpandedMatroid::ComputeRank(Subset x) const {
  return static_cast<int>(polymatroid_->MultisetRank(expanded_.Counts(x)));
}

std::pair<ExpandedGround, MatroidPtr> UnitExpand(PolymatroidPtr p,
                                                 const IntVector& caps) {
  if (static_cast<int>(caps.size()) != p->size()) {
    throw ContractError("unit expansion: caps size mismatch");
  }
  ExpandedGround g = MakeExpandedGround(caps);
  auto m = std::make_shared<ExpandedMatroid>(std::move(p), g);
  return {std::move(g), std::move(m)};
}

Subset MatroidIntersectionMax(const Matroid& m1, const Matroid& m2) {
  if (m1.size() != m2.size()) {
    throw ContractError("matroid intersection: ground sizes differ");
  }
  const int n = m1.size();
  Subset current = 0;
  while (true) {
    Subset outside = FullSet(n) & ~current;
    std::vector<int> inside_list = Elements(current);
    std::vector<int> parent(n, -2);
    std::deque<int> queue;
    for (int x : Elements(outside)) {
      if (m1.IsIndependent(current | Bit(x))) {
        parent[x] = -1;
        queue.push_back(x);
      }
    }
    int sink = -1;
    while (!queue.empty() && sink < 0) {
      int v = queue.front();
      queue.pop_front();
      if (!Contains(current, v)) {
        if (m2.IsIndependent(current | Bit(v))) {
          sink = v;
          break;
        }
        // x -> y when I - y + x is independent in m2.
        for (int y : inside_list) {
          if (parent[y] != -2) continue;
          if (m2.IsIndependent((current & ~Bit(y)) | Bit(v))) {
            parent[y] = v;
            queue.push_back(y);
          }
        }
      } else {
        // y -> x when I - y + x is independent in m1.
        for (int x : Elements(outside)) {
          if (parent[x] != -2) continue;
          if (m1.IsIndependent((current & ~Bit(v)) | Bit(x))) {
            parent[x] = v;
            queue.push_back(x);
          }
        }
      }
    }
    if (sink < 0) return current;
    for (int v = sink; v >= 0; v = parent[v]) current ^= Bit(v);
  }
}

CommonVector PolymatroidIntersectionMax(PolymatroidPtr p1, PolymatroidPtr p2,
                                        const IntVector& caps) {
  if (p1->size() != p2->size()) {
    throw ContractError("polymatroid intersection: ground sizes differ");
  }
  auto [ground, m1] = UnitExpand(std::move(p1), caps);
  auto [ground2, m2] = UnitExpand(std::move(p2), caps);
  Subset common = MatroidIntersectionMax(*m1, *m2);
  return {ground.Counts(common), true};
}

std::vector<IntVector> DecomposeMergedBasis(
    const std::vector<PolymatroidPtr>& parts, const IntVector& y) {
  if (parts.empty()) throw ContractError("decompose: no parts");
  const int n = parts.front()->size();
  if (static_cast<int>(y.size()) != n) {
    throw ContractError("decompose: vector size mismatch");
  }
  std::int64_t target = 0;
  for (const auto& p : parts) {
    if (p->size() != n) throw ContractError("decompose: part size mismatch");
    target += p->Value(p->ground());
  }
  if (Total(y) != target || !Member(*MakeSum(parts), y)) {
    throw ContractError("decompose: vector is not a basis of the sum");
  }
  if (parts.size() == 1) return {y};

  const int k = static_cast<int>(parts.size());
  if (k * n > kMaxGround) {
    throw CapExceeded("decompose: " + std::to_string(k * n) +
                      " disjoint copies exceed 64");
  }
  // Copy (j, e) lives at index j * n + e.
  std::vector<PulledBackPolymatroid::Block> part_blocks(k);
  std::vector<PulledBackPolymatroid::Block> degree_blocks(n);
  IntVector caps(k * n, 0);
  for (int e = 0; e < n; ++e) {
    degree_blocks[e].inner = MakeModular({y[e]});
  }
  for (int j = 0; j < k; ++j) {
    part_blocks[j].inner = parts[j];
    for (int e = 0; e < n; ++e) {
      int copy = j * n + e;
      part_blocks[j].members.push_back(copy);
      part_blocks[j].targets.push_back(e);
      degree_blocks[e].members.push_back(copy);
      degree_blocks[e].targets.push_back(0);
      caps[copy] = std::min(y[e], parts[j]->Value(Bit(e)));
    }
  }
  auto stacked = MakePulledBack(k * n, std::move(part_blocks));
  auto degrees = MakePulledBack(k * n, std::move(degree_blocks));
  CommonVector common = PolymatroidIntersectionMax(stacked, degrees, caps);
  if (Total(common.x) != target) {
    throw ContractError("decompose: no decomposition into part bases exists");
  }
  std::vector<IntVector> out(k, IntVector(n, 0));
  for (int j = 0; j < k; ++j) {
    for (int e = 0; e < n; ++e) out[j][e] = common.x[j * n + e];
    if (!IsBasis(*parts[j], out[j])) {
      throw InternalError("decompose: part vector is not a basis");
    }
  }
  return out;
}

}  // namespace matalloc
