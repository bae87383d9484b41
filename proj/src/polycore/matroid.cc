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

#include "matalloc/matroid.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "matalloc/caps.h"
#include "matalloc/errors.h"
#include "matalloc/polymatroid.h"

namespace matalloc {
namespace {

void CheckGround(int n) {
  if (n < 0 || n > kMaxGround) {
    throw ContractError("ground size " + std::to_string(n) +
                        " outside [0, 64]");
  }
}

void CheckEnumerable(int n, const char* what) {
  if (n > GetCaps().sfm_ground) {
    throw CapExceeded(std::string(what) + " needs subset enumeration over " +
                      std::to_string(n) + " elements (cap " +
                      std::to_string(GetCaps().sfm_ground) + ")");
  }
}

int Find(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

Matroid::Matroid(int n) : n_(n) { CheckGround(n); }

int Matroid::Rank(Subset x) const {
  if (!IsSubsetOf(x, ground())) {
    throw std::out_of_range("subset " + SubsetToString(x) +
                            " leaves ground of size " + std::to_string(n_));
  }
  CountOracleQuery();
  if (!memoize_) return ComputeRank(x);
  if (auto hit = memo_.Find(x)) return static_cast<int>(*hit);
  int r = ComputeRank(x);
  memo_.Store(x, r);
  return r;
}

UniformMatroid::UniformMatroid(int n, int rank) : Matroid(n), rank_(rank) {
  if (rank < 0) throw ContractError("uniform matroid with negative rank");
}

int UniformMatroid::ComputeRank(Subset x) const {
  return std::min(Popcount(x), rank_);
}

PartitionMatroid::PartitionMatroid(int n,
                                   std::vector<std::vector<int>> blocks,
                                   std::vector<int> capacities)
    : Matroid(n),
      blocks_(std::move(blocks)),
      capacities_(std::move(capacities)) {
  if (blocks_.size() != capacities_.size()) {
    throw ContractError("partition matroid: blocks/capacities size mismatch");
  }
  Subset seen = 0;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (capacities_[k] < 0) {
      throw ContractError("partition matroid: negative capacity");
    }
    Subset mask = 0;
    for (int e : blocks_[k]) {
      if (e < 0 || e >= n) {
        throw ContractError("partition matroid: element out of range");
      }
      if (Contains(seen, e)) {
        throw ContractError("partition matroid: element in two blocks");
      }
      seen |= Bit(e);
      mask |= Bit(e);
    }
    block_masks_.push_back(mask);
  }
  if (seen != ground()) {
    throw ContractError("partition matroid: blocks do not cover the ground");
  }
}

int PartitionMatroid::ComputeRank(Subset x) const {
  int r = 0;
  for (std::size_t k = 0; k < block_masks_.size(); ++k) {
    r += std::min(Popcount(x & block_masks_[k]), capacities_[k]);
  }
  return r;
}

GraphicMatroid::GraphicMatroid(int vertices,
                               std::vector<std::pair<int, int>> edges)
    : Matroid(static_cast<int>(edges.size())),
      vertices_(vertices),
      edges_(std::move(edges)) {
  for (auto [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= vertices_ || v >= vertices_) {
      throw ContractError("graphic matroid: endpoint out of range");
    }
  }
}

int GraphicMatroid::ComputeRank(Subset x) const {
  std::vector<int> parent(vertices_);
  std::iota(parent.begin(), parent.end(), 0);
  int r = 0;
  for (int e : Elements(x)) {
    int a = Find(parent, edges_[e].first);
    int b = Find(parent, edges_[e].second);
    if (a != b) {
      parent[a] = b;
      ++r;
    }
  }
  return r;
}

TransversalMatroid::TransversalMatroid(int right_size,
                                       std::vector<std::vector<int>> adjacency)
    : Matroid(static_cast<int>(adjacency.size())),
      right_size_(right_size),
      adjacency_(std::move(adjacency)) {
  for (const auto& row : adjacency_) {
    for (int v : row) {
      if (v < 0 || v >= right_size_) {
        throw ContractError("transversal matroid: right vertex out of range");
      }
    }
  }
  EnableMemo();
}

int TransversalMatroid::ComputeRank(Subset x) const {
  // Kuhn's augmenting paths; left vertices in index order.
  std::vector<int> match_right(right_size_, -1);
  std::vector<char> visited(right_size_);
  std::function<bool(int)> augment = [&](int left) {
    for (int v : adjacency_[left]) {
      if (visited[v]) continue;
      visited[v] = 1;
      if (match_right[v] < 0 || augment(match_right[v])) {
        match_right[v] = left;
        return true;
      }
    }
    return false;
  };
  int r = 0;
  for (int e : Elements(x)) {
    std::fill(visited.begin(), visited.end(), 0);
    if (augment(e)) ++r;
  }
  return r;
}

ExplicitMatroid::ExplicitMatroid(int n, std::vector<int> table)
    : Matroid(n), table_(std::move(table)) {
  if (n > 24 || table_.size() != (std::size_t{1} << n)) {
    throw ContractError("explicit matroid: table must have 2^n entries");
  }
}

int ExplicitMatroid::ComputeRank(Subset x) const { return table_[x]; }

ContractedMatroid::ContractedMatroid(MatroidPtr inner, Subset contracted)
    : Matroid(inner->size()),
      inner_(std::move(inner)),
      contracted_(contracted) {
  base_rank_ = inner_->Rank(contracted_);
}

int ContractedMatroid::ComputeRank(Subset x) const {
  return inner_->Rank(x | contracted_) - base_rank_;
}

ZeroedMatroid::ZeroedMatroid(MatroidPtr inner, Subset removed)
    : Matroid(inner->size()), inner_(std::move(inner)), removed_(removed) {
  if (!IsSubsetOf(removed_, ground())) {
    throw ContractError("zeroed matroid: removed set outside ground");
  }
}

int ZeroedMatroid::ComputeRank(Subset x) const {
  return inner_->Rank(x & ~removed_);
}

UnionMatroid::UnionMatroid(std::vector<MatroidPtr> parts)
    : Matroid(parts.empty() ? 0 : parts.front()->size()),
      parts_(std::move(parts)) {
  for (const auto& p : parts_) {
    if (p->size() != size()) {
      throw ContractError("union matroid: parts differ in ground size");
    }
  }
  EnableMemo();
}

int UnionMatroid::ComputeRank(Subset x) const {
  if (parts_.empty()) return 0;
  CheckEnumerable(Popcount(x), "union matroid rank");
  int best = Popcount(x);
  ForEachSubsetOf(x, [&](Subset y) {
    int value = Popcount(x & ~y);
    for (const auto& p : parts_) value += p->Rank(y);
    best = std::min(best, value);
  });
  return best;
}

InducedMatroid::InducedMatroid(PolymatroidPtr polymatroid)
    : Matroid(polymatroid->size()), polymatroid_(std::move(polymatroid)) {
  EnableMemo();
}

int InducedMatroid::ComputeRank(Subset x) const {
  CheckEnumerable(Popcount(x), "induced matroid rank");
  std::int64_t best = Popcount(x);
  ForEachSubsetOf(x, [&](Subset s) {
    best = std::min(best, polymatroid_->Value(s) + Popcount(x & ~s));
  });
  return static_cast<int>(best);
}

MatroidPtr MakeUniform(int n, int rank) {
  return std::make_shared<UniformMatroid>(n, rank);
}
MatroidPtr MakeFree(int n) { return std::make_shared<UniformMatroid>(n, n); }
MatroidPtr MakePartition(int n, std::vector<std::vector<int>> blocks,
                         std::vector<int> capacities) {
  return std::make_shared<PartitionMatroid>(n, std::move(blocks),
                                            std::move(capacities));
}
MatroidPtr MakeGraphic(int vertices, std::vector<std::pair<int, int>> edges) {
  return std::make_shared<GraphicMatroid>(vertices, std::move(edges));
}
MatroidPtr MakeTransversal(int right_size,
                           std::vector<std::vector<int>> adjacency) {
  return std::make_shared<TransversalMatroid>(right_size,
                                              std::move(adjacency));
}
MatroidPtr MakeExplicitMatroid(int n, std::vector<int> table) {
  return std::make_shared<ExplicitMatroid>(n, std::move(table));
}
MatroidPtr MakeContracted(MatroidPtr inner, Subset contracted) {
  return std::make_shared<ContractedMatroid>(std::move(inner), contracted);
}
MatroidPtr MakeZeroed(MatroidPtr inner, Subset removed) {
  return std::make_shared<ZeroedMatroid>(std::move(inner), removed);
}
MatroidPtr MakeUnion(std::vector<MatroidPtr> parts) {
  return std::make_shared<UnionMatroid>(std::move(parts));
}
MatroidPtr MakeInduced(PolymatroidPtr polymatroid) {
  return std::make_shared<InducedMatroid>(std::move(polymatroid));
}

std::vector<int> RankTable(const Matroid& m) {
  CheckEnumerable(m.size(), "rank table");
  std::vector<int> table(std::size_t{1} << m.size());
  for (Subset s = 0; s < table.size(); ++s) table[s] = m.Rank(s);
  return table;
}

}  // namespace matalloc
