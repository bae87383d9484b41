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

#ifndef MATALLOC_MATROID_H_
#define MATALLOC_MATROID_H_

#include <memory>
#include <utility>
#include <vector>

#include "matalloc/oracle_base.h"
#include "matalloc/subset.h"

namespace matalloc {

class Polymatroid;
using PolymatroidPtr = std::shared_ptr<const Polymatroid>;

enum class MatroidKind {
  kUniform,
  kPartition,
  kGraphic,
  kTransversal,
  kExplicit,
  kContracted,
  kZeroed,
  kUnion,
  kInduced,
  kExpanded,
};

// Rank oracle over ground {0..size()-1}. Immutable; Rank() is safe to call
// concurrently.
class Matroid {
 public:
  explicit Matroid(int n);
  virtual ~Matroid() = default;
  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;

  int size() const { return n_; }
  Subset ground() const { return FullSet(n_); }

  // Throws std::out_of_range if x has elements outside the ground set.
  int Rank(Subset x) const;
  bool IsIndependent(Subset x) const { return Rank(x) == Popcount(x); }

  virtual MatroidKind kind() const = 0;

 protected:
  virtual int ComputeRank(Subset x) const = 0;
  void EnableMemo() { memoize_ = true; }

 private:
  int n_;
  bool memoize_ = false;
  SubsetMemo memo_;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int n, int rank);
  MatroidKind kind() const override { return MatroidKind::kUniform; }
  int rank_bound() const { return rank_; }

 protected:
  int ComputeRank(Subset x) const override;

 private:
  int rank_;
};

// Every element lies in exactly one block.
class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(int n, std::vector<std::vector<int>> blocks,
                   std::vector<int> capacities);
  MatroidKind kind() const override { return MatroidKind::kPartition; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& capacities() const { return capacities_; }

 protected:
  int ComputeRank(Subset x) const override;

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> capacities_;
  std::vector<Subset> block_masks_;
};

// Ground elements are the edges.
class GraphicMatroid : public Matroid {
 public:
  GraphicMatroid(int vertices, std::vector<std::pair<int, int>> edges);
  MatroidKind kind() const override { return MatroidKind::kGraphic; }
  int vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 protected:
  int ComputeRank(Subset x) const override;

 private:
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
};

// adjacency[i] lists the right-side vertices element i may be matched to.
class TransversalMatroid : public Matroid {
 public:
  TransversalMatroid(int right_size, std::vector<std::vector<int>> adjacency);
  MatroidKind kind() const override { return MatroidKind::kTransversal; }
  int right_size() const { return right_size_; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }

 protected:
  int ComputeRank(Subset x) const override;

 private:
  int right_size_;
  std::vector<std::vector<int>> adjacency_;
};

// table[mask] = rank. Size must be 2^n.
class ExplicitMatroid : public Matroid {
 public:
  ExplicitMatroid(int n, std::vector<int> table);
  MatroidKind kind() const override { return MatroidKind::kExplicit; }
  const std::vector<int>& table() const { return table_; }

 protected:
  int ComputeRank(Subset x) const override;

 private:
  std::vector<int> table_;
};

// r'(Y) = r(Y ∪ C) - r(C).
class ContractedMatroid : public Matroid {
 public:
  ContractedMatroid(MatroidPtr inner, Subset contracted);
  MatroidKind kind() const override { return MatroidKind::kContracted; }
  const MatroidPtr& inner() const { return inner_; }
  Subset contracted() const { return contracted_; }

 protected:
  int ComputeRank(Subset x) const override;

 private:
  MatroidPtr inner_;
  Subset contracted_;
  int base_rank_;
};

// r'(X) = r(X \ removed): removed elements become loops.
class ZeroedMatroid : public Matroid {
 public:
  ZeroedMatroid(MatroidPtr inner, Subset removed);
  MatroidKind kind() const override { return MatroidKind::kZeroed; }
  const MatroidPtr& inner() const { return inner_; }
  Subset removed() const { return removed_; }

 protected:
  int ComputeRank(Subset x) const override;

 private:
  MatroidPtr inner_;
  Subset removed_;
};

// Matroid union: r(X) = min over Y ⊆ X of |X \ Y| + Σ r_i(Y).
class UnionMatroid : public Matroid {
 public:
  explicit UnionMatroid(std::vector<MatroidPtr> parts);
  MatroidKind kind() const override { return MatroidKind::kUnion; }
  const std::vector<MatroidPtr>& parts() const { return parts_; }

 protected:
  int ComputeRank(Subset x) const override;

 private:
  std::vector<MatroidPtr> parts_;
};

// X independent iff f(S) >= |S| for all S ⊆ X.
// r(X) = min over S ⊆ X of f(S) + |X \ S|.
class InducedMatroid : public Matroid {
 public:
  explicit InducedMatroid(PolymatroidPtr polymatroid);
  MatroidKind kind() const override { return MatroidKind::kInduced; }
  const PolymatroidPtr& polymatroid() const { return polymatroid_; }

 protected:
  int ComputeRank(Subset x) const override;

 private:
  PolymatroidPtr polymatroid_;
};

MatroidPtr MakeUniform(int n, int rank);
MatroidPtr MakeFree(int n);
MatroidPtr MakePartition(int n, std::vector<std::vector<int>> blocks,
                         std::vector<int> capacities);
MatroidPtr MakeGraphic(int vertices, std::vector<std::pair<int, int>> edges);
MatroidPtr MakeTransversal(int right_size,
                           std::vector<std::vector<int>> adjacency);
MatroidPtr MakeExplicitMatroid(int n, std::vector<int> table);
MatroidPtr MakeContracted(MatroidPtr inner, Subset contracted);
MatroidPtr MakeZeroed(MatroidPtr inner, Subset removed);
MatroidPtr MakeUnion(std::vector<MatroidPtr> parts);
MatroidPtr MakeInduced(PolymatroidPtr polymatroid);

// Rank table of any matroid, for n small enough to enumerate.
std::vector<int> RankTable(const Matroid& m);

}  // namespace matalloc

#endif  // MATALLOC_MATROID_H_
