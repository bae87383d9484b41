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

#ifndef MATALLOC_POLYMATROID_H_
#define MATALLOC_POLYMATROID_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "matalloc/matroid.h"
#include "matalloc/oracle_base.h"
#include "matalloc/subset.h"

namespace matalloc {

enum class PolymatroidKind {
  kModular,
  kCoverage,
  kScaledRank,
  kExplicit,
  kSum,
  kCapped,
  kContracted,
  kDual,
  kPulledBack,
};

// Value oracle of an integer polymatroid: f monotone, submodular, f(∅) = 0.
class Polymatroid {
 public:
  explicit Polymatroid(int n);
  virtual ~Polymatroid() = default;
  Polymatroid(const Polymatroid&) = delete;
  Polymatroid& operator=(const Polymatroid&) = delete;

  int size() const { return n_; }
  Subset ground() const { return FullSet(n_); }

  // Throws std::out_of_range on elements outside the ground set.
  std::int64_t Value(Subset s) const;

  // max { y(E) : y in P, y <= counts }. The generic implementation is
  // min over T ⊆ supp(counts) of f(T) + counts(supp \ T).
  std::int64_t MultisetRank(std::span<const std::int64_t> counts) const;

  virtual PolymatroidKind kind() const = 0;

 protected:
  virtual std::int64_t ComputeValue(Subset s) const = 0;
  virtual std::int64_t ComputeMultisetRank(
      std::span<const std::int64_t> counts) const;
  void EnableMemo() { memoize_ = true; }

 private:
  int n_;
  bool memoize_ = false;
  SubsetMemo memo_;
};

class ModularPolymatroid : public Polymatroid {
 public:
  explicit ModularPolymatroid(IntVector weights);
  PolymatroidKind kind() const override { return PolymatroidKind::kModular; }
  const IntVector& weights() const { return weights_; }

 protected:
  std::int64_t ComputeValue(Subset s) const override;
  std::int64_t ComputeMultisetRank(
      std::span<const std::int64_t> counts) const override;

 private:
  IntVector weights_;
};

// Element i covers items covers[i]; f(S) is the weight of the union.
class CoveragePolymatroid : public Polymatroid {
 public:
  CoveragePolymatroid(std::vector<std::vector<int>> covers,
                      IntVector item_weights);
  PolymatroidKind kind() const override { return PolymatroidKind::kCoverage; }
  const std::vector<std::vector<int>>& covers() const { return covers_; }
  const IntVector& item_weights() const { return item_weights_; }

 protected:
  std::int64_t ComputeValue(Subset s) const override;

 private:
  std::vector<std::vector<int>> covers_;
  IntVector item_weights_;
  std::vector<Subset> item_masks_;
};

// f(S) = scale * r(S).
class ScaledRankPolymatroid : public Polymatroid {
 public:
  ScaledRankPolymatroid(MatroidPtr matroid, std::int64_t scale);
  PolymatroidKind kind() const override {
    return PolymatroidKind::kScaledRank;
  }
  const MatroidPtr& matroid() const { return matroid_; }
  std::int64_t scale() const { return scale_; }

 protected:
  std::int64_t ComputeValue(Subset s) const override;

 private:
  MatroidPtr matroid_;
  std::int64_t scale_;
};

class ExplicitPolymatroid : public Polymatroid {
 public:
  ExplicitPolymatroid(int n, std::vector<std::int64_t> table);
  PolymatroidKind kind() const override { return PolymatroidKind::kExplicit; }
  const std::vector<std::int64_t>& table() const { return table_; }

 protected:
  std::int64_t ComputeValue(Subset s) const override;

 private:
  std::vector<std::int64_t> table_;
};

class SumPolymatroid : public Polymatroid {
 public:
  explicit SumPolymatroid(std::vector<PolymatroidPtr> parts);
  PolymatroidKind kind() const override { return PolymatroidKind::kSum; }
  const std::vector<PolymatroidPtr>& parts() const { return parts_; }

 protected:
  std::int64_t ComputeValue(Subset s) const override;

 private:
  std::vector<PolymatroidPtr> parts_;
};

// Polymatroid of {y in P : y(i) <= caps[i]}; nullopt leaves i uncapped.
// f'(S) = min over T ⊆ S of f(S \ T) + caps(T).
class CappedPolymatroid : public Polymatroid {
 public:
  CappedPolymatroid(PolymatroidPtr inner,
                    std::vector<std::optional<std::int64_t>> caps);
  PolymatroidKind kind() const override { return PolymatroidKind::kCapped; }
  const PolymatroidPtr& inner() const { return inner_; }
  const std::vector<std::optional<std::int64_t>>& caps() const {
    return caps_;
  }

 protected:
  std::int64_t ComputeValue(Subset s) const override;

 private:
  PolymatroidPtr inner_;
  std::vector<std::optional<std::int64_t>> caps_;
  Subset capped_mask_ = 0;
};

// Contraction by a base vector y with X = supp(y): the inner polymatroid is
// capped at y on X and then X is contracted, so
//   g(S) = h((S \ X) ∪ X) - h(X),  h = inner capped at y on X.
// Elements of X carry no value.
class ContractedPolymatroid : public Polymatroid {
 public:
  ContractedPolymatroid(PolymatroidPtr inner, IntVector base);
  PolymatroidKind kind() const override {
    return PolymatroidKind::kContracted;
  }
  const PolymatroidPtr& inner() const { return inner_; }
  const IntVector& base() const { return base_; }

 protected:
  std::int64_t ComputeValue(Subset s) const override;

 private:
  std::int64_t CappedInner(Subset s) const;

  PolymatroidPtr inner_;
  IntVector base_;
  Subset contracted_;
  std::int64_t base_value_;
};

// g(S) = z(S) + f(E \ S) - f(E).
class DualPolymatroid : public Polymatroid {
 public:
  DualPolymatroid(PolymatroidPtr inner, IntVector z);
  PolymatroidKind kind() const override { return PolymatroidKind::kDual; }
  const PolymatroidPtr& inner() const { return inner_; }
  const IntVector& z() const { return z_; }

 protected:
  std::int64_t ComputeValue(Subset s) const override;

 private:
  PolymatroidPtr inner_;
  IntVector z_;
  std::int64_t full_value_;
};

// Direct sum of pulled-back polymatroids. Each block owns a disjoint set of
// ground elements and maps them onto the ground of its own polymatroid:
//   g(S) = Σ_k inner_k(φ_k(S ∩ members_k)).
// Multiset ranks decompose block by block, which keeps gadget
// intersections cheap.
class PulledBackPolymatroid : public Polymatroid {
 public:
  struct Block {
    PolymatroidPtr inner;
    std::vector<int> members;  // ground elements of this block
    std::vector<int> targets;  // targets[t] = inner element of members[t]
  };
  PulledBackPolymatroid(int n, std::vector<Block> blocks);
  PolymatroidKind kind() const override {
    return PolymatroidKind::kPulledBack;
  }
  const std::vector<Block>& blocks() const { return blocks_; }

 protected:
  std::int64_t ComputeValue(Subset s) const override;
  std::int64_t ComputeMultisetRank(
      std::span<const std::int64_t> counts) const override;

 private:
  std::vector<Block> blocks_;
};

PolymatroidPtr MakeModular(IntVector weights);
PolymatroidPtr MakeZeroPolymatroid(int n);
PolymatroidPtr MakeCoverage(std::vector<std::vector<int>> covers,
                            IntVector item_weights);
PolymatroidPtr MakeScaledRank(MatroidPtr matroid, std::int64_t scale);
PolymatroidPtr MakeExplicitPolymatroid(int n, std::vector<std::int64_t> table);
PolymatroidPtr MakeSum(std::vector<PolymatroidPtr> parts);
PolymatroidPtr MakeCapped(PolymatroidPtr inner,
                          std::vector<std::optional<std::int64_t>> caps);
// Caps every element at `cap`.
PolymatroidPtr MakeUniformlyCapped(PolymatroidPtr inner, std::int64_t cap);
PolymatroidPtr MakeContractedPolymatroid(PolymatroidPtr inner, IntVector base);
PolymatroidPtr MakeDual(PolymatroidPtr inner, IntVector z);
PolymatroidPtr MakePulledBack(int n,
                              std::vector<PulledBackPolymatroid::Block> blocks);

std::vector<std::int64_t> ValueTable(const Polymatroid& p);

}  // namespace matalloc

#endif  // MATALLOC_POLYMATROID_H_
