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

#include "matalloc/polymatroid.h"

#include <algorithm>
#include <stdexcept>
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

void CheckVectorSize(const IntVector& v, int n, const char* what) {
  if (static_cast<int>(v.size()) != n) {
    throw ContractError(std::string(what) + ": vector has " +
                        std::to_string(v.size()) + " entries, ground has " +
                        std::to_string(n));
  }
}

}  // namespace

Polymatroid::Polymatroid(int n) : n_(n) {
  if (n < 0 || n > kMaxGround) {
    throw ContractError("ground size " + std::to_string(n) +
                        " outside [0, 64]");
  }
}

std::int64_t Polymatroid::Value(Subset s) const {
  if (!IsSubsetOf(s, ground())) {
    throw std::out_of_range("subset " + SubsetToString(s) +
                            " leaves ground of size " + std::to_string(n_));
  }
  CountOracleQuery();
  if (!memoize_) return ComputeValue(s);
  if (auto hit = memo_.Find(s)) return *hit;
  std::int64_t v = ComputeValue(s);
  memo_.Store(s, v);
  return v;
}

std::int64_t Polymatroid::MultisetRank(
    std::span<const std::int64_t> counts) const {
  if (static_cast<int>(counts.size()) != n_) {
    throw ContractError("multiset rank: count vector size mismatch");
  }
  for (auto c : counts) {
    if (c < 0) throw ContractError("multiset rank: negative count");
  }
  return ComputeMultisetRank(counts);
}

std::int64_t Polymatroid::ComputeMultisetRank(
    std::span<const std::int64_t> counts) const {
  Subset support = 0;
  for (int i = 0; i < n_; ++i) {
    if (counts[i] > 0) support |= Bit(i);
  }
  CheckEnumerable(Popcount(support), "multiset rank");
  std::int64_t best = 0;
  bool first = true;
  ForEachSubsetOf(support, [&](Subset kept) {
    std::int64_t v = Value(kept);
    for (int e : Elements(support & ~kept)) v += counts[e];
    if (first || v < best) best = v;
    first = false;
  });
  return best;
}

ModularPolymatroid::ModularPolymatroid(IntVector weights)
    : Polymatroid(static_cast<int>(weights.size())),
      weights_(std::move(weights)) {
  for (auto w : weights_) {
    if (w < 0) throw ContractError("modular polymatroid: negative weight");
  }
}

std::int64_t ModularPolymatroid::ComputeValue(Subset s) const {
  return Sum(weights_, s);
}

std::int64_t ModularPolymatroid::ComputeMultisetRank(
    std::span<const std::int64_t> counts) const {
  std::int64_t total = 0;
  for (int i = 0; i < size(); ++i) total += std::min(weights_[i], counts[i]);
  return total;
}

CoveragePolymatroid::CoveragePolymatroid(std::vector<std::vector<int>> covers,
                                         IntVector item_weights)
    : Polymatroid(static_cast<int>(covers.size())),
      covers_(std::move(covers)),
      item_weights_(std::move(item_weights)) {
  if (item_weights_.size() > 64) {
    throw ContractError("coverage polymatroid: at most 64 items");
  }
  for (auto w : item_weights_) {
    if (w < 0) throw ContractError("coverage polymatroid: negative weight");
  }
  for (const auto& row : covers_) {
    Subset mask = 0;
    for (int item : row) {
      if (item < 0 || item >= static_cast<int>(item_weights_.size())) {
        throw ContractError("coverage polymatroid: item out of range");
      }
      mask |= Bit(item);
    }
    item_masks_.push_back(mask);
  }
}

std::int64_t CoveragePolymatroid::ComputeValue(Subset s) const {
  Subset covered = 0;
  for (int e : Elements(s)) covered |= item_masks_[e];
  return Sum(item_weights_, covered);
}

ScaledRankPolymatroid::ScaledRankPolymatroid(MatroidPtr matroid,
                                             std::int64_t scale)
    : Polymatroid(matroid->size()), matroid_(std::move(matroid)),
      scale_(scale) {
  if (scale_ < 0) throw ContractError("scaled rank: negative scale");
}

std::int64_t ScaledRankPolymatroid::ComputeValue(Subset s) const {
  return scale_ * matroid_->Rank(s);
}

ExplicitPolymatroid::ExplicitPolymatroid(int n,
                                         std::vector<std::int64_t> table)
    : Polymatroid(n), table_(std::move(table)) {
  if (n > 24 || table_.size() != (std::size_t{1} << n)) {
    throw ContractError("explicit polymatroid: table must have 2^n entries");
  }
}

std::int64_t ExplicitPolymatroid::ComputeValue(Subset s) const {
  return table_[s];
}

SumPolymatroid::SumPolymatroid(std::vector<PolymatroidPtr> parts)
    : Polymatroid(parts.empty() ? 0 : parts.front()->size()),
      parts_(std::move(parts)) {
  for (const auto& p : parts_) {
    if (p->size() != size()) {
      throw ContractError("sum polymatroid: parts differ in ground size");
    }
  }
}

std::int64_t SumPolymatroid::ComputeValue(Subset s) const {
  std::int64_t total = 0;
  for (const auto& p : parts_) total += p->Value(s);
  return total;
}

CappedPolymatroid::CappedPolymatroid(
    PolymatroidPtr inner, std::vector<std::optional<std::int64_t>> caps)
    : Polymatroid(inner->size()),
      inner_(std::move(inner)),
      caps_(std::move(caps)) {
  if (static_cast<int>(caps_.size()) != size()) {
    throw ContractError("capped polymatroid: cap vector size mismatch");
  }
  for (int i = 0; i < size(); ++i) {
    if (!caps_[i].has_value()) continue;
    if (*caps_[i] < 0) throw ContractError("capped polymatroid: negative cap");
    capped_mask_ |= Bit(i);
  }
  EnableMemo();
}

std::int64_t CappedPolymatroid::ComputeValue(Subset s) const {
  Subset cappable = s & capped_mask_;
  CheckEnumerable(Popcount(cappable), "capped evaluation");
  std::int64_t best = inner_->Value(s);
  ForEachSubsetOf(cappable, [&](Subset t) {
    if (t == 0) return;
    std::int64_t v = inner_->Value(s & ~t);
    for (int e : Elements(t)) v += *caps_[e];
    best = std::min(best, v);
  });
  return best;
}

ContractedPolymatroid::ContractedPolymatroid(PolymatroidPtr inner,
                                             IntVector base)
    : Polymatroid(inner->size()),
      inner_(std::move(inner)),
      base_(std::move(base)) {
  CheckVectorSize(base_, size(), "contracted polymatroid");
  for (auto v : base_) {
    if (v < 0) throw ContractError("contracted polymatroid: negative base");
  }
  contracted_ = Support(base_);
  base_value_ = CappedInner(contracted_);
  EnableMemo();
}

std::int64_t ContractedPolymatroid::CappedInner(Subset s) const {
  Subset cappable = s & contracted_;
  CheckEnumerable(Popcount(cappable), "contracted evaluation");
  std::int64_t best = inner_->Value(s);
  ForEachSubsetOf(cappable, [&](Subset t) {
    if (t == 0) return;
    best = std::min(best, inner_->Value(s & ~t) + Sum(base_, t));
  });
  return best;
}

std::int64_t ContractedPolymatroid::ComputeValue(Subset s) const {
  return CappedInner((s & ~contracted_) | contracted_) - base_value_;
}

DualPolymatroid::DualPolymatroid(PolymatroidPtr inner, IntVector z)
    : Polymatroid(inner->size()), inner_(std::move(inner)), z_(std::move(z)) {
  CheckVectorSize(z_, size(), "dual polymatroid");
  full_value_ = inner_->Value(ground());
}

std::int64_t DualPolymatroid::ComputeValue(Subset s) const {
  return Sum(z_, s) + inner_->Value(ground() & ~s) - full_value_;
}

PulledBackPolymatroid::PulledBackPolymatroid(int n, std::vector<Block> blocks)
    : Polymatroid(n), blocks_(std::move(blocks)) {
  Subset seen = 0;
  for (const auto& block : blocks_) {
    if (block.members.size() != block.targets.size()) {
      throw ContractError("pulled-back polymatroid: member/target mismatch");
    }
    for (std::size_t t = 0; t < block.members.size(); ++t) {
      int e = block.members[t];
      if (e < 0 || e >= n || Contains(seen, e)) {
        throw ContractError("pulled-back polymatroid: bad block member");
      }
      if (block.targets[t] < 0 || block.targets[t] >= block.inner->size()) {
        throw ContractError("pulled-back polymatroid: bad block target");
      }
      seen |= Bit(e);
    }
  }
}

std::int64_t PulledBackPolymatroid::ComputeValue(Subset s) const {
  std::int64_t total = 0;
  for (const auto& block : blocks_) {
    Subset image = 0;
    for (std::size_t t = 0; t < block.members.size(); ++t) {
      if (Contains(s, block.members[t])) image |= Bit(block.targets[t]);
    }
    if (image != 0) total += block.inner->Value(image);
  }
  return total;
}

std::int64_t PulledBackPolymatroid::ComputeMultisetRank(
    std::span<const std::int64_t> counts) const {
  std::int64_t total = 0;
  for (const auto& block : blocks_) {
    IntVector aggregated(block.inner->size(), 0);
    bool any = false;
    for (std::size_t t = 0; t < block.members.size(); ++t) {
      aggregated[block.targets[t]] += counts[block.members[t]];
      any = any || counts[block.members[t]] > 0;
    }
    if (any) total += block.inner->MultisetRank(aggregated);
  }
  return total;
}

PolymatroidPtr MakeModular(IntVector weights) {
  return std::make_shared<ModularPolymatroid>(std::move(weights));
}
PolymatroidPtr MakeZeroPolymatroid(int n) {
  return std::make_shared<ModularPolymatroid>(IntVector(n, 0));
}
PolymatroidPtr MakeCoverage(std::vector<std::vector<int>> covers,
                            IntVector item_weights) {
  return std::make_shared<CoveragePolymatroid>(std::move(covers),
                                               std::move(item_weights));
}
PolymatroidPtr MakeScaledRank(MatroidPtr matroid, std::int64_t scale) {
  return std::make_shared<ScaledRankPolymatroid>(std::move(matroid), scale);
}
PolymatroidPtr MakeExplicitPolymatroid(int n,
                                       std::vector<std::int64_t> table) {
  return std::make_shared<ExplicitPolymatroid>(n, std::move(table));
}
PolymatroidPtr MakeSum(std::vector<PolymatroidPtr> parts) {
  return std::make_shared<SumPolymatroid>(std::move(parts));
}
PolymatroidPtr MakeCapped(PolymatroidPtr inner,
                          std::vector<std::optional<std::int64_t>> caps) {
  return std::make_shared<CappedPolymatroid>(std::move(inner),
                                             std::move(caps));
}
PolymatroidPtr MakeUniformlyCapped(PolymatroidPtr inner, std::int64_t cap) {
  std::vector<std::optional<std::int64_t>> caps(inner->size(), cap);
  return MakeCapped(std::move(inner), std::move(caps));
}
PolymatroidPtr MakeContractedPolymatroid(PolymatroidPtr inner,
                                         IntVector base) {
  return std::make_shared<ContractedPolymatroid>(std::move(inner),
                                                 std::move(base));
}
PolymatroidPtr MakeDual(PolymatroidPtr inner, IntVector z) {
  return std::make_shared<DualPolymatroid>(std::move(inner), std::move(z));
}
PolymatroidPtr MakePulledBack(
    int n, std::vector<PulledBackPolymatroid::Block> blocks) {
  return std::make_shared<PulledBackPolymatroid>(n, std::move(blocks));
}

std::vector<std::int64_t> ValueTable(const Polymatroid& p) {
  CheckEnumerable(p.size(), "value table");
  std::vector<std::int64_t> table(std::size_t{1} << p.size());
  for (Subset s = 0; s < table.size(); ++s) table[s] = p.Value(s);
  return table;
}

}  // namespace matalloc
