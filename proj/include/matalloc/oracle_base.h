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

#ifndef MATALLOC_ORACLE_BASE_H_
#define MATALLOC_ORACLE_BASE_H_

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "matalloc/subset.h"

namespace matalloc {

// Number of oracle queries issued by the calling thread (rank and value
// calls, nested ones included).
std::int64_t OracleQueryCount();
void ResetOracleQueryCount();
void CountOracleQuery();

// Thread-safe memo table keyed by subset. Cleared when it grows past
// `kLimit` entries to bound memory.
class SubsetMemo {
 public:
  static constexpr std::size_t kLimit = 1 << 20;

  std::optional<std::int64_t> Find(Subset s) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(s);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void Store(Subset s, std::int64_t v) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (table_.size() >= kLimit) table_.clear();
    table_.emplace(s, v);
  }

 private:
  mutable std::mutex mu_;
  mutable std::unordered_map<Subset, std::int64_t> table_;
};

}  // namespace matalloc

#endif  // MATALLOC_ORACLE_BASE_H_
