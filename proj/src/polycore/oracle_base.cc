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
#include "matalloc/oracle_base.h"

namespace matalloc {
namespace {
thread_local std::int64_t query_count = 0;
}  // namespace

std::int64_t OracleQueryCount() { return query_count; }
void ResetOracleQueryCount() { query_count = 0; }
void CountOracleQuery() { ++query_count; }

}  // namespace matalloc
