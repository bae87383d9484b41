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


#ifndef MATALLOC_LP_H_
#define MATALLOC_LP_H_

#include <utility>
#include <vector>

#include "matalloc/rational.h"

namespace matalloc {

enum class LpSense { kLessEqual, kEqual, kGreaterEqual };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value = 0;
  std::vector<Rational> x;
};

// Exact dense two-phase simplex with Bland's rule. Every variable is
// nonnegative.
class LinearProgram {
 public:
  using Row = std::vector<std::pair<int, Rational>>;

  int AddVariable();
  int num_variables() const { return num_vars_; }
  void AddConstraint(Row row, LpSense sense, Rational rhs);
  // Maximizes when `maximize`, otherwise minimizes. Default objective is 0.
  void SetObjective(Row row, bool maximize);
  // Throws CapExceeded above the configured variable cap.
  LpResult Solve() const;

 private:
  struct Constraint {
    Row row;
    LpSense sense;
    Rational rhs;
  };
  int num_vars_ = 0;
  std::vector<Constraint> constraints_;
  Row objective_;
  bool maximize_ = false;
};

}  // namespace matalloc

#endif  // MATALLOC_LP_H_
