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


#include "matalloc/lp.h"

#include <string>

#include "matalloc/caps.h"
#include "matalloc/errors.h"

namespace matalloc {
namespace {

using Tableau = std::vector<std::vector<Rational>>;

void Pivot(Tableau& t, std::vector<Rational>& cost, Rational& cost_rhs,
           std::vector<int>& basis, int row, int col) {
  const int width = static_cast<int>(t[row].size());
  Rational inv = 1 / t[row][col];
  for (int c = 0; c < width; ++c) t[row][c] *= inv;
  for (int r = 0; r < static_cast<int>(t.size()); ++r) {
    if (r == row || t[r][col] == 0) continue;
    Rational factor = t[r][col];
    for (int c = 0; c < width; ++c) {
      if (t[row][c] != 0) t[r][c] -= factor * t[row][c];
    }
  }
  if (cost[col] != 0) {
    Rational factor = cost[col];
    for (int c = 0; c < width - 1; ++c) {
      if (t[row][c] != 0) cost[c] -= factor * t[row][c];
    }
    cost_rhs -= factor * t[row][width - 1];
  }
  basis[row] = col;
}

// Minimizes with reduced costs `cost` over columns allowed[c]. Returns false
// when unbounded.
bool RunSimplex(Tableau& t, std::vector<Rational>& cost, Rational& cost_rhs,
                std::vector<int>& basis, const std::vector<bool>& allowed) {
  const int rows = static_cast<int>(t.size());
  const int cols = static_cast<int>(cost.size());
  while (true) {
    int enter = -1;
    for (int c = 0; c < cols; ++c) {
      if (allowed[c] && cost[c] < 0) {
        enter = c;
        break;
      }
    }
    if (enter < 0) return true;
    int leave = -1;
    Rational best;
    for (int r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r].back() / t[r][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) return false;
    Pivot(t, cost, cost_rhs, basis, leave, enter);
  }
}

}  // namespace

int LinearProgram::AddVariable() { return num_vars_++; }

void LinearProgram::AddConstraint(Row row, LpSense sense, Rational rhs) {
  for (const auto& [v, coef] : row) {
    if (v < 0 || v >= num_vars_) throw ContractError("lp: unknown variable");
  }
  constraints_.push_back({std::move(row), sense, std::move(rhs)});
}

void LinearProgram::SetObjective(Row row, bool maximize) {
  objective_ = std::move(row);
  maximize_ = maximize;
}

LpResult LinearProgram::Solve() const {
  if (num_vars_ > GetCaps().lp_variables) {
    throw CapExceeded("lp has " + std::to_string(num_vars_) +
                      " variables (cap " +
                      std::to_string(GetCaps().lp_variables) + ")");
  }
  const int m = static_cast<int>(constraints_.size());
  // Columns: structural, one slack per inequality, one artificial per row
  // lacking a usable slack.
  int slacks = 0;
  for (const auto& c : constraints_) {
    if (c.sense != LpSense::kEqual) ++slacks;
  }
  std::vector<int> slack_col(m, -1);
  std::vector<Rational> sign(m, 1);
  std::vector<bool> needs_artificial(m, true);
  int next = num_vars_;
  for (int r = 0; r < m; ++r) {
    const auto& c = constraints_[r];
    if (c.sense != LpSense::kEqual) slack_col[r] = next++;
    if (c.rhs < 0) sign[r] = -1;
    Rational slack_coef = c.sense == LpSense::kLessEqual ? 1 : -1;
    if (slack_col[r] >= 0 && slack_coef * sign[r] > 0) {
      needs_artificial[r] = false;
    }
  }
  const int first_artificial = next;
  std::vector<int> art_col(m, -1);
  for (int r = 0; r < m; ++r) {
    if (needs_artificial[r]) art_col[r] = next++;
  }
  const int cols = next;
  Tableau t(m, std::vector<Rational>(cols + 1, 0));
  std::vector<int> basis(m, -1);
  for (int r = 0; r < m; ++r) {
    const auto& c = constraints_[r];
    for (const auto& [v, coef] : c.row) t[r][v] += sign[r] * coef;
    if (slack_col[r] >= 0) {
      t[r][slack_col[r]] =
          sign[r] * (c.sense == LpSense::kLessEqual ? 1 : -1);
    }
    t[r][cols] = sign[r] * c.rhs;
    if (art_col[r] >= 0) {
      t[r][art_col[r]] = 1;
      basis[r] = art_col[r];
    } else {
      basis[r] = slack_col[r];
    }
  }
  (void)slacks;

  // Phase one: minimize the sum of artificials.
  std::vector<Rational> cost(cols, 0);
  Rational cost_rhs = 0;
  for (int r = 0; r < m; ++r) {
    if (art_col[r] < 0) continue;
    for (int c = 0; c < cols; ++c) {
      if (c != art_col[r]) cost[c] -= t[r][c];
    }
    cost_rhs -= t[r][cols];
  }
  std::vector<bool> allowed(cols, true);
  RunSimplex(t, cost, cost_rhs, basis, allowed);
  LpResult result;
  if (cost_rhs != 0) return result;  // infeasible

  // Drive zero-level artificials out; drop rows that stay redundant.
  for (int r = m - 1; r >= 0; --r) {
    if (basis[r] < first_artificial) continue;
    int col = -1;
    for (int c = 0; c < first_artificial; ++c) {
      if (t[r][c] != 0) {
        col = c;
        break;
      }
    }
    if (col >= 0) {
      Pivot(t, cost, cost_rhs, basis, r, col);
    } else {
      t.erase(t.begin() + r);
      basis.erase(basis.begin() + r);
    }
  }
  for (int c = first_artificial; c < cols; ++c) allowed[c] = false;

  // Phase two.
  std::fill(cost.begin(), cost.end(), Rational(0));
  cost_rhs = 0;
  for (const auto& [v, coef] : objective_) {
    cost[v] += maximize_ ? Rational(-coef) : coef;
  }
  for (int r = 0; r < static_cast<int>(t.size()); ++r) {
    Rational factor = cost[basis[r]];
    if (factor == 0) continue;
    for (int c = 0; c < cols; ++c) cost[c] -= factor * t[r][c];
    cost_rhs -= factor * t[r][cols];
  }
  if (!RunSimplex(t, cost, cost_rhs, basis, allowed)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.x.assign(num_vars_, 0);
  for (int r = 0; r < static_cast<int>(t.size()); ++r) {
    if (basis[r] < num_vars_) result.x[basis[r]] = t[r][cols];
  }
  Rational value = 0;
  for (const auto& [v, coef] : objective_) value += coef * result.x[v];
  result.value = value;
  return result;
}

}  // namespace matalloc
