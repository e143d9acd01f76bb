// Copyright 2026 The RingBalance Authors
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

#include "ringbal/simplex.hpp"

#include <cassert>
#include <stdexcept>

namespace ringbal {

int LinearProgram::add_variable(const Rational& cost) {
  objective.push_back(cost);
  for (auto& row : rows) row.emplace_back(0);
  return num_vars++;
}

void LinearProgram::add_row(std::vector<Rational> coeffs, const Rational& bound) {
  coeffs.resize(num_vars, Rational(0));
  rows.push_back(std::move(coeffs));
  rhs.push_back(bound);
}

namespace {

// Tableau in equality form: for each row i, sum_j T[i][j] x_j = b[i] with
// b >= 0 and basis[i] identifying the basic column of row i.
struct Tableau {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<Rational>> t;
  std::vector<Rational> b;
  std::vector<int> basis;

  void pivot(int prow, int pcol) {
    Rational p = t[prow][pcol];
    assert(p != 0);
    if (p != 1) {
      for (int j = 0; j < cols; ++j) t[prow][j] /= p;
      b[prow] /= p;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == prow) continue;
      Rational factor = t[i][pcol];
      if (factor == 0) continue;
      for (int j = 0; j < cols; ++j) {
        if (t[prow][j] != 0) t[i][j] -= factor * t[prow][j];
      }
      b[i] -= factor * b[prow];
    }
    basis[prow] = pcol;
  }
};

// Runs Bland-rule simplex for min cost.x over the current basis. `usable`
// masks out columns that may not enter (retired artificials). Returns
// false when the problem is unbounded below.
bool run_phase(Tableau& tab, const std::vector<Rational>& cost,
               const std::vector<bool>& usable) {
  const int m = tab.rows;
  const int ncols = tab.cols;
  while (true) {
    // Reduced costs from scratch each iteration. The tableaus here are
    // small, and recomputing sidesteps incremental-update bookkeeping.
    int entering = -1;
    for (int j = 0; j < ncols && entering < 0; ++j) {
      if (!usable[j]) continue;
      bool basic = false;
      for (int i = 0; i < m; ++i) {
        if (tab.basis[i] == j) { basic = true; break; }
      }
      if (basic) continue;
      Rational reduced = cost[j];
      for (int i = 0; i < m; ++i) {
        if (cost[tab.basis[i]] != 0 && tab.t[i][j] != 0)
          reduced -= cost[tab.basis[i]] * tab.t[i][j];
      }
      if (reduced < 0) entering = j;  // Bland: first eligible column
    }
    if (entering < 0) return true;

    int leave_row = -1;
    Rational best_ratio;
    for (int i = 0; i < m; ++i) {
      if (tab.t[i][entering] <= 0) continue;
      Rational ratio = tab.b[i] / tab.t[i][entering];
      if (leave_row < 0 || ratio < best_ratio ||
          (ratio == best_ratio && tab.basis[i] < tab.basis[leave_row])) {
        leave_row = i;
        best_ratio = ratio;
      }
    }
    if (leave_row < 0) return false;  // column unbounded
    tab.pivot(leave_row, entering);
  }
}

}  // namespace

SimplexResult solve_lp(const LinearProgram& lp) {
  const int m = static_cast<int>(lp.rows.size());
  const int n = lp.num_vars;

  // Layout: structural 0..n-1, slacks n..n+m-1, artificials after that.
  Tableau tab;
  tab.rows = m;
  tab.basis.assign(m, -1);
  tab.b.resize(m);

  std::vector<int> needs_artificial;
  for (int i = 0; i < m; ++i) {
    if (lp.rhs[i] < 0) needs_artificial.push_back(i);
  }
  const int num_art = static_cast<int>(needs_artificial.size());
  tab.cols = n + m + num_art;
  tab.t.assign(m, std::vector<Rational>(tab.cols, Rational(0)));

  for (int i = 0; i < m; ++i) {
    bool flip = lp.rhs[i] < 0;
    for (int j = 0; j < n; ++j)
      tab.t[i][j] = flip ? Rational(-lp.rows[i][j]) : lp.rows[i][j];
    tab.t[i][n + i] = flip ? Rational(-1) : Rational(1);
    tab.b[i] = flip ? Rational(-lp.rhs[i]) : lp.rhs[i];
    tab.basis[i] = n + i;  // provisional; replaced by artificial if flipped
  }
  for (int k = 0; k < num_art; ++k) {
    int row = needs_artificial[k];
    tab.t[row][n + m + k] = 1;
    tab.basis[row] = n + m + k;
  }

  std::vector<bool> usable(tab.cols, true);

  if (num_art > 0) {
    std::vector<Rational> phase1_cost(tab.cols, Rational(0));
    for (int k = 0; k < num_art; ++k) phase1_cost[n + m + k] = 1;
    bool bounded = run_phase(tab, phase1_cost, usable);
    assert(bounded);  // phase-1 objective is bounded below by 0
    (void)bounded;

    Rational infeas(0);
    for (int i = 0; i < m; ++i) {
      if (tab.basis[i] >= n + m) infeas += tab.b[i];
    }
    if (infeas > 0) return SimplexResult{LpStatus::Infeasible, Rational(0), {}};

    // Degenerate artificials may linger in the basis at value zero; swap
    // each for any real column with a nonzero entry in its row. A row with
    // no such column is redundant and stays inert.
    for (int i = 0; i < m; ++i) {
      if (tab.basis[i] < n + m) continue;
      for (int j = 0; j < n + m; ++j) {
        if (tab.t[i][j] != 0) {
          tab.pivot(i, j);
          break;
        }
      }
    }
    for (int k = 0; k < num_art; ++k) usable[n + m + k] = false;
  }

  std::vector<Rational> phase2_cost(tab.cols, Rational(0));
  for (int j = 0; j < n; ++j) phase2_cost[j] = lp.objective[j];
  if (!run_phase(tab, phase2_cost, usable))
    return SimplexResult{LpStatus::Unbounded, Rational(0), {}};

  SimplexResult result;
  result.status = LpStatus::Optimal;
  result.x.assign(n, Rational(0));
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n) result.x[tab.basis[i]] = tab.b[i];
  }
  result.objective_value = 0;
  for (int j = 0; j < n; ++j) {
    if (lp.objective[j] != 0) result.objective_value += lp.objective[j] * result.x[j];
  }
  return result;
}

}  // namespace ringbal
