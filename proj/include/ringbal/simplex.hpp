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
//
// Dense two-phase simplex over exact rationals. Bland's rule on both the
// entering and the leaving choice, so the method terminates without any
// anti-cycling perturbation. Intended for the small LPs this project
// produces (tens of rows); no factorization, just tableau pivots.

#ifndef RINGBAL_SIMPLEX_HPP
#define RINGBAL_SIMPLEX_HPP

#include <vector>

#include "ringbal/rational.hpp"

namespace ringbal {

// minimize objective . x   subject to   rows[i] . x <= rhs[i],  x >= 0.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;

  int add_variable(const Rational& cost);
  void add_row(std::vector<Rational> coeffs, const Rational& bound);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct SimplexResult {
  LpStatus status = LpStatus::Infeasible;
  Rational objective_value;
  std::vector<Rational> x;  // size num_vars when Optimal
};

SimplexResult solve_lp(const LinearProgram& lp);

}  // namespace ringbal

#endif  // RINGBAL_SIMPLEX_HPP
