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
// Exact solvers for the fractional routing relaxations: the plain
// congestion LP, the offset variant used by the approximation scheme, and
// the capacity-widening LP.

#ifndef RINGBAL_LP_HPP
#define RINGBAL_LP_HPP

#include <vector>

#include "ringbal/ring.hpp"

namespace ringbal {

enum class RelaxationStatus { Optimal, InfeasibleForFiniteAlpha };

struct LpSolution {
  RelaxationStatus status = RelaxationStatus::InfeasibleForFiniteAlpha;
  Rational alpha_star;
  FractionalAssignment phi;
  bool feasible() const { return status == RelaxationStatus::Optimal; }
};

/// Minimizes alpha subject to load(phi)(e) <= alpha * c(e) on every
/// directed edge and 0 <= phi <= 1. The optimum and the witness are exact;
/// the witness is re-checked against the constraints before returning.
/// InfeasibleForFiniteAlpha happens exactly when some zero-capacity edge
/// must carry flow under every phi.
LpSolution solve_relaxation(const RingInstance& inst);

/// Same LP with a fixed per-edge offset added to the load:
/// load(phi)(e) + offsets(e) <= alpha * c(e). The instance's demand list
/// is the free-demand set; fixed demands must already be folded into
/// `offsets` by the caller.
LpSolution solve_relaxation_with_offsets(const RingInstance& inst,
                                         const LoadVector& offsets);

struct DesignRelaxation {
  Rational cost;  // sum of gamma* . w, the exact LP optimum
  std::vector<Rational> gamma_forward;
  std::vector<Rational> gamma_backward;
  FractionalAssignment phi;
};

/// Minimum-cost capacity widening: minimize sum_e gamma(e) w(e) subject to
/// load(phi)(e) <= (gamma(e) + c(e)) * (1 - alpha_rob), gamma >= 0,
/// 0 <= phi <= 1. Feasible for every input since gamma is unbounded above.
/// Throws std::invalid_argument when alpha_rob is outside [0,1) or some
/// widening cost is negative.
DesignRelaxation solve_design_relaxation(const RingInstance& inst,
                                         const std::vector<Rational>& w_forward,
                                         const std::vector<Rational>& w_backward,
                                         const Rational& alpha_rob);

}  // namespace ringbal

#endif  // RINGBAL_LP_HPP
