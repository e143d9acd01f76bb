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
// Network design: buy capacity increments at per-edge unit prices so that
// an unsplittable routing fits within (gamma + c)(1 - alpha_rob), where
// alpha_rob is an a-priori robustness reserve.

#ifndef RINGBAL_DESIGN_HPP
#define RINGBAL_DESIGN_HPP

#include <vector>

#include "ringbal/ring.hpp"
#include "ringbal/rounding.hpp"

namespace ringbal {

struct DesignResult {
  std::vector<Rational> gamma_forward;   // chosen increments, >= 0
  std::vector<Rational> gamma_backward;
  DirectionAssignment dirs;
  LoadVector loads;
  Rational cost;       // gamma . w
  Rational lp_cost;    // gamma* . w, exact lower bound on any design
  Rational lift_overhead;         // cost - lp_cost
  Rational additive_cost_bound;   // (3 D / 2) sum_e w_e, worst-case figure
  GreedyResult greedy;
  UncrossResult uncross;
  std::vector<Rational> gamma_star_forward;  // LP optimum before lifting
  std::vector<Rational> gamma_star_backward;
};

/// Pipeline: solve the widening LP, uncross, unsplit greedily, then lift
/// gamma(e) to max(gamma*(e), load(e)/(1-alpha_rob) - c(e)) so the final
/// routing is feasible in the widened ring at the given robustness factor.
/// The intermediate routing satisfies
/// load(e) < (gamma*(e) + c(e))(1 - alpha_rob) + (3/2) D on every edge.
DesignResult design_route(const RingInstance& inst,
                          const std::vector<Rational>& w_forward,
                          const std::vector<Rational>& w_backward,
                          const Rational& alpha_rob, int start_node = 0);

}  // namespace ringbal

#endif  // RINGBAL_DESIGN_HPP
