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

#include "ringbal/design.hpp"

#include <stdexcept>

#include "ringbal/lp.hpp"

namespace ringbal {

DesignResult design_route(const RingInstance& inst,
                          const std::vector<Rational>& w_forward,
                          const std::vector<Rational>& w_backward,
                          const Rational& alpha_rob, int start_node) {
  DesignRelaxation relax =
      solve_design_relaxation(inst, w_forward, w_backward, alpha_rob);
  const Rational reserve = Rational(1) - alpha_rob;

  DesignResult res;
  res.gamma_star_forward = relax.gamma_forward;
  res.gamma_star_backward = relax.gamma_backward;
  res.lp_cost = relax.cost;

  res.uncross = uncross_all(inst, relax.phi);
  res.greedy = unsplit_greedy(inst, res.uncross.phi, start_node);
  res.dirs = res.greedy.dirs;
  res.loads = load_of_integral(inst, res.dirs);

  // Rounding may overshoot the widened capacities by under (3/2) D; keep
  // the robustness factor fixed and lift gamma to the pointwise-minimal
  // correction instead.
  res.gamma_forward = relax.gamma_forward;
  res.gamma_backward = relax.gamma_backward;
  res.cost = 0;
  for (const EdgeId& e : all_edges(inst)) {
    Rational needed = load_at(res.loads, e) / reserve - capacity(inst, e);
    Rational& gamma = e.dir == Direction::Forward
                          ? res.gamma_forward[e.slot]
                          : res.gamma_backward[e.slot];
    if (needed > gamma) gamma = needed;
    const Rational& w =
        e.dir == Direction::Forward ? w_forward[e.slot] : w_backward[e.slot];
    res.cost += gamma * w;
  }
  res.lift_overhead = res.cost - res.lp_cost;

  Rational d_max(0);
  for (const Demand& d : inst.demands)
    if (d.value > d_max) d_max = d.value;
  Rational w_sum(0);
  for (const Rational& w : w_forward) w_sum += w;
  for (const Rational& w : w_backward) w_sum += w;
  res.additive_cost_bound = Rational(3) * d_max / 2 * w_sum;

  // Exact feasibility of the lifted design.
  for (const EdgeId& e : all_edges(inst)) {
    const Rational& gamma = e.dir == Direction::Forward
                                ? res.gamma_forward[e.slot]
                                : res.gamma_backward[e.slot];
    if (load_at(res.loads, e) > (gamma + capacity(inst, e)) * reserve)
      throw std::logic_error("design lift failed to restore feasibility");
  }
  return res;
}

}  // namespace ringbal
