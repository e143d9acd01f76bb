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

#include "ringbal/lp.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "ringbal/simplex.hpp"

namespace ringbal {

namespace {

// Demands sharing (source, target) produce proportional LP columns, so
// they are modeled by one flow variable per node pair bounded by the total
// value of the pair's demands. This keeps the LP small when a demand list
// contains many copies of the same relation (flow split back to members
// afterwards; any such split realizes identical loads).
struct DemandGroup {
  int source = 0;
  int target = 0;
  Rational total;            // sum of member demand values
  std::vector<int> members;  // demand indices, ascending
};

std::vector<DemandGroup> group_demands(const RingInstance& inst) {
  std::map<std::pair<int, int>, int> index;
  std::vector<DemandGroup> groups;
  for (size_t f = 0; f < inst.demands.size(); ++f) {
    const Demand& d = inst.demands[f];
    auto key = std::make_pair(d.source, d.target);
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, static_cast<int>(groups.size()));
      groups.push_back({d.source, d.target, d.value, {static_cast<int>(f)}});
    } else {
      groups[it->second].total += d.value;
      groups[it->second].members.push_back(static_cast<int>(f));
    }
  }
  return groups;
}

// Splits a group's total forward flow back onto its members in index
// order, filling each demand before touching the next. Produces at most
// one fractional member per group.
void distribute_flow(const RingInstance& inst, const DemandGroup& g,
                     const Rational& flow, FractionalAssignment& phi) {
  Rational remaining = flow;
  for (int f : g.members) {
    const Rational& d = inst.demands[f].value;
    Rational take = remaining < d ? remaining : d;
    phi.phi[f] = take / d;
    remaining -= take;
  }
  if (remaining != 0) throw std::logic_error("group flow exceeds group total");
}

// Incidence of a group's forward/backward paths on the 2n directed edges:
// +1 where the edge lies on the forward path, -1 on the backward path.
// load(e) = sum_g coef_g(e) * flow_g + base(e), with base(e) collecting
// the all-backward term sum_{g: e on B(g)} total_g.
struct EdgeIncidence {
  std::vector<std::vector<Rational>> coef;  // per edge, per group
  std::vector<Rational> base;               // per edge
};

EdgeIncidence build_incidence(const RingInstance& inst,
                              const std::vector<DemandGroup>& groups) {
  const auto edges = all_edges(inst);
  EdgeIncidence inc;
  inc.coef.assign(edges.size(), std::vector<Rational>(groups.size(), Rational(0)));
  inc.base.assign(edges.size(), Rational(0));
  for (size_t g = 0; g < groups.size(); ++g) {
    for (const EdgeId& e : path_edges(inst, groups[g].source, groups[g].target,
                                      Direction::Forward)) {
      size_t idx = (e.dir == Direction::Forward ? 0 : inst.n) + e.slot;
      inc.coef[idx][g] += 1;
    }
    for (const EdgeId& e : path_edges(inst, groups[g].source, groups[g].target,
                                      Direction::Backward)) {
      size_t idx = (e.dir == Direction::Forward ? 0 : inst.n) + e.slot;
      inc.coef[idx][g] -= 1;
      inc.base[idx] += groups[g].total;
    }
  }
  return inc;
}

LpSolution solve_congestion_lp(const RingInstance& inst,
                               const LoadVector* offsets) {
  const auto groups = group_demands(inst);
  const auto edges = all_edges(inst);
  const auto inc = build_incidence(inst, groups);
  const int num_groups = static_cast<int>(groups.size());

  LinearProgram lp;
  for (int g = 0; g < num_groups; ++g) lp.add_variable(Rational(0));
  const int alpha_var = lp.add_variable(Rational(1));

  for (size_t e = 0; e < edges.size(); ++e) {
    std::vector<Rational> row(lp.num_vars, Rational(0));
    for (int g = 0; g < num_groups; ++g) row[g] = inc.coef[e][g];
    row[alpha_var] = -capacity(inst, edges[e]);
    Rational bound = -inc.base[e];
    if (offsets) bound -= load_at(*offsets, edges[e]);
    lp.add_row(std::move(row), bound);
  }
  for (int g = 0; g < num_groups; ++g) {
    std::vector<Rational> row(lp.num_vars, Rational(0));
    row[g] = 1;
    lp.add_row(std::move(row), groups[g].total);
  }

  SimplexResult res = solve_lp(lp);
  if (res.status == LpStatus::Infeasible)
    return LpSolution{RelaxationStatus::InfeasibleForFiniteAlpha, Rational(0), {}};
  if (res.status != LpStatus::Optimal)
    throw std::logic_error("congestion LP cannot be unbounded: alpha >= 0");

  LpSolution out;
  out.status = RelaxationStatus::Optimal;
  out.alpha_star = res.x[alpha_var];
  out.phi.phi.assign(inst.demands.size(), Rational(0));
  for (int g = 0; g < num_groups; ++g)
    distribute_flow(inst, groups[g], res.x[g], out.phi);

  // The witness must satisfy the constraints it came from, exactly.
  LoadVector check = load_of_fractional(inst, out.phi);
  for (const EdgeId& e : all_edges(inst)) {
    Rational lhs = load_at(check, e);
    if (offsets) lhs += load_at(*offsets, e);
    if (lhs > out.alpha_star * capacity(inst, e))
      throw std::logic_error("LP witness fails exact feasibility re-check");
  }
  return out;
}

}  // namespace

LpSolution solve_relaxation(const RingInstance& inst) {
  return solve_congestion_lp(inst, nullptr);
}

LpSolution solve_relaxation_with_offsets(const RingInstance& inst,
                                         const LoadVector& offsets) {
  for (const Rational& v : offsets.forward)
    if (v < 0) throw std::invalid_argument("offset loads must be nonnegative");
  for (const Rational& v : offsets.backward)
    if (v < 0) throw std::invalid_argument("offset loads must be nonnegative");
  return solve_congestion_lp(inst, &offsets);
}

DesignRelaxation solve_design_relaxation(const RingInstance& inst,
                                         const std::vector<Rational>& w_forward,
                                         const std::vector<Rational>& w_backward,
                                         const Rational& alpha_rob) {
  if (alpha_rob < 0 || alpha_rob >= 1)
    throw std::invalid_argument("robustness factor must lie in [0,1)");
  if (static_cast<int>(w_forward.size()) != inst.n ||
      static_cast<int>(w_backward.size()) != inst.n)
    throw std::invalid_argument("widening cost vectors must have n entries each");
  for (const Rational& w : w_forward)
    if (w < 0) throw std::invalid_argument("negative widening cost");
  for (const Rational& w : w_backward)
    if (w < 0) throw std::invalid_argument("negative widening cost");

  const auto groups = group_demands(inst);
  const auto edges = all_edges(inst);
  const auto inc = build_incidence(inst, groups);
  const int num_groups = static_cast<int>(groups.size());
  const Rational reserve = Rational(1) - alpha_rob;

  LinearProgram lp;
  for (int g = 0; g < num_groups; ++g) lp.add_variable(Rational(0));
  std::vector<int> gamma_var(edges.size());
  for (size_t e = 0; e < edges.size(); ++e) {
    const Rational& w = edges[e].dir == Direction::Forward
                            ? w_forward[edges[e].slot]
                            : w_backward[edges[e].slot];
    gamma_var[e] = lp.add_variable(w);
  }

  for (size_t e = 0; e < edges.size(); ++e) {
    std::vector<Rational> row(lp.num_vars, Rational(0));
    for (int g = 0; g < num_groups; ++g) row[g] = inc.coef[e][g];
    row[gamma_var[e]] = -reserve;
    lp.add_row(std::move(row), capacity(inst, edges[e]) * reserve - inc.base[e]);
  }
  for (int g = 0; g < num_groups; ++g) {
    std::vector<Rational> row(lp.num_vars, Rational(0));
    row[g] = 1;
    lp.add_row(std::move(row), groups[g].total);
  }

  SimplexResult res = solve_lp(lp);
  if (res.status != LpStatus::Optimal)
    throw std::logic_error("design LP is always feasible and bounded");

  DesignRelaxation out;
  out.cost = res.objective_value;
  out.gamma_forward.assign(inst.n, Rational(0));
  out.gamma_backward.assign(inst.n, Rational(0));
  for (size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].dir == Direction::Forward)
      out.gamma_forward[edges[e].slot] = res.x[gamma_var[e]];
    else
      out.gamma_backward[edges[e].slot] = res.x[gamma_var[e]];
  }
  out.phi.phi.assign(inst.demands.size(), Rational(0));
  for (int g = 0; g < num_groups; ++g)
    distribute_flow(inst, groups[g], res.x[g], out.phi);

  LoadVector check = load_of_fractional(inst, out.phi);
  for (const EdgeId& e : all_edges(inst)) {
    Rational gamma = e.dir == Direction::Forward ? out.gamma_forward[e.slot]
                                                 : out.gamma_backward[e.slot];
    if (load_at(check, e) > (gamma + capacity(inst, e)) * reserve)
      throw std::logic_error("design LP witness fails exact feasibility re-check");
  }
  return out;
}

}  // namespace ringbal
