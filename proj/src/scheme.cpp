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

#include "ringbal/scheme.hpp"

#include <stdexcept>

#include "ringbal/lp.hpp"
#include "ringbal/rounding.hpp"

namespace ringbal {

namespace {

// Largest subset size allowed by the strict bound |E''| < 3/epsilon.
int max_subset_size(const Rational& epsilon) {
  Rational q = Rational(3) / epsilon;
  BigInt floor_q = numerator(q) / denominator(q);
  if (Rational(floor_q) == q) floor_q -= 1;  // strict inequality
  if (floor_q < 0) return -1;
  if (floor_q > 1000000) return 1000000;
  return static_cast<int>(floor_q);
}

// Enumerates subsets of `universe` of size 0, 1, ..., max_size in
// lexicographic index order within each size. The enumeration rank is the
// deterministic tie-break between equal-score candidates.
template <typename Fn>
void for_each_subset(const std::vector<int>& universe, int max_size, Fn&& fn) {
  const int u = static_cast<int>(universe.size());
  std::vector<int> pick;
  auto recurse = [&](auto&& self, int from) -> void {
    fn(pick);
    if (static_cast<int>(pick.size()) >= max_size) return;
    for (int i = from; i < u; ++i) {
      pick.push_back(universe[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  if (max_size >= 0) recurse(recurse, 0);
}

struct ScoredLoads {
  bool feasible = false;
  Rational score;
};

// Smallest a >= 0 with load(e) <= a c(e) + allowance on every edge.
// Infeasible when a zero-capacity edge carries more than the allowance.
ScoredLoads clamped_score(const RingInstance& inst, const LoadVector& loads,
                          const Rational& allowance) {
  ScoredLoads out;
  out.score = 0;
  for (const EdgeId& e : all_edges(inst)) {
    const Rational& c = capacity(inst, e);
    const Rational& load = load_at(loads, e);
    if (c == 0) {
      if (load > allowance) return out;  // infeasible
      continue;
    }
    Rational s = (load - allowance) / c;
    if (s > out.score) out.score = s;
  }
  out.feasible = true;
  return out;
}

}  // namespace

Rational average_capacity(const RingInstance& inst) {
  Rational sum(0);
  for (const Rational& c : inst.cap_forward) sum += c;
  for (const Rational& c : inst.cap_backward) sum += c;
  return sum / inst.n;
}

std::vector<int> big_demand_set(const RingInstance& inst, const Rational& epsilon,
                                const Rational& alpha_prime) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  Rational threshold = Rational(2, 3) * epsilon * alpha_prime * average_capacity(inst);
  std::vector<int> big;
  for (size_t f = 0; f < inst.demands.size(); ++f) {
    if (inst.demands[f].value > threshold) big.push_back(static_cast<int>(f));
  }
  return big;
}

AlphaPrimeReport run_for_alpha_prime(const RingInstance& inst,
                                     const Rational& epsilon,
                                     const Rational& alpha_prime) {
  AlphaPrimeReport report;
  report.alpha_prime = alpha_prime;
  report.epsilon_used = epsilon;
  report.big_set = big_demand_set(inst, epsilon, alpha_prime);
  const Rational allowance = epsilon * alpha_prime * average_capacity(inst);

  std::vector<bool> is_big(inst.demands.size(), false);
  for (int f : report.big_set) is_big[f] = true;

  // Residual instance over the small demands, with an index map back.
  RingInstance resid;
  resid.n = inst.n;
  resid.cap_forward = inst.cap_forward;
  resid.cap_backward = inst.cap_backward;
  std::vector<int> resid_to_full;
  for (size_t f = 0; f < inst.demands.size(); ++f) {
    if (!is_big[f]) {
      resid.demands.push_back(inst.demands[f]);
      resid_to_full.push_back(static_cast<int>(f));
    }
  }

  const int max_size = max_subset_size(epsilon);
  for_each_subset(report.big_set, max_size, [&](const std::vector<int>& subset) {
    ++report.candidates_enumerated;

    DirectionAssignment full(inst.demands.size(), Direction::Forward);
    std::vector<bool> in_subset(inst.demands.size(), false);
    for (int f : subset) in_subset[f] = true;
    for (int f : report.big_set) {
      Direction long_dir =
          long_direction(inst, inst.demands[f].source, inst.demands[f].target);
      full[f] = in_subset[f] ? long_dir : opposite(long_dir);
    }

    // Loads of the fixed big demands only.
    LoadVector fixed = zero_loads(inst.n);
    for (int f : report.big_set) {
      for (const EdgeId& e :
           path_edges(inst, inst.demands[f].source, inst.demands[f].target, full[f]))
        load_at(fixed, e) += inst.demands[f].value;
    }

    LpSolution lp = solve_relaxation_with_offsets(resid, fixed);
    if (!lp.feasible()) {
      ++report.candidates_skipped;
      return;
    }
    UncrossResult unc = uncross_all(resid, lp.phi);
    GreedyResult greedy = unsplit_greedy(resid, unc.phi, 0);
    for (size_t r = 0; r < resid_to_full.size(); ++r)
      full[resid_to_full[r]] = greedy.dirs[r];

    LoadVector loads = load_of_integral(inst, full);
    ScoredLoads scored = clamped_score(inst, loads, allowance);
    if (!scored.feasible) {
      ++report.candidates_skipped;
      return;
    }
    if (!report.best || scored.score < report.best->score_alpha) {
      report.best = CandidateRouting{std::move(full), std::move(loads),
                                     scored.score, subset};
    }
  });
  return report;
}

SchemeResult approximation_scheme(const RingInstance& inst,
                                  const SchemeParams& params) {
  if (params.epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (params.grid_steps < 1)
    throw std::invalid_argument("grid_steps must be at least 1");

  SchemeResult result;
  result.cbar = average_capacity(inst);

  LpSolution lp = solve_relaxation(inst);
  if (!lp.feasible()) return result;
  result.alpha_star = lp.alpha_star;

  const int n_steps = params.grid_steps;
  // epsilon <- epsilon / (1 + 1/N); the substituted value times (1 + 1/N)
  // recovers the caller's epsilon in the final selection rule.
  result.epsilon_effective =
      params.epsilon * Rational(n_steps) / Rational(n_steps + 1);

  for (int i = 0; i <= n_steps; ++i) {
    Rational alpha_i = Rational(n_steps + i, n_steps) * lp.alpha_star;
    result.per_alpha.push_back(
        run_for_alpha_prime(inst, result.epsilon_effective, alpha_i));
  }

  // Final selection: smallest a with load <= a (c + epsilon_orig cbar).
  const Rational pad = params.epsilon * result.cbar;
  for (size_t i = 0; i < result.per_alpha.size(); ++i) {
    const auto& rep = result.per_alpha[i];
    if (!rep.best) continue;
    Rational score(0);
    bool ok = true;
    for (const EdgeId& e : all_edges(inst)) {
      Rational denom = capacity(inst, e) + pad;
      const Rational& load = load_at(rep.best->loads, e);
      if (denom == 0) {
        if (load > 0) ok = false;
        continue;
      }
      Rational s = load / denom;
      if (s > score) score = s;
    }
    if (!ok) continue;
    if (result.selected_grid_index < 0 || score < result.selected_score) {
      result.selected_grid_index = static_cast<int>(i);
      result.selected_score = score;
      result.selected = rep.best;
    }
  }
  result.feasible = result.selected.has_value() || inst.demands.empty();
  if (!result.selected && inst.demands.empty()) {
    result.selected = CandidateRouting{{}, zero_loads(inst.n), Rational(0), {}};
    result.selected_grid_index = 0;
    result.selected_score = 0;
  }
  return result;
}

}  // namespace ringbal
