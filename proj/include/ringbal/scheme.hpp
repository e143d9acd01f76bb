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
// Enumeration approximation scheme. Demands bigger than a threshold tied
// to the average capacity are fixed long/short in all small subsets, the
// residual LP is solved with the fixed loads as offsets, and the residual
// is rounded as in the main pipeline; the best candidate over a grid of
// congestion guesses wins. Trades a c-bar additive term for subset
// enumeration instead of the (3/2) D term.

#ifndef RINGBAL_SCHEME_HPP
#define RINGBAL_SCHEME_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ringbal/ring.hpp"

namespace ringbal {

struct SchemeParams {
  Rational epsilon;    // > 0
  int grid_steps = 1;  // N >= 1
};

struct CandidateRouting {
  DirectionAssignment dirs;
  LoadVector loads;
  Rational score_alpha;          // smallest a with load <= a c + eps a' cbar
  std::vector<int> long_subset;  // the fixed big demands routed long
};

struct AlphaPrimeReport {
  Rational alpha_prime;
  Rational epsilon_used;
  std::vector<int> big_set;  // E', ascending demand indices
  std::uint64_t candidates_enumerated = 0;
  std::uint64_t candidates_skipped = 0;  // residual LP infeasible
  std::optional<CandidateRouting> best;
};

struct SchemeResult {
  bool feasible = false;
  Rational alpha_star;
  Rational cbar;
  Rational epsilon_effective;  // epsilon / (1 + 1/N)
  std::vector<AlphaPrimeReport> per_alpha;
  int selected_grid_index = -1;
  Rational selected_score;  // min over edges criterion at the top level
  std::optional<CandidateRouting> selected;
};

/// Average directed-edge capacity: sum of all 2n capacities divided by n.
Rational average_capacity(const RingInstance& inst);

/// E' = demand indices f with d(f) strictly above (2/3) epsilon alpha'
/// cbar. When alpha' >= alpha*, |E'| < (3 / (2 epsilon)) n.
std::vector<int> big_demand_set(const RingInstance& inst, const Rational& epsilon,
                                const Rational& alpha_prime);

/// Fixes every subset E'' of E' with |E''| < 3/epsilon to long paths (the
/// rest of E' short), solves the residual LP with those loads as offsets,
/// rounds, and returns the candidate minimizing
/// max_e max(0, (load(e) - epsilon alpha' cbar)/c(e)). Candidates whose
/// residual LP is infeasible, or that put load above epsilon alpha' cbar
/// on a zero-capacity edge, are skipped.
AlphaPrimeReport run_for_alpha_prime(const RingInstance& inst,
                                     const Rational& epsilon,
                                     const Rational& alpha_prime);

/// Substitutes epsilon <- epsilon/(1+1/N), runs run_for_alpha_prime at
/// alpha_i = ((N+i)/N) alpha* for i = 0..N, and keeps the candidate
/// minimizing max_e load(e)/(c(e) + epsilon cbar) (the substituted epsilon
/// times (1+1/N) equals the original). Guarantee: the returned load is
/// below alpha_opt (c + epsilon cbar) pointwise, for the original epsilon.
SchemeResult approximation_scheme(const RingInstance& inst,
                                  const SchemeParams& params);

}  // namespace ringbal

#endif  // RINGBAL_SCHEME_HPP
