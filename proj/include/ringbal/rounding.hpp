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
// Turns an optimal fractional assignment into an unsplittable routing:
// uncross parallel split demands (never raising any edge load), then round
// the surviving split demands by a prefix-bounded greedy sweep. The final
// load beats alpha* c + (3/2) D_max strictly on every edge.

#ifndef RINGBAL_ROUNDING_HPP
#define RINGBAL_ROUNDING_HPP

#include <vector>

#include "ringbal/lp.hpp"
#include "ringbal/ring.hpp"

namespace ringbal {

inline bool is_split(const Rational& phi) { return phi > 0 && phi < 1; }

/// Demands f1=(s1,t1), f2=(s2,t2) are parallel when the endpoints admit
/// the cyclic order s1, t1, t2, s2 in either ring orientation, coincident
/// nodes allowed. Demands sharing a source are always parallel; demands
/// with interleaved endpoints are not.
bool is_parallel(const RingInstance& inst, const Demand& f1, const Demand& f2);

/// One uncrossing step on split parallel demands i and j: reroutes
/// min(x_i, x_j) flow off both long paths, where x is the flow a demand
/// sends along its long path (the one containing the other demand's
/// endpoints). At least one of the two stops being split and no edge load
/// increases. Throws std::invalid_argument if the pair is not split and
/// parallel.
FractionalAssignment uncross_step(const RingInstance& inst,
                                  const FractionalAssignment& phi, int i, int j);

struct UncrossResult {
  FractionalAssignment phi;
  int steps = 0;
  std::vector<std::pair<int, int>> pairs;  // uncrossed pairs in order
};

/// Repeats uncross_step on the lowest-index parallel split pair until none
/// remains. Terminates within |E(H)| steps; afterwards split demands are
/// pairwise non-parallel, so in particular each node is the source of at
/// most one split demand.
UncrossResult uncross_all(const RingInstance& inst,
                          const FractionalAssignment& phi);

struct GreedyResult {
  DirectionAssignment dirs;
  // Bookkeeping for the prefix invariant -D/2 < prefix <= D/2:
  std::vector<int> visit_order;       // demand index per processed split
  std::vector<Rational> prefix_sums;  // running sum after each decision
  Rational d_split;                   // max split-demand value (0 if none)
};

/// Rounds the remaining split demands walking sources in forward node
/// order from start_node: a split demand goes forward if that keeps the
/// running prefix sum at most D/2, backward otherwise. Requires the
/// no-parallel-split-pair structure produced by uncross_all; throws
/// std::invalid_argument when two split demands share a source.
GreedyResult unsplit_greedy(const RingInstance& inst,
                            const FractionalAssignment& phi, int start_node);

struct EdgeCertRow {
  EdgeId edge;
  Rational capacity;
  Rational load;
  Rational alpha_c;  // alpha* . c(e)
  Rational bound;    // alpha* . c(e) + (3/2) D
  Rational slack;    // bound - load, strictly positive when demands exist
};

struct RoutingCertificate {
  Rational alpha_star;
  Rational d_max;    // max demand value over the whole instance
  Rational d_split;  // max split-demand value after uncrossing
  std::vector<EdgeCertRow> rows;
  bool strict_ok = false;  // every row has slack > 0 (vacuous without demands)
  // The d_split variant of the bound is strictly valid whenever a split
  // demand survived uncrossing; without one the rounded loads simply equal
  // the fractional optimum's loads.
  bool sharp_applicable = false;
  bool sharp_ok = false;
};

struct BalanceResult {
  RelaxationStatus status = RelaxationStatus::InfeasibleForFiniteAlpha;
  Rational alpha_star;
  FractionalAssignment phi_opt;        // LP witness
  FractionalAssignment phi_uncrossed;  // after uncrossing
  UncrossResult uncross;
  GreedyResult greedy;
  DirectionAssignment dirs;
  LoadVector loads;
  RoutingCertificate certificate;
  bool feasible() const { return status == RelaxationStatus::Optimal; }
};

/// Full pipeline: solve_relaxation, uncross_all, unsplit_greedy, then
/// certify load(e) < alpha* c(e) + (3/2) D per edge.
BalanceResult balance_route(const RingInstance& inst, int start_node = 0);

/// Certification for a routing produced from a known alpha*; used by
/// balance_route and by the design pipeline.
RoutingCertificate certify_routing(const RingInstance& inst,
                                   const Rational& alpha_star,
                                   const LoadVector& loads,
                                   const Rational& d_split);

}  // namespace ringbal

#endif  // RINGBAL_ROUNDING_HPP
