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
// Ground-truth solvers by exhaustive enumeration, plus generators for
// adversarial and random instances. Everything here is test/verification
// machinery: exact, deterministic, and independent of the LP pipeline.

#ifndef RINGBAL_ORACLE_HPP
#define RINGBAL_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ringbal/ring.hpp"

namespace ringbal {

inline constexpr int kDefaultOracleCapLog2 = 20;

struct OracleResult {
  // nullopt when every routing loads some zero-capacity edge.
  std::optional<Rational> alpha_opt;
  DirectionAssignment argmin;  // lexicographically smallest optimum
  BigInt enumerated;           // 2^|E(H)| routings covered
};

/// Exact optimum congestion over all 2^|E(H)| unsplittable routings.
/// Demands identical in (source, target, value) are enumerated as
/// multiplicity counts, which covers the same routing space because loads
/// only depend on how many copies go each way. Throws ResourceLimitError
/// when the state count exceeds 2^cap_log2.
OracleResult brute_force_alpha_opt(const RingInstance& inst,
                                   int cap_log2 = kDefaultOracleCapLog2);

struct DesignOracleResult {
  Rational cost;
  std::vector<Rational> gamma_forward;
  std::vector<Rational> gamma_backward;
  DirectionAssignment argmin;
};

/// Exact optimum widening cost over all routings: each routing gets its
/// pointwise-minimal gamma(e) = max(0, load(e)/(1-alpha_rob) - c(e)) and
/// the cheapest sum gamma . w wins.
DesignOracleResult brute_force_design_opt(const RingInstance& inst,
                                          const std::vector<Rational>& w_forward,
                                          const std::vector<Rational>& w_backward,
                                          const Rational& alpha_rob,
                                          int cap_log2 = kDefaultOracleCapLog2);

// Adversarial family reproducing the worst-case additive rounding error.
// All demands have value 1. A two-edge cut {e_prime, e_second} is tight:
// k+1 unit demands cross it against total capacity k+1, so the fractional
// optimum is exactly 1 while the best routing needs
// alpha_opt = (k+1)/(k + 1/2 - k eps). Choke capacities make the
// fractional optimum unique, and the greedy sweep started at start_node
// sends two of the cut demands forward, leaving e_prime with load 2 and
// an additive error that approaches (3/2) D as k grows with k*eps -> 0.
struct TightExample {
  RingInstance instance;
  int start_node = 0;
  EdgeId e_prime;   // capacity 1/2 + k eps
  EdgeId e_second;  // capacity k + 1/2 - k eps
  Rational alpha_opt_expected;
  int k = 0;
  Rational eps;
};

/// Requires k >= 1 and 0 < k*eps < 1/2.
TightExample tight_example(int k, const Rational& eps);

struct RationalRange {
  Rational lo;
  Rational hi;
  int max_denominator = 4;
};

/// Deterministic pseudo-random instance: capacities and demand values are
/// rationals with denominator <= max_denominator drawn from the given
/// ranges. Same seed, same instance, on every platform.
RingInstance random_instance(std::uint64_t seed, int n, int m,
                             const RationalRange& cap_range,
                             const RationalRange& demand_range);

}  // namespace ringbal

#endif  // RINGBAL_ORACLE_HPP
