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

#include "ringbal/oracle.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

namespace ringbal {

namespace {

struct OracleGroup {
  int source = 0;
  int target = 0;
  Rational value;            // per-copy demand value
  std::vector<int> members;  // demand indices, ascending
  LoadVector fwd_unit;       // loads of one copy routed forward
  LoadVector bwd_unit;       // loads of one copy routed backward
};

std::vector<OracleGroup> oracle_groups(const RingInstance& inst) {
  std::map<std::tuple<int, int, Rational>, int> index;
  std::vector<OracleGroup> groups;
  for (size_t f = 0; f < inst.demands.size(); ++f) {
    const Demand& d = inst.demands[f];
    auto key = std::make_tuple(d.source, d.target, d.value);
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, static_cast<int>(groups.size()));
      OracleGroup g;
      g.source = d.source;
      g.target = d.target;
      g.value = d.value;
      g.members = {static_cast<int>(f)};
      g.fwd_unit = zero_loads(inst.n);
      g.bwd_unit = zero_loads(inst.n);
      for (const EdgeId& e : path_edges(inst, d.source, d.target, Direction::Forward))
        load_at(g.fwd_unit, e) += d.value;
      for (const EdgeId& e : path_edges(inst, d.source, d.target, Direction::Backward))
        load_at(g.bwd_unit, e) += d.value;
      groups.push_back(std::move(g));
    } else {
      groups[it->second].members.push_back(static_cast<int>(f));
    }
  }
  return groups;
}

void check_state_budget(const std::vector<OracleGroup>& groups, int cap_log2) {
  BigInt states = 1;
  BigInt limit = BigInt(1) << cap_log2;
  for (const auto& g : groups) {
    states *= BigInt(g.members.size()) + 1;
    if (states > limit)
      throw ResourceLimitError(
          "oracle enumeration would exceed 2^" + std::to_string(cap_log2) +
          " states; raise the cap to proceed");
  }
}

// Materializes the per-group forward counts as the lexicographically
// smallest assignment realizing them: forward copies first (Forward sorts
// before Backward).
DirectionAssignment materialize(const std::vector<OracleGroup>& groups,
                                const std::vector<int>& fwd_counts, int m) {
  DirectionAssignment dirs(m, Direction::Backward);
  for (size_t g = 0; g < groups.size(); ++g) {
    for (int i = 0; i < fwd_counts[g]; ++i)
      dirs[groups[g].members[i]] = Direction::Forward;
  }
  return dirs;
}

// Enumerates all per-group forward counts, invoking fn(counts, loads).
template <typename Fn>
void enumerate_states(const RingInstance& inst,
                      const std::vector<OracleGroup>& groups, Fn&& fn) {
  std::vector<int> counts(groups.size(), 0);
  LoadVector loads = zero_loads(inst.n);
  // Start from the all-backward routing.
  for (const auto& g : groups) {
    for (size_t i = 0; i < g.members.size(); ++i) {
      for (int slot = 0; slot < inst.n; ++slot) {
        loads.forward[slot] += g.bwd_unit.forward[slot];
        loads.backward[slot] += g.bwd_unit.backward[slot];
      }
    }
  }
  auto flip_one = [&](size_t g, int sign) {
    for (int slot = 0; slot < inst.n; ++slot) {
      loads.forward[slot] +=
          sign * (groups[g].fwd_unit.forward[slot] - groups[g].bwd_unit.forward[slot]);
      loads.backward[slot] +=
          sign * (groups[g].fwd_unit.backward[slot] - groups[g].bwd_unit.backward[slot]);
    }
  };
  while (true) {
    fn(counts, loads);
    // Odometer increment over counts, range 0..|members|.
    size_t g = 0;
    for (; g < groups.size(); ++g) {
      if (counts[g] < static_cast<int>(groups[g].members.size())) {
        ++counts[g];
        flip_one(g, +1);
        break;
      }
      while (counts[g] > 0) {
        --counts[g];
        flip_one(g, -1);
      }
    }
    if (g == groups.size()) break;
  }
}

bool lex_less(const DirectionAssignment& a, const DirectionAssignment& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] == Direction::Forward;
  }
  return false;
}

}  // namespace

OracleResult brute_force_alpha_opt(const RingInstance& inst, int cap_log2) {
  auto groups = oracle_groups(inst);
  check_state_budget(groups, cap_log2);
  const int m = static_cast<int>(inst.demands.size());

  OracleResult res;
  res.enumerated = BigInt(1) << m;
  bool have = false;
  enumerate_states(inst, groups, [&](const std::vector<int>& counts,
                                     const LoadVector& loads) {
    std::optional<Rational> alpha = congestion(inst, loads);
    if (!alpha) return;  // infinite congestion, never optimal vs. any finite
    if (!have || *alpha < *res.alpha_opt) {
      res.alpha_opt = alpha;
      res.argmin = materialize(groups, counts, m);
      have = true;
    } else if (*alpha == *res.alpha_opt) {
      DirectionAssignment cand = materialize(groups, counts, m);
      if (lex_less(cand, res.argmin)) res.argmin = std::move(cand);
    }
  });
  if (!have && m == 0) {
    res.alpha_opt = Rational(0);
    have = true;
  }
  return res;
}

DesignOracleResult brute_force_design_opt(const RingInstance& inst,
                                          const std::vector<Rational>& w_forward,
                                          const std::vector<Rational>& w_backward,
                                          const Rational& alpha_rob,
                                          int cap_log2) {
  if (alpha_rob < 0 || alpha_rob >= 1)
    throw std::invalid_argument("robustness factor must lie in [0,1)");
  auto groups = oracle_groups(inst);
  check_state_budget(groups, cap_log2);
  const int m = static_cast<int>(inst.demands.size());
  const Rational reserve = Rational(1) - alpha_rob;

  DesignOracleResult best;
  bool have = false;
  enumerate_states(inst, groups, [&](const std::vector<int>& counts,
                                     const LoadVector& loads) {
    Rational cost(0);
    std::vector<Rational> gf(inst.n, Rational(0)), gb(inst.n, Rational(0));
    for (const EdgeId& e : all_edges(inst)) {
      Rational need = load_at(loads, e) / reserve - capacity(inst, e);
      if (need <= 0) continue;
      if (e.dir == Direction::Forward) {
        gf[e.slot] = need;
        cost += need * w_forward[e.slot];
      } else {
        gb[e.slot] = need;
        cost += need * w_backward[e.slot];
      }
    }
    if (!have || cost < best.cost) {
      best.cost = cost;
      best.gamma_forward = std::move(gf);
      best.gamma_backward = std::move(gb);
      best.argmin = materialize(groups, counts, m);
      have = true;
    } else if (cost == best.cost) {
      DirectionAssignment cand = materialize(groups, counts, m);
      if (lex_less(cand, best.argmin)) {
        best.argmin = std::move(cand);
        best.gamma_forward = std::move(gf);
        best.gamma_backward = std::move(gb);
      }
    }
  });
  if (!have) {  // m == 0
    best.cost = 0;
    best.gamma_forward.assign(inst.n, Rational(0));
    best.gamma_backward.assign(inst.n, Rational(0));
  }
  return best;
}

TightExample tight_example(int k, const Rational& eps) {
  if (k < 1) throw std::invalid_argument("tight_example requires k >= 1");
  Rational keps = Rational(k) * eps;
  if (!(eps > 0 && keps < Rational(1, 2)))
    throw std::invalid_argument("tight_example requires 0 < k*eps < 1/2");

  // Ten nodes. The cut is {forward slot 4, backward slot 8}. Unit demands
  // 0->6, 9->5 and k-1 copies of 4->8 cross it; the 8->2 demand does not
  // touch it. Choke capacities pin the unique fractional optimum at
  // phi = (1/2, V, k eps, 0...) with alpha* = 1, while every off-cut edge
  // stays slack for the intended optimal routing.
  const int n = 10;
  const Rational half(1, 2);
  const Rational formula_den = Rational(k) + half - keps;   // c(e'')
  const Rational alpha_opt = Rational(k + 1) / formula_den;
  Rational v_pin = Rational(1) - keps;  // forward share of the 8->2 demand
  if (v_pin < formula_den / Rational(k + 1)) v_pin = formula_den / Rational(k + 1);
  const Rational large = Rational(3 * (k + 2));

  RingInstance inst;
  inst.n = n;
  inst.cap_forward.assign(n, large);
  inst.cap_backward.assign(n, large);
  inst.cap_forward[4] = half + keps;     // e'
  inst.cap_forward[5] = half;            // pins phi(0->6) <= 1/2
  inst.cap_forward[6] = 0;               // forces the 4->8 copies backward
  inst.cap_forward[8] = v_pin;           // pins phi(8->2) from above
  inst.cap_forward[9] = keps + v_pin;    // pins phi(9->5) <= k eps
  inst.cap_backward[4] = Rational(1) - v_pin;  // pins phi(8->2) from below
  inst.cap_backward[8] = formula_den;    // e''

  inst.demands.push_back({0, 6, Rational(1)});
  inst.demands.push_back({8, 2, Rational(1)});
  inst.demands.push_back({9, 5, Rational(1)});
  for (int i = 0; i < k - 1; ++i) inst.demands.push_back({4, 8, Rational(1)});

  TightExample out;
  out.instance = std::move(inst);
  out.start_node = 0;
  out.e_prime = EdgeId{Direction::Forward, 4};
  out.e_second = EdgeId{Direction::Backward, 8};
  out.alpha_opt_expected = alpha_opt;
  out.k = k;
  out.eps = eps;
  return out;
}

namespace {

BigInt floor_of(const Rational& v) {
  BigInt p = numerator(v), q = denominator(v);
  if (p >= 0) return BigInt(p / q);
  return BigInt(-((-p + q - 1) / q));
}

BigInt ceil_of(const Rational& v) {
  BigInt p = numerator(v), q = denominator(v);
  if (p >= 0) return BigInt((p + q - 1) / q);
  return BigInt(-((-p) / q));
}

// mt19937_64 with plain modulo draws: biased in the last decimal place but
// identical on every platform, which matters more here than uniformity.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next(std::uint64_t bound) { return engine_() % bound; }

  Rational rational_in(const RationalRange& range) {
    int den = 1 + static_cast<int>(next(range.max_denominator));
    BigInt lo_num = ceil_of(range.lo * den);
    BigInt hi_num = floor_of(range.hi * den);
    if (hi_num < lo_num)
      throw std::invalid_argument("empty rational range for this denominator");
    BigInt span = hi_num - lo_num + 1;
    BigInt num = lo_num + BigInt(engine_()) % span;
    return Rational(num, den);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

RingInstance random_instance(std::uint64_t seed, int n, int m,
                             const RationalRange& cap_range,
                             const RationalRange& demand_range) {
  if (n < 2) throw std::invalid_argument("random_instance requires n >= 2");
  if (m < 0) throw std::invalid_argument("random_instance requires m >= 0");
  DeterministicRng rng(seed);
  RingInstance inst;
  inst.n = n;
  for (int i = 0; i < n; ++i) inst.cap_forward.push_back(rng.rational_in(cap_range));
  for (int i = 0; i < n; ++i) inst.cap_backward.push_back(rng.rational_in(cap_range));
  for (int f = 0; f < m; ++f) {
    int s = static_cast<int>(rng.next(n));
    int t = static_cast<int>(rng.next(n - 1));
    if (t >= s) ++t;
    inst.demands.push_back({s, t, rng.rational_in(demand_range)});
  }
  return inst;
}

}  // namespace ringbal
