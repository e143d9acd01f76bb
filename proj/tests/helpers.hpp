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
// Shared fixtures for the unit and acceptance suites: corpus generation,
// an independent single-demand optimum, and exhaustive feasibility search
// on cycle-of-circuits supply graphs.

#ifndef RINGBAL_TESTS_HELPERS_HPP
#define RINGBAL_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "ringbal/oracle.hpp"
#include "ringbal/reduction.hpp"
#include "ringbal/ring.hpp"

namespace ringbal::testing {

// Deterministic corpus instance: n in [2,6], m in [0,8], positive caps.
inline RingInstance corpus_instance(std::uint64_t seed) {
  std::mt19937_64 gen(seed * 2654435761u + 17);
  int n = 2 + static_cast<int>(gen() % 5);
  int m = static_cast<int>(gen() % 9);
  return random_instance(gen(), n, m, {Rational(1, 4), Rational(4), 4},
                         {Rational(1, 4), Rational(3), 4});
}

// Exact fractional optimum for a one-demand instance, derived without the
// LP: splitting d across the two paths meets the bottleneck capacities
// min_cf and min_cb, so alpha* = d / (min_cf + min_cb); with one
// bottleneck at zero the whole demand takes the other path.
inline std::optional<Rational> single_demand_alpha_star(const RingInstance& inst) {
  const Demand& d = inst.demands.at(0);
  auto min_cap = [&](Direction dir) {
    Rational best;
    bool first = true;
    for (const EdgeId& e : path_edges(inst, d.source, d.target, dir)) {
      if (first || capacity(inst, e) < best) best = capacity(inst, e);
      first = false;
    }
    return best;
  };
  Rational cf = min_cap(Direction::Forward);
  Rational cb = min_cap(Direction::Backward);
  if (cf == 0 && cb == 0) return std::nullopt;
  return d.value / (cf + cb);
}

// ---- cycle-of-circuits fixtures ----

// Necklace with `circuits` circuits; circuit j has interior_plus[j] nodes
// on its forward arc and interior_minus[j] on the return arc.
inline CycleOfCircuits make_cycle(const std::vector<int>& interior_plus,
                                  const std::vector<int>& interior_minus,
                                  const std::vector<std::vector<Rational>>& caps_plus,
                                  const std::vector<std::vector<Rational>>& caps_minus) {
  const int count = static_cast<int>(interior_plus.size());
  CycleOfCircuits g;
  int next_node = count;  // 0..count-1 are the common nodes
  for (int j = 0; j < count; ++j) {
    int entry = (j + count - 1) % count;
    int exit = j;
    std::vector<int> nodes_plus{entry};
    for (int k = 0; k < interior_plus[j]; ++k) nodes_plus.push_back(next_node++);
    nodes_plus.push_back(exit);
    std::vector<int> nodes_minus{exit};
    for (int k = 0; k < interior_minus[j]; ++k) nodes_minus.push_back(next_node++);
    nodes_minus.push_back(entry);

    std::vector<CircuitEdge> circuit;
    for (size_t k = 0; k + 1 < nodes_plus.size(); ++k)
      circuit.push_back({nodes_plus[k], nodes_plus[k + 1], caps_plus[j][k]});
    for (size_t k = 0; k + 1 < nodes_minus.size(); ++k)
      circuit.push_back({nodes_minus[k], nodes_minus[k + 1], caps_minus[j][k]});
    g.circuits.push_back(std::move(circuit));
  }
  return g;
}

inline CycleOfCircuits random_cycle(std::uint64_t seed, int max_circuits = 4,
                                    int max_nodes_per_circuit = 5,
                                    int max_demands = 5) {
  std::mt19937_64 gen(seed * 0x9e3779b97f4a7c15ull + 3);
  int count = 3 + static_cast<int>(gen() % std::max(1, max_circuits - 2));
  std::vector<int> plus(count), minus(count);
  std::vector<std::vector<Rational>> cplus(count), cminus(count);
  auto cap = [&]() {
    int den = 1 + static_cast<int>(gen() % 2);
    int num = 1 + static_cast<int>(gen() % (4 * den));
    return Rational(num, den);
  };
  for (int j = 0; j < count; ++j) {
    int budget = std::max(0, max_nodes_per_circuit - 2);
    plus[j] = static_cast<int>(gen() % (budget + 1));
    minus[j] = static_cast<int>(gen() % (budget - plus[j] + 1));
    for (int k = 0; k <= plus[j]; ++k) cplus[j].push_back(cap());
    for (int k = 0; k <= minus[j]; ++k) cminus[j].push_back(cap());
  }
  CycleOfCircuits g = make_cycle(plus, minus, cplus, cminus);

  std::vector<int> nodes;
  for (const auto& c : g.circuits)
    for (const CircuitEdge& e : c) nodes.push_back(e.from);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  int m = static_cast<int>(gen() % (max_demands + 1));
  for (int f = 0; f < m; ++f) {
    int a = nodes[gen() % nodes.size()];
    int b = nodes[gen() % nodes.size()];
    if (a == b) continue;
    int den = 1 + static_cast<int>(gen() % 2);
    int num = 1 + static_cast<int>(gen() % (2 * den));
    g.demands.push_back({a, b, Rational(num, den)});
  }
  return g;
}

// All simple directed s->t paths in the raw supply digraph, as flat edge
// index lists. Independent of the reduction: plain DFS over g's edges.
inline std::vector<std::vector<int>> all_simple_paths(const CycleOfCircuits& g,
                                                      int s, int t) {
  std::vector<CircuitEdge> flat;
  for (const auto& c : g.circuits)
    for (const CircuitEdge& e : c) flat.push_back(e);

  std::vector<std::vector<int>> out_edges_of;  // adjacency over node ids
  int max_node = 0;
  for (const CircuitEdge& e : flat) max_node = std::max({max_node, e.from, e.to});
  out_edges_of.assign(max_node + 1, {});
  for (size_t i = 0; i < flat.size(); ++i) out_edges_of[flat[i].from].push_back(static_cast<int>(i));

  std::vector<std::vector<int>> paths;
  std::vector<int> current;
  std::vector<bool> visited(max_node + 1, false);
  auto dfs = [&](auto&& self, int at) -> void {
    if (at == t) {
      paths.push_back(current);
      return;
    }
    visited[at] = true;
    for (int e : out_edges_of[at]) {
      if (visited[flat[e].to] || (flat[e].to == s)) continue;
      if (flat[e].to == t) {
        current.push_back(e);
        paths.push_back(current);
        current.pop_back();
        continue;
      }
      current.push_back(e);
      self(self, flat[e].to);
      current.pop_back();
    }
    visited[at] = false;
  };
  dfs(dfs, s);
  return paths;
}

// Exhaustive feasibility in the supply graph: every demand tries each of
// its simple paths, all combinations are checked against the original
// capacities. Independent of the reduction module.
inline bool supply_graph_feasible(const CycleOfCircuits& g) {
  std::vector<CircuitEdge> flat;
  for (const auto& c : g.circuits)
    for (const CircuitEdge& e : c) flat.push_back(e);

  std::vector<std::vector<std::vector<int>>> choices;
  for (const Demand& d : g.demands) {
    auto paths = all_simple_paths(g, d.source, d.target);
    if (paths.empty()) return false;  // no route at all
    choices.push_back(std::move(paths));
  }

  std::vector<size_t> pick(choices.size(), 0);
  while (true) {
    std::vector<Rational> load(flat.size(), Rational(0));
    for (size_t f = 0; f < choices.size(); ++f)
      for (int e : choices[f][pick[f]]) load[e] += g.demands[f].value;
    bool ok = true;
    for (size_t e = 0; e < flat.size(); ++e) {
      if (load[e] > flat[e].capacity) {
        ok = false;
        break;
      }
    }
    if (ok) return true;

    size_t f = 0;
    for (; f < choices.size(); ++f) {
      if (++pick[f] < choices[f].size()) break;
      pick[f] = 0;
    }
    if (f == choices.size()) return false;
  }
}

}  // namespace ringbal::testing

#endif  // RINGBAL_TESTS_HELPERS_HPP
