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

#include "ringbal/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ringbal {

namespace {

std::set<int> circuit_nodes(const std::vector<CircuitEdge>& circuit) {
  std::set<int> nodes;
  for (const CircuitEdge& e : circuit) nodes.insert(e.from);
  return nodes;
}

}  // namespace

std::vector<std::string> validate_cycle(const CycleOfCircuits& g) {
  std::vector<std::string> errors;
  const int count = static_cast<int>(g.circuits.size());
  if (count < 3) {
    errors.push_back("need at least 3 circuits to form a cycle of circuits");
    return errors;
  }
  for (int i = 0; i < count; ++i) {
    const auto& c = g.circuits[i];
    if (c.size() < 2) {
      errors.push_back("circuit " + std::to_string(i) + " must have at least 2 edges");
      continue;
    }
    std::set<int> seen;
    for (size_t k = 0; k < c.size(); ++k) {
      if (c[k].to != c[(k + 1) % c.size()].from)
        errors.push_back("circuit " + std::to_string(i) + " edges do not chain at position " +
                         std::to_string(k));
      if (!seen.insert(c[k].from).second)
        errors.push_back("circuit " + std::to_string(i) + " revisits node " +
                         std::to_string(c[k].from));
      if (c[k].capacity < 0)
        errors.push_back("circuit " + std::to_string(i) + " has a negative capacity edge");
    }
  }
  if (!errors.empty()) return errors;

  std::map<int, int> membership;  // node -> number of circuits containing it
  for (const auto& c : g.circuits)
    for (int v : circuit_nodes(c)) ++membership[v];
  for (const auto& [node, cnt] : membership) {
    if (cnt > 2)
      errors.push_back("node " + std::to_string(node) + " belongs to " +
                       std::to_string(cnt) + " circuits");
  }

  std::vector<std::set<int>> nodes(count);
  for (int i = 0; i < count; ++i) nodes[i] = circuit_nodes(g.circuits[i]);
  std::vector<int> commons(count, -1);
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      std::vector<int> shared;
      std::set_intersection(nodes[i].begin(), nodes[i].end(), nodes[j].begin(),
                            nodes[j].end(), std::back_inserter(shared));
      bool adjacent = (j == i + 1) || (i == 0 && j == count - 1);
      if (adjacent && shared.size() != 1)
        errors.push_back("circuits " + std::to_string(i) + " and " + std::to_string(j) +
                         " must share exactly one node");
      if (!adjacent && !shared.empty())
        errors.push_back("non-neighboring circuits " + std::to_string(i) + " and " +
                         std::to_string(j) + " share a node");
      if (adjacent && shared.size() == 1) {
        int idx = (j == i + 1) ? i : j;  // pair (i,i+1) keyed by i
        commons[idx] = shared[0];
      }
    }
  }
  if (errors.empty()) {
    std::set<int> distinct(commons.begin(), commons.end());
    if (static_cast<int>(distinct.size()) != count)
      errors.push_back("common nodes must be pairwise distinct");
  }

  std::set<int> all_nodes;
  for (const auto& ns : nodes) all_nodes.insert(ns.begin(), ns.end());
  for (size_t f = 0; f < g.demands.size(); ++f) {
    const Demand& d = g.demands[f];
    if (!all_nodes.count(d.source))
      errors.push_back("demand " + std::to_string(f) + ": unknown source node");
    if (!all_nodes.count(d.target))
      errors.push_back("demand " + std::to_string(f) + ": unknown target node");
    if (d.source == d.target)
      errors.push_back("demand " + std::to_string(f) + ": degenerate demand");
    if (d.value <= 0)
      errors.push_back("demand " + std::to_string(f) + ": value must be positive");
  }
  return errors;
}

namespace {

struct Topology {
  int count = 0;
  std::vector<int> commons;                    // commons[i]: circuits i, i+1
  std::map<int, std::vector<int>> circuits_of; // node -> circuit indices
  // Per circuit: node -> offset of its outgoing edge in the edge list.
  std::vector<std::map<int, int>> out_edge_at;
  std::vector<std::map<int, int>> in_edge_at;
  std::vector<int> flat_base;  // flat id of circuit i's edge 0
};

Topology build_topology(const CycleOfCircuits& g) {
  Topology topo;
  topo.count = static_cast<int>(g.circuits.size());
  topo.commons.assign(topo.count, -1);
  topo.out_edge_at.resize(topo.count);
  topo.in_edge_at.resize(topo.count);
  int flat = 0;
  for (int i = 0; i < topo.count; ++i) {
    topo.flat_base.push_back(flat);
    flat += static_cast<int>(g.circuits[i].size());
    for (size_t k = 0; k < g.circuits[i].size(); ++k) {
      topo.out_edge_at[i][g.circuits[i][k].from] = static_cast<int>(k);
      topo.in_edge_at[i][g.circuits[i][k].to] = static_cast<int>(k);
      topo.circuits_of[g.circuits[i][k].from].push_back(i);
    }
  }
  for (auto& [node, list] : topo.circuits_of)
    std::sort(list.begin(), list.end());
  for (int i = 0; i < topo.count; ++i) {
    int j = (i + 1) % topo.count;
    std::set<int> a = circuit_nodes(g.circuits[i]);
    for (int v : circuit_nodes(g.circuits[j])) {
      if (a.count(v)) {
        topo.commons[i] = v;
        break;
      }
    }
  }
  return topo;
}

bool is_common(const Topology& topo, int v) {
  return topo.circuits_of.at(v).size() == 2;
}

struct Walk {
  int common_node = -1;
  std::vector<int> flat_edges;  // in travel order
  std::vector<int> nodes;       // visited nodes including both ends
};

// Follows the unique outgoing supply edges from v until the first common
// node. A common node is its own nearest exit at distance zero.
Walk walk_forward(const CycleOfCircuits& g, const Topology& topo, int v) {
  Walk w;
  w.nodes.push_back(v);
  if (is_common(topo, v)) {
    w.common_node = v;
    return w;
  }
  int circuit = topo.circuits_of.at(v).front();
  int at = v;
  while (!is_common(topo, at)) {
    int k = topo.out_edge_at[circuit].at(at);
    w.flat_edges.push_back(topo.flat_base[circuit] + k);
    at = g.circuits[circuit][k].to;
    w.nodes.push_back(at);
  }
  w.common_node = at;
  return w;
}

// Follows incoming edges backwards from v to the first common node; the
// resulting edge list is reversed into travel order (common node -> v).
Walk walk_backward(const CycleOfCircuits& g, const Topology& topo, int v) {
  Walk w;
  w.nodes.push_back(v);
  if (is_common(topo, v)) {
    w.common_node = v;
    return w;
  }
  int circuit = topo.circuits_of.at(v).front();
  int at = v;
  while (!is_common(topo, at)) {
    int k = topo.in_edge_at[circuit].at(at);
    w.flat_edges.push_back(topo.flat_base[circuit] + k);
    at = g.circuits[circuit][k].from;
    w.nodes.push_back(at);
  }
  w.common_node = at;
  std::reverse(w.flat_edges.begin(), w.flat_edges.end());
  std::reverse(w.nodes.begin(), w.nodes.end());
  return w;
}

}  // namespace

ReductionOutput reduce_to_ring(const CycleOfCircuits& g) {
  auto errors = validate_cycle(g);
  if (!errors.empty()) throw std::invalid_argument(errors.front());

  const Topology topo = build_topology(g);
  const int count = topo.count;

  ReductionOutput out;
  out.common_nodes = topo.commons;
  for (const auto& circuit : g.circuits)
    for (const CircuitEdge& e : circuit) out.flat_edges.push_back(e);
  out.decrements.assign(out.flat_edges.size(), Rational(0));

  std::map<int, int> ring_index;  // common node -> ring node
  for (int i = 0; i < count; ++i) ring_index[topo.commons[i]] = i;

  out.ring.n = count;
  out.ring.cap_forward.assign(count, Rational(0));
  out.ring.cap_backward.assign(count, Rational(0));
  out.arc_forward.resize(count);
  out.arc_backward.resize(count);

  for (size_t f = 0; f < g.demands.size(); ++f) {
    const Demand& dem = g.demands[f];
    Walk to_exit = walk_forward(g, topo, dem.source);
    DemandMapEntry entry;

    // Target already on the forced exit walk: route the unique path and
    // retire the demand.
    auto hit = std::find(to_exit.nodes.begin() + 1, to_exit.nodes.end(), dem.target);
    if (hit != to_exit.nodes.end()) {
      size_t steps = static_cast<size_t>(hit - to_exit.nodes.begin());
      entry.kind = DemandMapEntry::Kind::Dropped;
      entry.fixed_path_edges.assign(to_exit.flat_edges.begin(),
                                    to_exit.flat_edges.begin() + steps);
      for (int e : entry.fixed_path_edges) out.decrements[e] += dem.value;
      out.mapping.push_back(std::move(entry));
      continue;
    }

    Walk from_entry = walk_backward(g, topo, dem.target);
    if (to_exit.common_node == from_entry.common_node) {
      // Both forced walks meet at one common node, so only one supply path
      // exists; same treatment as above.
      entry.kind = DemandMapEntry::Kind::Dropped;
      entry.fixed_path_edges = to_exit.flat_edges;
      entry.fixed_path_edges.insert(entry.fixed_path_edges.end(),
                                    from_entry.flat_edges.begin(),
                                    from_entry.flat_edges.end());
      for (int e : entry.fixed_path_edges) out.decrements[e] += dem.value;
      out.mapping.push_back(std::move(entry));
      continue;
    }

    entry.kind = DemandMapEntry::Kind::Mapped;
    entry.prefix_edges = to_exit.flat_edges;
    entry.suffix_edges = from_entry.flat_edges;
    for (int e : entry.prefix_edges) out.decrements[e] += dem.value;
    for (int e : entry.suffix_edges) out.decrements[e] += dem.value;
    entry.ring_demand_index = static_cast<int>(out.ring.demands.size());
    out.ring.demands.push_back({ring_index.at(to_exit.common_node),
                                ring_index.at(from_entry.common_node), dem.value});
    out.mapping.push_back(std::move(entry));
  }

  for (size_t e = 0; e < out.flat_edges.size(); ++e) {
    if (out.flat_edges[e].capacity < out.decrements[e]) {
      out.infeasible = true;
      out.negative_edges.push_back(static_cast<int>(e));
    }
  }

  // Collapse each arc to a single ring edge at the minimum residual
  // capacity. Circuit j runs from common[j-1] to common[j], which is ring
  // slot j-1; its forward arc follows the circuit direction.
  for (int j = 0; j < count; ++j) {
    int slot = (j + count - 1) % count;
    int entry_node = topo.commons[slot];        // common[(j-1) mod count]
    int exit_node = topo.commons[j];
    Walk fwd;
    {
      // Walk the circuit from entry to exit collecting edges.
      int at = entry_node;
      while (at != exit_node) {
        int k = topo.out_edge_at[j].at(at);
        fwd.flat_edges.push_back(topo.flat_base[j] + k);
        at = g.circuits[j][k].to;
      }
    }
    Walk bwd;
    {
      int at = exit_node;
      while (at != entry_node) {
        int k = topo.out_edge_at[j].at(at);
        bwd.flat_edges.push_back(topo.flat_base[j] + k);
        at = g.circuits[j][k].to;
      }
    }
    auto min_residual = [&](const std::vector<int>& edges) {
      Rational best;
      bool first = true;
      for (int e : edges) {
        Rational residual = out.flat_edges[e].capacity - out.decrements[e];
        if (first || residual < best) {
          best = residual;
          first = false;
        }
      }
      if (best < 0) best = 0;  // flagged infeasible above; clamp for the model
      return best;
    };
    out.arc_forward[slot] = fwd.flat_edges;
    out.arc_backward[slot] = bwd.flat_edges;
    out.ring.cap_forward[slot] = min_residual(fwd.flat_edges);
    out.ring.cap_backward[slot] = min_residual(bwd.flat_edges);
  }
  return out;
}

std::vector<std::vector<int>> lift_routing(const ReductionOutput& red,
                                           const DirectionAssignment& ring_dirs) {
  if (ring_dirs.size() != red.ring.demands.size())
    throw std::invalid_argument("ring routing size mismatch");
  std::vector<std::vector<int>> paths;
  paths.reserve(red.mapping.size());
  for (const DemandMapEntry& entry : red.mapping) {
    if (entry.kind == DemandMapEntry::Kind::Dropped) {
      paths.push_back(entry.fixed_path_edges);
      continue;
    }
    const Demand& rd = red.ring.demands[entry.ring_demand_index];
    std::vector<int> path = entry.prefix_edges;
    for (const EdgeId& e : path_edges(red.ring, rd.source, rd.target,
                                      ring_dirs[entry.ring_demand_index])) {
      const auto& arc = e.dir == Direction::Forward ? red.arc_forward[e.slot]
                                                    : red.arc_backward[e.slot];
      path.insert(path.end(), arc.begin(), arc.end());
    }
    path.insert(path.end(), entry.suffix_edges.begin(), entry.suffix_edges.end());
    paths.push_back(std::move(path));
  }
  return paths;
}

std::vector<Rational> lifted_loads(const ReductionOutput& red,
                                   const std::vector<std::vector<int>>& paths,
                                   const CycleOfCircuits& g) {
  std::vector<Rational> loads(red.flat_edges.size(), Rational(0));
  for (size_t f = 0; f < paths.size(); ++f) {
    for (int e : paths[f]) loads[e] += g.demands[f].value;
  }
  return loads;
}

}  // namespace ringbal
