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
// Reduction of a cycle-of-directed-circuits supply graph to an equivalent
// bidirected ring. Neighboring circuits share one common node; the common
// nodes cut each circuit into two directed arcs, and each arc collapses to
// one ring edge carrying the minimum residual capacity along it. Demands
// ending between common nodes are walked to their nearest common nodes
// first, paying capacity along the forced segments.

#ifndef RINGBAL_REDUCTION_HPP
#define RINGBAL_REDUCTION_HPP

#include <string>
#include <vector>

#include "ringbal/ring.hpp"

namespace ringbal {

struct CircuitEdge {
  int from = 0;
  int to = 0;
  Rational capacity;
};

struct CycleOfCircuits {
  // circuits[i] lists the directed edges of circuit i in cycle order.
  // Circuits i and i+1 (mod count) share exactly one node.
  std::vector<std::vector<CircuitEdge>> circuits;
  std::vector<Demand> demands;  // over global node ids
};

/// Structural checks: every circuit a simple directed cycle, neighbors
/// sharing exactly one node, non-neighbors none, no node in more than two
/// circuits, demand endpoints present and non-degenerate. At least three
/// circuits (a two-circuit necklace has two shared nodes and no canonical
/// labeling). Empty result means valid.
std::vector<std::string> validate_cycle(const CycleOfCircuits& g);

struct DemandMapEntry {
  enum class Kind { Mapped, Dropped } kind = Kind::Mapped;
  // Mapped: index of the corresponding ring demand plus the forced entry
  // and exit walks (flat edge ids). Dropped: the full forced path.
  int ring_demand_index = -1;
  std::vector<int> prefix_edges;
  std::vector<int> suffix_edges;
  std::vector<int> fixed_path_edges;
};

struct ReductionOutput {
  bool infeasible = false;        // some residual capacity went negative
  std::vector<int> negative_edges;
  RingInstance ring;              // n = number of circuits
  std::vector<DemandMapEntry> mapping;     // one per original demand
  std::vector<CircuitEdge> flat_edges;     // all supply edges, stable ids
  std::vector<Rational> decrements;        // per flat edge
  std::vector<int> common_nodes;           // ring node i = common_nodes[i]
  // Flat edge ids of each ring edge's arc, in path order.
  std::vector<std::vector<int>> arc_forward;   // per slot
  std::vector<std::vector<int>> arc_backward;  // per slot
};

/// Performs the reduction. Requires a valid CycleOfCircuits (throws
/// std::invalid_argument otherwise, carrying the first validation error).
ReductionOutput reduce_to_ring(const CycleOfCircuits& g);

/// Expands a ring routing back to supply-graph paths, one flat-edge list
/// per original demand: forced fixed path for dropped demands, forced
/// prefix + expanded arcs + forced suffix for mapped ones.
std::vector<std::vector<int>> lift_routing(const ReductionOutput& red,
                                           const DirectionAssignment& ring_dirs);

/// Per-flat-edge loads of a lifted routing; for every edge e on the arc of
/// ring edge A this equals ring load(A) + decrement(e).
std::vector<Rational> lifted_loads(const ReductionOutput& red,
                                   const std::vector<std::vector<int>>& paths,
                                   const CycleOfCircuits& g);

}  // namespace ringbal

#endif  // RINGBAL_REDUCTION_HPP
