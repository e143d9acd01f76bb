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
// Instance model for bidirected rings: node/edge indexing, path geometry,
// load accumulation and congestion. Everything here is an immutable value
// type and every function is pure.

#ifndef RINGBAL_RING_HPP
#define RINGBAL_RING_HPP

#include <optional>
#include <string>
#include <vector>

#include "ringbal/rational.hpp"

namespace ringbal {

enum class Direction { Forward, Backward };

inline Direction opposite(Direction d) {
  return d == Direction::Forward ? Direction::Backward : Direction::Forward;
}

// Nodes are 0..n-1 in forward order. Slot i sits between node i and node
// i+1 (mod n); it carries two directed edges:
//   forward  edge of slot i:  i   -> i+1
//   backward edge of slot i:  i+1 -> i
struct EdgeId {
  Direction dir;
  int slot;
  friend bool operator==(const EdgeId&, const EdgeId&) = default;
};

struct Demand {
  int source = 0;
  int target = 0;
  Rational value;
  friend bool operator==(const Demand&, const Demand&) = default;
};

struct RingInstance {
  int n = 0;
  std::vector<Rational> cap_forward;   // size n, slot-indexed
  std::vector<Rational> cap_backward;  // size n, slot-indexed
  std::vector<Demand> demands;
};

// One direction per demand, same order as the instance demand list.
using DirectionAssignment = std::vector<Direction>;

// Forward share phi(f) in [0,1] per demand; phi(f)*d(f) travels forward,
// the rest backward.
struct FractionalAssignment {
  std::vector<Rational> phi;
};

struct LoadVector {
  std::vector<Rational> forward;   // size n
  std::vector<Rational> backward;  // size n
};

inline LoadVector zero_loads(int n) {
  return LoadVector{std::vector<Rational>(n, Rational(0)),
                    std::vector<Rational>(n, Rational(0))};
}

inline const Rational& capacity(const RingInstance& inst, const EdgeId& e) {
  return e.dir == Direction::Forward ? inst.cap_forward[e.slot]
                                     : inst.cap_backward[e.slot];
}

inline Rational& load_at(LoadVector& lv, const EdgeId& e) {
  return e.dir == Direction::Forward ? lv.forward[e.slot] : lv.backward[e.slot];
}

inline const Rational& load_at(const LoadVector& lv, const EdgeId& e) {
  return e.dir == Direction::Forward ? lv.forward[e.slot] : lv.backward[e.slot];
}

/// All 2n directed edges, forward slots 0..n-1 then backward slots 0..n-1.
std::vector<EdgeId> all_edges(const RingInstance& inst);

std::string edge_name(const EdgeId& e, int n);

/// Empty result means the instance is well formed. Each entry names one
/// violation (bad node index, degenerate demand, nonpositive demand value,
/// negative capacity, size mismatch).
std::vector<std::string> validate_instance(const RingInstance& inst);

/// Directed edges of the s->t path in the given direction, in traversal
/// order. The forward and backward paths of a pair are edge-disjoint and
/// together touch every slot exactly once. Throws std::invalid_argument
/// when s == t.
std::vector<EdgeId> path_edges(const RingInstance& inst, int s, int t,
                               Direction dir);

/// Direction of the longer s->t path; Forward when both have n/2 edges.
Direction long_direction(const RingInstance& inst, int s, int t);

/// Per-edge load of a fractional assignment:
/// sum over f of phi(f) d(f) on the forward f-path plus (1-phi(f)) d(f) on
/// the backward f-path.
LoadVector load_of_fractional(const RingInstance& inst,
                              const FractionalAssignment& phi);

/// Per-edge load of an unsplittable routing.
LoadVector load_of_integral(const RingInstance& inst,
                            const DirectionAssignment& dirs);

/// max over edges of load(e)/c(e). Zero-capacity edges contribute 0 when
/// unloaded; a loaded zero-capacity edge makes the congestion infinite,
/// reported as nullopt.
std::optional<Rational> congestion(const RingInstance& inst,
                                   const LoadVector& lv);

inline FractionalAssignment fractional_of_integral(
    const DirectionAssignment& dirs) {
  FractionalAssignment out;
  out.phi.reserve(dirs.size());
  for (Direction d : dirs)
    out.phi.emplace_back(d == Direction::Forward ? 1 : 0);
  return out;
}

}  // namespace ringbal

#endif  // RINGBAL_RING_HPP
