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

#include "ringbal/ring.hpp"

#include <stdexcept>

namespace ringbal {

std::vector<EdgeId> all_edges(const RingInstance& inst) {
  std::vector<EdgeId> out;
  out.reserve(2 * inst.n);
  for (int i = 0; i < inst.n; ++i) out.push_back({Direction::Forward, i});
  for (int i = 0; i < inst.n; ++i) out.push_back({Direction::Backward, i});
  return out;
}

std::string edge_name(const EdgeId& e, int n) {
  int from = e.dir == Direction::Forward ? e.slot : (e.slot + 1) % n;
  int to = e.dir == Direction::Forward ? (e.slot + 1) % n : e.slot;
  return (e.dir == Direction::Forward ? std::string("fwd(") : std::string("bwd(")) +
         std::to_string(from) + "," + std::to_string(to) + ")";
}

std::vector<std::string> validate_instance(const RingInstance& inst) {
  std::vector<std::string> errors;
  if (inst.n < 2) errors.push_back("ring must have at least 2 nodes");
  if (static_cast<int>(inst.cap_forward.size()) != inst.n)
    errors.push_back("cap_forward must list exactly n capacities");
  if (static_cast<int>(inst.cap_backward.size()) != inst.n)
    errors.push_back("cap_backward must list exactly n capacities");
  for (size_t i = 0; i < inst.cap_forward.size(); ++i) {
    if (inst.cap_forward[i] < 0)
      errors.push_back("negative capacity on forward slot " + std::to_string(i));
  }
  for (size_t i = 0; i < inst.cap_backward.size(); ++i) {
    if (inst.cap_backward[i] < 0)
      errors.push_back("negative capacity on backward slot " + std::to_string(i));
  }
  for (size_t f = 0; f < inst.demands.size(); ++f) {
    const Demand& d = inst.demands[f];
    if (d.source < 0 || d.source >= inst.n)
      errors.push_back("demand " + std::to_string(f) + ": source out of range");
    if (d.target < 0 || d.target >= inst.n)
      errors.push_back("demand " + std::to_string(f) + ": target out of range");
    if (d.source == d.target)
      errors.push_back("demand " + std::to_string(f) + ": degenerate demand (source = target)");
    if (d.value <= 0)
      errors.push_back("demand " + std::to_string(f) + ": value must be positive");
  }
  return errors;
}

std::vector<EdgeId> path_edges(const RingInstance& inst, int s, int t,
                               Direction dir) {
  if (s == t) throw std::invalid_argument("degenerate path: source equals target");
  const int n = inst.n;
  std::vector<EdgeId> out;
  int at = s;
  if (dir == Direction::Forward) {
    while (at != t) {
      out.push_back({Direction::Forward, at});
      at = (at + 1) % n;
    }
  } else {
    while (at != t) {
      int slot = (at + n - 1) % n;  // edge at -> at-1 lives on slot at-1
      out.push_back({Direction::Backward, slot});
      at = slot;
    }
  }
  return out;
}

Direction long_direction(const RingInstance& inst, int s, int t) {
  if (s == t) throw std::invalid_argument("degenerate path: source equals target");
  int fwd_len = (t - s + inst.n) % inst.n;
  int bwd_len = inst.n - fwd_len;
  return fwd_len >= bwd_len ? Direction::Forward : Direction::Backward;
}

LoadVector load_of_fractional(const RingInstance& inst,
                              const FractionalAssignment& phi) {
  if (phi.phi.size() != inst.demands.size())
    throw std::invalid_argument("fractional assignment size mismatch");
  LoadVector lv = zero_loads(inst.n);
  for (size_t f = 0; f < inst.demands.size(); ++f) {
    const Demand& dem = inst.demands[f];
    Rational fwd_amount = phi.phi[f] * dem.value;
    Rational bwd_amount = dem.value - fwd_amount;
    if (fwd_amount != 0) {
      for (const EdgeId& e : path_edges(inst, dem.source, dem.target, Direction::Forward))
        load_at(lv, e) += fwd_amount;
    }
    if (bwd_amount != 0) {
      for (const EdgeId& e : path_edges(inst, dem.source, dem.target, Direction::Backward))
        load_at(lv, e) += bwd_amount;
    }
  }
  return lv;
}

LoadVector load_of_integral(const RingInstance& inst,
                            const DirectionAssignment& dirs) {
  if (dirs.size() != inst.demands.size())
    throw std::invalid_argument("direction assignment size mismatch");
  LoadVector lv = zero_loads(inst.n);
  for (size_t f = 0; f < inst.demands.size(); ++f) {
    const Demand& dem = inst.demands[f];
    for (const EdgeId& e : path_edges(inst, dem.source, dem.target, dirs[f]))
      load_at(lv, e) += dem.value;
  }
  return lv;
}

std::optional<Rational> congestion(const RingInstance& inst,
                                   const LoadVector& lv) {
  Rational best(0);
  for (const EdgeId& e : all_edges(inst)) {
    const Rational& c = capacity(inst, e);
    const Rational& load = load_at(lv, e);
    if (c == 0) {
      if (load > 0) return std::nullopt;
      continue;
    }
    Rational ratio = load / c;
    if (ratio > best) best = ratio;
  }
  return best;
}

}  // namespace ringbal
