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

#include "ringbal/rounding.hpp"

#include <array>
#include <stdexcept>

namespace ringbal {

namespace {

// True when the four nodes can be visited in the order a, b, c, d by one
// forward trip around the ring, coincident nodes allowed. Trying all four
// rotations lets coincident endpoints sit on either side of the wrap.
bool cyclic_order_admits(int n, const std::array<int, 4>& seq) {
  for (int start = 0; start < 4; ++start) {
    int base = seq[start];
    int prev = 0;
    bool ok = true;
    for (int j = 1; j < 4; ++j) {
      int off = ((seq[(start + j) % 4] - base) % n + n) % n;
      if (off < prev) {
        ok = false;
        break;
      }
      prev = off;
    }
    if (ok) return true;
  }
  return false;
}

// Orientation in which the pair is parallel: Forward when s1,t1,t2,s2 is a
// forward cyclic order, Backward when the reversed reading s2,t2,t1,s1 is.
// In the certified orientation the long f1-path runs against it and the
// long f2-path runs along it; that alignment is what makes the rerouting
// cancel on every shared edge.
std::array<Direction, 2> long_directions(const RingInstance& inst,
                                         const Demand& f1, const Demand& f2) {
  if (cyclic_order_admits(inst.n, {f1.source, f1.target, f2.target, f2.source}))
    return {Direction::Backward, Direction::Forward};
  if (cyclic_order_admits(inst.n, {f2.source, f2.target, f1.target, f1.source}))
    return {Direction::Forward, Direction::Backward};
  throw std::invalid_argument("uncross_step requires a parallel pair");
}

}  // namespace

bool is_parallel(const RingInstance& inst, const Demand& f1, const Demand& f2) {
  return cyclic_order_admits(inst.n,
                             {f1.source, f1.target, f2.target, f2.source}) ||
         cyclic_order_admits(inst.n,
                             {f2.source, f2.target, f1.target, f1.source});
}

FractionalAssignment uncross_step(const RingInstance& inst,
                                  const FractionalAssignment& phi, int i,
                                  int j) {
  if (i == j) throw std::invalid_argument("uncross_step needs two distinct demands");
  const Demand& fi = inst.demands[i];
  const Demand& fj = inst.demands[j];
  if (!is_split(phi.phi[i]) || !is_split(phi.phi[j]))
    throw std::invalid_argument("uncross_step requires two split demands");

  auto longs = long_directions(inst, fi, fj);

  // Flow sent along each long path.
  auto long_flow = [&](const Demand& d, const Rational& p, Direction dir) {
    return dir == Direction::Forward ? p * d.value : (Rational(1) - p) * d.value;
  };
  Rational xi = long_flow(fi, phi.phi[i], longs[0]);
  Rational xj = long_flow(fj, phi.phi[j], longs[1]);
  Rational shift = xi < xj ? xi : xj;

  FractionalAssignment out = phi;
  // Moving `shift` off the long path raises phi when the long path is
  // backward and lowers it when the long path is forward.
  out.phi[i] += (longs[0] == Direction::Backward ? shift : -shift) / fi.value;
  out.phi[j] += (longs[1] == Direction::Backward ? shift : -shift) / fj.value;
  return out;
}

UncrossResult uncross_all(const RingInstance& inst,
                          const FractionalAssignment& phi) {
  const int m = static_cast<int>(inst.demands.size());
  UncrossResult res;
  res.phi = phi;
  while (true) {
    bool found = false;
    for (int i = 0; i < m && !found; ++i) {
      if (!is_split(res.phi.phi[i])) continue;
      for (int j = i + 1; j < m && !found; ++j) {
        if (!is_split(res.phi.phi[j])) continue;
        if (!is_parallel(inst, inst.demands[i], inst.demands[j])) continue;
        res.phi = uncross_step(inst, res.phi, i, j);
        res.pairs.emplace_back(i, j);
        ++res.steps;
        found = true;
      }
    }
    if (!found) break;
    if (res.steps > m)
      throw std::logic_error("uncrossing exceeded the |E(H)| step bound");
  }
  return res;
}

GreedyResult unsplit_greedy(const RingInstance& inst,
                            const FractionalAssignment& phi, int start_node) {
  const int m = static_cast<int>(inst.demands.size());
  const int n = inst.n;
  if (start_node < 0 || start_node >= n)
    throw std::invalid_argument("start node out of range");

  std::vector<int> split_at_source(n, -1);
  Rational d_split(0);
  for (int f = 0; f < m; ++f) {
    if (!is_split(phi.phi[f])) continue;
    int s = inst.demands[f].source;
    if (split_at_source[s] >= 0)
      throw std::invalid_argument(
          "unsplit_greedy requires at most one split demand per source; run uncross_all first");
    split_at_source[s] = f;
    if (inst.demands[f].value > d_split) d_split = inst.demands[f].value;
  }

  GreedyResult res;
  res.d_split = d_split;
  res.dirs.assign(m, Direction::Backward);
  for (int f = 0; f < m; ++f) {
    if (phi.phi[f] == 1) res.dirs[f] = Direction::Forward;
  }

  const Rational half_d = d_split / 2;
  Rational prefix(0);
  for (int step = 0; step < n; ++step) {
    int node = (start_node + step) % n;
    int f = split_at_source[node];
    if (f < 0) continue;
    Rational x = phi.phi[f] * inst.demands[f].value;        // forward amount
    Rational y = inst.demands[f].value - x;                 // backward amount
    if (prefix + y <= half_d) {
      res.dirs[f] = Direction::Forward;  // w = +y
      prefix += y;
    } else {
      res.dirs[f] = Direction::Backward;  // w = -x
      prefix -= x;
    }
    if (!(prefix > -half_d && prefix <= half_d))
      throw std::logic_error("greedy prefix left (-D/2, D/2]");
    res.visit_order.push_back(f);
    res.prefix_sums.push_back(prefix);
  }
  return res;
}

RoutingCertificate certify_routing(const RingInstance& inst,
                                   const Rational& alpha_star,
                                   const LoadVector& loads,
                                   const Rational& d_split) {
  RoutingCertificate cert;
  cert.alpha_star = alpha_star;
  cert.d_split = d_split;
  cert.d_max = 0;
  for (const Demand& d : inst.demands)
    if (d.value > cert.d_max) cert.d_max = d.value;

  const Rational add = Rational(3) * cert.d_max / 2;
  const Rational add_sharp = Rational(3) * d_split / 2;
  cert.strict_ok = true;
  cert.sharp_applicable = d_split > 0;
  cert.sharp_ok = cert.sharp_applicable;
  for (const EdgeId& e : all_edges(inst)) {
    EdgeCertRow row;
    row.edge = e;
    row.capacity = capacity(inst, e);
    row.load = load_at(loads, e);
    row.alpha_c = alpha_star * row.capacity;
    row.bound = row.alpha_c + add;
    row.slack = row.bound - row.load;
    if (!(row.load < row.bound)) cert.strict_ok = false;
    if (cert.sharp_applicable && !(row.load < row.alpha_c + add_sharp))
      cert.sharp_ok = false;
    cert.rows.push_back(std::move(row));
  }
  if (inst.demands.empty()) cert.strict_ok = true;  // nothing was rounded
  return cert;
}

BalanceResult balance_route(const RingInstance& inst, int start_node) {
  BalanceResult res;
  LpSolution lp = solve_relaxation(inst);
  res.status = lp.status;
  if (!lp.feasible()) return res;

  res.alpha_star = lp.alpha_star;
  res.phi_opt = lp.phi;
  res.uncross = uncross_all(inst, lp.phi);
  res.phi_uncrossed = res.uncross.phi;
  res.greedy = unsplit_greedy(inst, res.phi_uncrossed, start_node);
  res.dirs = res.greedy.dirs;
  res.loads = load_of_integral(inst, res.dirs);
  res.certificate =
      certify_routing(inst, res.alpha_star, res.loads, res.greedy.d_split);
  return res;
}

}  // namespace ringbal
