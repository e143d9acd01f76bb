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

#include <algorithm>
#include <set>

#include <doctest.h>

#include "ringbal/oracle.hpp"

using namespace ringbal;

namespace {

RingInstance uniform_ring(int n, const Rational& cap) {
  RingInstance inst;
  inst.n = n;
  inst.cap_forward.assign(n, cap);
  inst.cap_backward.assign(n, cap);
  return inst;
}

}  // namespace

TEST_CASE("validate_instance accepts a clean instance and lists violations") {
  RingInstance ok = uniform_ring(3, Rational(1));
  CHECK(validate_instance(ok).empty());

  RingInstance degenerate = ok;
  degenerate.demands.push_back({1, 1, Rational(1)});
  auto errors = validate_instance(degenerate);
  REQUIRE(errors.size() == 1);
  CHECK(errors[0].find("degenerate demand") != std::string::npos);

  RingInstance negative = ok;
  negative.cap_forward[2] = Rational(-1);
  errors = validate_instance(negative);
  REQUIRE(errors.size() == 1);
  CHECK(errors[0].find("negative capacity") != std::string::npos);

  RingInstance bad_index = ok;
  bad_index.demands.push_back({0, 7, Rational(2)});
  CHECK(!validate_instance(bad_index).empty());

  RingInstance zero_value = ok;
  zero_value.demands.push_back({0, 1, Rational(0)});
  CHECK(!validate_instance(zero_value).empty());
}

TEST_CASE("path_edges walks both directions") {
  RingInstance inst = uniform_ring(4, Rational(1));
  auto fwd = path_edges(inst, 0, 2, Direction::Forward);
  REQUIRE(fwd.size() == 2);
  CHECK(fwd[0] == EdgeId{Direction::Forward, 0});
  CHECK(fwd[1] == EdgeId{Direction::Forward, 1});

  auto bwd = path_edges(inst, 0, 2, Direction::Backward);
  REQUIRE(bwd.size() == 2);
  CHECK(bwd[0] == EdgeId{Direction::Backward, 3});  // 0 -> 3
  CHECK(bwd[1] == EdgeId{Direction::Backward, 2});  // 3 -> 2

  RingInstance two = uniform_ring(2, Rational(1));
  auto single = path_edges(two, 0, 1, Direction::Forward);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == EdgeId{Direction::Forward, 0});

  CHECK_THROWS_AS(path_edges(inst, 1, 1, Direction::Forward), std::invalid_argument);
}

TEST_CASE("forward and backward paths partition the slots") {
  for (int n : {2, 3, 5, 8}) {
    RingInstance inst = uniform_ring(n, Rational(1));
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        if (s == t) continue;
        auto fwd = path_edges(inst, s, t, Direction::Forward);
        auto bwd = path_edges(inst, s, t, Direction::Backward);
        CHECK(fwd.size() + bwd.size() == static_cast<size_t>(n));
        std::set<int> slots;
        for (const EdgeId& e : fwd) {
          CHECK(e.dir == Direction::Forward);
          slots.insert(e.slot);
        }
        for (const EdgeId& e : bwd) {
          CHECK(e.dir == Direction::Backward);
          slots.insert(e.slot);
        }
        CHECK(slots.size() == static_cast<size_t>(n));
      }
    }
  }
}

TEST_CASE("long_direction prefers the longer path, forward on ties") {
  RingInstance five = uniform_ring(5, Rational(1));
  CHECK(long_direction(five, 0, 1) == Direction::Backward);  // 4 vs 1 edges
  RingInstance four = uniform_ring(4, Rational(1));
  CHECK(long_direction(four, 0, 2) == Direction::Forward);   // tie
  RingInstance three = uniform_ring(3, Rational(1));
  CHECK(long_direction(three, 0, 2) == Direction::Forward);  // 2 vs 1
}

TEST_CASE("load_of_fractional matches hand-computed loads") {
  RingInstance inst = uniform_ring(3, Rational(1));
  inst.demands.push_back({0, 1, Rational(1)});

  FractionalAssignment all_fwd{{Rational(1)}};
  LoadVector lv = load_of_fractional(inst, all_fwd);
  CHECK(lv.forward[0] == 1);
  CHECK(lv.forward[1] == 0);
  CHECK(lv.forward[2] == 0);
  CHECK(lv.backward[0] == 0);
  CHECK(lv.backward[1] == 0);
  CHECK(lv.backward[2] == 0);

  FractionalAssignment half{{Rational(1, 2)}};
  lv = load_of_fractional(inst, half);
  CHECK(lv.forward[0] == Rational(1, 2));
  CHECK(lv.backward[2] == Rational(1, 2));  // 0 -> 2
  CHECK(lv.backward[1] == Rational(1, 2));  // 2 -> 1
  CHECK(lv.backward[0] == 0);

  RingInstance pair = uniform_ring(3, Rational(1));
  pair.demands.push_back({0, 1, Rational(2)});
  pair.demands.push_back({1, 0, Rational(3)});
  lv = load_of_fractional(pair, FractionalAssignment{{Rational(1), Rational(1)}});
  CHECK(lv.forward[0] == 2);  // 0 -> 1
  CHECK(lv.forward[1] == 3);  // 1 -> 2
  CHECK(lv.forward[2] == 3);  // 2 -> 0
}

TEST_CASE("load_of_integral basics and the 0/1 identity") {
  RingInstance inst = uniform_ring(4, Rational(1));
  inst.demands.push_back({0, 2, Rational(3)});
  LoadVector lv = load_of_integral(inst, {Direction::Forward});
  CHECK(lv.forward[0] == 3);
  CHECK(lv.forward[1] == 3);
  CHECK(lv.forward[2] == 0);
  CHECK(lv.backward[0] == 0);

  RingInstance empty = uniform_ring(4, Rational(1));
  lv = load_of_integral(empty, {});
  for (int i = 0; i < 4; ++i) {
    CHECK(lv.forward[i] == 0);
    CHECK(lv.backward[i] == 0);
  }

  // Integral loads equal fractional loads at phi in {0,1}.
  RingInstance rnd = random_instance(11, 5, 6, {Rational(1), Rational(3), 3},
                                     {Rational(1, 2), Rational(2), 3});
  DirectionAssignment dirs;
  for (size_t f = 0; f < rnd.demands.size(); ++f)
    dirs.push_back(f % 2 ? Direction::Forward : Direction::Backward);
  LoadVector a = load_of_integral(rnd, dirs);
  LoadVector b = load_of_fractional(rnd, fractional_of_integral(dirs));
  CHECK(a.forward == b.forward);
  CHECK(a.backward == b.backward);
}

TEST_CASE("congestion handles zero capacities") {
  RingInstance inst = uniform_ring(3, Rational(1));
  LoadVector lv = zero_loads(3);
  CHECK(congestion(inst, lv) == Rational(0));

  lv.forward[0] = Rational(1, 2);
  CHECK(congestion(inst, lv) == Rational(1, 2));

  inst.cap_forward[0] = 0;
  CHECK(!congestion(inst, lv).has_value());  // loaded zero-capacity edge

  lv.forward[0] = 0;
  lv.backward[1] = Rational(1, 4);
  CHECK(congestion(inst, lv) == Rational(1, 4));
}

TEST_CASE("load_of_fractional is linear in phi") {
  RingInstance inst = random_instance(7, 5, 5, {Rational(1), Rational(2), 2},
                                      {Rational(1, 3), Rational(3), 3});
  FractionalAssignment phi1, phi2;
  for (size_t f = 0; f < inst.demands.size(); ++f) {
    phi1.phi.push_back(Rational((f * 13) % 7, 7));
    phi2.phi.push_back(Rational((f * 5 + 2) % 9, 9));
  }
  for (const Rational& a : {Rational(0), Rational(1, 3), Rational(1)}) {
    FractionalAssignment mix;
    for (size_t f = 0; f < inst.demands.size(); ++f)
      mix.phi.push_back(a * phi1.phi[f] + (1 - a) * phi2.phi[f]);
    LoadVector lhs = load_of_fractional(inst, mix);
    LoadVector l1 = load_of_fractional(inst, phi1);
    LoadVector l2 = load_of_fractional(inst, phi2);
    for (const EdgeId& e : all_edges(inst)) {
      CHECK(load_at(lhs, e) == a * load_at(l1, e) + (1 - a) * load_at(l2, e));
    }
  }
}

TEST_CASE("congestion is monotone and loads are order invariant") {
  RingInstance inst = random_instance(19, 4, 5, {Rational(1), Rational(2), 2},
                                      {Rational(1), Rational(2), 2});
  FractionalAssignment phi;
  for (size_t f = 0; f < inst.demands.size(); ++f)
    phi.phi.push_back(Rational(1, static_cast<long>(f) + 2));
  LoadVector lv = load_of_fractional(inst, phi);
  LoadVector bigger = lv;
  bigger.forward[1] += Rational(1, 5);
  CHECK(*congestion(inst, lv) <= *congestion(inst, bigger));

  // Permuting the demand list (with phi permuted alongside) keeps loads.
  RingInstance shuffled = inst;
  FractionalAssignment phi_shuffled = phi;
  std::vector<size_t> perm(inst.demands.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = (i + 3) % perm.size();
  for (size_t i = 0; i < perm.size(); ++i) {
    shuffled.demands[i] = inst.demands[perm[i]];
    phi_shuffled.phi[i] = phi.phi[perm[i]];
  }
  LoadVector lv2 = load_of_fractional(shuffled, phi_shuffled);
  CHECK(lv.forward == lv2.forward);
  CHECK(lv.backward == lv2.backward);
}
