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

#include "ringbal/simplex.hpp"

#include <doctest.h>

using namespace ringbal;

TEST_CASE("simplex solves a textbook 2-variable LP") {
  // min -x - 2y  s.t.  x + y <= 4,  x <= 3,  y <= 2  ->  x=2, y=2.
  LinearProgram lp;
  int x = lp.add_variable(Rational(-1));
  int y = lp.add_variable(Rational(-2));
  lp.add_row({Rational(1), Rational(1)}, Rational(4));
  lp.add_row({Rational(1), Rational(0)}, Rational(3));
  lp.add_row({Rational(0), Rational(1)}, Rational(2));
  SimplexResult res = solve_lp(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.x[x] == 2);
  CHECK(res.x[y] == 2);
  CHECK(res.objective_value == Rational(-6));
}

TEST_CASE("simplex handles negative right-hand sides via phase 1") {
  // min x + y  s.t.  -x - y <= -3, x <= 5, y <= 5  ->  objective 3.
  LinearProgram lp;
  lp.add_variable(Rational(1));
  lp.add_variable(Rational(1));
  lp.add_row({Rational(-1), Rational(-1)}, Rational(-3));
  lp.add_row({Rational(1), Rational(0)}, Rational(5));
  lp.add_row({Rational(0), Rational(1)}, Rational(5));
  SimplexResult res = solve_lp(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.objective_value == 3);
  CHECK(res.x[0] + res.x[1] == 3);
}

TEST_CASE("simplex detects infeasibility") {
  // x <= 1 and -x <= -2 cannot both hold.
  LinearProgram lp;
  lp.add_variable(Rational(1));
  lp.add_row({Rational(1)}, Rational(1));
  lp.add_row({Rational(-1)}, Rational(-2));
  CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("simplex detects unboundedness") {
  // min -x with only -x <= 0.
  LinearProgram lp;
  lp.add_variable(Rational(-1));
  lp.add_row({Rational(-1)}, Rational(0));
  CHECK(solve_lp(lp).status == LpStatus::Unbounded);
}

TEST_CASE("simplex stays exact on fractional data") {
  // min -x - y  s.t.  2/3 x + 1/7 y <= 5/11,  1/5 x + 4/9 y <= 3/13.
  LinearProgram lp;
  lp.add_variable(Rational(-1));
  lp.add_variable(Rational(-1));
  lp.add_row({Rational(2, 3), Rational(1, 7)}, Rational(5, 11));
  lp.add_row({Rational(1, 5), Rational(4, 9)}, Rational(3, 13));
  SimplexResult res = solve_lp(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  // Optimum at the intersection of the two constraints; verify exactly.
  CHECK(Rational(2, 3) * res.x[0] + Rational(1, 7) * res.x[1] == Rational(5, 11));
  CHECK(Rational(1, 5) * res.x[0] + Rational(4, 9) * res.x[1] == Rational(3, 13));
}

TEST_CASE("degenerate LP with redundant rows still solves") {
  LinearProgram lp;
  lp.add_variable(Rational(1));
  lp.add_variable(Rational(1));
  lp.add_row({Rational(1), Rational(1)}, Rational(2));
  lp.add_row({Rational(1), Rational(1)}, Rational(2));   // duplicate
  lp.add_row({Rational(2), Rational(2)}, Rational(4));   // scaled duplicate
  lp.add_row({Rational(-1), Rational(-1)}, Rational(-2));  // forces equality
  SimplexResult res = solve_lp(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.objective_value == 2);
}
