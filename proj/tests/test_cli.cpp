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

#include "ringbal/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "ringbal/io.hpp"
#include "ringbal/oracle.hpp"

using namespace ringbal;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream file(path);
  file << body;
  return path;
}

std::filesystem::path write_instance(const std::string& name, const RingInstance& inst) {
  return write_temp(name, instance_to_json(inst).dump());
}

}  // namespace

TEST_CASE("instance JSON round-trips bit-exactly") {
  for (std::uint64_t seed = 1800; seed < 1830; ++seed) {
    RingInstance inst = testing::corpus_instance(seed);
    Json j = instance_to_json(inst);
    RingInstance back = instance_from_json(Json::parse(j.dump()));
    CHECK(back.n == inst.n);
    CHECK(back.cap_forward == inst.cap_forward);
    CHECK(back.cap_backward == inst.cap_backward);
    REQUIRE(back.demands.size() == inst.demands.size());
    for (size_t f = 0; f < inst.demands.size(); ++f)
      CHECK(back.demands[f] == inst.demands[f]);
  }
}

TEST_CASE("instance parser accepts mixed rational spellings") {
  Json j = Json::parse(R"({
    "n": 2,
    "cap_forward": [1, "3/2"],
    "cap_backward": ["0.25", "7"],
    "demands": [{"from": 0, "to": 1, "value": "1.5"}]
  })");
  RingInstance inst = instance_from_json(j);
  CHECK(inst.cap_forward[1] == Rational(3, 2));
  CHECK(inst.cap_backward[0] == Rational(1, 4));
  CHECK(inst.demands[0].value == Rational(3, 2));
}

TEST_CASE("instance parser rejects floats and junk with a field name") {
  Json j = Json::parse(R"({"n": 2, "cap_forward": [0.5, 1],
                           "cap_backward": [1, 1], "demands": []})");
  CHECK_THROWS_WITH_AS(instance_from_json(j),
                       doctest::Contains("cap_forward[0]"), ParseError);
  Json missing = Json::parse(R"({"n": 2})");
  CHECK_THROWS_AS(instance_from_json(missing), ParseError);
}

TEST_CASE("solve subcommand reports alpha* and a strict certificate") {
  RingInstance inst;
  inst.n = 3;
  inst.cap_forward.assign(3, Rational(1));
  inst.cap_backward.assign(3, Rational(1));
  auto path = write_instance("ringbal_empty.json", inst);
  CliRun res = run({"solve", "--instance", path.string(), "--format", "json"});
  CHECK(res.exit_code == kExitOk);
  Json j = Json::parse(res.out);
  CHECK(j["feasible"] == true);
  CHECK(j["alpha_star"] == "0");
  CHECK(j["certificate"]["strict_ok"] == true);

  inst.demands.push_back({0, 1, Rational(1)});
  path = write_instance("ringbal_triangle.json", inst);
  res = run({"solve", "--instance", path.string(), "--format", "json"});
  CHECK(res.exit_code == kExitOk);
  j = Json::parse(res.out);
  CHECK(j["alpha_star"] == "1/2");

  // The emitted routing reproduces the emitted loads exactly.
  DirectionAssignment dirs;
  for (const auto& d : j["directions"])
    dirs.push_back(d == "forward" ? Direction::Forward : Direction::Backward);
  LoadVector lv = load_of_integral(inst, dirs);
  for (int i = 0; i < 3; ++i) {
    CHECK(format_rational(lv.forward[i]) == j["loads"]["forward"][i]);
    CHECK(format_rational(lv.backward[i]) == j["loads"]["backward"][i]);
  }
}

TEST_CASE("solve output is deterministic") {
  RingInstance inst = testing::corpus_instance(1900);
  auto path = write_instance("ringbal_det.json", inst);
  CliRun a = run({"solve", "--instance", path.string(), "--format", "json"});
  CliRun b = run({"solve", "--instance", path.string(), "--format", "json"});
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.out == b.out);
}

TEST_CASE("exit codes distinguish infeasible problems from input errors") {
  RingInstance inst;
  inst.n = 2;
  inst.cap_forward.assign(2, Rational(0));
  inst.cap_backward.assign(2, Rational(0));
  inst.demands.push_back({0, 1, Rational(1)});
  auto path = write_instance("ringbal_infeasible.json", inst);
  CHECK(run({"solve", "--instance", path.string()}).exit_code == kExitInfeasible);

  auto bad = write_temp("ringbal_bad.json", "{not json");
  CliRun res = run({"solve", "--instance", bad.string()});
  CHECK(res.exit_code == kExitInputError);
  CHECK(res.err.find("malformed JSON") != std::string::npos);

  CHECK(run({"solve", "--no-such-flag"}).exit_code == kExitInputError);
  CHECK(run({"frobnicate"}).exit_code == kExitInputError);
  CHECK(run({}).exit_code == kExitInputError);

  auto degenerate = write_temp("ringbal_degenerate.json",
                               R"({"n":3,"cap_forward":[1,1,1],"cap_backward":[1,1,1],
                                   "demands":[{"from":1,"to":1,"value":1}]})");
  res = run({"solve", "--instance", degenerate.string()});
  CHECK(res.exit_code == kExitInputError);
  CHECK(res.err.find("degenerate") != std::string::npos);
}

TEST_CASE("validate subcommand lists violations") {
  auto bad = write_temp("ringbal_validate.json",
                        R"({"n":2,"cap_forward":[-1,1],"cap_backward":[1,1],"demands":[]})");
  CliRun res = run({"validate", "--instance", bad.string(), "--format", "json"});
  CHECK(res.exit_code == kExitInputError);
  Json j = Json::parse(res.out);
  CHECK(j["ok"] == false);
  CHECK(j["errors"].size() == 1);
}

TEST_CASE("oracle then solve: certificate versus exact optimum") {
  RingInstance inst = testing::corpus_instance(2024);
  REQUIRE(!inst.demands.empty());
  auto path = write_instance("ringbal_cross.json", inst);

  CliRun oracle_run = run({"oracle", "--instance", path.string(), "--format", "json"});
  REQUIRE(oracle_run.exit_code == kExitOk);
  Json jo = Json::parse(oracle_run.out);
  Rational alpha_opt = parse_rational(jo["alpha_opt"].get<std::string>());

  CliRun solve_run = run({"solve", "--instance", path.string(), "--format", "json"});
  REQUIRE(solve_run.exit_code == kExitOk);
  Json js = Json::parse(solve_run.out);
  Rational alpha_star = parse_rational(js["alpha_star"].get<std::string>());
  Rational d_max = parse_rational(js["certificate"]["d_max"].get<std::string>());

  CHECK(alpha_star <= alpha_opt);
  CHECK(alpha_opt <= 2 * alpha_star);
  // Theorem-style bound holds for the reported loads, via alpha_opt too.
  for (int i = 0; i < inst.n; ++i) {
    Rational load = parse_rational(js["loads"]["forward"][i].get<std::string>());
    CHECK(load < alpha_opt * inst.cap_forward[i] + Rational(3) * d_max / 2);
  }
}

TEST_CASE("oracle cap honors the environment override") {
  RingInstance inst;
  inst.n = 3;
  inst.cap_forward.assign(3, Rational(1));
  inst.cap_backward.assign(3, Rational(1));
  for (int f = 0; f < 5; ++f)
    inst.demands.push_back({f % 3, (f + 1) % 3, Rational(f + 1)});
  auto path = write_instance("ringbal_cap.json", inst);

  setenv("RINGBALANCE_ORACLE_CAP", "2", 1);
  CliRun res = run({"oracle", "--instance", path.string()});
  unsetenv("RINGBALANCE_ORACLE_CAP");
  CHECK(res.exit_code == kExitInputError);
  CHECK(res.err.find("2^2") != std::string::npos);

  CHECK(run({"oracle", "--instance", path.string()}).exit_code == kExitOk);
}

TEST_CASE("scheme and design subcommands run end to end") {
  RingInstance inst = testing::corpus_instance(2100);
  auto path = write_instance("ringbal_sub.json", inst);

  CliRun scheme_run = run({"scheme", "--instance", path.string(), "--epsilon", "1",
                           "--grid-steps", "2", "--format", "json"});
  REQUIRE(scheme_run.exit_code == kExitOk);
  Json js = Json::parse(scheme_run.out);
  CHECK(js["grid"].size() == 3);
  CHECK(js["epsilon_effective"] == "2/3");

  std::string costs = "[";
  for (int i = 0; i < 2 * inst.n; ++i) costs += (i ? ",\"1/2\"" : "\"1/2\"");
  costs += "]";
  auto costs_path = write_temp("ringbal_costs.json", costs);
  CliRun design_run = run({"design", "--instance", path.string(), "--alpha", "1/4",
                           "--costs", costs_path.string(), "--format", "json"});
  REQUIRE(design_run.exit_code == kExitOk);
  Json jd = Json::parse(design_run.out);
  Rational cost = parse_rational(jd["cost"].get<std::string>());
  Rational lp_cost = parse_rational(jd["lp_cost"].get<std::string>());
  CHECK(lp_cost <= cost);

  CliRun bad_alpha = run({"design", "--instance", path.string(), "--alpha", "1",
                          "--costs", costs_path.string()});
  CHECK(bad_alpha.exit_code == kExitInputError);
}

TEST_CASE("reduce then solve round trip") {
  CycleOfCircuits g = testing::random_cycle(4242);
  auto cycle_path = write_temp("ringbal_cycle.json", cycle_to_json(g).dump());
  CliRun reduce_run = run({"reduce", "--input", cycle_path.string()});
  REQUIRE(reduce_run.exit_code == kExitOk);
  Json jr = Json::parse(reduce_run.out);
  RingInstance ring = instance_from_json(jr["ring"]);

  // Ring-side feasibility matches the exhaustive supply-graph check.
  OracleResult opt = brute_force_alpha_opt(ring);
  bool ring_feasible = opt.alpha_opt.has_value() && *opt.alpha_opt <= 1;
  CHECK(ring_feasible == testing::supply_graph_feasible(g));

  auto ring_path = write_temp("ringbal_reduced_ring.json", jr["ring"].dump());
  CliRun solve_run = run({"solve", "--instance", ring_path.string(), "--format", "json"});
  CHECK(solve_run.exit_code == kExitOk);
}

TEST_CASE("help is available") {
  CliRun res = run({"--help"});
  CHECK(res.exit_code == kExitOk);
  CHECK(res.out.find("solve") != std::string::npos);
}
