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

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ringbal/design.hpp"
#include "ringbal/io.hpp"
#include "ringbal/lp.hpp"
#include "ringbal/oracle.hpp"
#include "ringbal/rounding.hpp"
#include "ringbal/scheme.hpp"

namespace ringbal {

namespace {

int oracle_cap_from_env() {
  const char* env = std::getenv("RINGBALANCE_ORACLE_CAP");
  if (!env) return kDefaultOracleCapLog2;
  try {
    int cap = std::stoi(env);
    if (cap < 1) throw std::invalid_argument("cap");
    return cap;
  } catch (...) {
    throw ParseError("RINGBALANCE_ORACLE_CAP must be a positive integer");
  }
}

RingInstance load_validated_instance(const std::string& path) {
  RingInstance inst = load_instance_file(path);
  auto errors = validate_instance(inst);
  if (!errors.empty()) throw ParseError("invalid instance: " + errors.front());
  return inst;
}

Json directions_to_json(const DirectionAssignment& dirs) {
  Json arr = Json::array();
  for (Direction d : dirs)
    arr.push_back(d == Direction::Forward ? "forward" : "backward");
  return arr;
}

Json loads_to_json(const LoadVector& lv) {
  Json j;
  j["forward"] = Json::array();
  for (const Rational& v : lv.forward) j["forward"].push_back(rational_to_json(v));
  j["backward"] = Json::array();
  for (const Rational& v : lv.backward) j["backward"].push_back(rational_to_json(v));
  return j;
}

Json certificate_to_json(const RoutingCertificate& cert, int n) {
  Json j;
  j["alpha_star"] = rational_to_json(cert.alpha_star);
  j["d_max"] = rational_to_json(cert.d_max);
  j["d_split"] = rational_to_json(cert.d_split);
  j["strict_ok"] = cert.strict_ok;
  j["edges"] = Json::array();
  for (const EdgeCertRow& row : cert.rows) {
    Json jr;
    jr["edge"] = edge_name(row.edge, n);
    jr["capacity"] = rational_to_json(row.capacity);
    jr["load"] = rational_to_json(row.load);
    jr["alpha_c"] = rational_to_json(row.alpha_c);
    jr["bound"] = rational_to_json(row.bound);
    jr["slack"] = rational_to_json(row.slack);
    j["edges"].push_back(std::move(jr));
  }
  return j;
}

void print_certificate_text(std::ostream& out, const RoutingCertificate& cert,
                            int n) {
  out << "edge          capacity      load          alpha*c       bound         slack\n";
  for (const EdgeCertRow& row : cert.rows) {
    auto cell = [](const Rational& v) {
      std::string s = format_rational(v);
      if (s.size() < 13) s.resize(13, ' ');
      return s + " ";
    };
    std::string name = edge_name(row.edge, n);
    if (name.size() < 13) name.resize(13, ' ');
    out << name << " " << cell(row.capacity) << cell(row.load)
        << cell(row.alpha_c) << cell(row.bound) << cell(row.slack) << "\n";
  }
}

struct CommonOptions {
  std::string instance_path;
  std::string format = "text";
  bool timings = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--instance", opts.instance_path, "instance JSON file")->required();
  cmd->add_option("--format", opts.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--timings", opts.timings, "include wall-clock timings");
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

int cmd_validate(const CommonOptions& opts, std::ostream& out) {
  RingInstance inst = load_instance_file(opts.instance_path);
  auto errors = validate_instance(inst);
  if (opts.format == "json") {
    Json j;
    j["command"] = "validate";
    j["ok"] = errors.empty();
    j["errors"] = errors;
    out << j.dump(2) << "\n";
  } else {
    if (errors.empty()) {
      out << "ok\n";
    } else {
      for (const auto& e : errors) out << "error: " << e << "\n";
    }
  }
  return errors.empty() ? kExitOk : kExitInputError;
}

int cmd_solve(const CommonOptions& opts, int start_node, std::ostream& out) {
  RingInstance inst = load_validated_instance(opts.instance_path);
  Stopwatch watch;
  BalanceResult res = balance_route(inst, start_node);
  double elapsed = watch.ms();

  if (!res.feasible()) {
    if (opts.format == "json") {
      Json j;
      j["command"] = "solve";
      j["feasible"] = false;
      j["reason"] = "no finite congestion: a zero-capacity edge must carry flow";
      out << j.dump(2) << "\n";
    } else {
      out << "infeasible: no finite congestion exists for this instance\n";
    }
    return kExitInfeasible;
  }

  if (opts.format == "json") {
    Json j;
    j["command"] = "solve";
    j["feasible"] = true;
    j["alpha_star"] = rational_to_json(res.alpha_star);
    j["start_node"] = start_node;
    j["uncross_steps"] = res.uncross.steps;
    j["directions"] = directions_to_json(res.dirs);
    j["loads"] = loads_to_json(res.loads);
    j["certificate"] = certificate_to_json(res.certificate, inst.n);
    if (opts.timings) j["timing_ms"] = elapsed;
    out << j.dump(2) << "\n";
  } else {
    out << "alpha* = " << format_rational(res.alpha_star) << "\n";
    out << "uncross steps: " << res.uncross.steps << "\n";
    out << "directions:";
    for (size_t f = 0; f < res.dirs.size(); ++f)
      out << " " << (res.dirs[f] == Direction::Forward ? "F" : "B");
    out << "\n";
    out << "certificate (load < alpha*c + 3/2 D, D = "
        << format_rational(res.certificate.d_max) << "):\n";
    print_certificate_text(out, res.certificate, inst.n);
    out << (res.certificate.strict_ok ? "certificate holds on every edge\n"
                                      : "certificate VIOLATED\n");
    if (opts.timings) out << "time: " << elapsed << " ms\n";
  }
  return kExitOk;
}

int cmd_oracle(const CommonOptions& opts, std::ostream& out) {
  RingInstance inst = load_validated_instance(opts.instance_path);
  OracleResult res = brute_force_alpha_opt(inst, oracle_cap_from_env());
  if (opts.format == "json") {
    Json j;
    j["command"] = "oracle";
    j["enumerated"] = res.enumerated.str();
    if (res.alpha_opt) {
      j["alpha_opt"] = rational_to_json(*res.alpha_opt);
      j["argmin"] = directions_to_json(res.argmin);
    } else {
      j["alpha_opt"] = "infinite";
    }
    out << j.dump(2) << "\n";
  } else {
    if (res.alpha_opt) {
      out << "alpha_opt = " << format_rational(*res.alpha_opt) << "\n";
      out << "argmin:";
      for (Direction d : res.argmin)
        out << " " << (d == Direction::Forward ? "F" : "B");
      out << "\n";
    } else {
      out << "alpha_opt = infinite (every routing loads a zero-capacity edge)\n";
    }
    out << "routings covered: " << res.enumerated.str() << "\n";
  }
  return res.alpha_opt ? kExitOk : kExitInfeasible;
}

int cmd_scheme(const CommonOptions& opts, const std::string& eps_text,
               int grid_steps, std::ostream& out) {
  RingInstance inst = load_validated_instance(opts.instance_path);
  SchemeParams params;
  params.epsilon = parse_rational(eps_text);
  params.grid_steps = grid_steps;
  if (params.epsilon <= 0) throw ParseError("--epsilon must be positive");
  if (params.grid_steps < 1) throw ParseError("--grid-steps must be at least 1");

  Stopwatch watch;
  SchemeResult res = approximation_scheme(inst, params);
  double elapsed = watch.ms();

  if (!res.feasible) {
    out << (opts.format == "json"
                ? Json{{"command", "scheme"}, {"feasible", false}}.dump(2) + "\n"
                : "infeasible: no finite congestion exists for this instance\n");
    return kExitInfeasible;
  }

  if (opts.format == "json") {
    Json j;
    j["command"] = "scheme";
    j["feasible"] = true;
    j["alpha_star"] = rational_to_json(res.alpha_star);
    j["cbar"] = rational_to_json(res.cbar);
    j["epsilon_effective"] = rational_to_json(res.epsilon_effective);
    j["grid"] = Json::array();
    for (const auto& rep : res.per_alpha) {
      Json jr;
      jr["alpha_prime"] = rational_to_json(rep.alpha_prime);
      jr["big_set"] = rep.big_set;
      jr["candidates"] = rep.candidates_enumerated;
      jr["skipped"] = rep.candidates_skipped;
      if (rep.best) {
        jr["best_score"] = rational_to_json(rep.best->score_alpha);
        jr["best_long_subset"] = rep.best->long_subset;
      }
      j["grid"].push_back(std::move(jr));
    }
    j["selected_grid_index"] = res.selected_grid_index;
    j["selected_score"] = rational_to_json(res.selected_score);
    j["directions"] = directions_to_json(res.selected->dirs);
    j["loads"] = loads_to_json(res.selected->loads);
    j["selected_long_subset"] = res.selected->long_subset;
    if (opts.timings) j["timing_ms"] = elapsed;
    out << j.dump(2) << "\n";
  } else {
    out << "alpha* = " << format_rational(res.alpha_star)
        << ", cbar = " << format_rational(res.cbar) << "\n";
    for (size_t i = 0; i < res.per_alpha.size(); ++i) {
      const auto& rep = res.per_alpha[i];
      out << "alpha_" << i << " = " << format_rational(rep.alpha_prime)
          << ": |E'| = " << rep.big_set.size() << ", candidates "
          << rep.candidates_enumerated << ", skipped " << rep.candidates_skipped
          << "\n";
    }
    out << "selected grid index " << res.selected_grid_index << ", score "
        << format_rational(res.selected_score) << "\n";
    out << "directions:";
    for (Direction d : res.selected->dirs)
      out << " " << (d == Direction::Forward ? "F" : "B");
    out << "\n";
    if (opts.timings) out << "time: " << elapsed << " ms\n";
  }
  return kExitOk;
}

int cmd_design(const CommonOptions& opts, const std::string& alpha_text,
               const std::string& costs_path, int start_node, std::ostream& out) {
  RingInstance inst = load_validated_instance(opts.instance_path);
  Rational alpha_rob = parse_rational(alpha_text);
  std::vector<Rational> w_forward, w_backward;
  costs_from_json(load_json_file(costs_path), inst.n, w_forward, w_backward);
  if (alpha_rob < 0 || alpha_rob >= 1)
    throw ParseError("--alpha must lie in [0,1)");

  DesignResult res = design_route(inst, w_forward, w_backward, alpha_rob, start_node);
  if (opts.format == "json") {
    Json j;
    j["command"] = "design";
    j["alpha"] = rational_to_json(alpha_rob);
    j["cost"] = rational_to_json(res.cost);
    j["lp_cost"] = rational_to_json(res.lp_cost);
    j["lift_overhead"] = rational_to_json(res.lift_overhead);
    j["additive_cost_bound"] = rational_to_json(res.additive_cost_bound);
    Json gamma;
    gamma["forward"] = Json::array();
    for (const Rational& v : res.gamma_forward)
      gamma["forward"].push_back(rational_to_json(v));
    gamma["backward"] = Json::array();
    for (const Rational& v : res.gamma_backward)
      gamma["backward"].push_back(rational_to_json(v));
    j["gamma"] = std::move(gamma);
    j["directions"] = directions_to_json(res.dirs);
    j["loads"] = loads_to_json(res.loads);
    out << j.dump(2) << "\n";
  } else {
    out << "widening cost = " << format_rational(res.cost)
        << " (LP lower bound " << format_rational(res.lp_cost) << ", lift overhead "
        << format_rational(res.lift_overhead) << ")\n";
    out << "worst-case additive cost bound: "
        << format_rational(res.additive_cost_bound) << "\n";
    out << "gamma forward: ";
    for (const Rational& v : res.gamma_forward) out << format_rational(v) << " ";
    out << "\ngamma backward:";
    for (const Rational& v : res.gamma_backward) out << " " << format_rational(v);
    out << "\ndirections:";
    for (Direction d : res.dirs)
      out << " " << (d == Direction::Forward ? "F" : "B");
    out << "\n";
  }
  return kExitOk;
}

int cmd_reduce(const std::string& input_path, const std::string& format,
               std::ostream& out) {
  CycleOfCircuits g = load_cycle_file(input_path);
  auto errors = validate_cycle(g);
  if (!errors.empty())
    throw ParseError("invalid cycle-of-circuits input: " + errors.front());
  ReductionOutput red = reduce_to_ring(g);
  Json body = reduction_to_json(red);
  Json j;
  j["command"] = "reduce";
  for (auto& [key, value] : body.items()) j[key] = value;
  if (format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << "ring: n = " << red.ring.n << "\n";
    out << instance_to_json(red.ring).dump(2) << "\n";
    if (red.infeasible)
      out << "warning: forced paths already exceed some capacities\n";
  }
  return red.infeasible ? kExitInfeasible : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"balanced unsplittable routing on bidirected rings"};
  app.require_subcommand(1);

  CommonOptions solve_opts, oracle_opts, scheme_opts, design_opts, validate_opts;
  int solve_start = 0, design_start = 0;
  std::string eps_text = "1", alpha_text = "0", costs_path, reduce_input;
  std::string reduce_format = "json";
  int grid_steps = 1;

  CLI::App* solve = app.add_subcommand("solve", "LP + uncross + greedy pipeline");
  add_common(solve, solve_opts);
  solve->add_option("--start-node", solve_start, "node where unsplitting starts");

  CLI::App* scheme = app.add_subcommand("scheme", "enumeration approximation scheme");
  add_common(scheme, scheme_opts);
  scheme->add_option("--epsilon", eps_text, "accuracy parameter (rational)")->required();
  scheme->add_option("--grid-steps", grid_steps, "congestion grid refinement N")->required();

  CLI::App* design = app.add_subcommand("design", "minimum-cost capacity widening");
  add_common(design, design_opts);
  design->add_option("--alpha", alpha_text, "robustness factor in [0,1)")->required();
  design->add_option("--costs", costs_path, "JSON array of 2n widening costs")->required();
  design->add_option("--start-node", design_start, "node where unsplitting starts");

  CLI::App* oracle = app.add_subcommand("oracle", "exact optimum by enumeration");
  add_common(oracle, oracle_opts);

  CLI::App* validate = app.add_subcommand("validate", "check instance invariants");
  add_common(validate, validate_opts);

  CLI::App* reduce = app.add_subcommand("reduce", "cycle-of-circuits to ring");
  reduce->add_option("--input", reduce_input, "cycle-of-circuits JSON file")->required();
  reduce->add_option("--format", reduce_format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_opts, solve_start, out);
    if (scheme->parsed()) return cmd_scheme(scheme_opts, eps_text, grid_steps, out);
    if (design->parsed())
      return cmd_design(design_opts, alpha_text, costs_path, design_start, out);
    if (oracle->parsed()) return cmd_oracle(oracle_opts, out);
    if (validate->parsed()) return cmd_validate(validate_opts, out);
    if (reduce->parsed()) return cmd_reduce(reduce_input, reduce_format, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  err << "error: no subcommand given\n";
  return kExitInputError;
}

}  // namespace ringbal
