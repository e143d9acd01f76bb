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

#include "ringbal/io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace ringbal {

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer())
    return Rational(static_cast<long long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float())
    throw ParseError(field + ": floating-point values are not exact; write \"" +
                     j.dump() + "\" as a string");
  throw ParseError(field + ": expected an integer or a rational string, got " + j.dump());
}

Json rational_to_json(const Rational& v) { return Json(format_rational(v)); }

namespace {

int int_field(const Json& j, const std::string& field) {
  if (!j.contains(field) || !j.at(field).is_number_integer())
    throw ParseError("missing or non-integer field \"" + field + "\"");
  return j.at(field).get<int>();
}

std::vector<Rational> rational_array(const Json& j, const std::string& field) {
  if (!j.contains(field) || !j.at(field).is_array())
    throw ParseError("missing or non-array field \"" + field + "\"");
  std::vector<Rational> out;
  size_t i = 0;
  for (const auto& item : j.at(field)) {
    out.push_back(rational_from_json(item, field + "[" + std::to_string(i) + "]"));
    ++i;
  }
  return out;
}

}  // namespace

RingInstance instance_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  RingInstance inst;
  inst.n = int_field(j, "n");
  inst.cap_forward = rational_array(j, "cap_forward");
  inst.cap_backward = rational_array(j, "cap_backward");
  if (!j.contains("demands") || !j.at("demands").is_array())
    throw ParseError("missing or non-array field \"demands\"");
  size_t f = 0;
  for (const auto& d : j.at("demands")) {
    std::string where = "demands[" + std::to_string(f) + "]";
    if (!d.is_object()) throw ParseError(where + " must be an object");
    Demand dem;
    dem.source = int_field(d, "from");
    dem.target = int_field(d, "to");
    dem.value = rational_from_json(d.contains("value") ? d.at("value") : Json(),
                                   where + ".value");
    inst.demands.push_back(std::move(dem));
    ++f;
  }
  return inst;
}

Json instance_to_json(const RingInstance& inst) {
  Json j;
  j["n"] = inst.n;
  j["cap_forward"] = Json::array();
  for (const Rational& c : inst.cap_forward) j["cap_forward"].push_back(rational_to_json(c));
  j["cap_backward"] = Json::array();
  for (const Rational& c : inst.cap_backward) j["cap_backward"].push_back(rational_to_json(c));
  j["demands"] = Json::array();
  for (const Demand& d : inst.demands) {
    Json jd;
    jd["from"] = d.source;
    jd["to"] = d.target;
    jd["value"] = rational_to_json(d.value);
    j["demands"].push_back(std::move(jd));
  }
  return j;
}

CycleOfCircuits cycle_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("cycle-of-circuits input must be a JSON object");
  if (!j.contains("circuits") || !j.at("circuits").is_array())
    throw ParseError("missing or non-array field \"circuits\"");
  CycleOfCircuits g;
  size_t ci = 0;
  for (const auto& circuit : j.at("circuits")) {
    std::string where = "circuits[" + std::to_string(ci) + "]";
    if (!circuit.is_array()) throw ParseError(where + " must be an array of edges");
    std::vector<CircuitEdge> edges;
    size_t ei = 0;
    for (const auto& e : circuit) {
      std::string ewhere = where + "[" + std::to_string(ei) + "]";
      if (!e.is_object()) throw ParseError(ewhere + " must be an edge object");
      CircuitEdge edge;
      edge.from = int_field(e, "from");
      edge.to = int_field(e, "to");
      edge.capacity =
          rational_from_json(e.contains("cap") ? e.at("cap") : Json(), ewhere + ".cap");
      edges.push_back(std::move(edge));
      ++ei;
    }
    g.circuits.push_back(std::move(edges));
    ++ci;
  }
  if (j.contains("demands")) {
    if (!j.at("demands").is_array()) throw ParseError("\"demands\" must be an array");
    size_t f = 0;
    for (const auto& d : j.at("demands")) {
      std::string where = "demands[" + std::to_string(f) + "]";
      Demand dem;
      dem.source = int_field(d, "from");
      dem.target = int_field(d, "to");
      dem.value = rational_from_json(d.contains("value") ? d.at("value") : Json(),
                                     where + ".value");
      g.demands.push_back(std::move(dem));
      ++f;
    }
  }
  return g;
}

Json cycle_to_json(const CycleOfCircuits& g) {
  Json j;
  j["circuits"] = Json::array();
  for (const auto& circuit : g.circuits) {
    Json jc = Json::array();
    for (const CircuitEdge& e : circuit) {
      Json je;
      je["from"] = e.from;
      je["to"] = e.to;
      je["cap"] = rational_to_json(e.capacity);
      jc.push_back(std::move(je));
    }
    j["circuits"].push_back(std::move(jc));
  }
  j["demands"] = Json::array();
  for (const Demand& d : g.demands) {
    Json jd;
    jd["from"] = d.source;
    jd["to"] = d.target;
    jd["value"] = rational_to_json(d.value);
    j["demands"].push_back(std::move(jd));
  }
  return j;
}

void costs_from_json(const Json& j, int n, std::vector<Rational>& w_forward,
                     std::vector<Rational>& w_backward) {
  if (!j.is_array() || static_cast<int>(j.size()) != 2 * n)
    throw ParseError("cost file must be an array of exactly 2n rationals "
                     "(forward slots then backward slots)");
  w_forward.clear();
  w_backward.clear();
  for (int i = 0; i < n; ++i)
    w_forward.push_back(rational_from_json(j[i], "costs[" + std::to_string(i) + "]"));
  for (int i = n; i < 2 * n; ++i)
    w_backward.push_back(rational_from_json(j[i], "costs[" + std::to_string(i) + "]"));
}

Json reduction_to_json(const ReductionOutput& red) {
  Json j;
  j["infeasible"] = red.infeasible;
  j["ring"] = instance_to_json(red.ring);
  j["common_nodes"] = red.common_nodes;
  Json mapping = Json::array();
  for (const DemandMapEntry& entry : red.mapping) {
    Json je;
    if (entry.kind == DemandMapEntry::Kind::Dropped) {
      je["status"] = "dropped";
      je["path"] = entry.fixed_path_edges;
    } else {
      je["status"] = "mapped";
      je["ring_demand"] = entry.ring_demand_index;
      je["prefix"] = entry.prefix_edges;
      je["suffix"] = entry.suffix_edges;
    }
    mapping.push_back(std::move(je));
  }
  j["mapping"] = std::move(mapping);
  Json edges = Json::array();
  for (size_t e = 0; e < red.flat_edges.size(); ++e) {
    Json je;
    je["id"] = static_cast<int>(e);
    je["from"] = red.flat_edges[e].from;
    je["to"] = red.flat_edges[e].to;
    je["cap"] = rational_to_json(red.flat_edges[e].capacity);
    je["decrement"] = rational_to_json(red.decrements[e]);
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  if (red.infeasible) j["negative_edges"] = red.negative_edges;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError("malformed JSON in " + path + ": " + err.what());
  }
  return j;
}

RingInstance load_instance_file(const std::string& path) {
  return instance_from_json(load_json_file(path));
}

CycleOfCircuits load_cycle_file(const std::string& path) {
  return cycle_from_json(load_json_file(path));
}

}  // namespace ringbal
