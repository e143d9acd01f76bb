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
// JSON encoding of instances and results. Rationals travel as canonical
// "p/q" strings (bare "p" when the denominator is 1); integers and exact
// decimal strings are accepted on input. Ordered JSON keeps field order
// stable so identical inputs produce byte-identical reports.

#ifndef RINGBAL_IO_HPP
#define RINGBAL_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ringbal/rational.hpp"
#include "ringbal/reduction.hpp"
#include "ringbal/ring.hpp"

namespace ringbal {

using Json = nlohmann::ordered_json;

/// Accepts a JSON integer, "p/q", a decimal string, or an integer string.
/// Floating-point JSON numbers are rejected: write them as strings so the
/// value stays exact.
Rational rational_from_json(const Json& j, const std::string& field);

Json rational_to_json(const Rational& v);

RingInstance instance_from_json(const Json& j);
Json instance_to_json(const RingInstance& inst);

CycleOfCircuits cycle_from_json(const Json& j);
Json cycle_to_json(const CycleOfCircuits& g);

/// Cost file: array of 2n rationals, forward slots then backward slots.
void costs_from_json(const Json& j, int n, std::vector<Rational>& w_forward,
                     std::vector<Rational>& w_backward);

Json reduction_to_json(const ReductionOutput& red);

RingInstance load_instance_file(const std::string& path);
CycleOfCircuits load_cycle_file(const std::string& path);
Json load_json_file(const std::string& path);

}  // namespace ringbal

#endif  // RINGBAL_IO_HPP
