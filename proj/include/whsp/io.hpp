// Copyright 2026 The whsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WHSP_IO_HPP_
#define WHSP_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "whsp/qft.hpp"
#include "whsp/solver.hpp"
#include "whsp/subgroup.hpp"

namespace whsp {

using Json = nlohmann::json;

/// Comma-separated element literals; empty entries are rejected.
std::vector<GroupElement> parse_element_list(int n, std::string_view text);

Json element_list_to_json(const std::vector<GroupElement>& elems);

/// {"n": n, "generators": ["x|y|a", ...]}
Json subgroup_to_json(const GeneratedSubgroup& u);
GeneratedSubgroup subgroup_from_json(const Json& j);

/// Label array indexed by group index.
Json hidden_function_to_json(const HiddenFunction& f);

/// {"qubits": q, "gates": [{"kind": "H", "targets": [0]}, ...]}; ORACLE_XOR
/// adds "table" as an integer array.
Json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

/// {"n": n, "scale": "1/sqrt(D)", "rows": [[1, -1, ...], ...]}
Json sign_matrix_to_json(int n);

/// {"n", "verified", "generators", "rounds_used", "transcript", ...}
Json report_to_json(const SolveReport& r);

/// {"i", "trials", "successes", "bound"}; "rate" is included for reading.
Json sweep_row_to_json(const SweepRow& row);

Json gate_count_row_to_json(const GateCountRow& row);

}  // namespace whsp

#endif  // WHSP_IO_HPP_
