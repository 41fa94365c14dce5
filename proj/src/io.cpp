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

#include "whsp/io.hpp"

#include <stdexcept>

namespace whsp {

std::vector<GroupElement> parse_element_list(int n, std::string_view text) {
  std::vector<GroupElement> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw ParseError("empty entry in element list");
    out.push_back(GroupElement::parse(n, item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Json element_list_to_json(const std::vector<GroupElement>& elems) {
  Json arr = Json::array();
  for (const auto& g : elems) arr.push_back(g.to_string());
  return arr;
}

Json subgroup_to_json(const GeneratedSubgroup& u) {
  return Json{{"n", u.arity()}, {"generators", element_list_to_json(u.generators())}};
}

GeneratedSubgroup subgroup_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<GroupElement> gens;
  for (const auto& lit : j.at("generators")) {
    gens.push_back(GroupElement::parse(n, lit.get<std::string>()));
  }
  return GeneratedSubgroup(n, std::move(gens));
}

Json hidden_function_to_json(const HiddenFunction& f) { return Json(f.labels()); }

Json circuit_to_json(const Circuit& c) {
  Json gates = Json::array();
  for (const auto& g : c.gates()) {
    Json jg{{"kind", std::string(gate_kind_name(g.kind))}};
    if (!g.controls.empty()) jg["controls"] = g.controls;
    jg["targets"] = g.targets;
    if (g.table) jg["table"] = *g.table;
    gates.push_back(std::move(jg));
  }
  return Json{{"qubits", c.qubit_count()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const Json& j) {
  Circuit c(j.at("qubits").get<int>());
  for (const auto& jg : j.at("gates")) {
    Gate g{parse_gate_kind(jg.at("kind").get<std::string>()), {}, {}, nullptr};
    if (jg.contains("controls")) g.controls = jg["controls"].get<std::vector<int>>();
    g.targets = jg.at("targets").get<std::vector<int>>();
    if (jg.contains("table")) {
      g.table = std::make_shared<const std::vector<std::uint64_t>>(
          jg["table"].get<std::vector<std::uint64_t>>());
    }
    c.add(std::move(g));
  }
  return c;
}

Json sign_matrix_to_json(int n) {
  return Json{{"n", n},
              {"scale", "1/sqrt(" + std::to_string(group_size(n)) + ")"},
              {"rows", qft_sign_matrix(n)}};
}

Json report_to_json(const SolveReport& r) {
  Json transcript = Json::array();
  for (const auto& s : r.transcript) {
    Json js{{"round", s.round}, {"element", s.element.to_string()}};
    if (s.coset_label) js["coset_label"] = *s.coset_label;
    transcript.push_back(std::move(js));
  }
  return Json{{"n", r.n},
              {"verified", r.verified},
              {"generators", element_list_to_json(r.generators)},
              {"base_generators", element_list_to_json(r.base_generators)},
              {"intersection_generators", element_list_to_json(r.intersection_generators)},
              {"rounds_used", r.rounds_used},
              {"base_rounds_used", r.base_rounds_used},
              {"transcript", std::move(transcript)}};
}

Json sweep_row_to_json(const SweepRow& row) {
  return Json{{"i", row.i},
              {"trials", row.trials},
              {"successes", row.successes},
              {"bound", row.bound},
              {"rate", row.rate()}};
}

Json gate_count_row_to_json(const GateCountRow& row) {
  return Json{{"n", row.n},
              {"hadamards", row.hadamards},
              {"toffolis", row.toffolis},
              {"total", row.total}};
}

}  // namespace whsp
