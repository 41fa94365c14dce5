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

#include "whsp/properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "whsp/qft.hpp"
#include "whsp/solver.hpp"

namespace whsp {
namespace {

constexpr double kTol = 1e-10;

// Runs `check` per subgroup; a non-empty return value is the failure detail.
PropertyResult per_subgroup(std::string name, std::span<const GeneratedSubgroup> corpus,
                            const std::function<std::optional<Json>(const GeneratedSubgroup&)>& check) {
  PropertyResult r;
  r.name = std::move(name);
  for (const auto& u : corpus) {
    ++r.checked;
    auto detail = check(u);
    if (!detail) {
      ++r.passed;
    } else if (!r.counterexample) {
      r.counterexample = Json{{"property", r.name}, {"subgroup", subgroup_to_json(u)},
                              {"detail", std::move(*detail)}};
    }
  }
  return r;
}

Json set_to_json(const ElementSet& s) { return element_list_to_json(s.elements()); }

bool subset(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.indices().begin(), b.indices().end(), a.indices().begin(),
                       a.indices().end());
}

ElementSet perp(const GeneratedSubgroup& u) { return perp_bruteforce(u.arity(), u.elements()); }

ElementSet perp_of_conjugate(const GeneratedSubgroup& u) {
  return perp_bruteforce(u.arity(), conjugate_t_set(u.elements()));
}

// Returns a failure detail unless `state` is uniform in magnitude on
// `support`, vanishes elsewhere, and (optionally) has real +-1 phases.
std::optional<Json> check_uniform_on(const StateVector& state, const ElementSet& support,
                                     bool real_phases) {
  const double expected = 1.0 / std::sqrt(static_cast<double>(support.size()));
  for (std::uint64_t i = 0; i < state.dimension(); ++i) {
    const auto a = state[i];
    const bool in = support.contains(i);
    const double want = in ? expected : 0.0;
    if (std::abs(std::abs(a) - want) > kTol) {
      return Json{{"index", i}, {"magnitude", std::abs(a)}, {"expected", want}};
    }
    if (in && real_phases && std::abs(a.imag()) > kTol) {
      return Json{{"index", i}, {"imag", a.imag()}};
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<GeneratedSubgroup> property_corpus(int n, int random_count, std::uint64_t seed) {
  if (n == 1) return enumerate_subgroups(1);
  std::vector<GeneratedSubgroup> out;
  Rng rng(seed);
  for (int i = 0; i < random_count; ++i) out.push_back(random_subgroup(n, rng));
  return out;
}

PropertyResult check_factorization(std::span<const GeneratedSubgroup> corpus) {
  return per_subgroup("lemma1.factorization", corpus, [](const GeneratedSubgroup& u) -> std::optional<Json> {
    const auto f = canonical_factorization(u);
    const auto product = product_set(f.base_part.elements(), f.balanced_part.elements());
    if (product == u.elements()) return std::nullopt;
    return Json{{"product", set_to_json(product)}};
  });
}

PropertyResult check_character_sums(std::span<const GeneratedSubgroup> corpus) {
  return per_subgroup("perp.character_sum", corpus, [](const GeneratedSubgroup& u) -> std::optional<Json> {
    const int n = u.arity();
    const auto p = perp(u);
    for (std::uint64_t y = 0; y < group_size(n); ++y) {
      long sum = 0;
      for (auto x : u.elements().indices()) sum += mu_index(n, x, y) ? -1 : 1;
      const long want = p.contains(y) ? static_cast<long>(u.order()) : 0;
      if (sum != want) {
        return Json{{"y", GroupElement::from_index(n, y).to_string()}, {"sum", sum}, {"expected", want}};
      }
    }
    return std::nullopt;
  });
}

PropertyResult check_perp_routes(std::span<const GeneratedSubgroup> corpus) {
  return per_subgroup("perp.linear_equals_bruteforce", corpus, [](const GeneratedSubgroup& u) -> std::optional<Json> {
    const auto lin = perp_linear(u.arity(), u.elements());
    const auto brute = perp(u);
    if (lin == brute) return std::nullopt;
    return Json{{"linear", set_to_json(lin)}, {"bruteforce", set_to_json(brute)}};
  });
}

PropertyResult check_halves(std::span<const GeneratedSubgroup> corpus) {
  return per_subgroup("halves", corpus, [](const GeneratedSubgroup& u) -> std::optional<Json> {
    const auto p = perp(u);
    const auto in_base = std::count_if(p.indices().begin(), p.indices().end(), [&](auto i) {
      return GroupElement::from_index(u.arity(), i).in_base_group();
    });
    const auto total = static_cast<long>(p.size());
    if (in_base == total || 2 * in_base == total) return std::nullopt;
    return Json{{"perp_size", total}, {"in_N", in_base}};
  });
}

PropertyResult check_balancedness(std::span<const GeneratedSubgroup> corpus) {
  return per_subgroup("balanced.iff_perp_subgroup", corpus, [](const GeneratedSubgroup& u) -> std::optional<Json> {
    const bool balanced = is_balanced(u);
    const bool perp_is_group = is_subgroup(perp(u));
    if (balanced == perp_is_group) return std::nullopt;
    return Json{{"balanced", balanced}, {"perp_is_subgroup", perp_is_group}};
  });
}

PropertyResult check_perp_conjugation(std::span<const GeneratedSubgroup> corpus) {
  return per_subgroup("corollary.a", corpus, [](const GeneratedSubgroup& u) -> std::optional<Json> {
    const auto lhs = perp_of_conjugate(u);
    const auto rhs = conjugate_t_set(perp(u));
    if (lhs == rhs) return std::nullopt;
    return Json{{"perp_of_Ut", set_to_json(lhs)}, {"perp_U_conjugated", set_to_json(rhs)}};
  });
}

PropertyResult check_perp_of_intersection(std::span<const GeneratedSubgroup> corpus) {
  return per_subgroup("corollary.b", corpus, [](const GeneratedSubgroup& u) -> std::optional<Json> {
    const int n = u.arity();
    const auto inter = intersect(u.elements(), conjugate_t_set(u.elements()));
    const auto lhs = perp_bruteforce(n, inter);
    const auto rhs = closure(n, unite(perp(u), perp_of_conjugate(u)).elements());
    if (lhs == rhs) return std::nullopt;
    return Json{{"perp_of_intersection", set_to_json(lhs)}, {"generated", set_to_json(rhs)}};
  });
}

PropertyResult check_galois(std::span<const GeneratedSubgroup> corpus) {
  PropertyResult r;
  r.name = "corollary.galois";
  std::vector<std::pair<const GeneratedSubgroup*, ElementSet>> balanced;
  for (const auto& u : corpus) {
    if (!is_balanced(u)) continue;
    ++r.checked;
    auto p = perp(u);
    const bool p_group = is_subgroup(p);
    const bool p_balanced = conjugate_t_set(p) == p;
    const auto pp = perp_bruteforce(u.arity(), p);
    if (p_group && p_balanced && pp == u.elements()) {
      ++r.passed;
    } else if (!r.counterexample) {
      r.counterexample = Json{{"property", r.name}, {"subgroup", subgroup_to_json(u)},
                              {"detail", {{"perp_is_subgroup", p_group},
                                          {"perp_balanced", p_balanced},
                                          {"perp_perp", set_to_json(pp)}}}};
    }
    balanced.emplace_back(&u, std::move(p));
  }
  // Inclusion reversal over every ordered pair of balanced subgroups.
  for (const auto& [u, pu] : balanced) {
    for (const auto& [v, pv] : balanced) {
      if (!subset(v->elements(), u->elements())) continue;
      ++r.checked;
      if (subset(pu, pv)) {
        ++r.passed;
      } else if (!r.counterexample) {
        r.counterexample = Json{{"property", r.name},
                                {"larger", subgroup_to_json(*u)},
                                {"smaller", subgroup_to_json(*v)},
                                {"detail", "perp does not reverse inclusion"}};
      }
    }
  }
  return r;
}

PropertyResult check_qft_constructions(int n) {
  PropertyResult r;
  r.name = "qft.three_way";
  const auto circuit = circuit_to_matrix(qft_circuit(n).circuit);
  const auto block = qft_matrix_block(n);
  const auto entry = qft_matrix_entrywise(n);

  // phi-permuted normalized Hadamard transform on 2n+1 qubits.
  const auto dim = group_size(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  ComplexMatrix permuted(dim);
  for (std::uint64_t g = 0; g < dim; ++g) {
    const auto pg = phi_word(GroupElement::from_index(n, g));
    for (std::uint64_t h = 0; h < dim; ++h) {
      const auto ph = phi_word(GroupElement::from_index(n, h));
      permuted(g, h) = (__builtin_popcountll(pg & ph) & 1) ? -scale : scale;
    }
  }

  const std::pair<const char*, double> checks[] = {
      {"circuit_vs_block", max_abs_diff(circuit, block)},
      {"block_vs_entrywise", max_abs_diff(block, entry)},
      {"circuit_vs_entrywise", max_abs_diff(circuit, entry)},
      {"permuted_hadamard_vs_entrywise", max_abs_diff(permuted, entry)},
      {"circuit_unitary", unitarity_defect(circuit)},
      {"block_unitary", unitarity_defect(block)},
      {"entrywise_unitary", unitarity_defect(entry)},
  };
  for (const auto& [what, dev] : checks) {
    ++r.checked;
    if (dev <= kTol) {
      ++r.passed;
    } else if (!r.counterexample) {
      r.counterexample = Json{{"property", r.name}, {"n", n}, {"check", what}, {"deviation", dev}};
    }
  }
  return r;
}

PropertyResult check_fourier_support(std::span<const GeneratedSubgroup> corpus) {
  return per_subgroup("theorem6.support", corpus, [](const GeneratedSubgroup& u) {
    const auto out = fourier_transform(u.arity(), uniform_superposition(u.elements()));
    return check_uniform_on(out, perp(u), false);
  });
}

PropertyResult check_coset_support(std::span<const GeneratedSubgroup> corpus,
                                   std::uint64_t seed) {
  PropertyResult r;
  r.name = "coset.support";
  Rng rng(seed);
  for (const auto& u : corpus) {
    const int n = u.arity();
    std::uniform_int_distribution<std::uint64_t> pick(0, (group_size(n) >> 1) - 1);
    const auto in_n = GroupElement::from_index(n, pick(rng));
    const auto out_n = GroupElement::from_index(n, pick(rng) | (std::uint64_t{1} << (2 * n)));
    for (const auto& g0 : {in_n, out_n}) {
      ++r.checked;
      const auto coset = product_set(ElementSet::from_elements(n, {g0}), u.elements());
      const auto out = fourier_transform(n, uniform_superposition(coset));
      const auto support = g0.in_base_group() ? perp(u) : perp_of_conjugate(u);
      auto detail = check_uniform_on(out, support, true);
      if (!detail) {
        ++r.passed;
      } else if (!r.counterexample) {
        r.counterexample = Json{{"property", r.name}, {"subgroup", subgroup_to_json(u)},
                                {"g0", g0.to_string()}, {"detail", std::move(*detail)}};
      }
    }
  }
  return r;
}

std::vector<PropertyResult> run_suite(std::string_view suite, int n, int random_count,
                                      std::uint64_t seed) {
  if (suite == "all") {
    std::vector<PropertyResult> all;
    for (auto name : kSuiteNames) {
      auto part = run_suite(name, n, random_count, seed);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (std::find(std::begin(kSuiteNames), std::end(kSuiteNames), suite) == std::end(kSuiteNames)) {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  if (suite == "qft") return {check_qft_constructions(n)};

  const auto corpus = property_corpus(n, random_count, seed);
  if (suite == "lemma1") return {check_factorization(corpus)};
  if (suite == "perp") return {check_character_sums(corpus), check_perp_routes(corpus)};
  if (suite == "halves") return {check_halves(corpus)};
  if (suite == "balanced") return {check_balancedness(corpus)};
  if (suite == "corollary") {
    return {check_perp_conjugation(corpus), check_perp_of_intersection(corpus), check_galois(corpus)};
  }
  if (suite == "theorem6") return {check_fourier_support(corpus)};
  return {check_coset_support(corpus, derive_seed(seed, 1))};
}

}  // namespace whsp
