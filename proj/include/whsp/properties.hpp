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

// Brute-force checks of the structural facts the solver relies on. Every
// check compares against enumeration over W_n (perp_bruteforce, closure,
// explicit products), never against the linear-algebra fast paths.

#ifndef WHSP_PROPERTIES_HPP_
#define WHSP_PROPERTIES_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "whsp/io.hpp"
#include "whsp/subgroup.hpp"

namespace whsp {

struct PropertyResult {
  std::string name;
  int checked = 0;
  int passed = 0;
  /// First failing case, serialized.
  std::optional<Json> counterexample;

  bool ok() const { return passed == checked; }
};

/// n = 1: all ten subgroups. Otherwise `random_count` seeded random subgroups.
std::vector<GeneratedSubgroup> property_corpus(int n, int random_count, std::uint64_t seed);

/// (U ∩ N)(U ∩ U^t) = U.
PropertyResult check_factorization(std::span<const GeneratedSubgroup> corpus);
/// Sum over x in U of (-1)^mu(x,y) is |U| on U^perp and 0 elsewhere.
PropertyResult check_character_sums(std::span<const GeneratedSubgroup> corpus);
/// perp_linear = perp_bruteforce.
PropertyResult check_perp_routes(std::span<const GeneratedSubgroup> corpus);
/// A perp containing an element outside N has exactly half its elements in N.
PropertyResult check_halves(std::span<const GeneratedSubgroup> corpus);
/// U = U^t iff U^perp is a subgroup.
PropertyResult check_balancedness(std::span<const GeneratedSubgroup> corpus);
/// (U^t)^perp = (U^perp)^t.
PropertyResult check_perp_conjugation(std::span<const GeneratedSubgroup> corpus);
/// (U ∩ U^t)^perp = <U^perp, (U^t)^perp>.
PropertyResult check_perp_of_intersection(std::span<const GeneratedSubgroup> corpus);
/// On balanced subgroups: perp is an inclusion-reversing involution onto
/// balanced subgroups.
PropertyResult check_galois(std::span<const GeneratedSubgroup> corpus);
/// Circuit, block-product and entrywise matrices agree and are unitary;
/// the entrywise matrix is the phi-permuted Hadamard transform.
PropertyResult check_qft_constructions(int n);
/// The transform of the uniform state on U is uniform on U^perp.
PropertyResult check_fourier_support(std::span<const GeneratedSubgroup> corpus);
/// The transform of a uniform coset state g U is supported on U^perp
/// (g in N) or (U^t)^perp (g outside N), with uniform magnitudes and real
/// +-1 relative phases.
PropertyResult check_coset_support(std::span<const GeneratedSubgroup> corpus, std::uint64_t seed);

inline constexpr std::string_view kSuiteNames[] = {
    "lemma1", "perp", "halves", "balanced", "corollary", "qft", "theorem6", "coset"};

/// Runs one named suite (or "all"). Throws std::invalid_argument for an
/// unknown name.
std::vector<PropertyResult> run_suite(std::string_view suite, int n, int random_count,
                                      std::uint64_t seed);

}  // namespace whsp

#endif  // WHSP_PROPERTIES_HPP_
