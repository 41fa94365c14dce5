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

#ifndef WHSP_SUBGROUP_HPP_
#define WHSP_SUBGROUP_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "whsp/f2.hpp"
#include "whsp/wreath.hpp"

namespace whsp {

using Rng = std::mt19937_64;

/// Largest arity for which element sets are materialized.
inline constexpr int kMaxClosureArity = 12;
/// Largest arity for which perp_bruteforce enumerates the whole group.
inline constexpr int kMaxBruteforceArity = 6;

/// A finite set of elements of W_n, stored as sorted unique indices.
class ElementSet {
 public:
  ElementSet(int n, std::vector<std::uint64_t> indices);

  static ElementSet from_elements(int n, const std::vector<GroupElement>& elems);
  static ElementSet whole_group(int n);

  int arity() const { return n_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  const std::vector<std::uint64_t>& indices() const { return indices_; }
  std::vector<GroupElement> elements() const;

  bool contains(std::uint64_t index) const;
  bool contains(const GroupElement& g) const { return contains(g.index()); }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> indices_;
};

/// Smallest subgroup containing `generators`.
ElementSet closure(int n, const std::vector<GroupElement>& generators);

/// True iff the set contains the identity and is closed under multiplication.
bool is_subgroup(const ElementSet& s);

ElementSet intersect(const ElementSet& a, const ElementSet& b);
ElementSet unite(const ElementSet& a, const ElementSet& b);
/// { a b : a in A, b in B }.
ElementSet product_set(const ElementSet& a, const ElementSet& b);
/// { g^-1 s g : s in S }.
ElementSet conjugate_set(const ElementSet& s, const GroupElement& g);
ElementSet conjugate_t_set(const ElementSet& s);

/// A subgroup given by generators, with its element set materialized at
/// construction. Equality compares element sets.
class GeneratedSubgroup {
 public:
  GeneratedSubgroup(int n, std::vector<GroupElement> generators);

  /// Builds from an element set that must already be a subgroup; a small
  /// generating set is recomputed greedily.
  static GeneratedSubgroup from_set(const ElementSet& elements);
  static GeneratedSubgroup trivial(int n) { return GeneratedSubgroup(n, {}); }
  static GeneratedSubgroup whole_group(int n);

  int arity() const { return n_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  const ElementSet& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const GroupElement& g) const { return elements_.contains(g); }

  friend bool operator==(const GeneratedSubgroup& a, const GeneratedSubgroup& b) {
    return a.elements_ == b.elements_;
  }

 private:
  GeneratedSubgroup(int n, std::vector<GroupElement> generators, ElementSet elements)
      : n_(n), generators_(std::move(generators)), elements_(std::move(elements)) {}

  int n_;
  std::vector<GroupElement> generators_;
  ElementSet elements_;
};

GeneratedSubgroup intersect_N(const GeneratedSubgroup& u);
GeneratedSubgroup conjugate_t(const GeneratedSubgroup& u);
GeneratedSubgroup intersect(const GeneratedSubgroup& u, const GeneratedSubgroup& v);

struct Factorization {
  GeneratedSubgroup base_part;     // U ∩ N
  GeneratedSubgroup balanced_part; // U ∩ U^t
};

/// Splits U into U ∩ N and U ∩ U^t; their setwise product is U.
Factorization canonical_factorization(const GeneratedSubgroup& u);

/// U = U^t, with t = (0,0;1).
bool is_balanced(const GeneratedSubgroup& u);

/// All g in W_n with mu(g, s) = 0 for every s in S, by enumerating W_n.
/// Throws CapacityError for n > kMaxBruteforceArity.
ElementSet perp_bruteforce(int n, const ElementSet& s);

/// Reduced basis of the kernel of the matrix whose rows are phi(s), s in S.
std::vector<BitVector> perp_linear_basis(int n, const ElementSet& s);

/// phi^-1 of the kernel of the rows phi(s); always equals perp_bruteforce.
ElementSet perp_linear(int n, const ElementSet& s);

/// phi^-1 of the F_2 span of `basis` (vectors of length 2n+1).
ElementSet span_elements(int n, const std::vector<BitVector>& basis);

/// Total map W_n -> labels, constant on each left coset gU and distinct
/// across cosets. The coset U itself carries label 0.
class HiddenFunction {
 public:
  explicit HiddenFunction(GeneratedSubgroup u);

  int arity() const { return subgroup_.arity(); }
  std::uint32_t label_count() const { return label_count_; }
  std::uint32_t operator()(const GroupElement& g) const { return labels_[g.index()]; }
  std::uint32_t at(std::uint64_t index) const { return labels_[index]; }
  const std::vector<std::uint32_t>& labels() const { return labels_; }
  /// The planted subgroup; kept for assertions, never read by the solver.
  const GeneratedSubgroup& subgroup() const { return subgroup_; }

 private:
  GeneratedSubgroup subgroup_;
  std::vector<std::uint32_t> labels_;
  std::uint32_t label_count_ = 0;
};

HiddenFunction build_hidden_function(const GeneratedSubgroup& u);

/// Every subgroup of W_n, deduplicated, sorted by (order, elements).
/// Only n = 1 and n = 2 are supported.
std::vector<GeneratedSubgroup> enumerate_subgroups(int n);

/// Closure of k uniformly random elements, k uniform in {0, ..., 2n+1}.
GeneratedSubgroup random_subgroup(int n, Rng& rng);

}  // namespace whsp

#endif  // WHSP_SUBGROUP_HPP_
