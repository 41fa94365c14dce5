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

#include "whsp/subgroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace whsp {
namespace {

void check_closure_arity(int n) {
  if (n < 1 || n > kMaxClosureArity) {
    throw CapacityError("element sets are limited to 1 <= n <= " +
                        std::to_string(kMaxClosureArity) + ", got n=" +
                        std::to_string(n));
  }
}

void check_same(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("arity mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
  }
}

// Breadth-first product closure over a membership bitmap.
std::vector<std::uint64_t> closure_indices(int n,
                                           const std::vector<std::uint64_t>& gens) {
  std::vector<char> seen(group_size(n), 0);
  std::vector<std::uint64_t> out{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto g : gens) {
      const auto p = multiply_index(n, out[i], g);
      if (!seen[p]) {
        seen[p] = 1;
        out.push_back(p);
      }
    }
  }
  return out;
}

}  // namespace

ElementSet::ElementSet(int n, std::vector<std::uint64_t> indices)
    : n_(n), indices_(std::move(indices)) {
  check_closure_arity(n);
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (!indices_.empty() && (indices_.back() >> index_bits(n)) != 0) {
    throw std::out_of_range("element index out of range for n=" + std::to_string(n));
  }
}

ElementSet ElementSet::from_elements(int n, const std::vector<GroupElement>& elems) {
  std::vector<std::uint64_t> idx;
  idx.reserve(elems.size());
  for (const auto& g : elems) {
    check_same(n, g.arity());
    idx.push_back(g.index());
  }
  return ElementSet(n, std::move(idx));
}

ElementSet ElementSet::whole_group(int n) {
  check_closure_arity(n);
  std::vector<std::uint64_t> idx(group_size(n));
  for (std::uint64_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return ElementSet(n, std::move(idx));
}

std::vector<GroupElement> ElementSet::elements() const {
  std::vector<GroupElement> out;
  out.reserve(indices_.size());
  for (auto i : indices_) out.push_back(GroupElement::from_index(n_, i));
  return out;
}

bool ElementSet::contains(std::uint64_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

ElementSet closure(int n, const std::vector<GroupElement>& generators) {
  check_closure_arity(n);
  std::vector<std::uint64_t> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) {
    check_same(n, g.arity());
    gens.push_back(g.index());
  }
  return ElementSet(n, closure_indices(n, gens));
}

bool is_subgroup(const ElementSet& s) {
  if (!s.contains(std::uint64_t{0})) return false;
  const int n = s.arity();
  for (auto g : s.indices()) {
    for (auto h : s.indices()) {
      if (!s.contains(multiply_index(n, g, h))) return false;
    }
  }
  return true;
}

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  check_same(a.arity(), b.arity());
  std::vector<std::uint64_t> out;
  std::set_intersection(a.indices().begin(), a.indices().end(), b.indices().begin(),
                        b.indices().end(), std::back_inserter(out));
  return ElementSet(a.arity(), std::move(out));
}

ElementSet unite(const ElementSet& a, const ElementSet& b) {
  check_same(a.arity(), b.arity());
  std::vector<std::uint64_t> out;
  std::set_union(a.indices().begin(), a.indices().end(), b.indices().begin(),
                 b.indices().end(), std::back_inserter(out));
  return ElementSet(a.arity(), std::move(out));
}

ElementSet product_set(const ElementSet& a, const ElementSet& b) {
  check_same(a.arity(), b.arity());
  std::vector<std::uint64_t> out;
  out.reserve(a.size() * b.size());
  for (auto g : a.indices()) {
    for (auto h : b.indices()) out.push_back(multiply_index(a.arity(), g, h));
  }
  return ElementSet(a.arity(), std::move(out));
}

ElementSet conjugate_set(const ElementSet& s, const GroupElement& g) {
  check_same(s.arity(), g.arity());
  std::vector<std::uint64_t> out;
  out.reserve(s.size());
  for (const auto& u : s.elements()) out.push_back(conjugate(u, g).index());
  return ElementSet(s.arity(), std::move(out));
}

ElementSet conjugate_t_set(const ElementSet& s) {
  return conjugate_set(s, GroupElement::swap(s.arity()));
}

GeneratedSubgroup::GeneratedSubgroup(int n, std::vector<GroupElement> generators)
    : n_(n), generators_(std::move(generators)), elements_(closure(n, generators_)) {}

GeneratedSubgroup GeneratedSubgroup::from_set(const ElementSet& elements) {
  const int n = elements.arity();
  std::vector<std::uint64_t> gens;
  std::vector<std::uint64_t> current{0};
  std::vector<char> member(group_size(n), 0);
  member[0] = 1;
  for (auto g : elements.indices()) {
    if (member[g]) continue;
    gens.push_back(g);
    current = closure_indices(n, gens);
    for (auto c : current) member[c] = 1;
  }
  ElementSet generated(n, current);
  if (!(generated == elements)) {
    throw std::invalid_argument("element set is not a subgroup");
  }
  std::vector<GroupElement> generators;
  generators.reserve(gens.size());
  for (auto g : gens) generators.push_back(GroupElement::from_index(n, g));
  return GeneratedSubgroup(n, std::move(generators), std::move(generated));
}

GeneratedSubgroup GeneratedSubgroup::whole_group(int n) {
  return from_set(ElementSet::whole_group(n));
}

GeneratedSubgroup intersect_N(const GeneratedSubgroup& u) {
  std::vector<std::uint64_t> out;
  const auto a_bit = std::uint64_t{1} << (2 * u.arity());
  for (auto g : u.elements().indices()) {
    if ((g & a_bit) == 0) out.push_back(g);
  }
  return GeneratedSubgroup::from_set(ElementSet(u.arity(), std::move(out)));
}

GeneratedSubgroup conjugate_t(const GeneratedSubgroup& u) {
  return GeneratedSubgroup::from_set(conjugate_t_set(u.elements()));
}

GeneratedSubgroup intersect(const GeneratedSubgroup& u, const GeneratedSubgroup& v) {
  return GeneratedSubgroup::from_set(intersect(u.elements(), v.elements()));
}

Factorization canonical_factorization(const GeneratedSubgroup& u) {
  return Factorization{intersect_N(u), intersect(u, conjugate_t(u))};
}

bool is_balanced(const GeneratedSubgroup& u) {
  return conjugate_t_set(u.elements()) == u.elements();
}

ElementSet perp_bruteforce(int n, const ElementSet& s) {
  check_same(n, s.arity());
  if (n > kMaxBruteforceArity) {
    throw CapacityError("perp_bruteforce enumerates 2^(2n+1) elements; n <= " +
                        std::to_string(kMaxBruteforceArity) + " required");
  }
  const auto members = s.elements();
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < group_size(n); ++i) {
    const auto g = GroupElement::from_index(n, i);
    const bool orthogonal = std::none_of(members.begin(), members.end(),
                                         [&](const GroupElement& h) { return mu(g, h); });
    if (orthogonal) out.push_back(i);
  }
  return ElementSet(n, std::move(out));
}

std::vector<BitVector> perp_linear_basis(int n, const ElementSet& s) {
  check_same(n, s.arity());
  BitMatrix rows(static_cast<std::size_t>(index_bits(n)));
  for (const auto& g : s.elements()) rows.add_row(phi(g));
  return kernel_basis(rows);
}

ElementSet perp_linear(int n, const ElementSet& s) {
  return span_elements(n, perp_linear_basis(n, s));
}

ElementSet span_elements(int n, const std::vector<BitVector>& basis) {
  check_closure_arity(n);
  std::vector<std::uint64_t> words;
  for (const auto& b : basis) {
    if (b.size() != static_cast<std::size_t>(index_bits(n))) {
      throw std::invalid_argument("span_elements: basis vector of wrong length");
    }
    words.push_back(b.to_word());
  }
  std::vector<std::uint64_t> out{0};
  for (auto w : words) {
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) out.push_back(out[i] ^ w);
  }
  for (auto& v : out) v = phi_inv_word(n, v).index();
  return ElementSet(n, std::move(out));
}

HiddenFunction::HiddenFunction(GeneratedSubgroup u) : subgroup_(std::move(u)) {
  const int n = subgroup_.arity();
  constexpr auto kUnset = ~std::uint32_t{0};
  labels_.assign(group_size(n), kUnset);
  for (std::uint64_t g = 0; g < labels_.size(); ++g) {
    if (labels_[g] != kUnset) continue;
    for (auto h : subgroup_.elements().indices()) {
      labels_[multiply_index(n, g, h)] = label_count_;
    }
    ++label_count_;
  }
}

HiddenFunction build_hidden_function(const GeneratedSubgroup& u) { return HiddenFunction(u); }

std::vector<GeneratedSubgroup> enumerate_subgroups(int n) {
  if (n < 1 || n > 2) {
    throw CapacityError("enumerate_subgroups supports n = 1 or n = 2 only");
  }
  const auto size = group_size(n);
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<GeneratedSubgroup> found;
  found.push_back(GeneratedSubgroup::trivial(n));
  seen.insert(found.front().elements().indices());
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::uint64_t g = 0; g < size; ++g) {
      if (found[i].elements().contains(g)) continue;
      auto gens = found[i].generators();
      gens.push_back(GroupElement::from_index(n, g));
      GeneratedSubgroup bigger(n, std::move(gens));
      if (seen.insert(bigger.elements().indices()).second) {
        found.push_back(std::move(bigger));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements().indices() < b.elements().indices();
  });
  return found;
}

GeneratedSubgroup random_subgroup(int n, Rng& rng) {
  if (n < 1 || n > kMaxBruteforceArity) {
    throw CapacityError("random_subgroup supports 1 <= n <= " +
                        std::to_string(kMaxBruteforceArity));
  }
  std::uniform_int_distribution<int> count(0, index_bits(n));
  std::uniform_int_distribution<std::uint64_t> pick(0, group_size(n) - 1);
  const int k = count(rng);
  std::vector<GroupElement> gens;
  for (int i = 0; i < k; ++i) gens.push_back(GroupElement::from_index(n, pick(rng)));
  return GeneratedSubgroup(n, std::move(gens));
}

}  // namespace whsp
