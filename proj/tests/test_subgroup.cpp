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


#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "whsp/solver.hpp"
#include "whsp/subgroup.hpp"

namespace whsp {
namespace {

GroupElement el(int n, const char* literal) { return GroupElement::parse(n, literal); }

ElementSet set_of(int n, std::initializer_list<const char*> literals) {
  std::vector<GroupElement> elems;
  for (const char* l : literals) elems.push_back(el(n, l));
  return ElementSet::from_elements(n, elems);
}

void expect_subgroup_invariants(const GeneratedSubgroup& u) {
  const int n = u.arity();
  const auto& s = u.elements();
  EXPECT_TRUE(s.contains(GroupElement::identity(n)));
  for (const auto& g : s.elements()) {
    EXPECT_TRUE(s.contains(inverse(g)));
    for (const auto& h : s.elements()) EXPECT_TRUE(s.contains(g * h));
  }
  for (const auto& g : u.generators()) EXPECT_TRUE(u.contains(g));
  EXPECT_EQ(group_size(n) % u.order(), 0u);
}

TEST(Subgroup, ClosureExamples) {
  EXPECT_EQ(closure(1, {}), set_of(1, {"0|0|0"}));
  EXPECT_EQ(closure(1, {GroupElement::swap(1)}), set_of(1, {"0|0|0", "0|0|1"}));
  const auto c = closure(1, {el(1, "0|1|1")});
  EXPECT_TRUE(c.contains(el(1, "1|1|0")));
  EXPECT_EQ(el(1, "0|1|1") * el(1, "0|1|1"), el(1, "1|1|0"));
  EXPECT_EQ(c.size(), 4u);
}

TEST(Subgroup, W1HasTenSubgroups) {
  const auto subs = enumerate_subgroups(1);
  ASSERT_EQ(subs.size(), 10u);
  EXPECT_EQ(subs.front(), GeneratedSubgroup::trivial(1));
  EXPECT_EQ(subs.back(), GeneratedSubgroup::whole_group(1));
  std::map<std::size_t, int> by_order;
  for (const auto& u : subs) {
    expect_subgroup_invariants(u);
    ++by_order[u.order()];
  }
  // Dihedral group of order 8: 1 + 5 + 3 + 1.
  EXPECT_EQ(by_order[1], 1);
  EXPECT_EQ(by_order[2], 5);
  EXPECT_EQ(by_order[4], 3);
  EXPECT_EQ(by_order[8], 1);
}

// Independent count: every subgroup of W1 is generated by at most two elements.
TEST(Subgroup, W1EnumerationMatchesTwoGeneratorClosures) {
  std::set<std::vector<std::uint64_t>> seen;
  for (std::uint64_t i = 0; i < 8; ++i) {
    for (std::uint64_t j = 0; j < 8; ++j) {
      seen.insert(closure(1, {GroupElement::from_index(1, i), GroupElement::from_index(1, j)}).indices());
    }
  }
  EXPECT_EQ(seen.size(), 10u);
}

TEST(Subgroup, W2EnumerationIsClosed) {
  const auto subs = enumerate_subgroups(2);
  std::set<std::vector<std::uint64_t>> distinct;
  for (const auto& u : subs) {
    EXPECT_TRUE(is_subgroup(u.elements()));
    distinct.insert(u.elements().indices());
  }
  EXPECT_EQ(distinct.size(), subs.size());
  EXPECT_THROW(enumerate_subgroups(3), CapacityError);
}

TEST(Subgroup, IntersectionsAndConjugates) {
  EXPECT_EQ(intersect_N(GeneratedSubgroup::whole_group(1)).order(), 4u);
  Rng rng(99);
  for (int k = 0; k < 100; ++k) {
    const auto u = random_subgroup(2, rng);
    EXPECT_EQ(conjugate_t(conjugate_t(u)), u);
    const auto index = u.order() / intersect_N(u).order();
    EXPECT_TRUE(index == 1 || index == 2);
    if (index == 2) { EXPECT_TRUE(is_balanced(intersect_N(u))); }
    EXPECT_EQ(conjugate_t(u).elements(), conjugate_set(u.elements(), GroupElement::swap(2)));
  }
}

TEST(Subgroup, FactorizationExamples) {
  const GeneratedSubgroup in_n(2, {el(2, "10|00|0"), el(2, "01|11|0")});
  const auto f = canonical_factorization(in_n);
  EXPECT_EQ(f.base_part, in_n);
  EXPECT_EQ(f.balanced_part, intersect(in_n, conjugate_t(in_n)));
  for (const auto& u : enumerate_subgroups(1)) {
    const auto fu = canonical_factorization(u);
    EXPECT_EQ(product_set(fu.base_part.elements(), fu.balanced_part.elements()), u.elements());
  }
}

TEST(Subgroup, BalancedExamples) {
  EXPECT_TRUE(is_balanced(intersect_N(GeneratedSubgroup::whole_group(3))));
  const GeneratedSubgroup u(1, {el(1, "1|0|0")});
  EXPECT_EQ(u.elements(), set_of(1, {"0|0|0", "1|0|0"}));
  EXPECT_FALSE(is_balanced(u));
  EXPECT_EQ(conjugate_t(u).elements(), set_of(1, {"0|0|0", "0|1|0"}));
}

TEST(Subgroup, PerpExamples) {
  for (int n : {1, 2}) {
    EXPECT_EQ(perp_bruteforce(n, closure(n, {})), ElementSet::whole_group(n));
  }
  const auto base = intersect_N(GeneratedSubgroup::whole_group(1)).elements();
  EXPECT_EQ(perp_bruteforce(1, base), set_of(1, {"0|0|0", "0|0|1"}));
  EXPECT_EQ(perp_linear(1, base), set_of(1, {"0|0|0", "0|0|1"}));
  EXPECT_EQ(perp_linear(2, ElementSet::whole_group(2)), closure(2, {}));
  EXPECT_THROW(perp_bruteforce(7, closure(7, {})), CapacityError);
}

TEST(Subgroup, PerpRoutesAgree) {
  for (const auto& u : enumerate_subgroups(1)) {
    EXPECT_EQ(perp_linear(1, u.elements()), perp_bruteforce(1, u.elements()));
  }
  Rng rng(4);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 2;
    const auto u = random_subgroup(n, rng);
    const auto p = perp_linear(n, u.elements());
    EXPECT_EQ(p, perp_bruteforce(n, u.elements()));
    EXPECT_EQ(__builtin_popcountll(p.size()), 1);
  }
}

// {(0,0;0),(0,0;1),(0,1;1),(1,0;0)} is not the perp of {(0,0;1),(0,1;0)}:
// mu(t,t) = 1 keeps t out. The enumerated perp is {(0,0;0),(1,0;0)}.
TEST(Subgroup, PerpOfSwapAndBaseElement) {
  const auto s = set_of(1, {"0|0|1", "0|1|0"});
  const auto listed = set_of(1, {"0|0|0", "0|0|1", "0|1|1", "1|0|0"});
  const auto got = perp_bruteforce(1, s);
  EXPECT_EQ(got, set_of(1, {"0|0|0", "1|0|0"}));
  EXPECT_NE(got, listed);
  for (const auto& g : got.elements()) {
    for (const auto& h : s.elements()) EXPECT_FALSE(mu(g, h));
  }
  EXPECT_TRUE(mu(GroupElement::swap(1), GroupElement::swap(1)));
  EXPECT_EQ(el(1, "0|1|1") * el(1, "0|1|1"), el(1, "1|1|0"));
}

TEST(Subgroup, NonBalancedPerpIsNotASubgroup) {
  for (const auto& u : enumerate_subgroups(1)) {
    EXPECT_EQ(is_subgroup(perp_bruteforce(1, u.elements())), is_balanced(u));
  }
}

TEST(Subgroup, SwapInvariantKernelCharacterizesSubgroups) {
  Rng rng(8);
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + k % 3;
    const auto u = random_subgroup(n, rng);
    const auto basis = perp_linear_basis(n, u.elements());
    EXPECT_EQ(swap_invariant(n, basis), is_subgroup(span_elements(n, basis)));
  }
}

TEST(Subgroup, HiddenFunctionExamples) {
  const auto whole = build_hidden_function(GeneratedSubgroup::whole_group(2));
  EXPECT_EQ(whole.label_count(), 1u);
  const auto trivial = build_hidden_function(GeneratedSubgroup::trivial(2));
  EXPECT_EQ(trivial.label_count(), 32u);
  std::set<std::uint32_t> labels(trivial.labels().begin(), trivial.labels().end());
  EXPECT_EQ(labels.size(), 32u);
}

TEST(Subgroup, HiddenFunctionSeparatesLeftCosets) {
  Rng rng(50);
  for (int k = 0; k < 50; ++k) {
    const auto u = random_subgroup(2, rng);
    const auto f = build_hidden_function(u);
    EXPECT_EQ(f.label_count(), group_size(2) / u.order());
    EXPECT_EQ(f(GroupElement::identity(2)), 0u);
    for (std::uint64_t i = 0; i < 32; ++i) {
      const auto g1 = GroupElement::from_index(2, i);
      EXPECT_LT(f(g1), f.label_count());
      for (std::uint64_t j = 0; j < 32; ++j) {
        const auto g2 = GroupElement::from_index(2, j);
        EXPECT_EQ(f(g1) == f(g2), u.contains(inverse(g1) * g2));
      }
    }
  }
}

TEST(Subgroup, RandomSubgroupDeterministicAndVaried) {
  Rng a(123), b(123);
  for (int k = 0; k < 20; ++k) EXPECT_EQ(random_subgroup(3, a), random_subgroup(3, b));
  Rng rng(kDefaultSeed);
  int non_balanced = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto u = random_subgroup(2, rng);
    if (k < 100) expect_subgroup_invariants(u);
    if (!is_balanced(u)) ++non_balanced;
  }
  EXPECT_GT(non_balanced, 0);
}

TEST(Subgroup, FromSetRejectsNonSubgroups) {
  EXPECT_THROW(GeneratedSubgroup::from_set(set_of(1, {"0|0|0", "0|1|1"})), std::invalid_argument);
  const auto u = GeneratedSubgroup::from_set(closure(2, {el(2, "01|10|1")}));
  EXPECT_EQ(u.elements(), closure(2, {el(2, "01|10|1")}));
}

}  // namespace
}  // namespace whsp
