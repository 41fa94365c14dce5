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

#include <cmath>
#include <map>

#include "whsp/solver.hpp"

namespace whsp {
namespace {

// Upper quantile of chi-square(dof) at z standard deviations (Wilson-Hilferty).
double chi2_quantile(int dof, double z = 3.72) {
  const double k = dof;
  const double c = 2.0 / (9.0 * k);
  return k * std::pow(1.0 - c + z * std::sqrt(c), 3);
}

// Labels x by its coset x + V, V spanned by `basis` (words).
std::vector<std::uint64_t> subspace_oracle(int m, const std::vector<std::uint64_t>& basis) {
  std::vector<std::uint64_t> span{0};
  for (auto b : basis) {
    const auto sz = span.size();
    for (std::size_t i = 0; i < sz; ++i) span.push_back(span[i] ^ b);
  }
  std::vector<std::uint64_t> table(std::size_t{1} << m);
  std::map<std::uint64_t, std::uint64_t> ids;
  for (std::uint64_t x = 0; x < table.size(); ++x) {
    std::uint64_t rep = x;
    for (auto v : span) rep = std::min(rep, x ^ v);
    table[x] = ids.emplace(rep, ids.size()).first->second;
  }
  return table;
}

std::vector<BitVector> words_to_vectors(int m, const std::vector<std::uint64_t>& words) {
  std::vector<BitVector> out;
  for (auto w : words) out.push_back(BitVector::from_word(w, m));
  return out;
}

TEST(AbelianHsp, Extremes) {
  Rng rng(1);
  const int m = 5;
  const std::vector<std::uint64_t> constant(32, 0);
  const auto full = abelian_hsp(m, constant, 6, rng);
  for (const auto& o : full.outcomes) EXPECT_TRUE(o.is_zero());
  EXPECT_EQ(full.basis.size(), 5u);
  EXPECT_TRUE(full.stabilized);

  std::vector<std::uint64_t> injective(32);
  for (std::uint64_t i = 0; i < 32; ++i) injective[i] = i;
  const auto none = abelian_hsp(m, injective, m + 8, rng);
  EXPECT_TRUE(none.basis.empty());
  EXPECT_TRUE(none.stabilized);
}

TEST(AbelianHsp, PlantedPlaneInF2To4) {
  // 1100 and 0011 with coordinate 0 first.
  const std::vector<std::uint64_t> v{0b0011, 0b1100};
  const auto table = subspace_oracle(4, v);
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const auto r = abelian_hsp(4, table, 12, rng);
    EXPECT_TRUE(same_span(r.basis, words_to_vectors(4, v))) << seed;
    for (const auto& o : r.outcomes) {
      for (const auto& b : words_to_vectors(4, v)) EXPECT_FALSE(dot(o, b));
    }
  }
}

TEST(BaseStage, ExamplesOnW2) {
  const int n = 2;
  const auto params = SolverParams::defaults(n, 5);
  const auto base = intersect_N(GeneratedSubgroup::whole_group(n));
  const auto r = solve_base_group(build_hidden_function(base), params);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.generators.size(), 4u);
  EXPECT_EQ(closure(n, r.generators), base.elements());

  const GeneratedSubgroup swap_only(n, {GroupElement::swap(n)});
  const auto s = solve_base_group(build_hidden_function(swap_only), params);
  EXPECT_TRUE(s.verified);
  EXPECT_TRUE(s.generators.empty());
}

TEST(BaseStage, AllSubgroupsOfW1) {
  for (const auto& u : enumerate_subgroups(1)) {
    const auto f = build_hidden_function(u);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto params = SolverParams::defaults(1, seed);
      Rng rng(seed);
      const auto base = solve_base_group(f, params, rng);
      ASSERT_TRUE(base.verified);
      EXPECT_EQ(closure(1, base.generators), intersect_N(u).elements());
      const auto diag = solve_diagonal_group(f, params, rng);
      ASSERT_TRUE(diag.verified);
      for (const auto& g : diag.generators) EXPECT_TRUE(in_D(g) && u.contains(g));
      std::vector<GroupElement> u_cap_d;
      for (const auto& g : u.elements().elements()) {
        if (in_D(g)) u_cap_d.push_back(g);
      }
      EXPECT_EQ(closure(1, diag.generators), ElementSet::from_elements(1, u_cap_d));
    }
  }
}

TEST(Involution, Examples) {
  const int n = 2;
  const auto params = SolverParams::defaults(n, 9);
  const GroupElement diag(n, 2, 2, true);
  EXPECT_EQ(find_involution(build_hidden_function(GeneratedSubgroup(n, {diag})), params), diag);
  const GroupElement base(n, 1, 3, false);
  EXPECT_EQ(find_involution(build_hidden_function(GeneratedSubgroup(n, {base})), params), base);
  EXPECT_FALSE(find_involution(build_hidden_function(GeneratedSubgroup::trivial(n)), params));
}

TEST(Involution, PromiseViolationsDetected) {
  const int n = 2;
  const auto params = SolverParams::defaults(n, 2);
  const GeneratedSubgroup two_base(n, {GroupElement(n, 1, 0, false), GroupElement(n, 0, 1, false)});
  EXPECT_THROW(find_involution(build_hidden_function(two_base), params), PromiseViolation);
  const GeneratedSubgroup mixed(n, {GroupElement(n, 1, 1, false), GroupElement::swap(n)});
  EXPECT_THROW(find_involution(build_hidden_function(mixed), params), PromiseViolation);
}

// Exact sampling distribution: an equal mixture of the uniform distributions
// on U^perp and (U^t)^perp (the two coincide when U is not inside N).
std::vector<double> expected_distribution(const GeneratedSubgroup& u) {
  const int n = u.arity();
  const auto p = perp_bruteforce(n, u.elements());
  const auto pt = perp_bruteforce(n, conjugate_t_set(u.elements()));
  std::vector<double> probs(group_size(n));
  for (auto g : p.indices()) probs[g] += 0.5 / p.size();
  for (auto g : pt.indices()) probs[g] += 0.5 / pt.size();
  return probs;
}

TEST(FourierSample, SupportAndUniformityOnW2) {
  const int n = 2;
  const int shots = 2000;
  Rng pick(31);
  for (int k = 0; k < 50; ++k) {
    const auto u = random_subgroup(n, pick);
    const auto f = build_hidden_function(u);
    const auto probs = expected_distribution(u);
    FourierSampler sampler(f, true);
    Rng rng(derive_seed(31, k));
    std::vector<int> counts(group_size(n));
    for (int s = 0; s < shots; ++s) ++counts[sampler.sample(rng, s).element.index()];
    double chi2 = 0;
    int cells = 0;
    for (std::size_t g = 0; g < counts.size(); ++g) {
      if (probs[g] == 0) {
        EXPECT_EQ(counts[g], 0) << "sample outside both perps";
        continue;
      }
      const double e = shots * probs[g];
      chi2 += (counts[g] - e) * (counts[g] - e) / e;
      ++cells;
    }
    if (cells > 1) { EXPECT_LT(chi2, chi2_quantile(cells - 1)) << k; }
  }
}

TEST(FourierSample, ExtremeSubgroups) {
  const int n = 1;
  const auto params = SolverParams::defaults(n, 4);
  Rng rng(4);
  const auto whole = build_hidden_function(GeneratedSubgroup::whole_group(n));
  const auto radical = perp_bruteforce(n, ElementSet::whole_group(n));
  for (int s = 0; s < 100; ++s) EXPECT_TRUE(radical.contains(fourier_sample(whole, params, rng).element));

  const auto trivial = build_hidden_function(GeneratedSubgroup::trivial(n));
  std::vector<int> counts(8);
  const int shots = 4000;
  for (int s = 0; s < shots; ++s) ++counts[fourier_sample(trivial, params, rng).element.index()];
  double chi2 = 0;
  for (int c : counts) chi2 += (c - shots / 8.0) * (c - shots / 8.0) / (shots / 8.0);
  EXPECT_LT(chi2, chi2_quantile(7));
}

TEST(FourierSample, DroppingLabelMeasurementKeepsDistribution) {
  const int n = 2;
  const GeneratedSubgroup u(n, {GroupElement(n, 1, 0, false)});
  const auto f = build_hidden_function(u);
  const auto probs = expected_distribution(u);
  FourierSampler without(f, false);
  Rng rng(12);
  const int shots = 4000;
  std::vector<int> counts(group_size(n));
  for (int s = 0; s < shots; ++s) {
    const auto rec = without.sample(rng, s);
    EXPECT_FALSE(rec.coset_label.has_value());
    ++counts[rec.element.index()];
  }
  double chi2 = 0;
  int cells = 0;
  for (std::size_t g = 0; g < counts.size(); ++g) {
    if (probs[g] == 0) {
      EXPECT_EQ(counts[g], 0);
      continue;
    }
    const double e = shots * probs[g];
    chi2 += (counts[g] - e) * (counts[g] - e) / e;
    ++cells;
  }
  EXPECT_LT(chi2, chi2_quantile(cells - 1));
  FourierSampler with(f, true);
  EXPECT_TRUE(with.sample(rng).coset_label.has_value());
}

TEST(Solve, Extremes) {
  for (int n : {1, 2, 3}) {
    const auto params = SolverParams::defaults(n, 17);
    const auto whole = solve(build_hidden_function(GeneratedSubgroup::whole_group(n)), params);
    EXPECT_TRUE(whole.verified);
    EXPECT_EQ(closure(n, whole.generators), ElementSet::whole_group(n));
    const auto trivial = solve(build_hidden_function(GeneratedSubgroup::trivial(n)), params);
    EXPECT_TRUE(trivial.verified);
    EXPECT_TRUE(trivial.generators.empty());
  }
}

TEST(Solve, AllSubgroupsOfW1) {
  for (const auto& u : enumerate_subgroups(1)) {
    const auto f = build_hidden_function(u);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto r = solve(f, SolverParams::defaults(1, seed));
      if (r.verified) { EXPECT_EQ(closure(1, r.generators), u.elements()); }
    }
  }
}

TEST(Solve, DeterministicForFixedSeed) {
  const GeneratedSubgroup u(2, {GroupElement::parse(2, "01|01|1")});
  const auto f = build_hidden_function(u);
  const auto a = solve(f, SolverParams::defaults(2, 7));
  const auto b = solve(f, SolverParams::defaults(2, 7));
  EXPECT_TRUE(a.verified);
  EXPECT_EQ(a.generators, b.generators);
  EXPECT_EQ(a.rounds_used, b.rounds_used);
  ASSERT_EQ(a.transcript.size(), b.transcript.size());
  for (std::size_t i = 0; i < a.transcript.size(); ++i) {
    EXPECT_EQ(a.transcript[i].element, b.transcript[i].element);
  }
}

TEST(Solve, RandomW2AndW3) {
  Rng pick(2024);
  for (int k = 0; k < 40; ++k) {
    const int n = 2 + k % 2;
    const auto u = random_subgroup(n, pick);
    const auto r = solve(build_hidden_function(u), SolverParams::defaults(n, k));
    EXPECT_TRUE(r.verified);
    if (r.verified) { EXPECT_EQ(closure(n, r.generators), u.elements()); }
  }
}

TEST(Sweep, ZeroSamplesSucceedOnlyForTrivialTarget) {
  const int n = 1, trials = 200;
  const std::uint64_t seed = 5;
  int trivial_targets = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const auto u = random_subgroup(n, rng);
    const auto target = closure(n, unite(perp_bruteforce(n, u.elements()),
                                         perp_bruteforce(n, conjugate_t_set(u.elements())))
                                       .elements());
    if (target.size() == 1) ++trivial_targets;
  }
  EXPECT_EQ(success_experiment(n, trials, 0, seed).successes, trivial_targets);
}

TEST(Sweep, RatesAreMonotone) {
  const std::vector<int> is{1, 2, 4, 8, 16};
  const auto rows = sweep(2, 200, is, 3);
  ASSERT_EQ(rows.size(), is.size());
  for (std::size_t k = 1; k < rows.size(); ++k) EXPECT_GE(rows[k].successes, rows[k - 1].successes);
  EXPECT_NEAR(rows.back().bound, 1 - std::pow(2.0, -4.0), 1e-12);
}

TEST(Seeds, DeriveSeedSpreads) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(9, 9), derive_seed(9, 9));
}

}  // namespace
}  // namespace whsp
