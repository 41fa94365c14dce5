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

#include <chrono>
#include <cmath>

#include "whsp/qft.hpp"

namespace whsp {
namespace {

constexpr double kTol = 1e-10;

TEST(Qft, GateCountsSmall) {
  const auto b1 = qft_circuit(1);
  EXPECT_EQ(b1.hadamard_count, 3u);
  EXPECT_EQ(b1.circuit.count(GateKind::kCswap), 2u);
  EXPECT_EQ(b1.toffoli_count, 6u);
  const auto b4 = qft_circuit(4);
  EXPECT_EQ(b4.hadamard_count, 9u);
  EXPECT_LE(b4.toffoli_count, 24u);
}

TEST(Qft, GateCountsAffineInN) {
  const auto rows = gate_count_report(64);
  ASSERT_EQ(rows.size(), 64u);
  EXPECT_EQ(rows[0].n, 1);
  EXPECT_EQ(rows[0].hadamards, 3u);
  EXPECT_EQ(rows[0].toffolis, 6u);
  EXPECT_EQ(rows[0].total, 9u);
  for (const auto& r : rows) {
    const auto n = static_cast<std::size_t>(r.n);
    EXPECT_EQ(r.hadamards, 2 * n + 1);
    EXPECT_EQ(r.toffolis, 6 * n);
    EXPECT_EQ(r.total, 8 * n + 1);
    const auto expanded = qft_circuit(r.n).circuit.expand_cswaps();
    EXPECT_EQ(expanded.count(GateKind::kToffoli), r.toffolis);
    EXPECT_EQ(expanded.count(GateKind::kH), r.hadamards);
  }
}

TEST(Qft, ConstructionIsFast) {
  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 64; ++n) qft_circuit(n);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_LT(std::chrono::duration<double>(elapsed).count(), 64e-3);
  EXPECT_THROW(qft_circuit(65), CapacityError);
}

TEST(Qft, EntrywiseValues) {
  const auto m = qft_matrix_entrywise(1);
  EXPECT_NEAR(m(0, 0).real(), 1 / std::sqrt(8.0), kTol);
  const auto t = GroupElement::swap(1).index();
  EXPECT_NEAR(m(t, t).real(), -1 / std::sqrt(8.0), kTol);
  for (int n = 1; n <= 3; ++n) {
    const auto e = qft_matrix_entrywise(n);
    const double scale = 1 / std::sqrt(static_cast<double>(group_size(n)));
    for (std::size_t r = 0; r < e.dim(); ++r) {
      for (std::size_t c = 0; c < e.dim(); ++c) {
        EXPECT_NEAR(std::abs(e(r, c)), scale, kTol);
        EXPECT_NEAR(std::abs(e(r, c) - e(c, r)), 0, kTol);
      }
    }
  }
  EXPECT_THROW(qft_matrix_entrywise(4), CapacityError);
}

TEST(Qft, ThreeConstructionsAgree) {
  for (int n = 1; n <= 3; ++n) {
    const auto circuit = circuit_to_matrix(qft_circuit(n).circuit);
    const auto block = qft_matrix_block(n);
    const auto entry = qft_matrix_entrywise(n);
    EXPECT_LE(max_abs_diff(circuit, block), kTol) << n;
    EXPECT_LE(max_abs_diff(block, entry), kTol) << n;
    EXPECT_LE(unitarity_defect(circuit), kTol);
    EXPECT_LE(unitarity_defect(block), kTol);
    EXPECT_LE(unitarity_defect(entry), kTol);
  }
}

// On N x N the transform restricts to the Walsh-Hadamard transform of Z_2^{2n}.
TEST(Qft, BaseBlockIsHadamardTransform) {
  for (int n = 1; n <= 3; ++n) {
    const auto m = qft_matrix_block(n);
    const std::uint64_t half = group_size(n) / 2;
    for (std::uint64_t r = 0; r < half; ++r) {
      for (std::uint64_t c = 0; c < half; ++c) {
        const double sign = (__builtin_popcountll(r & c) & 1) ? -1.0 : 1.0;
        EXPECT_NEAR(m(r, c).real() * std::sqrt(2.0), sign / std::sqrt(double(half)), kTol);
      }
    }
  }
}

TEST(Qft, SignMatrixMatchesEntrywise) {
  for (int n = 1; n <= 2; ++n) {
    const auto signs = qft_sign_matrix(n);
    const auto e = qft_matrix_entrywise(n);
    const double scale = std::sqrt(static_cast<double>(group_size(n)));
    for (std::size_t r = 0; r < signs.size(); ++r) {
      for (std::size_t c = 0; c < signs.size(); ++c) {
        EXPECT_EQ(signs[r][c], e(r, c).real() * scale > 0 ? 1 : -1);
      }
    }
  }
}

TEST(Qft, SingleTransversalVariantDiffers) {
  const auto v = qft_circuit(1, QftVariant::kSingleTransversal);
  EXPECT_EQ(v.toffoli_count, 3u);
  const auto m = circuit_to_matrix(v.circuit);
  EXPECT_LE(unitarity_defect(m), kTol);
  EXPECT_GT(max_abs_diff(m, qft_matrix_entrywise(1)), 0.1);
}

TEST(Qft, TransformOfSubgroupStateOnW1) {
  const auto u = closure(1, {GroupElement::swap(1)});
  const auto s = fourier_transform(1, uniform_superposition(u));
  const auto p = perp_bruteforce(1, u);
  for (std::uint64_t g = 0; g < 8; ++g) {
    EXPECT_NEAR(std::abs(s[g]), p.contains(g) ? 1 / std::sqrt(double(p.size())) : 0.0, kTol);
  }
}

}  // namespace
}  // namespace whsp
