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

#ifndef WHSP_SOLVER_HPP_
#define WHSP_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "whsp/f2.hpp"
#include "whsp/statevector.hpp"
#include "whsp/subgroup.hpp"

namespace whsp {

inline constexpr std::uint64_t kDefaultSeed = 20260516;

/// Stateless 64-bit mix used to derive independent per-trial seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

struct SolverParams {
  int n = 1;
  /// Fourier-sampling budget.
  int max_rounds = 24;
  /// Rounds of the first abelian pass; later passes top up as needed.
  int base_rounds = 10;
  std::uint64_t seed = kDefaultSeed;
  /// Measure the function register before the Fourier transform.
  bool retain_step4_measurement = true;

  /// max_rounds = 8n + 16 (at least the 4n + 8 floor), base_rounds = 2n + 8.
  static SolverParams defaults(int n, std::uint64_t seed = kDefaultSeed);
};

struct SampleRecord {
  int round;
  GroupElement element;
  std::optional<std::uint32_t> coset_label;
};

struct SolveReport {
  int n = 0;
  std::vector<GroupElement> generators;
  std::vector<GroupElement> base_generators;
  std::vector<GroupElement> intersection_generators;
  int rounds_used = 0;
  int base_rounds_used = 0;
  bool verified = false;
  std::vector<SampleRecord> transcript;
};

/// Raised by find_involution when the oracle cannot hide a subgroup of
/// order at most 2.
class PromiseViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AbelianHspResult {
  /// Reduced basis of the recovered subspace V.
  std::vector<BitVector> basis;
  /// Every measured vector; each lies in the orthogonal complement of V.
  std::vector<BitVector> outcomes;
  /// False when the outcome span was still growing in the final rounds,
  /// i.e. the basis may describe a strict superspace of V.
  bool stabilized = false;
};

/// Simon-style sampling over F_2^m: `oracle[v]` is the label of v, constant
/// and distinct on the cosets of a hidden subspace V.
AbelianHspResult abelian_hsp(int m, std::span<const std::uint64_t> oracle, int rounds, Rng& rng);

struct BaseStageResult {
  std::vector<GroupElement> generators;  // of U ∩ N (or U ∩ D)
  int rounds = 0;
  bool verified = false;
};

/// Abelian sampling on N = Z_2^n x Z_2^n with the a-qubit held at |0>.
/// Samples in passes until every recovered generator g has f(g) = f(1).
BaseStageResult solve_base_group(const HiddenFunction& f, const SolverParams& params, Rng& rng);
BaseStageResult solve_base_group(const HiddenFunction& f, const SolverParams& params);

/// Abelian sampling on the diagonal group D = {(y, y; a)}, coordinates (y, a).
BaseStageResult solve_diagonal_group(const HiddenFunction& f, const SolverParams& params,
                                     Rng& rng);

/// Recovers the generator of a hidden subgroup of order <= 2 without the
/// non-abelian transform. Returns nullopt for the trivial subgroup.
std::optional<GroupElement> find_involution(const HiddenFunction& f, const SolverParams& params);

/// Repeated Fourier sampling against one hidden function. The post-oracle
/// state is computed once and copied per round.
class FourierSampler {
 public:
  FourierSampler(const HiddenFunction& f, bool retain_step4_measurement);

  SampleRecord sample(Rng& rng, int round = 0) const;
  int qubit_count() const { return qubits_; }

 private:
  int n_;
  int qubits_;
  bool retain_;
  std::vector<int> first_register_;
  std::vector<int> second_register_;
  StateVector prepared_;
  Circuit transform_;
};

/// One pass: uniform superposition, oracle, optional function-register
/// measurement, Fourier transform of W_n, first-register measurement.
SampleRecord fourier_sample(const HiddenFunction& f, const SolverParams& params, Rng& rng);

SolveReport solve(const HiddenFunction& f, const SolverParams& params);

/// True iff phi^-1(span(basis)) is closed under multiplication, i.e. the
/// span is invariant under exchanging the x and y coordinates.
bool swap_invariant(int n, const std::vector<BitVector>& basis);

struct SweepRow {
  int i = 0;
  int trials = 0;
  int successes = 0;
  double bound = 0.0;  // 1 - 2^(-i/4)
  double rate() const { return trials == 0 ? 0.0 : static_cast<double>(successes) / trials; }
};

/// For `trials` random subgroups, draws max(i_values) Fourier samples and
/// records for each i whether the first i samples generate
/// <U^perp, (U^t)^perp>. Prefixes share samples, so each trial's success is
/// monotone in i.
std::vector<SweepRow> sweep(int n, int trials, std::span<const int> i_values,
                            std::uint64_t seed);

SweepRow success_experiment(int n, int trials, int samples_per_trial, std::uint64_t seed);

}  // namespace whsp

#endif  // WHSP_SOLVER_HPP_
