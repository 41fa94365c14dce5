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

#include "whsp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <string>

#include "whsp/qft.hpp"

namespace whsp {
namespace {

int label_bits(std::uint64_t label_count) {
  int bits = 1;
  while ((std::uint64_t{1} << bits) < label_count) ++bits;
  return bits;
}

std::vector<int> qubit_range(int begin, int end) {
  std::vector<int> out;
  for (int q = begin; q < end; ++q) out.push_back(q);
  return out;
}

std::vector<std::uint64_t> label_table(const HiddenFunction& f) {
  return {f.labels().begin(), f.labels().end()};
}

// Simulates `circuit` once from |0...0> and samples `measured` repeatedly,
// growing the span of outcomes. Stops after a pass whose recovered
// generators all evaluate like the identity, or when the budget runs out.
BaseStageResult run_verified_stage(const HiddenFunction& f, const Circuit& circuit,
                                   const std::vector<int>& measured,
                                   const std::function<GroupElement(const BitVector&)>& embed,
                                   int first_rounds, int budget, Rng& rng) {
  const auto state = run_circuit(circuit, StateVector(circuit.qubit_count()));
  const auto m = measured.size();
  SpanBuilder span(m);
  BaseStageResult result;
  auto draw = [&](int k) {
    for (int i = 0; i < k && result.rounds < budget; ++i) {
      const auto outcome = measure(state, measured, rng).outcome;
      span.insert(BitVector::from_word(outcome, m));
      ++result.rounds;
    }
  };
  const auto identity_label = f(GroupElement::identity(f.arity()));
  draw(first_rounds);
  while (true) {
    result.generators.clear();
    for (const auto& v : orthogonal_complement(span.basis(), m)) {
      result.generators.push_back(embed(v));
    }
    result.verified = std::all_of(result.generators.begin(), result.generators.end(),
                                  [&](const GroupElement& g) { return f(g) == identity_label; });
    if (result.verified || result.rounds >= budget) return result;
    draw(static_cast<int>(m) + 2);
  }
}

BitVector swap_halves(int n, const BitVector& v) {
  BitVector out(v.size());
  for (int i = 0; i < n; ++i) {
    out.set(static_cast<std::size_t>(i), v.get(static_cast<std::size_t>(n + i)));
    out.set(static_cast<std::size_t>(n + i), v.get(static_cast<std::size_t>(i)));
  }
  out.set(static_cast<std::size_t>(2 * n), v.get(static_cast<std::size_t>(2 * n)));
  return out;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

SolverParams SolverParams::defaults(int n, std::uint64_t seed) {
  SolverParams p;
  p.n = n;
  p.max_rounds = 8 * n + 16;
  p.base_rounds = 2 * n + 8;
  p.seed = seed;
  p.retain_step4_measurement = true;
  return p;
}

AbelianHspResult abelian_hsp(int m, std::span<const std::uint64_t> oracle, int rounds,
                             Rng& rng) {
  if (m < 1 || m > 20) throw CapacityError("abelian_hsp supports 1 <= m <= 20");
  if (oracle.size() != (std::size_t{1} << m)) {
    throw std::invalid_argument("abelian_hsp: oracle table must have 2^m entries");
  }
  const auto max_label = *std::max_element(oracle.begin(), oracle.end());
  const int out_bits = label_bits(max_label + 1);
  Circuit c(m + out_bits);
  for (int q = 0; q < m; ++q) c.h(q);
  c.oracle_xor(qubit_range(0, m), qubit_range(m, m + out_bits),
               std::vector<std::uint64_t>(oracle.begin(), oracle.end()));
  for (int q = 0; q < m; ++q) c.h(q);
  const auto state = run_circuit(c, StateVector(c.qubit_count()));
  const auto measured = qubit_range(0, m);

  AbelianHspResult result;
  SpanBuilder span(static_cast<std::size_t>(m));
  int last_growth = 0;
  for (int r = 0; r < rounds; ++r) {
    auto v = BitVector::from_word(measure(state, measured, rng).outcome,
                                  static_cast<std::size_t>(m));
    if (span.insert(v)) last_growth = r + 1;
    result.outcomes.push_back(std::move(v));
  }
  result.basis = orthogonal_complement(span.basis(), static_cast<std::size_t>(m));
  result.stabilized = span.dimension() == static_cast<std::size_t>(m) ||
                      rounds - last_growth >= 4;
  return result;
}

BaseStageResult solve_base_group(const HiddenFunction& f, const SolverParams& params,
                                 Rng& rng) {
  const int n = f.arity();
  const int in_bits = index_bits(n);
  const int out_bits = label_bits(f.label_count());
  Circuit c(in_bits + out_bits);
  for (int q = 0; q < 2 * n; ++q) c.h(q);
  c.oracle_xor(qubit_range(0, in_bits), qubit_range(in_bits, in_bits + out_bits),
               label_table(f));
  for (int q = 0; q < 2 * n; ++q) c.h(q);
  auto embed = [n](const BitVector& v) { return GroupElement::from_index(n, v.to_word()); };
  return run_verified_stage(f, c, qubit_range(0, 2 * n), embed, params.base_rounds,
                            4 * params.base_rounds, rng);
}

BaseStageResult solve_base_group(const HiddenFunction& f, const SolverParams& params) {
  Rng rng(params.seed);
  return solve_base_group(f, params, rng);
}

BaseStageResult solve_diagonal_group(const HiddenFunction& f, const SolverParams& params,
                                     Rng& rng) {
  const int n = f.arity();
  const int in_bits = index_bits(n);
  const int out_bits = label_bits(f.label_count());
  Circuit c(in_bits + out_bits);
  // Superpose (y, a), then copy y into x so the register spans D.
  for (int q = n; q <= 2 * n; ++q) c.h(q);
  for (int i = 0; i < n; ++i) c.cnot(n + i, i);
  c.oracle_xor(qubit_range(0, in_bits), qubit_range(in_bits, in_bits + out_bits),
               label_table(f));
  for (int i = 0; i < n; ++i) c.cnot(n + i, i);
  for (int q = n; q <= 2 * n; ++q) c.h(q);
  auto embed = [n](const BitVector& v) {
    const auto w = v.to_word();
    const auto y = w & ((std::uint64_t{1} << n) - 1);
    return GroupElement(n, y, y, ((w >> n) & 1u) != 0);
  };
  return run_verified_stage(f, c, qubit_range(n, 2 * n + 1), embed, params.base_rounds,
                            4 * params.base_rounds, rng);
}

std::optional<GroupElement> find_involution(const HiddenFunction& f,
                                            const SolverParams& params) {
  Rng rng(params.seed);
  const auto base = solve_base_group(f, params, rng);
  const auto diag = solve_diagonal_group(f, params, rng);
  if (!base.verified || !diag.verified) {
    throw std::runtime_error("find_involution: sampling budget exhausted");
  }
  if (base.generators.size() > 1 || diag.generators.size() > 1) {
    throw PromiseViolation("hidden subgroup has more than one involution in N or D");
  }
  std::set<GroupElement> found(base.generators.begin(), base.generators.end());
  found.insert(diag.generators.begin(), diag.generators.end());
  if (found.size() > 1) {
    throw PromiseViolation("hidden subgroup contains distinct involutions " +
                           found.begin()->to_string() + " and " +
                           std::next(found.begin())->to_string());
  }
  if (found.empty()) return std::nullopt;
  const auto g = *found.begin();
  if (element_order(g) > 2) {
    throw PromiseViolation("recovered element " + g.to_string() + " is not an involution");
  }
  return g;
}

FourierSampler::FourierSampler(const HiddenFunction& f, bool retain_step4_measurement)
    : n_(f.arity()),
      qubits_(index_bits(n_) + label_bits(f.label_count())),
      retain_(retain_step4_measurement),
      first_register_(qubit_range(0, index_bits(n_))),
      second_register_(qubit_range(index_bits(n_), qubits_)),
      prepared_(qubits_),
      transform_(qubits_) {
  Circuit prep(qubits_);
  for (int q : first_register_) prep.h(q);
  prep.oracle_xor(first_register_, second_register_, label_table(f));
  prepared_.apply(prep);
  transform_.append(qft_circuit(n_).circuit);
}

SampleRecord FourierSampler::sample(Rng& rng, int round) const {
  StateVector state = prepared_;
  std::optional<std::uint32_t> label;
  if (retain_) {
    label = static_cast<std::uint32_t>(measure_in_place(state, second_register_, rng));
  }
  state.apply(transform_);
  const auto outcome = measure_in_place(state, first_register_, rng);
  return SampleRecord{round, GroupElement::from_index(n_, outcome), label};
}

SampleRecord fourier_sample(const HiddenFunction& f, const SolverParams& params, Rng& rng) {
  return FourierSampler(f, params.retain_step4_measurement).sample(rng);
}

bool swap_invariant(int n, const std::vector<BitVector>& basis) {
  return std::all_of(basis.begin(), basis.end(), [&](const BitVector& b) {
    return span_contains(basis, swap_halves(n, b));
  });
}

SolveReport solve(const HiddenFunction& f, const SolverParams& params) {
  const int n = f.arity();
  if (params.n != n) throw std::invalid_argument("solver arity does not match the oracle");
  const auto len = static_cast<std::size_t>(index_bits(n));
  const int patience = 2 * n + 2;
  const auto identity_label = f(GroupElement::identity(n));

  SolveReport report;
  report.n = n;
  Rng rng(params.seed);
  const auto base = solve_base_group(f, params, rng);
  report.base_generators = base.generators;
  report.base_rounds_used = base.rounds;

  FourierSampler sampler(f, params.retain_step4_measurement);
  SpanBuilder span(len);
  int stagnant = 0;
  while (true) {
    while (report.rounds_used < params.max_rounds && stagnant < patience) {
      auto rec = sampler.sample(rng, report.rounds_used);
      stagnant = span.insert(phi(rec.element)) ? 0 : stagnant + 1;
      report.transcript.push_back(rec);
      ++report.rounds_used;
    }
    // The candidate for U ∩ U^t is the perp of everything sampled so far;
    // it is only usable once it is a subgroup.
    const auto kernel = orthogonal_complement(span.basis(), len);
    report.intersection_generators.clear();
    report.generators = base.generators;
    if (swap_invariant(n, kernel)) {
      for (const auto& v : kernel) {
        const auto g = phi_inv(n, v);
        report.intersection_generators.push_back(g);
        if (std::find(report.generators.begin(), report.generators.end(), g) ==
            report.generators.end()) {
          report.generators.push_back(g);
        }
      }
      report.verified =
          base.verified &&
          std::all_of(report.generators.begin(), report.generators.end(),
                      [&](const GroupElement& g) { return f(g) == identity_label; });
      if (report.verified) break;
    }
    if (report.rounds_used >= params.max_rounds) break;
    stagnant = 0;
  }
  return report;
}

std::vector<SweepRow> sweep(int n, int trials, std::span<const int> i_values,
                            std::uint64_t seed) {
  if (n < 1 || n > kMaxDenseQftArity) throw CapacityError("sweep supports 1 <= n <= 3");
  std::vector<SweepRow> rows;
  int i_max = 0;
  for (int i : i_values) {
    if (i < 0) throw std::invalid_argument("sample counts must be non-negative");
    rows.push_back({i, trials, 0, 1.0 - std::pow(2.0, -i / 4.0)});
    i_max = std::max(i_max, i);
  }
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const auto u = random_subgroup(n, rng);
    const auto f = build_hidden_function(u);
    const auto perp_u = perp_bruteforce(n, u.elements());
    const auto perp_ut = perp_bruteforce(n, conjugate_t_set(u.elements()));
    const auto target = closure(n, unite(perp_u, perp_ut).elements());

    FourierSampler sampler(f, true);
    std::vector<GroupElement> samples;
    for (int s = 0; s < i_max; ++s) samples.push_back(sampler.sample(rng, s).element);
    for (auto& row : rows) {
      const std::vector<GroupElement> prefix(samples.begin(), samples.begin() + row.i);
      if (closure(n, prefix) == target) ++row.successes;
    }
  }
  return rows;
}

SweepRow success_experiment(int n, int trials, int samples_per_trial, std::uint64_t seed) {
  const int i[] = {samples_per_trial};
  return sweep(n, trials, i, seed).front();
}

}  // namespace whsp
