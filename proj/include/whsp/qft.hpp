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

#ifndef WHSP_QFT_HPP_
#define WHSP_QFT_HPP_

#include <cstddef>
#include <vector>

#include "whsp/statevector.hpp"

namespace whsp {

/// Largest arity for which the circuit is constructed (2n+1 qubits).
inline constexpr int kMaxQftCircuitArity = 64;
/// Largest arity for which dense Fourier matrices are built.
inline constexpr int kMaxDenseQftArity = 3;

enum class QftVariant {
  /// Conditional swap, H on a, conditional swap, H on x and y. Its matrix
  /// entries are (-1)^mu(g,h) / sqrt(|W_n|).
  kSymmetric,
  /// H on a, conditional swap, H on x and y (no leading swap block).
  kSingleTransversal,
};

struct QftBundle {
  int n;
  Circuit circuit;
  std::size_t toffoli_count;   // each CSWAP counts as three Toffoli gates
  std::size_t hadamard_count;
};

/// Fourier transform of W_n over qubits 0..2n (x, y, then the a-qubit).
QftBundle qft_circuit(int n, QftVariant variant = QftVariant::kSymmetric);

/// (1/sqrt 2) [[A, A P], [A P, -A]] with A the normalized H^(2n) and P the
/// x <-> y qubit exchange, assembled from explicit Kronecker products.
ComplexMatrix qft_matrix_block(int n);

/// Entry (g, h) = (-1)^mu(g,h) / sqrt(2^(2n+1)).
ComplexMatrix qft_matrix_entrywise(int n);

/// The entrywise matrix scaled by sqrt(2^(2n+1)); every entry is +1 or -1.
std::vector<std::vector<int>> qft_sign_matrix(int n);

struct GateCountRow {
  int n;
  std::size_t hadamards;
  std::size_t toffolis;
  std::size_t total;
};

/// Unit-norm uniform superposition over `s`, on 2n+1 qubits.
StateVector uniform_superposition(const ElementSet& s);

/// Applies qft_circuit(n) to a state on 2n+1 qubits.
StateVector fourier_transform(int n, StateVector state);

/// Gate counts of qft_circuit(n) for n = 1..n_max (construction only).
std::vector<GateCountRow> gate_count_report(int n_max);

}  // namespace whsp

#endif  // WHSP_QFT_HPP_
