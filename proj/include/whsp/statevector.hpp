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

#ifndef WHSP_STATEVECTOR_HPP_
#define WHSP_STATEVECTOR_HPP_

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "whsp/subgroup.hpp"

namespace whsp {

using Amplitude = std::complex<double>;

/// Largest register the simulator will allocate.
inline constexpr int kMaxSimulatedQubits = 26;
/// Largest register circuit_to_matrix will expand densely.
inline constexpr int kMaxMatrixQubits = 12;

enum class GateKind { kH, kX, kCnot, kToffoli, kCswap, kQubitPerm, kOracleXor };

std::string_view gate_kind_name(GateKind kind);
GateKind parse_gate_kind(std::string_view name);

/// One gate. Field use by kind:
///   H, X          targets = {q}
///   CNOT          controls = {c}, targets = {t}
///   TOFFOLI       controls = {c1, c2}, targets = {t}
///   CSWAP         controls = {c}, targets = {a, b}
///   QUBIT_PERM    targets[k] = new position of qubit k (full permutation)
///   ORACLE_XOR    controls = input register (bit k = qubit controls[k]),
///                 targets = output register, table[input] = XOR mask
struct Gate {
  GateKind kind;
  std::vector<int> controls;
  std::vector<int> targets;
  std::shared_ptr<const std::vector<std::uint64_t>> table;
};

class Circuit {
 public:
  explicit Circuit(int qubit_count);

  int qubit_count() const { return qubit_count_; }
  const std::vector<Gate>& gates() const { return gates_; }

  /// Validates and appends. Throws std::invalid_argument on malformed gates.
  Circuit& add(Gate gate);
  Circuit& h(int q);
  Circuit& x(int q);
  Circuit& cnot(int control, int target);
  Circuit& toffoli(int c1, int c2, int target);
  Circuit& cswap(int control, int a, int b);
  Circuit& permute(std::vector<int> new_positions);
  Circuit& oracle_xor(std::vector<int> inputs, std::vector<int> outputs,
                      std::vector<std::uint64_t> table);
  /// Appends the gates of `other`, which must not use more qubits.
  Circuit& append(const Circuit& other);

  std::size_t count(GateKind kind) const;
  /// Gate list with every CSWAP replaced by three TOFFOLI gates.
  Circuit expand_cswaps() const;

 private:
  int qubit_count_;
  std::vector<Gate> gates_;
};

class StateVector {
 public:
  /// The all-zero basis state.
  explicit StateVector(int qubit_count);
  static StateVector basis(int qubit_count, std::uint64_t index);
  /// Takes amplitudes as given; length must be 2^qubit_count.
  static StateVector from_amplitudes(int qubit_count, std::vector<Amplitude> amps);

  int qubit_count() const { return qubit_count_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  const Amplitude& operator[](std::uint64_t i) const { return amps_[i]; }
  double norm() const;

  void apply(const Gate& gate);
  void apply(const Circuit& circuit);

  /// Projects onto `outcome` for `qubits` and renormalizes.
  void collapse(std::span<const int> qubits, std::uint64_t outcome);

 private:
  int qubit_count_;
  std::vector<Amplitude> amps_;
};

StateVector run_circuit(const Circuit& circuit, StateVector state);

/// Probability of each outcome of `qubits` (bit k of the outcome = qubit
/// qubits[k]).
std::vector<double> marginal_probabilities(const StateVector& state,
                                           std::span<const int> qubits);

struct Measurement {
  std::uint64_t outcome;
  double probability;
  StateVector collapsed;
};

Measurement measure(const StateVector& state, std::span<const int> qubits, Rng& rng);
/// Same sampling rule as measure(), collapsing `state` in place.
std::uint64_t measure_in_place(StateVector& state, std::span<const int> qubits, Rng& rng);

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Amplitude& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Amplitude& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  ComplexMatrix adjoint() const;
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t dim_;
  std::vector<Amplitude> data_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// max |(M M^dagger - I)_ij|.
double unitarity_defect(const ComplexMatrix& m);

/// Full unitary of the gate list; column j is the image of basis state j.
/// Throws CapacityError above kMaxMatrixQubits.
ComplexMatrix circuit_to_matrix(const Circuit& circuit);

}  // namespace whsp

#endif  // WHSP_STATEVECTOR_HPP_
