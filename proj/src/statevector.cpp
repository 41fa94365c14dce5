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

#include "whsp/statevector.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace whsp {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

struct KindInfo {
  GateKind kind;
  std::string_view name;
};

constexpr KindInfo kKinds[] = {
    {GateKind::kH, "H"},
    {GateKind::kX, "X"},
    {GateKind::kCnot, "CNOT"},
    {GateKind::kToffoli, "TOFFOLI"},
    {GateKind::kCswap, "CSWAP"},
    {GateKind::kQubitPerm, "QUBIT_PERM"},
    {GateKind::kOracleXor, "ORACLE_XOR"},
};

[[noreturn]] void malformed(const Gate& g, const std::string& why) {
  throw std::invalid_argument("malformed " + std::string(gate_kind_name(g.kind)) +
                              " gate: " + why);
}

void check_qubits(const Gate& g, int qubit_count) {
  std::vector<int> all = g.controls;
  all.insert(all.end(), g.targets.begin(), g.targets.end());
  for (int q : all) {
    if (q < 0 || q >= qubit_count) malformed(g, "qubit " + std::to_string(q) + " out of range");
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    malformed(g, "qubit indices not distinct");
  }
}

void validate(const Gate& g, int qubit_count) {
  auto shape = [&](std::size_t controls, std::size_t targets) {
    if (g.controls.size() != controls || g.targets.size() != targets) {
      malformed(g, "expected " + std::to_string(controls) + " controls and " +
                       std::to_string(targets) + " targets");
    }
  };
  switch (g.kind) {
    case GateKind::kH:
    case GateKind::kX:
      shape(0, 1);
      break;
    case GateKind::kCnot:
      shape(1, 1);
      break;
    case GateKind::kToffoli:
      shape(2, 1);
      break;
    case GateKind::kCswap:
      shape(1, 2);
      break;
    case GateKind::kQubitPerm: {
      shape(0, static_cast<std::size_t>(qubit_count));
      break;
    }
    case GateKind::kOracleXor: {
      if (g.controls.empty() || g.targets.empty()) malformed(g, "empty register");
      if (g.controls.size() > 30 || g.targets.size() > 63) malformed(g, "register too wide");
      if (!g.table || g.table->size() != (std::size_t{1} << g.controls.size())) {
        malformed(g, "table must have 2^inputs entries");
      }
      const auto limit = std::uint64_t{1} << g.targets.size();
      for (auto v : *g.table) {
        if (v >= limit) malformed(g, "table entry wider than output register");
      }
      break;
    }
  }
  check_qubits(g, qubit_count);
}

std::uint64_t bit(int q) { return std::uint64_t{1} << q; }

std::uint64_t gather(std::uint64_t index, std::span<const int> qubits) {
  std::uint64_t v = 0;
  for (std::size_t k = 0; k < qubits.size(); ++k) v |= ((index >> qubits[k]) & 1u) << k;
  return v;
}

std::uint64_t scatter(std::uint64_t value, std::span<const int> qubits) {
  std::uint64_t v = 0;
  for (std::size_t k = 0; k < qubits.size(); ++k) v |= ((value >> k) & 1u) << qubits[k];
  return v;
}

std::uint64_t sample_outcome(const std::vector<double>& probs, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = u(rng);
  double acc = 0.0;
  std::uint64_t last_nonzero = 0;
  for (std::uint64_t k = 0; k < probs.size(); ++k) {
    if (probs[k] <= 0.0) continue;
    last_nonzero = k;
    acc += probs[k];
    if (r < acc) return k;
  }
  return last_nonzero;
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k.name;
  }
  return "?";
}

GateKind parse_gate_kind(std::string_view name) {
  for (const auto& k : kKinds) {
    if (k.name == name) return k.kind;
  }
  throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

Circuit::Circuit(int qubit_count) : qubit_count_(qubit_count) {
  if (qubit_count < 1) throw std::invalid_argument("circuit needs at least one qubit");
}

Circuit& Circuit::add(Gate gate) {
  validate(gate, qubit_count_);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::h(int q) { return add({GateKind::kH, {}, {q}, nullptr}); }
Circuit& Circuit::x(int q) { return add({GateKind::kX, {}, {q}, nullptr}); }
Circuit& Circuit::cnot(int c, int t) { return add({GateKind::kCnot, {c}, {t}, nullptr}); }

Circuit& Circuit::toffoli(int c1, int c2, int t) {
  return add({GateKind::kToffoli, {c1, c2}, {t}, nullptr});
}

Circuit& Circuit::cswap(int c, int a, int b) {
  return add({GateKind::kCswap, {c}, {a, b}, nullptr});
}

Circuit& Circuit::permute(std::vector<int> new_positions) {
  return add({GateKind::kQubitPerm, {}, std::move(new_positions), nullptr});
}

Circuit& Circuit::oracle_xor(std::vector<int> inputs, std::vector<int> outputs,
                             std::vector<std::uint64_t> table) {
  return add({GateKind::kOracleXor, std::move(inputs), std::move(outputs),
              std::make_shared<const std::vector<std::uint64_t>>(std::move(table))});
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.qubit_count_ > qubit_count_) {
    throw std::invalid_argument("appended circuit uses more qubits");
  }
  for (const auto& g : other.gates_) {
    if (g.kind == GateKind::kQubitPerm && other.qubit_count_ != qubit_count_) {
      Gate widened = g;
      for (int q = other.qubit_count_; q < qubit_count_; ++q) widened.targets.push_back(q);
      add(std::move(widened));
    } else {
      gates_.push_back(g);
    }
  }
  return *this;
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(), [kind](const Gate& g) { return g.kind == kind; }));
}

Circuit Circuit::expand_cswaps() const {
  Circuit out(qubit_count_);
  for (const auto& g : gates_) {
    if (g.kind != GateKind::kCswap) {
      out.gates_.push_back(g);
      continue;
    }
    const int c = g.controls[0], a = g.targets[0], b = g.targets[1];
    out.toffoli(c, a, b).toffoli(c, b, a).toffoli(c, a, b);
  }
  return out;
}

StateVector::StateVector(int qubit_count) : qubit_count_(qubit_count) {
  if (qubit_count < 1 || qubit_count > kMaxSimulatedQubits) {
    throw CapacityError("simulator supports 1.." + std::to_string(kMaxSimulatedQubits) +
                        " qubits, got " + std::to_string(qubit_count));
  }
  amps_.assign(std::size_t{1} << qubit_count, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::basis(int qubit_count, std::uint64_t index) {
  StateVector s(qubit_count);
  if (index >= s.dimension()) throw std::out_of_range("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(int qubit_count, std::vector<Amplitude> amps) {
  StateVector s(qubit_count);
  if (amps.size() != s.dimension()) {
    throw std::invalid_argument("amplitude vector has wrong dimension");
  }
  s.amps_ = std::move(amps);
  return s;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

void StateVector::apply(const Gate& g) {
  const std::uint64_t dim = amps_.size();
#ifndef NDEBUG
  const double before = norm();
#endif
  switch (g.kind) {
    case GateKind::kH: {
      const auto m = bit(g.targets[0]);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & m) continue;
        const auto a = amps_[i], b = amps_[i | m];
        amps_[i] = (a + b) * kInvSqrt2;
        amps_[i | m] = (a - b) * kInvSqrt2;
      }
      break;
    }
    case GateKind::kX: {
      const auto m = bit(g.targets[0]);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if (!(i & m)) std::swap(amps_[i], amps_[i | m]);
      }
      break;
    }
    case GateKind::kCnot:
    case GateKind::kToffoli: {
      std::uint64_t cm = 0;
      for (int c : g.controls) cm |= bit(c);
      const auto tm = bit(g.targets[0]);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & cm) == cm && !(i & tm)) std::swap(amps_[i], amps_[i | tm]);
      }
      break;
    }
    case GateKind::kCswap: {
      const auto cm = bit(g.controls[0]);
      const auto am = bit(g.targets[0]), bm = bit(g.targets[1]);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & cm) && (i & am) && !(i & bm)) std::swap(amps_[i], amps_[i ^ am ^ bm]);
      }
      break;
    }
    case GateKind::kQubitPerm: {
      std::vector<Amplitude> out(dim);
      for (std::uint64_t i = 0; i < dim; ++i) {
        std::uint64_t j = 0;
        for (int q = 0; q < qubit_count_; ++q) j |= ((i >> q) & 1u) << g.targets[static_cast<std::size_t>(q)];
        out[j] = amps_[i];
      }
      amps_ = std::move(out);
      break;
    }
    case GateKind::kOracleXor: {
      std::vector<Amplitude> out(dim);
      const auto& table = *g.table;
      for (std::uint64_t i = 0; i < dim; ++i) {
        const auto mask = scatter(table[gather(i, g.controls)], g.targets);
        out[i ^ mask] = amps_[i];
      }
      amps_ = std::move(out);
      break;
    }
  }
  assert(std::abs(norm() - before) <= 1e-12 * std::max(1.0, before) && "norm drift");
}

void StateVector::apply(const Circuit& circuit) {
  if (circuit.qubit_count() != qubit_count_) {
    throw std::invalid_argument("circuit has " + std::to_string(circuit.qubit_count()) +
                                " qubits, state has " + std::to_string(qubit_count_));
  }
  for (const auto& g : circuit.gates()) apply(g);
}

void StateVector::collapse(std::span<const int> qubits, std::uint64_t outcome) {
  double kept = 0.0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (gather(i, qubits) == outcome) {
      kept += std::norm(amps_[i]);
    } else {
      amps_[i] = 0.0;
    }
  }
  if (kept <= 0.0) throw std::logic_error("collapse onto a zero-probability outcome");
  const double scale = 1.0 / std::sqrt(kept);
  for (auto& a : amps_) a *= scale;
}

StateVector run_circuit(const Circuit& circuit, StateVector state) {
  state.apply(circuit);
  return state;
}

std::vector<double> marginal_probabilities(const StateVector& state,
                                           std::span<const int> qubits) {
  if (qubits.empty()) throw std::invalid_argument("no qubits to measure");
  for (int q : qubits) {
    if (q < 0 || q >= state.qubit_count()) throw std::invalid_argument("qubit out of range");
  }
  std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) probs[gather(i, qubits)] += std::norm(amps[i]);
  return probs;
}

Measurement measure(const StateVector& state, std::span<const int> qubits, Rng& rng) {
  StateVector collapsed = state;
  const auto probs = marginal_probabilities(state, qubits);
  const auto outcome = sample_outcome(probs, rng);
  collapsed.collapse(qubits, outcome);
  return Measurement{outcome, probs[outcome], std::move(collapsed)};
}

std::uint64_t measure_in_place(StateVector& state, std::span<const int> qubits, Rng& rng) {
  const auto probs = marginal_probabilities(state, qubits);
  const auto outcome = sample_outcome(probs, rng);
  state.collapse(qubits, outcome);
  return outcome;
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  ComplexMatrix out(a.dim_);
  for (std::size_t r = 0; r < a.dim_; ++r) {
    for (std::size_t k = 0; k < a.dim_; ++k) {
      const auto v = a(r, k);
      if (v == Amplitude{}) continue;
      for (std::size_t c = 0; c < a.dim_; ++c) out(r, c) += v * b(k, c);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  }
  return worst;
}

double unitarity_defect(const ComplexMatrix& m) {
  return max_abs_diff(m * m.adjoint(), ComplexMatrix::identity(m.dim()));
}

ComplexMatrix circuit_to_matrix(const Circuit& circuit) {
  if (circuit.qubit_count() > kMaxMatrixQubits) {
    throw CapacityError("circuit_to_matrix supports at most " +
                        std::to_string(kMaxMatrixQubits) + " qubits");
  }
  const std::size_t dim = std::size_t{1} << circuit.qubit_count();
  ComplexMatrix m(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const auto out = run_circuit(circuit, StateVector::basis(circuit.qubit_count(), col));
    for (std::size_t row = 0; row < dim; ++row) m(row, col) = out[row];
  }
  return m;
}

}  // namespace whsp
