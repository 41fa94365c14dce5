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

#include "whsp/qft.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "whsp/wreath.hpp"

namespace whsp {
namespace {

void check_dense(int n) {
  if (n < 1 || n > kMaxDenseQftArity) {
    throw CapacityError("dense Fourier matrices need 1 <= n <= " +
                        std::to_string(kMaxDenseQftArity) + ", got n=" + std::to_string(n));
  }
}

void add_swap_block(Circuit& c, int n) {
  for (int i = 0; i < n; ++i) c.cswap(2 * n, i, n + i);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.dim() * b.dim());
  for (std::size_t r1 = 0; r1 < a.dim(); ++r1)
    for (std::size_t c1 = 0; c1 < a.dim(); ++c1)
      for (std::size_t r2 = 0; r2 < b.dim(); ++r2)
        for (std::size_t c2 = 0; c2 < b.dim(); ++c2)
          out(r1 * b.dim() + r2, c1 * b.dim() + c2) = a(r1, c1) * b(r2, c2);
  return out;
}

}  // namespace

QftBundle qft_circuit(int n, QftVariant variant) {
  if (n < 1 || n > kMaxQftCircuitArity) {
    throw CapacityError("qft_circuit needs 1 <= n <= " + std::to_string(kMaxQftCircuitArity));
  }
  Circuit c(index_bits(n));
  // Gates are listed in application order, i.e. the matrix product read
  // right to left.
  if (variant == QftVariant::kSymmetric) add_swap_block(c, n);
  c.h(2 * n);
  add_swap_block(c, n);
  for (int q = 0; q < 2 * n; ++q) c.h(q);

  const auto toffolis = 3 * c.count(GateKind::kCswap) + c.count(GateKind::kToffoli);
  const auto hadamards = c.count(GateKind::kH);
  return QftBundle{n, std::move(c), toffolis, hadamards};
}

ComplexMatrix qft_matrix_block(int n) {
  check_dense(n);
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix h(2);
  h(0, 0) = s;
  h(0, 1) = s;
  h(1, 0) = s;
  h(1, 1) = -s;

  // Qubit 0 is the least significant index bit, so it is the rightmost
  // Kronecker factor. All factors are equal here, so order is immaterial.
  ComplexMatrix a = h;
  for (int q = 1; q < 2 * n; ++q) a = kron(h, a);

  const std::size_t half = a.dim();
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  ComplexMatrix swap(half);
  for (std::uint64_t w = 0; w < half; ++w) {
    const std::uint64_t swapped = ((w & mask) << n) | ((w >> n) & mask);
    swap(swapped, w) = 1.0;
  }
  const ComplexMatrix a_swap = a * swap;

  ComplexMatrix m(2 * half);
  for (std::size_t r = 0; r < half; ++r) {
    for (std::size_t c = 0; c < half; ++c) {
      m(r, c) = s * a(r, c);
      m(r, c + half) = s * a_swap(r, c);
      m(r + half, c) = s * a_swap(r, c);
      m(r + half, c + half) = -s * a(r, c);
    }
  }
  return m;
}

ComplexMatrix qft_matrix_entrywise(int n) {
  check_dense(n);
  const auto dim = group_size(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  ComplexMatrix m(dim);
  for (std::uint64_t g = 0; g < dim; ++g) {
    for (std::uint64_t h = 0; h < dim; ++h) {
      const bool odd = mu(GroupElement::from_index(n, g), GroupElement::from_index(n, h));
      m(g, h) = odd ? -scale : scale;
    }
  }
  return m;
}

std::vector<std::vector<int>> qft_sign_matrix(int n) {
  check_dense(n);
  const auto dim = group_size(n);
  std::vector<std::vector<int>> rows(dim, std::vector<int>(dim));
  for (std::uint64_t g = 0; g < dim; ++g) {
    for (std::uint64_t h = 0; h < dim; ++h) rows[g][h] = mu_index(n, g, h) ? -1 : 1;
  }
  return rows;
}

StateVector uniform_superposition(const ElementSet& s) {
  if (s.empty()) throw std::invalid_argument("uniform_superposition of an empty set");
  std::vector<Amplitude> amps(group_size(s.arity()), Amplitude{});
  const double a = 1.0 / std::sqrt(static_cast<double>(s.size()));
  for (auto i : s.indices()) amps[i] = a;
  return StateVector::from_amplitudes(index_bits(s.arity()), std::move(amps));
}

StateVector fourier_transform(int n, StateVector state) {
  return run_circuit(qft_circuit(n).circuit, std::move(state));
}

std::vector<GateCountRow> gate_count_report(int n_max) {
  if (n_max < 1 || n_max > kMaxQftCircuitArity) {
    throw CapacityError("gate_count_report needs 1 <= n_max <= " +
                        std::to_string(kMaxQftCircuitArity));
  }
  std::vector<GateCountRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const auto b = qft_circuit(n);
    rows.push_back({n, b.hadamard_count, b.toffoli_count, b.hadamard_count + b.toffoli_count});
  }
  return rows;
}

}  // namespace whsp
