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

#ifndef WHSP_F2_HPP_
#define WHSP_F2_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace whsp {

/// A vector over F_2 packed into 64-bit words. Coordinate i lives in bit
/// i % 64 of word i / 64; bits beyond size() are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len);

  static BitVector from_word(std::uint64_t word, std::size_t len);
  /// Parses a string of '0'/'1' characters, coordinate 0 first.
  static BitVector parse(std::string_view s);

  std::size_t size() const { return len_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool v);
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  bool is_zero() const;
  /// Index of the lowest set coordinate, or size() for the zero vector.
  std::size_t lowest_set() const;
  /// Requires size() <= 64.
  std::uint64_t to_word() const;
  /// Coordinate 0 first.
  std::string to_string() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend bool operator<(const BitVector& a, const BitVector& b);

  friend bool dot(const BitVector& a, const BitVector& b);

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Rectangular matrix over F_2 stored as rows.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t cols) : cols_(cols) {}
  BitMatrix(std::size_t cols, std::vector<BitVector> rows);

  static BitMatrix identity(std::size_t n);

  std::size_t cols() const { return cols_; }
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<BitVector>& rows() const { return rows_; }
  void add_row(BitVector row);

  /// Computes m * v.
  BitVector apply(const BitVector& v) const;

 private:
  std::size_t cols_;
  std::vector<BitVector> rows_;
};

/// Reduced row-echelon basis of the span of `vectors`: nonzero rows sorted
/// by ascending pivot (lowest set coordinate), each pivot column cleared in
/// every other row. Two sets span the same space iff their rref() agree.
std::vector<BitVector> rref(std::vector<BitVector> vectors);

std::size_t rank(const BitMatrix& m);

/// Basis of {v : m v = 0}, in reduced row-echelon form.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

bool span_contains(const std::vector<BitVector>& basis, const BitVector& v);

/// Basis of the vectors orthogonal to every input vector under the standard
/// inner product; equals kernel_basis of the matrix with those rows.
std::vector<BitVector> orthogonal_complement(const std::vector<BitVector>& basis,
                                             std::size_t ambient_len);

bool same_span(const std::vector<BitVector>& a, const std::vector<BitVector>& b);

/// Incrementally maintained echelon basis for streaming span growth.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t len) : len_(len) {}
  /// Adds v; returns true iff the span grew.
  bool insert(const BitVector& v);
  bool contains(const BitVector& v) const;
  std::size_t dimension() const { return rows_.size(); }
  std::vector<BitVector> basis() const { return rref(rows_); }

 private:
  BitVector reduce(BitVector v) const;
  std::size_t len_;
  std::vector<BitVector> rows_;  // pivots pairwise distinct
};

}  // namespace whsp

#endif  // WHSP_F2_HPP_
