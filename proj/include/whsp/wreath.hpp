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

#ifndef WHSP_WREATH_HPP_
#define WHSP_WREATH_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace whsp {

class BitVector;

/// Largest arity whose elements fit the packed single-word layout.
inline constexpr int kMaxArity = 20;

/// Raised when an element literal or bit string cannot be parsed.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation would exceed a fixed size limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Number of elements of W_n = Z_2^n wr Z_2, i.e. 2^(2n+1).
std::uint64_t group_size(int n);

/// Number of qubits (bits) in the index encoding of W_n, i.e. 2n+1.
inline int index_bits(int n) { return 2 * n + 1; }

/// An element (x, y; a) of W_n.
///
/// Packed into one word with x in bits 0..n-1, y in bits n..2n-1 and the
/// swap bit a in bit 2n. The packed word is also the basis-state index used
/// by the simulator, so the a-bit is the most significant qubit.
class GroupElement {
 public:
  GroupElement(int n, std::uint64_t x, std::uint64_t y, bool a);

  static GroupElement identity(int n);
  /// The swap element t = (0, 0; 1).
  static GroupElement swap(int n);
  static GroupElement from_index(int n, std::uint64_t index);
  /// Parses the literal `x|y|a`, x and y written most significant bit first.
  static GroupElement parse(int n, std::string_view literal);

  int arity() const { return n_; }
  std::uint64_t x() const { return bits_ & low_mask(); }
  std::uint64_t y() const { return (bits_ >> n_) & low_mask(); }
  bool a() const { return ((bits_ >> (2 * n_)) & 1u) != 0; }
  std::uint64_t index() const { return bits_; }

  bool in_base_group() const { return !a(); }
  bool in_diagonal() const { return x() == y(); }
  bool is_identity() const { return bits_ == 0; }

  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  GroupElement(int n, std::uint64_t bits) : n_(n), bits_(bits) {}
  std::uint64_t low_mask() const { return (std::uint64_t{1} << n_) - 1; }

  int n_;
  std::uint64_t bits_;
};

/// Group law: (x,y;a)(x',y';0) = (x^x', y^y'; a) and
/// (x,y;a)(x',y';1) = (y^x', x^y'; a^1).
GroupElement multiply(const GroupElement& g, const GroupElement& h);
inline GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  return multiply(g, h);
}

GroupElement inverse(const GroupElement& g);

/// Returns g^-1 u g.
GroupElement conjugate(const GroupElement& u, const GroupElement& g);

/// Least k >= 1 with g^k = 1; always 1, 2 or 4.
int element_order(const GroupElement& g);

/// phi(x,y;0) = (x,y,0), phi(x,y;1) = (y,x,1), packed in the index layout.
std::uint64_t phi_word(const GroupElement& g);
GroupElement phi_inv_word(int n, std::uint64_t v);

BitVector phi(const GroupElement& g);
GroupElement phi_inv(int n, const BitVector& v);

/// The Z_2-valued pairing mu(g, h) = <phi(g), phi(h)> over F_2.
bool mu(const GroupElement& g, const GroupElement& h);

/// Pairing on raw indices, skipping validation. Hot loops only.
inline bool mu_index(int n, std::uint64_t g, std::uint64_t h) {
  auto fold = [n](std::uint64_t v) {
    if (((v >> (2 * n)) & 1u) == 0) return v;
    const std::uint64_t m = (std::uint64_t{1} << n) - 1;
    return (v & ~((m << n) | m)) | ((v & m) << n) | ((v >> n) & m);
  };
  return (__builtin_popcountll(fold(g) & fold(h)) & 1) != 0;
}

/// Group law on raw indices, skipping validation.
inline std::uint64_t multiply_index(int n, std::uint64_t g, std::uint64_t h) {
  const std::uint64_t m = (std::uint64_t{1} << n) - 1;
  const std::uint64_t a_bit = std::uint64_t{1} << (2 * n);
  if ((h & a_bit) == 0) return g ^ h;
  const std::uint64_t swapped =
      (g & a_bit) | ((g & m) << n) | ((g >> n) & m);
  return swapped ^ h;
}

inline bool in_N(const GroupElement& g) { return g.in_base_group(); }
inline bool in_D(const GroupElement& g) { return g.in_diagonal(); }

}  // namespace whsp

#endif  // WHSP_WREATH_HPP_
