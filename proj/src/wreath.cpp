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

#include "whsp/wreath.hpp"

#include <vector>

#include "whsp/f2.hpp"

namespace whsp {
namespace {

void check_arity(int n) {
  if (n < 1 || n > kMaxArity) {
    throw std::invalid_argument("arity must be in [1, " +
                                std::to_string(kMaxArity) + "], got " +
                                std::to_string(n));
  }
}

void check_same_arity(const GroupElement& g, const GroupElement& h) {
  if (g.arity() != h.arity()) {
    throw std::invalid_argument("arity mismatch: " +
                                std::to_string(g.arity()) + " vs " +
                                std::to_string(h.arity()));
  }
}

std::uint64_t parse_bits(std::string_view s, int width, std::string_view what,
                         std::string_view literal) {
  if (static_cast<int>(s.size()) != width) {
    throw ParseError("element literal '" + std::string(literal) + "': " +
                     std::string(what) + " must have " +
                     std::to_string(width) + " binary digits");
  }
  std::uint64_t v = 0;
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw ParseError("element literal '" + std::string(literal) +
                       "': invalid digit '" + std::string(1, c) + "' in " +
                       std::string(what));
    }
    v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

std::string format_bits(std::uint64_t v, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if ((v >> i) & 1u) s[static_cast<std::size_t>(width - 1 - i)] = '1';
  }
  return s;
}

}  // namespace

std::uint64_t group_size(int n) {
  check_arity(n);
  return std::uint64_t{1} << index_bits(n);
}

GroupElement::GroupElement(int n, std::uint64_t x, std::uint64_t y, bool a)
    : n_(n), bits_(0) {
  check_arity(n);
  if ((x >> n) != 0 || (y >> n) != 0) {
    throw std::invalid_argument("component wider than arity " +
                                std::to_string(n));
  }
  bits_ = x | (y << n) | (static_cast<std::uint64_t>(a) << (2 * n));
}

GroupElement GroupElement::identity(int n) { return GroupElement(n, 0, 0, false); }

GroupElement GroupElement::swap(int n) { return GroupElement(n, 0, 0, true); }

GroupElement GroupElement::from_index(int n, std::uint64_t index) {
  check_arity(n);
  if ((index >> index_bits(n)) != 0) {
    throw std::out_of_range("group index " + std::to_string(index) +
                            " out of range for n=" + std::to_string(n));
  }
  return GroupElement(n, index);
}

GroupElement GroupElement::parse(int n, std::string_view literal) {
  check_arity(n);
  const auto p1 = literal.find('|');
  const auto p2 = p1 == std::string_view::npos ? p1 : literal.find('|', p1 + 1);
  if (p1 == std::string_view::npos || p2 == std::string_view::npos ||
      literal.find('|', p2 + 1) != std::string_view::npos) {
    throw ParseError("element literal '" + std::string(literal) +
                     "' must have the form x|y|a");
  }
  const auto x = parse_bits(literal.substr(0, p1), n, "x", literal);
  const auto y = parse_bits(literal.substr(p1 + 1, p2 - p1 - 1), n, "y", literal);
  const auto a = parse_bits(literal.substr(p2 + 1), 1, "a", literal);
  return GroupElement(n, x, y, a != 0);
}

std::string GroupElement::to_string() const {
  return format_bits(x(), n_) + "|" + format_bits(y(), n_) + "|" +
         (a() ? "1" : "0");
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  check_same_arity(g, h);
  return GroupElement::from_index(g.arity(), multiply_index(g.arity(), g.index(), h.index()));
}

GroupElement inverse(const GroupElement& g) {
  if (!g.a()) return g;
  return GroupElement(g.arity(), g.y(), g.x(), true);
}

GroupElement conjugate(const GroupElement& u, const GroupElement& g) {
  check_same_arity(u, g);
  return inverse(g) * u * g;
}

int element_order(const GroupElement& g) {
  const auto e = GroupElement::identity(g.arity());
  auto p = g;
  int k = 1;
  while (p != e) {
    p = p * g;
    ++k;
  }
  return k;
}

std::uint64_t phi_word(const GroupElement& g) {
  if (!g.a()) return g.index();
  return GroupElement(g.arity(), g.y(), g.x(), true).index();
}

GroupElement phi_inv_word(int n, std::uint64_t v) {
  const auto g = GroupElement::from_index(n, v);
  if (!g.a()) return g;
  return GroupElement(n, g.y(), g.x(), true);
}

BitVector phi(const GroupElement& g) {
  return BitVector::from_word(phi_word(g),
                              static_cast<std::size_t>(index_bits(g.arity())));
}

GroupElement phi_inv(int n, const BitVector& v) {
  check_arity(n);
  if (v.size() != static_cast<std::size_t>(index_bits(n))) {
    throw std::invalid_argument("phi_inv: expected a vector of length " +
                                std::to_string(index_bits(n)) + ", got " +
                                std::to_string(v.size()));
  }
  return phi_inv_word(n, v.to_word());
}

bool mu(const GroupElement& g, const GroupElement& h) {
  check_same_arity(g, h);
  return (__builtin_popcountll(phi_word(g) & phi_word(h)) & 1) != 0;
}

}  // namespace whsp
