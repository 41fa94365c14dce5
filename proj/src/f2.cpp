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

#include "whsp/f2.hpp"

#include <algorithm>
#include <stdexcept>

#include "whsp/wreath.hpp"

namespace whsp {
namespace {

void check_len(std::size_t expected, std::size_t got, const char* where) {
  if (expected != got) {
    throw std::invalid_argument(std::string(where) + ": length mismatch (" +
                                std::to_string(expected) + " vs " +
                                std::to_string(got) + ")");
  }
}

// In-place Gauss-Jordan. Returns the pivot column of each surviving row.
std::vector<std::size_t> eliminate(std::vector<BitVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && !rows[sel].get(c)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

BitVector::BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

BitVector BitVector::from_word(std::uint64_t word, std::size_t len) {
  if (len > 64) throw std::invalid_argument("from_word: length exceeds 64");
  if (len < 64 && (word >> len) != 0) {
    throw std::invalid_argument("from_word: bits set beyond length");
  }
  BitVector v(len);
  if (len > 0) v.words_[0] = word;
  return v;
}

BitVector BitVector::parse(std::string_view s) {
  BitVector v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      v.set(i, true);
    } else if (s[i] != '0') {
      throw ParseError("bit string '" + std::string(s) + "' has invalid digit");
    }
  }
  return v;
}

void BitVector::set(std::size_t i, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (v) {
    words_[i / 64] |= bit;
  } else {
    words_[i / 64] &= ~bit;
  }
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::lowest_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
    }
  }
  return len_;
}

std::uint64_t BitVector::to_word() const {
  if (len_ > 64) throw std::invalid_argument("to_word: length exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_len(len_, other.len_, "xor");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool operator<(const BitVector& a, const BitVector& b) {
  if (a.len_ != b.len_) return a.len_ < b.len_;
  return a.words_ < b.words_;
}

bool dot(const BitVector& a, const BitVector& b) {
  check_len(a.len_, b.len_, "dot");
  int parity = 0;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    parity ^= __builtin_popcountll(a.words_[w] & b.words_[w]) & 1;
  }
  return parity != 0;
}

BitMatrix::BitMatrix(std::size_t cols, std::vector<BitVector> rows) : cols_(cols) {
  for (auto& r : rows) add_row(std::move(r));
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    BitVector r(n);
    r.set(i, true);
    m.add_row(std::move(r));
  }
  return m;
}

void BitMatrix::add_row(BitVector row) {
  check_len(cols_, row.size(), "BitMatrix::add_row");
  rows_.push_back(std::move(row));
}

BitVector BitMatrix::apply(const BitVector& v) const {
  check_len(cols_, v.size(), "BitMatrix::apply");
  BitVector out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out.set(i, dot(rows_[i], v));
  return out;
}

std::vector<BitVector> rref(std::vector<BitVector> vectors) {
  if (vectors.empty()) return vectors;
  const std::size_t cols = vectors.front().size();
  for (const auto& v : vectors) check_len(cols, v.size(), "rref");
  eliminate(vectors, cols);
  return vectors;
}

std::size_t rank(const BitMatrix& m) {
  auto rows = m.rows();
  return eliminate(rows, m.cols()).size();
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
  auto rows = m.rows();
  const auto pivots = eliminate(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector v(m.cols());
    v.set(f, true);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].get(f)) v.set(pivots[r], true);
    }
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis));
}

bool span_contains(const std::vector<BitVector>& basis, const BitVector& v) {
  SpanBuilder span(v.size());
  for (const auto& b : basis) {
    check_len(v.size(), b.size(), "span_contains");
    span.insert(b);
  }
  return span.contains(v);
}

std::vector<BitVector> orthogonal_complement(const std::vector<BitVector>& basis,
                                             std::size_t ambient_len) {
  return kernel_basis(BitMatrix(ambient_len, basis));
}

bool same_span(const std::vector<BitVector>& a, const std::vector<BitVector>& b) {
  return rref(a) == rref(b);
}

BitVector SpanBuilder::reduce(BitVector v) const {
  for (const auto& r : rows_) {
    if (v.get(r.lowest_set())) v ^= r;
  }
  return v;
}

bool SpanBuilder::insert(const BitVector& v) {
  check_len(len_, v.size(), "SpanBuilder::insert");
  auto r = reduce(v);
  if (r.is_zero()) return false;
  // Keep pivots unique: clear the new pivot from existing rows.
  const auto p = r.lowest_set();
  for (auto& row : rows_) {
    if (row.get(p)) row ^= r;
  }
  rows_.push_back(std::move(r));
  return true;
}

bool SpanBuilder::contains(const BitVector& v) const {
  check_len(len_, v.size(), "SpanBuilder::contains");
  return reduce(v).is_zero();
}

}  // namespace whsp
