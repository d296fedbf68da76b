// Copyright 2026 The qcat Authors
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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qcat {

/// Fixed-length vector over GF(2). Bit i is coordinate/qubit i; addition is XOR.
/// Unused high bits of the last word are kept zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(size_t bits);
  static BitVector from_string(std::string_view s);
  static BitVector from_support(size_t bits, std::initializer_list<uint32_t> support);
  static BitVector from_support(size_t bits, const std::vector<uint32_t>& support);

  size_t size() const { return bits_; }
  bool get(size_t i) const;
  void set(size_t i, bool value);

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  BitVector operator&(const BitVector& other) const;

  size_t weight() const;
  bool is_zero() const;
  /// GF(2) inner product (parity of the AND).
  bool dot(const BitVector& other) const;

  /// XORs `src` into this vector starting at bit `offset`.
  void xor_shifted(const BitVector& src, size_t offset);
  BitVector slice(size_t begin, size_t count) const;

  /// Packs the bits into an integer, bit 0 least significant. Requires size() <= 64.
  uint64_t to_uint() const;
  /// Bit 0 printed leftmost.
  std::string to_string() const;

  bool operator==(const BitVector&) const = default;
  /// Total order: by length, then by value with bit 0 least significant.
  std::strong_ordering operator<=>(const BitVector& other) const;

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  size_t bits_ = 0;
  std::vector<uint64_t> words_;
};

/// Rectangular matrix over GF(2), stored as rows. All rows share one width,
/// which is tracked even when there are no rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(size_t rows, size_t cols);
  static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
  static BitMatrix identity(size_t n);

  size_t rows() const { return rows_.size(); }
  size_t cols() const { return cols_; }
  const BitVector& row(size_t i) const { return rows_[i]; }
  BitVector& row(size_t i) { return rows_[i]; }
  /// Throws std::invalid_argument on width mismatch (ragged input).
  void append_row(BitVector v);

  bool operator==(const BitMatrix&) const = default;

 private:
  size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RowReduction {
  BitMatrix rref;  // same row count as the input; zero rows collected at the bottom
  size_t rank = 0;
  std::vector<uint32_t> pivot_cols;
};

RowReduction gf2_row_reduce(const BitMatrix& m);
size_t gf2_rank(const BitMatrix& m);

/// Basis of {v : m v = 0}, one row per free column, in ascending free-column order.
BitMatrix gf2_nullspace(const BitMatrix& m);

/// Membership of v in the row space described by a reduction of the generating set.
bool gf2_in_rowspace(const RowReduction& reduced, BitVector v);
bool gf2_same_rowspace(const BitMatrix& a, const BitMatrix& b);

}  // namespace qcat
