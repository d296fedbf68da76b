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

#include "qcat/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace qcat {

namespace {
constexpr size_t kWordBits = 64;

size_t word_count(size_t bits) { return (bits + kWordBits - 1) / kWordBits; }
}  // namespace

BitVector::BitVector(size_t bits) : bits_(bits), words_(word_count(bits), 0) {}

BitVector BitVector::from_string(std::string_view s) {
  BitVector v(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      v.set(i, true);
    } else if (s[i] != '0') {
      throw std::invalid_argument("BitVector::from_string: expected only '0'/'1'");
    }
  }
  return v;
}

BitVector BitVector::from_support(size_t bits, std::initializer_list<uint32_t> support) {
  return from_support(bits, std::vector<uint32_t>(support));
}

BitVector BitVector::from_support(size_t bits, const std::vector<uint32_t>& support) {
  BitVector v(bits);
  for (uint32_t i : support) {
    v.set(i, true);
  }
  return v;
}

bool BitVector::get(size_t i) const {
  if (i >= bits_) throw std::out_of_range("BitVector::get");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
}

void BitVector::set(size_t i, bool value) {
  if (i >= bits_) throw std::out_of_range("BitVector::set");
  uint64_t mask = uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.bits_ != bits_) throw std::invalid_argument("BitVector xor: length mismatch");
  for (size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
  return *this;
}

BitVector BitVector::operator&(const BitVector& other) const {
  if (other.bits_ != bits_) throw std::invalid_argument("BitVector and: length mismatch");
  BitVector out(bits_);
  for (size_t w = 0; w < words_.size(); ++w) {
    out.words_[w] = words_[w] & other.words_[w];
  }
  return out;
}

size_t BitVector::weight() const {
  size_t total = 0;
  for (uint64_t w : words_) {
    total += static_cast<size_t>(std::popcount(w));
  }
  return total;
}

bool BitVector::is_zero() const {
  for (uint64_t w : words_) {
    if (w) return false;
  }
  return true;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.bits_ != bits_) throw std::invalid_argument("BitVector dot: length mismatch");
  uint64_t acc = 0;
  for (size_t w = 0; w < words_.size(); ++w) {
    acc ^= words_[w] & other.words_[w];
  }
  return std::popcount(acc) & 1;
}

void BitVector::xor_shifted(const BitVector& src, size_t offset) {
  if (offset + src.bits_ > bits_) throw std::out_of_range("BitVector::xor_shifted");
  size_t word = offset / kWordBits;
  size_t shift = offset % kWordBits;
  for (size_t w = 0; w < src.words_.size(); ++w) {
    uint64_t v = src.words_[w];
    words_[word + w] ^= v << shift;
    if (shift != 0 && word + w + 1 < words_.size()) {
      words_[word + w + 1] ^= v >> (kWordBits - shift);
    }
  }
}

BitVector BitVector::slice(size_t begin, size_t count) const {
  if (begin + count > bits_) throw std::out_of_range("BitVector::slice");
  BitVector out(count);
  for (size_t i = 0; i < count; ++i) {
    if (get(begin + i)) out.set(i, true);
  }
  return out;
}

uint64_t BitVector::to_uint() const {
  if (bits_ > kWordBits) throw std::invalid_argument("BitVector::to_uint: too wide");
  return words_.empty() ? 0 : words_[0];
}

std::string BitVector::to_string() const {
  std::string s(bits_, '0');
  for (size_t i = 0; i < bits_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::strong_ordering BitVector::operator<=>(const BitVector& other) const {
  if (bits_ != other.bits_) return bits_ <=> other.bits_;
  for (size_t w = words_.size(); w-- > 0;) {
    if (words_[w] != other.words_[w]) return words_[w] <=> other.words_[w];
  }
  return std::strong_ordering::equal;
}

BitMatrix::BitMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  BitMatrix m;
  bool first = true;
  for (std::string_view s : rows) {
    if (first) {
      m.cols_ = s.size();
      first = false;
    }
    m.append_row(BitVector::from_string(s));
  }
  return m;
}

BitMatrix BitMatrix::identity(size_t n) {
  BitMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) {
    m.row(i).set(i, true);
  }
  return m;
}

void BitMatrix::append_row(BitVector v) {
  if (rows_.empty() && cols_ == 0) {
    cols_ = v.size();
  }
  if (v.size() != cols_) throw std::invalid_argument("BitMatrix: ragged row");
  rows_.push_back(std::move(v));
}

RowReduction gf2_row_reduce(const BitMatrix& m) {
  RowReduction out;
  out.rref = m;
  size_t pivot_row = 0;
  for (size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    size_t found = pivot_row;
    while (found < m.rows() && !out.rref.row(found).get(col)) ++found;
    if (found == m.rows()) continue;
    std::swap(out.rref.row(pivot_row), out.rref.row(found));
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r != pivot_row && out.rref.row(r).get(col)) {
        out.rref.row(r) ^= out.rref.row(pivot_row);
      }
    }
    out.pivot_cols.push_back(static_cast<uint32_t>(col));
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

size_t gf2_rank(const BitMatrix& m) { return gf2_row_reduce(m).rank; }

BitMatrix gf2_nullspace(const BitMatrix& m) {
  RowReduction red = gf2_row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (uint32_t c : red.pivot_cols) is_pivot[c] = true;

  BitMatrix basis(0, m.cols());
  for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    BitVector v(m.cols());
    v.set(free_col, true);
    for (size_t p = 0; p < red.rank; ++p) {
      if (red.rref.row(p).get(free_col)) {
        v.set(red.pivot_cols[p], true);
      }
    }
    basis.append_row(std::move(v));
  }
  return basis;
}

bool gf2_in_rowspace(const RowReduction& reduced, BitVector v) {
  if (v.size() != reduced.rref.cols()) {
    throw std::invalid_argument("gf2_in_rowspace: width mismatch");
  }
  for (size_t p = 0; p < reduced.rank; ++p) {
    if (v.get(reduced.pivot_cols[p])) {
      v ^= reduced.rref.row(p);
    }
  }
  return v.is_zero();
}

bool gf2_same_rowspace(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) return false;
  RowReduction ra = gf2_row_reduce(a);
  RowReduction rb = gf2_row_reduce(b);
  if (ra.rank != rb.rank) return false;
  for (size_t i = 0; i < b.rows(); ++i) {
    if (!gf2_in_rowspace(ra, b.row(i))) return false;
  }
  return true;
}

}  // namespace qcat
