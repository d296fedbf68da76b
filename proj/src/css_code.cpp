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

#include "qcat/css_code.hpp"

#include <bit>
#include <sstream>

namespace qcat {

namespace {

BitMatrix binary_column_checks(size_t rows, size_t n) {
  BitMatrix m(rows, n);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t j = 0; j < n; ++j) {
      if (((j + 1) >> r) & 1) m.row(r).set(j, true);
    }
  }
  return m;
}

/// For a k=1 code: picks the coset leader of the nontrivial normalizer coset
/// on one side (nullspace of `other_side` modulo rowspace of `same_side`).
BitVector canonical_logical(const BitMatrix& same_side, const BitMatrix& other_side) {
  BitMatrix normalizer = gf2_nullspace(other_side);
  RowReduction same = gf2_row_reduce(same_side);
  for (size_t i = 0; i < normalizer.rows(); ++i) {
    if (!gf2_in_rowspace(same, normalizer.row(i))) {
      return canonical_coset_rep(same_side, normalizer.row(i));
    }
  }
  throw std::logic_error("canonical_logical: no logical operator found (k == 0?)");
}

}  // namespace

CssCode build_steane() {
  BitMatrix h = binary_column_checks(3, 7);
  CssCode c;
  c.hx = h;
  c.hz = h;
  c.lx.push_back(canonical_logical(c.hx, c.hz));
  c.lz.push_back(canonical_logical(c.hz, c.hx));
  return c;
}

CssCode build_rm15() {
  CssCode c;
  c.hx = binary_column_checks(4, 15);
  c.hz = c.hx;
  for (size_t a = 0; a < 4; ++a) {
    for (size_t b = a + 1; b < 4; ++b) {
      c.hz.append_row(c.hx.row(a) & c.hx.row(b));
    }
  }
  c.lx.push_back(canonical_logical(c.hx, c.hz));
  c.lz.push_back(canonical_logical(c.hz, c.hx));
  return c;
}

CssCode make_css(BitMatrix hx, BitMatrix hz, std::vector<BitVector> lx,
                 std::vector<BitVector> lz) {
  CssCode c;
  c.hx = std::move(hx);
  c.hz = std::move(hz);
  c.lx = std::move(lx);
  c.lz = std::move(lz);
  return c;
}

std::vector<Violation> validate(const CssCode& c) {
  std::vector<Violation> out;
  size_t n = c.n();
  if (c.hz.cols() != n) {
    out.push_back({ViolationKind::Shape, "hx and hz widths differ"});
    return out;
  }
  for (const BitVector& v : c.lx) {
    if (v.size() != n) out.push_back({ViolationKind::Shape, "lx width mismatch"});
  }
  for (const BitVector& v : c.lz) {
    if (v.size() != n) out.push_back({ViolationKind::Shape, "lz width mismatch"});
  }
  if (!out.empty()) return out;

  for (size_t i = 0; i < c.hx.rows(); ++i) {
    for (size_t j = 0; j < c.hz.rows(); ++j) {
      if (c.hx.row(i).dot(c.hz.row(j))) {
        out.push_back({ViolationKind::CssOrthogonality,
                       "hx row " + std::to_string(i) + " not orthogonal to hz row " +
                           std::to_string(j)});
      }
    }
  }

  if (c.lx.size() != c.lz.size()) {
    out.push_back({ViolationKind::LogicalCount, "lx and lz counts differ"});
    return out;
  }
  size_t k = c.lx.size();
  size_t rank_sum = gf2_rank(c.hx) + gf2_rank(c.hz);
  if (n < rank_sum || n - rank_sum != k) {
    out.push_back({ViolationKind::KMismatch,
                   "k = " + std::to_string(k) + " but n - rank(hx) - rank(hz) = " +
                       std::to_string(static_cast<long long>(n) -
                                      static_cast<long long>(rank_sum))});
  }

  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < c.hz.rows(); ++j) {
      if (c.lx[i].dot(c.hz.row(j))) {
        out.push_back({ViolationKind::LogicalNormalizer,
                       "lx " + std::to_string(i) + " anticommutes with hz row " +
                           std::to_string(j)});
      }
    }
    for (size_t j = 0; j < c.hx.rows(); ++j) {
      if (c.lz[i].dot(c.hx.row(j))) {
        out.push_back({ViolationKind::LogicalNormalizer,
                       "lz " + std::to_string(i) + " anticommutes with hx row " +
                           std::to_string(j)});
      }
    }
    for (size_t j = 0; j < k; ++j) {
      bool want = (i == j);
      if (c.lx[i].dot(c.lz[j]) != want) {
        out.push_back({ViolationKind::LogicalCommutation,
                       "lx " + std::to_string(i) + " / lz " + std::to_string(j) +
                           (want ? " must anticommute" : " must commute")});
      }
    }
  }
  return out;
}

BitVector syndrome(const CssCode& c, const Pauli& e) {
  if (e.n() != c.n()) throw std::invalid_argument("syndrome: length mismatch");
  BitVector s(c.hz.rows() + c.hx.rows());
  for (size_t i = 0; i < c.hz.rows(); ++i) {
    if (c.hz.row(i).dot(e.x())) s.set(i, true);
  }
  for (size_t i = 0; i < c.hx.rows(); ++i) {
    if (c.hx.row(i).dot(e.z())) s.set(c.hz.rows() + i, true);
  }
  return s;
}

uint64_t syndrome_bits(const CssCode& c, const Pauli& e) { return syndrome(c, e).to_uint(); }

std::vector<std::pair<bool, bool>> logical_class(const CssCode& c, const Pauli& e) {
  if (!syndrome(c, e).is_zero()) {
    throw std::logic_error("logical_class: nonzero syndrome");
  }
  std::vector<std::pair<bool, bool>> cls;
  cls.reserve(c.k());
  for (size_t i = 0; i < c.k(); ++i) {
    bool x_content = e.x().dot(c.lz[i]);
    bool z_content = e.z().dot(c.lx[i]);
    cls.emplace_back(x_content, z_content);
  }
  return cls;
}

namespace {

/// Min weight over nullspace(killer) \ rowspace(member_side).
size_t coset_min_weight(const BitMatrix& member_side, const BitMatrix& killer,
                        uint64_t enumeration_limit) {
  BitMatrix basis = gf2_nullspace(killer);
  if (basis.rows() >= 63 || (uint64_t{1} << basis.rows()) > enumeration_limit) {
    throw EnumerationBudgetExceeded("distance enumeration over 2^" +
                                    std::to_string(basis.rows()) + " words refused");
  }
  RowReduction member = gf2_row_reduce(member_side);
  size_t best = SIZE_MAX;
  uint64_t total = uint64_t{1} << basis.rows();
  BitVector v(killer.cols());
  for (uint64_t code = 0; code < total; ++code) {
    if (code != 0) {
      // Gray-code walk: flip one basis vector per step.
      uint64_t gray_bit = std::countr_zero(code);
      v ^= basis.row(gray_bit);
    }
    if (v.is_zero()) continue;
    size_t w = v.weight();
    if (w < best && !gf2_in_rowspace(member, v)) best = w;
  }
  if (best == SIZE_MAX) throw std::logic_error("distance: no logical operator exists");
  return best;
}

}  // namespace

std::pair<size_t, size_t> distance_xz(const CssCode& c, uint64_t enumeration_limit) {
  size_t dx = coset_min_weight(c.hx, c.hz, enumeration_limit);
  size_t dz = coset_min_weight(c.hz, c.hx, enumeration_limit);
  return {dx, dz};
}

BitVector canonical_coset_rep(const BitMatrix& side, const BitVector& seed,
                              uint64_t enumeration_limit) {
  RowReduction red = gf2_row_reduce(side);
  if (red.rank >= 63 || (uint64_t{1} << red.rank) > enumeration_limit) {
    throw EnumerationBudgetExceeded("coset enumeration over 2^" +
                                    std::to_string(red.rank) + " words refused");
  }
  BitVector best = seed;
  BitVector v = seed;
  uint64_t total = uint64_t{1} << red.rank;
  for (uint64_t code = 1; code < total; ++code) {
    uint64_t gray_bit = std::countr_zero(code);
    v ^= red.rref.row(gray_bit);
    if (v.weight() < best.weight() || (v.weight() == best.weight() && v < best)) {
      best = v;
    }
  }
  return best;
}

std::string code_to_text(const CssCode& c) {
  std::ostringstream out;
  out << c.n() << ' ' << c.k() << '\n';
  for (size_t i = 0; i < c.hx.rows(); ++i) out << c.hx.row(i).to_string() << '\n';
  out << '\n';
  for (size_t i = 0; i < c.hz.rows(); ++i) out << c.hz.row(i).to_string() << '\n';
  out << '\n';
  for (const BitVector& v : c.lx) out << v.to_string() << '\n';
  for (const BitVector& v : c.lz) out << v.to_string() << '\n';
  return out.str();
}

CssCode code_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  size_t n = 0, k = 0;
  if (!(in >> n >> k)) throw std::invalid_argument("code text: bad header");
  std::string line;
  std::getline(in, line);

  auto read_block = [&](BitMatrix& m) {
    m = BitMatrix(0, n);
    while (std::getline(in, line) && !line.empty()) {
      if (line.size() != n) throw std::invalid_argument("code text: bad row width");
      m.append_row(BitVector::from_string(line));
    }
  };
  CssCode c;
  read_block(c.hx);
  read_block(c.hz);
  for (size_t i = 0; i < 2 * k; ++i) {
    if (!std::getline(in, line) || line.size() != n) {
      throw std::invalid_argument("code text: missing logical row");
    }
    (i < k ? c.lx : c.lz).push_back(BitVector::from_string(line));
  }
  return c;
}

}  // namespace qcat
