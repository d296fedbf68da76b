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

#include "qcat/concat.hpp"

#include <stdexcept>

namespace qcat {

namespace {

/// Embeds `support` of one block at the block's offset in a total-width vector.
BitVector embed(const BitVector& support, size_t total, size_t offset) {
  BitVector out(total);
  out.xor_shifted(support, offset);
  return out;
}

/// Replaces each outer qubit in `outer_row` by `inner_logical` on that block.
BitVector lift_row(const BitVector& outer_row, const BitVector& inner_logical,
                   size_t inner_n, size_t total) {
  BitVector out(total);
  for (size_t b = 0; b < outer_row.size(); ++b) {
    if (outer_row.get(b)) out.xor_shifted(inner_logical, b * inner_n);
  }
  return out;
}

}  // namespace

Pauli ConcatLayout::block_logical_x(size_t block) const {
  return Pauli::x_type(embed(inner.lx[0], total_qubits, block * inner.n()));
}

Pauli ConcatLayout::block_logical_z(size_t block) const {
  return Pauli::z_type(embed(inner.lz[0], total_qubits, block * inner.n()));
}

std::vector<Pauli> ConcatLayout::lifted_generator_paulis() const {
  std::vector<Pauli> out;
  out.reserve(lifted.generator_count());
  for (size_t i = 0; i < lifted.hx.rows(); ++i) out.push_back(Pauli::x_type(lifted.hx.row(i)));
  for (size_t i = 0; i < lifted.hz.rows(); ++i) out.push_back(Pauli::z_type(lifted.hz.row(i)));
  return out;
}

ConcatLayout concatenate(const CssCode& outer, const CssCode& inner) {
  if (outer.k() != 1 || inner.k() != 1) {
    throw std::invalid_argument("concatenate: only k = 1 codes are supported");
  }
  ConcatLayout layout;
  layout.outer = outer;
  layout.inner = inner;
  layout.block_count = outer.n();
  layout.total_qubits = outer.n() * inner.n();
  size_t total = layout.total_qubits;
  size_t inner_n = inner.n();

  CssCode& lifted = layout.lifted;
  lifted.hx = BitMatrix(0, total);
  lifted.hz = BitMatrix(0, total);
  for (size_t b = 0; b < outer.n(); ++b) {
    for (size_t r = 0; r < inner.hx.rows(); ++r) {
      lifted.hx.append_row(embed(inner.hx.row(r), total, b * inner_n));
    }
  }
  for (size_t r = 0; r < outer.hx.rows(); ++r) {
    BitVector row = lift_row(outer.hx.row(r), inner.lx[0], inner_n, total);
    layout.outer_lifted_x.push_back(row);
    lifted.hx.append_row(std::move(row));
  }
  for (size_t b = 0; b < outer.n(); ++b) {
    for (size_t r = 0; r < inner.hz.rows(); ++r) {
      lifted.hz.append_row(embed(inner.hz.row(r), total, b * inner_n));
    }
  }
  for (size_t r = 0; r < outer.hz.rows(); ++r) {
    BitVector row = lift_row(outer.hz.row(r), inner.lz[0], inner_n, total);
    layout.outer_lifted_z.push_back(row);
    lifted.hz.append_row(std::move(row));
  }

  lifted.lx.push_back(lift_row(outer.lx[0], inner.lx[0], inner_n, total));
  lifted.lz.push_back(lift_row(outer.lz[0], inner.lz[0], inner_n, total));
  return layout;
}

size_t max_lifted_outer_generator_weight(const ConcatLayout& layout) {
  size_t best = 0;
  for (const BitVector& v : layout.outer_lifted_x) best = std::max(best, v.weight());
  for (const BitVector& v : layout.outer_lifted_z) best = std::max(best, v.weight());
  return best;
}

}  // namespace qcat
