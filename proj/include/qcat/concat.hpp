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

#include <vector>

#include "qcat/css_code.hpp"

namespace qcat {

/// One level of concatenation: every qubit of `outer` is encoded in `inner`.
/// Physical qubit (block b, position p) sits at index b * inner.n + p.
struct ConcatLayout {
  CssCode outer;
  CssCode inner;
  size_t block_count = 0;
  size_t total_qubits = 0;

  /// The concatenated code itself, as a flat CSS code on total_qubits qubits.
  /// hx rows: inner hx per block (block-major), then lifted outer hx rows.
  /// hz rows: inner hz per block, then lifted outer hz rows.
  CssCode lifted;

  size_t qubit(size_t block, size_t pos) const { return block * inner.n() + pos; }

  /// Supports of the lifted outer generators (outer check rows with each
  /// outer qubit replaced by the inner logical representative).
  std::vector<BitVector> outer_lifted_x;
  std::vector<BitVector> outer_lifted_z;

  /// Inner logical X/Z embedded on one block of the full register.
  Pauli block_logical_x(size_t block) const;
  Pauli block_logical_z(size_t block) const;

  /// All 104 (for Steane x RM15) lifted stabilizer generators as Paulis,
  /// inner X checks, inner Z checks, lifted outer X, lifted outer Z.
  std::vector<Pauli> lifted_generator_paulis() const;
};

/// Requires outer.k == inner.k == 1.
ConcatLayout concatenate(const CssCode& outer, const CssCode& inner);

size_t max_lifted_outer_generator_weight(const ConcatLayout& layout);

}  // namespace qcat
