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

#include "qcat/transversal.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "qcat/circuit.hpp"

namespace qcat {

namespace {

/// Symplectic (x|z) row of a Pauli for membership tests.
BitVector symplectic_row(const Pauli& p) {
  BitVector row(2 * p.n());
  row.xor_shifted(p.x(), 0);
  row.xor_shifted(p.z(), p.n());
  return row;
}

struct TwoBlockSetup {
  Circuit circuit;                 // pairwise CNOT, block A controls block B
  std::vector<Pauli> generators;   // stabilizer generators of both copies
  RowReduction generator_space;   // rowspace of their symplectic rows
  Pauli lx_a, lz_a, lx_b, lz_b;
};

TwoBlockSetup two_block_setup(const CssCode& c) {
  TwoBlockSetup s;
  size_t n = c.n();
  s.circuit.n_qubits = 2 * n;
  for (uint32_t q = 0; q < n; ++q) {
    s.circuit.unitary(UnitaryKind::Cnot, q, static_cast<uint32_t>(n + q));
  }
  for (size_t copy = 0; copy < 2; ++copy) {
    size_t offset = copy * n;
    for (size_t r = 0; r < c.hx.rows(); ++r) {
      s.generators.push_back(Pauli::x_type(c.hx.row(r)).embedded(2 * n, offset));
    }
    for (size_t r = 0; r < c.hz.rows(); ++r) {
      s.generators.push_back(Pauli::z_type(c.hz.row(r)).embedded(2 * n, offset));
    }
  }
  BitMatrix rows(0, 4 * n);
  for (const Pauli& g : s.generators) rows.append_row(symplectic_row(g));
  s.generator_space = gf2_row_reduce(rows);
  s.lx_a = Pauli::x_type(c.lx[0]).embedded(2 * n, 0);
  s.lz_a = Pauli::z_type(c.lz[0]).embedded(2 * n, 0);
  s.lx_b = Pauli::x_type(c.lx[0]).embedded(2 * n, n);
  s.lz_b = Pauli::z_type(c.lz[0]).embedded(2 * n, n);
  return s;
}

Pauli conjugate_through(const Circuit& circ, Pauli p) {
  for (const Gate& g : circ.gates) {
    p = conjugate_clifford(std::get<UnitaryGate>(g), std::move(p));
  }
  return p;
}

/// conj must equal target times a +1-signed stabilizer element.
bool equal_mod_stabilizer(const TwoBlockSetup& s, const Pauli& conj, const Pauli& target) {
  Pauli quotient = conj * target;
  if (quotient.phase_exponent() != 0) return false;
  return gf2_in_rowspace(s.generator_space, symplectic_row(quotient));
}

}  // namespace

std::array<std::complex<double>, 4> LogicalDiagonalAction::matrix() const {
  using cd = std::complex<double>;
  return {cd{1, 0}, cd{0, 0}, cd{0, 0},
          std::polar(1.0, std::numbers::pi * relative() / 8.0)};
}

bool check_cnot_transversal(const CssCode& c) {
  if (c.k() != 1) return false;
  TwoBlockSetup s = two_block_setup(c);
  for (const Pauli& g : s.generators) {
    Pauli conj = conjugate_through(s.circuit, g);
    if (conj.phase_exponent() != 0 ||
        !gf2_in_rowspace(s.generator_space, symplectic_row(conj))) {
      return false;
    }
  }
  return equal_mod_stabilizer(s, conjugate_through(s.circuit, s.lx_a), s.lx_a * s.lx_b) &&
         equal_mod_stabilizer(s, conjugate_through(s.circuit, s.lz_a), s.lz_a) &&
         equal_mod_stabilizer(s, conjugate_through(s.circuit, s.lx_b), s.lx_b) &&
         equal_mod_stabilizer(s, conjugate_through(s.circuit, s.lz_b), s.lz_a * s.lz_b);
}

bool check_h_transversal(const CssCode& c) {
  if (c.k() != 1) return false;
  if (!gf2_same_rowspace(c.hx, c.hz)) return false;
  // H^n exchanges X(lx) with Z(lx): logical classes must swap.
  RowReduction rz = gf2_row_reduce(c.hz);
  RowReduction rx = gf2_row_reduce(c.hx);
  return gf2_in_rowspace(rz, c.lx[0] ^ c.lz[0]) && gf2_in_rowspace(rx, c.lz[0] ^ c.lx[0]);
}

bool check_pauli_transversal(const CssCode& c) {
  if (c.k() != 1) return false;
  BitVector ones(c.n());
  for (size_t i = 0; i < c.n(); ++i) ones.set(i, true);
  // X^n: stabilizer signs survive iff every hz row has even weight; the
  // logical condition is membership of 1 + lx in rowspace(hx). Dually for Z^n.
  for (size_t r = 0; r < c.hz.rows(); ++r) {
    if (c.hz.row(r).weight() % 2) return false;
  }
  for (size_t r = 0; r < c.hx.rows(); ++r) {
    if (c.hx.row(r).weight() % 2) return false;
  }
  return gf2_in_rowspace(gf2_row_reduce(c.hx), ones ^ c.lx[0]) &&
         gf2_in_rowspace(gf2_row_reduce(c.hz), ones ^ c.lz[0]);
}

std::optional<LogicalDiagonalAction> check_diagonal_transversal(const CssCode& c,
                                                                const DiagonalPattern& pattern,
                                                                size_t max_rank) {
  if (pattern.n() != c.n()) {
    throw std::invalid_argument("check_diagonal_transversal: pattern width mismatch");
  }
  if (c.k() != 1) return std::nullopt;
  RowReduction red = gf2_row_reduce(c.hx);
  if (red.rank > max_rank) {
    throw EnumerationBudgetExceeded("diagonal phase sum over 2^" +
                                    std::to_string(red.rank) + " codewords refused");
  }

  int k_total = 0;
  for (int k : pattern.exponents) k_total += k;

  // T^k contributes exp(i pi k (2 v_j - 1) / 8) on basis bit v_j, so the
  // phase of |v> is (2 sum_j k_j v_j - k_total) in pi/8 units; constancy
  // within each coset mod 16 is exactly codespace preservation.
  auto coset_phase = [&](const BitVector& shift) -> std::optional<int> {
    std::optional<int> seen;
    BitVector v = shift;
    for (uint64_t code = 0; code < (uint64_t{1} << red.rank); ++code) {
      if (code != 0) v ^= red.rref.row(std::countr_zero(code));
      long sum = 0;
      for (size_t j = 0; j < c.n(); ++j) {
        if (v.get(j)) sum += pattern.exponents[j];
      }
      int phase = static_cast<int>((((2 * sum - k_total) % 16) + 16) % 16);
      if (!seen) {
        seen = phase;
      } else if (*seen != phase) {
        return std::nullopt;
      }
    }
    return seen;
  };

  std::optional<int> p0 = coset_phase(BitVector(c.n()));
  if (!p0) return std::nullopt;
  std::optional<int> p1 = coset_phase(c.lx[0]);
  if (!p1) return std::nullopt;
  return LogicalDiagonalAction{*p0, *p1};
}

}  // namespace qcat
