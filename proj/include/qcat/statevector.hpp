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

#include <array>
#include <complex>
#include <vector>

#include "qcat/circuit.hpp"
#include "qcat/css_code.hpp"

namespace qcat {

/// Dense statevector on up to 16 qubits. Qubit j is bit j of the basis index.
class StateVector {
 public:
  static constexpr size_t kMaxQubits = 16;

  explicit StateVector(size_t n);
  static StateVector basis_state(size_t n, uint64_t index);

  size_t n() const { return n_; }
  std::complex<double>& amp(uint64_t index) { return amps_[index]; }
  const std::complex<double>& amp(uint64_t index) const { return amps_[index]; }
  size_t dim() const { return amps_.size(); }

  double norm() const;
  std::complex<double> inner(const StateVector& other) const;

  void apply(const UnitaryGate& g);
  /// Unitary segments only: throws on measurement/decode/block gates.
  void apply_circuit(const Circuit& c);
  void apply_pauli(const Pauli& p);

 private:
  size_t n_;
  std::vector<std::complex<double>> amps_;
};

/// amp0 |0_L> + amp1 |1_L>, with |b_L> the normalized uniform sum over
/// {v + b*lx : v in rowspace(hx)}.
StateVector encode_logical(const CssCode& c, std::complex<double> amp0,
                           std::complex<double> amp1);

struct LogicalActionResult {
  bool preserves_codespace = false;
  double leakage = 0.0;                        // worst off-codespace norm seen
  std::array<std::complex<double>, 4> matrix;  // row-major 2x2, valid when preserving
};

/// Induced logical action of a unitary circuit on a k=1 code, from the images
/// of |0_L>, |1_L> and a |+_L> consistency check.
LogicalActionResult logical_action(const CssCode& c, const Circuit& circ,
                                   double tolerance = 1e-8);

bool matrices_equal_up_to_phase(const std::array<std::complex<double>, 4>& a,
                                const std::array<std::complex<double>, 4>& b,
                                double tolerance = 1e-8);

std::array<std::complex<double>, 4> unitary_matrix_2x2(UnitaryKind kind);

/// Exact check that pairwise CNOT between two blocks of the code acts as
/// logical CNOT, computed on the sparse codeword expansion; usable past the
/// dense qubit ceiling.
bool transversal_cnot_is_logical_cnot(const CssCode& c);

}  // namespace qcat
