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
#include <optional>
#include <vector>

#include "qcat/css_code.hpp"

namespace qcat {

/// Per-qubit diagonal pattern: gate on qubit j is T^{k_j} (exponents mod 8;
/// k = 2 gives S up to phase, k = 4 gives Z).
struct DiagonalPattern {
  std::vector<int> exponents;

  static DiagonalPattern uniform(size_t n, int k) {
    return DiagonalPattern{std::vector<int>(n, k)};
  }
  size_t n() const { return exponents.size(); }
};

/// Relative phases picked up by |0_L> and |1_L>, in units of pi/8 mod 16
/// (global phase already quotiented into the pair).
struct LogicalDiagonalAction {
  int p0 = 0;
  int p1 = 0;

  /// (p1 - p0) mod 16: the induced logical gate is diag(1, e^{i pi r / 8}).
  int relative() const { return ((p1 - p0) % 16 + 16) % 16; }
  std::array<std::complex<double>, 4> matrix() const;
};

/// True iff pairwise CNOT between two blocks maps every lifted generator to a
/// (+1-signed) stabilizer and acts as logical CNOT; checked constructively by
/// conjugation and group membership.
bool check_cnot_transversal(const CssCode& c);

/// True iff rowspace(hx) == rowspace(hz) and H on every qubit exchanges the
/// logical X and Z classes.
bool check_h_transversal(const CssCode& c);

/// True iff X on every qubit implements logical X and Z on every qubit
/// implements logical Z (stabilizer signs preserved).
bool check_pauli_transversal(const CssCode& c);

/// Exact phase-sum enumeration over the two X-cosets of the codespace.
/// Returns the induced diagonal logical action iff the phase is constant
/// within each coset, nullopt otherwise. Throws EnumerationBudgetExceeded
/// when rank(hx) exceeds `max_rank`.
std::optional<LogicalDiagonalAction> check_diagonal_transversal(
    const CssCode& c, const DiagonalPattern& pattern, size_t max_rank = 22);

}  // namespace qcat
