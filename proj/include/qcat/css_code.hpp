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

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcat/gf2.hpp"
#include "qcat/pauli.hpp"

namespace qcat {

/// Thrown when an exhaustive enumeration would exceed its configured budget.
/// Callers get an explicit refusal rather than an approximate answer.
struct EnumerationBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// CSS stabilizer code: X-type checks (hx rows), Z-type checks (hz rows) and
/// logical X/Z representative supports.
struct CssCode {
  BitMatrix hx;
  BitMatrix hz;
  std::vector<BitVector> lx;
  std::vector<BitVector> lz;

  size_t n() const { return hx.cols(); }
  size_t k() const { return lx.size(); }
  size_t generator_count() const { return hx.rows() + hz.rows(); }
};

enum class ViolationKind {
  Shape,
  CssOrthogonality,
  LogicalCount,
  LogicalNormalizer,
  LogicalCommutation,
  KMismatch,
};

struct Violation {
  ViolationKind kind;
  std::string detail;
};

/// [[7,1,3]] code: hx = hz = the 3x7 matrix whose column j is the binary
/// representation of j+1 (row r = bit r).
CssCode build_steane();

/// [[15,1,3]] punctured Reed-Muller code: hx = 4x15 binary columns of 1..15,
/// hz = those four rows plus their six pairwise AND products.
CssCode build_rm15();

/// Assembles a code from explicit parts. Logicals are taken as given.
CssCode make_css(BitMatrix hx, BitMatrix hz, std::vector<BitVector> lx,
                 std::vector<BitVector> lz);

/// Checks every structural invariant; returns all violations found, never throws.
std::vector<Violation> validate(const CssCode& c);

/// Concatenation of (hz * e.x) and (hx * e.z) over GF(2).
BitVector syndrome(const CssCode& c, const Pauli& e);
/// Same bits packed into an integer, component k at bit k. Requires <= 64 bits.
uint64_t syndrome_bits(const CssCode& c, const Pauli& e);

/// Per logical qubit: (anticommutes with lz_i, anticommutes with lx_i), i.e.
/// (X-logical content, Z-logical content). Requires zero syndrome.
std::vector<std::pair<bool, bool>> logical_class(const CssCode& c, const Pauli& e);

/// (dx, dz) by exhaustive coset enumeration:
/// dx = min weight over nullspace(hz) \ rowspace(hx), dz symmetric.
/// Throws EnumerationBudgetExceeded when 2^dim exceeds `enumeration_limit`.
std::pair<size_t, size_t> distance_xz(const CssCode& c,
                                      uint64_t enumeration_limit = uint64_t{1} << 22);

/// Minimal-weight representative of seed + rowspace(side); ties broken by the
/// least value as an integer with bit 0 least significant.
BitVector canonical_coset_rep(const BitMatrix& side, const BitVector& seed,
                              uint64_t enumeration_limit = uint64_t{1} << 22);

/// Text format: header "n k", hx rows, blank line, hz rows, blank line,
/// then the k lx rows followed by the k lz rows. Qubit 0 leftmost.
std::string code_to_text(const CssCode& c);
CssCode code_from_text(std::string_view text);

}  // namespace qcat
