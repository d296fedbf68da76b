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

#include <string>
#include <string_view>

#include "qcat/gf2.hpp"

namespace qcat {

/// n-qubit Pauli operator, stored as i^phase * prod_j X_j^{x_j} Z_j^{z_j}.
/// The phase exponent lives in Z_4 (i^0..i^3); a bare Y on one qubit is
/// (x=1, z=1, phase=1) since Y = i X Z.
class Pauli {
 public:
  Pauli() = default;
  explicit Pauli(size_t n) : x_(n), z_(n) {}

  static Pauli identity(size_t n) { return Pauli(n); }
  static Pauli single(size_t n, size_t qubit, char kind);  // 'X', 'Y' or 'Z'
  static Pauli x_type(BitVector support);
  static Pauli z_type(BitVector support);
  static Pauli from_xz(BitVector x, BitVector z, int phase_exponent = 0);
  /// Parses "[+|-][i]<letters>", letters in {I,X,Y,Z}, qubit 0 first.
  static Pauli parse(std::string_view text);

  size_t n() const { return x_.size(); }
  const BitVector& x() const { return x_; }
  const BitVector& z() const { return z_; }
  int phase_exponent() const { return phase_; }

  /// Number of qubits acted on non-trivially.
  size_t weight() const;
  /// True when the x and z parts are zero (phase ignored).
  bool is_trivial() const { return x_.is_zero() && z_.is_zero(); }
  char at(size_t qubit) const;

  Pauli operator*(const Pauli& other) const;
  /// Multiplies by `block` embedded at qubit `offset` (phase composed exactly).
  void mul_at(const Pauli& block, size_t offset);
  bool commutes_with(const Pauli& other) const;

  Pauli embedded(size_t total, size_t offset) const;
  Pauli slice(size_t begin, size_t count) const;

  /// Dense text form, e.g. "+XIZ", "-iYY". Prefix is the literal scalar in
  /// front of the printed letters.
  std::string to_string() const;

  bool operator==(const Pauli&) const = default;

 private:
  BitVector x_, z_;
  int phase_ = 0;  // exponent of i, mod 4
};

}  // namespace qcat
