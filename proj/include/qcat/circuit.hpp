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

#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qcat/decode.hpp"
#include "qcat/pauli.hpp"

namespace qcat {

enum class UnitaryKind : uint8_t { X, Y, Z, H, S, Sdg, T, Tdg, Cnot, Nop };

struct UnitaryGate {
  UnitaryKind kind;
  uint32_t q0 = 0;
  uint32_t q1 = 0;  // Cnot target; unused otherwise
};

struct MeasureGate {
  Pauli observable;  // arbitrary Pauli observable
  uint32_t bit = 0;  // classical output bit
};

/// Applies `correction` when the recorded classical bit is 1.
struct CorrectGate {
  Pauli correction;
  uint32_t bit = 0;
};

/// Applies table->correction(s) at `qubit_offset`, where s is read from the
/// classical bits [bit_first, bit_first + bit_count), bit k at value 2^k.
struct DecodeGate {
  std::shared_ptr<const LookupTable> table;
  uint32_t bit_first = 0;
  uint32_t bit_count = 0;
  uint32_t qubit_offset = 0;
};

/// Black-box block gate with no Pauli conjugation semantics (used for the
/// non-transversal inner logical gates the construction treats abstractly).
struct BlockGate {
  std::string name;
  uint32_t block = 0;
};

using Gate = std::variant<UnitaryGate, MeasureGate, CorrectGate, DecodeGate, BlockGate>;

struct Circuit {
  size_t n_qubits = 0;
  size_t n_bits = 0;
  std::vector<Gate> gates;
  /// Steps at index >= fault_boundary are ideal: they contribute no fault
  /// locations. Defaults past the end (everything faultable).
  size_t fault_boundary = SIZE_MAX;

  size_t effective_boundary() const {
    return fault_boundary == SIZE_MAX ? gates.size() : fault_boundary;
  }

  void unitary(UnitaryKind kind, uint32_t q0, uint32_t q1 = 0);
  uint32_t measure(Pauli observable);  // returns the assigned bit
  void decode(std::shared_ptr<const LookupTable> table, uint32_t bit_first,
              uint32_t bit_count, uint32_t qubit_offset);

  /// Checks qubit/bit ranges and that classical bits are written before read.
  void check_valid() const;
};

struct Location {
  enum class Kind : uint8_t { Input, AfterGate, MeasurementFlip };
  Kind kind;
  uint32_t index;  // qubit | gate step | classical bit

  bool operator==(const Location&) const = default;
};

struct FaultEvent {
  Location location;
  Pauli pauli;  // full circuit width; empty (n=0) for measurement flips
};

/// Deterministic order: inputs, after-gate locations in step order (unitary
/// gates before the fault boundary only), then measurement flips in step order.
std::vector<Location> enumerate_locations(const Circuit& c);

/// The nontrivial faults supported at one location: 3 single-qubit Paulis, 15
/// two-qubit Paulis for a Cnot, one flip event for a measurement.
std::vector<FaultEvent> fault_alphabet(const Circuit& c, const Location& loc);

/// Clifford conjugation g p g^dagger with exact phase. Throws on T/Tdg acting
/// on X or Y content (that case branches) and on black-box gates.
Pauli conjugate_clifford(const UnitaryGate& g, Pauli p);

/// Branch form of conjugation: singleton for Clifford gates; for T/Tdg with X
/// or Y content on the target, the two-element {X, Y} replacement with phases
/// dropped.
std::vector<Pauli> conjugate_pauli(const UnitaryGate& g, const Pauli& p);

struct Branch {
  Pauli residual;
  std::vector<uint8_t> bits;
};

/// Pushes the given faults through the circuit. Measurement outcomes record
/// the deviation from the fault-free run: a bit reads 1 iff the pending
/// residual anticommutes with the observable, xored with any injected flip.
std::vector<Branch> propagate(const Circuit& c, std::span<const FaultEvent> faults);

std::string location_to_string(const Circuit& c, const Location& loc);
std::string gate_to_text(const Gate& g);
std::string circuit_to_text(const Circuit& c);

}  // namespace qcat
