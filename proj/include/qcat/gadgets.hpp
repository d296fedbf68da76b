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
#include <string>
#include <vector>

#include "qcat/circuit.hpp"
#include "qcat/concat.hpp"
#include "qcat/decode.hpp"
#include "qcat/transversal.hpp"

namespace qcat {

/// Block-level building blocks of a logical gate. Blocks are numbered across
/// registers: block b of register r is r * outer.n + b.
struct BlockOp {
  enum class Kind {
    Cnot,      // pairwise CNOT between two blocks (15 physical CNOTs)
    Diagonal,  // per-qubit T^k pattern realizing an inner logical diagonal
    BlackBoxH, // inner logical H with no physical expansion
  };
  Kind kind;
  uint32_t block = 0;       // Diagonal/BlackBoxH target; Cnot control
  uint32_t target = 0;      // Cnot target block
  DiagonalPattern pattern;  // Diagonal only
  UnitaryKind bare_gate = UnitaryKind::Nop;  // what the op reduces to bare
};

struct Gadget {
  std::string name;
  int registers = 1;
  std::vector<BlockOp> plan;
  EcSchedule schedule = EcSchedule::InnerOnly;
  bool block_abstract = false;  // true when the plan contains black boxes
};

/// Fig.-2-style logical T: two nested pairwise-CNOT conjugation pairs around
/// one blockwise T pattern, wired on the canonical outer logical-Z support.
Gadget build_logical_t_gadget(const ConcatLayout& layout);
/// One black-box inner logical H per block.
Gadget build_logical_h_gadget(const ConcatLayout& layout);
/// Pairwise physical CNOT between two full registers.
Gadget build_logical_cnot_gadget(const ConcatLayout& layout);
/// Global diagonal pattern realizing logical S.
Gadget build_logical_s_gadget(const ConcatLayout& layout);

/// Physical expansion of the plan on registers * total_qubits qubits.
Circuit gadget_physical_circuit(const Gadget& g, const ConcatLayout& layout);
/// One bare qubit per block; block gates become their bare counterparts.
Circuit bare_reduction(const Gadget& g, const ConcatLayout& layout);

/// Single-block inner EC: per-qubit fault points, an atomic slice measuring
/// all inner generators, the lookup correction, then trailing fault points.
Circuit build_inner_ec(const ConcatLayout& layout, size_t block, const DecodeTables& tables);
/// Outer EC: fault points on the register, the six lifted outer generators
/// measured as single observables, then block-level logical corrections.
Circuit build_outer_ec(const ConcatLayout& layout, const DecodeTables& tables);

enum class FaultModel { Locations, BlockErrors };

/// A gadget together with its scheduled EC and one trailing ideal two-level
/// round; the unit over which fault-tolerance is decided.
struct ExRec {
  std::string name;
  std::shared_ptr<const ConcatLayout> layout;
  DecodeTables tables;
  Gadget gadget;
  Circuit circuit;  // gadget + scheduled EC (faultable) + ideal round
  int registers = 1;
  FaultModel fault_model = FaultModel::Locations;

  size_t register_qubits() const { return layout->total_qubits; }
};

ExRec build_exrec(const Gadget& g, std::shared_ptr<const ConcatLayout> layout,
                  const DecodeTables& tables);
/// Identity gadget: scheduled inner + outer EC with no preceding gates.
ExRec build_ec_only_exrec(std::shared_ptr<const ConcatLayout> layout,
                          const DecodeTables& tables);

std::string gadget_to_text(const Gadget& g, const ConcatLayout& layout);

/// Requirement 1: every physical gate touches at most one qubit per block.
bool gadget_is_block_transversal(const Gadget& g, const ConcatLayout& layout);
/// Requirement 2: an EC circuit couples no data qubits (no two-qubit unitary
/// gates; only Pauli observables and Pauli corrections).
bool ec_is_globally_transversal(const Circuit& ec);
size_t max_measured_observable_weight(const Circuit& c);

}  // namespace qcat
