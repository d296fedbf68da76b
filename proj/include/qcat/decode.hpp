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
#include <vector>

#include "qcat/concat.hpp"
#include "qcat/css_code.hpp"

namespace qcat {

/// Syndrome -> minimum-weight correction, one entry per syndrome value.
/// Entry order matches syndrome_bits packing (component k at bit k).
struct LookupTable {
  size_t width = 0;          // qubit count of each entry
  size_t syndrome_bits = 0;  // table has 2^syndrome_bits entries
  std::vector<Pauli> entries;

  const Pauli& correction(uint64_t syndrome) const { return entries[syndrome]; }
  uint64_t content_hash() const;
};

/// Builds the full table by enumerating Paulis in increasing weight; among
/// equal-weight candidates for one syndrome the entry with the least
/// (x-bits, z-bits) value wins. Throws EnumerationBudgetExceeded when the
/// syndrome space exceeds `max_syndrome_bits`.
std::shared_ptr<const LookupTable> build_lookup(const CssCode& c,
                                                size_t max_syndrome_bits = 14);

/// Audit export: one "syndrome-hex pauli" line per entry.
std::string table_to_text(const LookupTable& t);

enum class EcSchedule {
  InnerOnly,       // after gates built from inner-transversal block gates
  InnerThenOuter,  // after outer-transversal gates with non-transversal insides
};

struct DecodeTables {
  std::shared_ptr<const LookupTable> inner;
  std::shared_ptr<const LookupTable> outer;
  static DecodeTables build(const ConcatLayout& layout);
};

struct BlockDecodeOutcome {
  size_t block = 0;
  uint64_t syndrome = 0;
  Pauli correction;               // block-width
  std::pair<bool, bool> cls{false, false};  // inner logical class after correction
};

/// Independently decodes every block of `residual` against the inner code.
/// Returns per-block outcomes; `residual` is updated to the corrected Pauli.
std::vector<BlockDecodeOutcome> decode_inner(const ConcatLayout& layout, Pauli& residual,
                                             const LookupTable& inner_table);

struct OuterDecodeOutcome {
  uint64_t syndrome = 0;
  Pauli bare_correction;                    // on outer.n "qubits" (blocks)
  std::pair<bool, bool> global_class{false, false};
};

/// Treats per-block X/Z classes as two outer error vectors and decodes them
/// with the outer lookup table.
OuterDecodeOutcome decode_outer(const ConcatLayout& layout,
                                const std::vector<std::pair<bool, bool>>& block_classes,
                                const LookupTable& outer_table);

/// Physical outer EC round applied to a residual: measures the lifted outer
/// generators (anticommutation), applies the lifted decoded correction.
uint64_t apply_outer_ec(const ConcatLayout& layout, const LookupTable& outer_table,
                        Pauli& residual);
/// Physical inner EC round on one block of the residual.
uint64_t apply_inner_ec(const ConcatLayout& layout, const LookupTable& inner_table,
                        size_t block, Pauli& residual);

struct PipelineOutcome {
  bool pass = true;
  int failed_branch = -1;
  Pauli residual;                           // final residual of the failing branch
  std::pair<bool, bool> cls{false, false};  // its global logical class
};

/// Runs scheduled EC then one ideal two-level round on every branch; passes
/// iff every branch ends with global logical class (0,0). Residuals must be
/// full-register Paulis.
PipelineOutcome residual_logical_action(const ConcatLayout& layout,
                                        std::span<const Pauli> branches,
                                        EcSchedule schedule, const DecodeTables& tables);

}  // namespace qcat
