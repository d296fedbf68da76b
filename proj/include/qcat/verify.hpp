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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcat/gadgets.hpp"

namespace qcat {

struct FailureRecord {
  uint64_t case_index = 0;
  std::vector<std::string> faults;
  int branch = -1;
  std::string residual_pauli;
  std::string logical_class;  // per register, e.g. "10" or "10|00"
};

struct VerificationReport {
  std::string gadget;
  uint64_t cases = 0;
  uint64_t passes = 0;
  std::vector<FailureRecord> failures;
  std::string config_hash;
  double wall_seconds = 0.0;  // not part of the serialized report
};

struct CaseOutcome {
  bool pass = true;
  int failed_branch = -1;
  std::string residual;
  std::string logical_class;
};

/// Runs one fault case through the exRec: propagate through the circuit for
/// location faults, or inject the block error ahead of the decode pipeline.
CaseOutcome run_case(const ExRec& ex, std::span<const FaultEvent> faults);

/// Every location x every supported fault, all T-branches required to pass.
/// jobs == 1 runs the serial reference implementation; jobs > 1 the OpenMP
/// path. Reports are identical for any jobs value.
VerificationReport run_single_fault_campaign(const ExRec& ex, int jobs = 1);

/// Block-error fault in one coset-representative form per (block, class,
/// syndrome) triple, injected after the gadget.
VerificationReport run_block_error_campaign(const ExRec& ex, int jobs = 1);

/// Block-error cases enumerated by run_block_error_campaign, exposed for
/// replay: case index -> the injected residual.
Pauli block_error_case(const ExRec& ex, uint64_t case_index);

struct DoubleFaultOutcome {
  std::optional<FailureRecord> witness;
  uint64_t examined = 0;
  bool exhausted = false;  // budget or search space ran out with no witness
  VerificationReport report;
  /// Set alongside `witness` for location-model exRecs so the pair can be
  /// replayed through run_case.
  std::vector<FaultEvent> witness_faults;
  /// Set alongside `witness` for block-model exRecs (the two injected block
  /// errors, full register width).
  std::vector<Pauli> witness_block_errors;
};

/// Ordered pair scan for a weight-2 counterexample. The order puts same-block
/// pairs first for location-model exRecs and distinct-block pairs first for
/// block-model exRecs, then falls back to the full pair order. `budget` caps
/// the number of examined pairs.
DoubleFaultOutcome search_double_fault(const ExRec& ex, uint64_t budget, int jobs = 1);

std::string report_to_json(const VerificationReport& report);

uint64_t fnv1a64(std::string_view text);

}  // namespace qcat
