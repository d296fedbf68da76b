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

#include "qcat/verify.hpp"

#include <memory>
#include <random>

#include "doctest.h"

using namespace qcat;

namespace {

std::shared_ptr<const ConcatLayout> layout() {
  static const auto kLayout =
      std::make_shared<const ConcatLayout>(concatenate(build_steane(), build_rm15()));
  return kLayout;
}

const DecodeTables& tables() {
  static const DecodeTables kTables = DecodeTables::build(*layout());
  return kTables;
}

const ExRec& t_exrec() {
  static const ExRec kExRec =
      build_exrec(build_logical_t_gadget(*layout()), layout(), tables());
  return kExRec;
}

const ExRec& h_exrec() {
  static const ExRec kExRec =
      build_exrec(build_logical_h_gadget(*layout()), layout(), tables());
  return kExRec;
}

uint64_t expected_case_count(const ExRec& ex) {
  uint64_t total = 0;
  for (const Location& loc : enumerate_locations(ex.circuit)) {
    total += fault_alphabet(ex.circuit, loc).size();
  }
  return total;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("single-fault campaign over the T exrec has zero failures") {
  VerificationReport report = run_single_fault_campaign(t_exrec());
  CHECK(report.cases == expected_case_count(t_exrec()));
  CHECK(report.failures.empty());
  CHECK(report.passes == report.cases);
}

TEST_CASE("single-fault campaign over the S exrec has zero failures") {
  ExRec s = build_exrec(build_logical_s_gadget(*layout()), layout(), tables());
  VerificationReport report = run_single_fault_campaign(s);
  CHECK(report.cases == expected_case_count(s));
  CHECK(report.failures.empty());
}

TEST_CASE("single-fault campaign over the EC-only exrec has zero failures") {
  ExRec ec = build_ec_only_exrec(layout(), tables());
  VerificationReport report = run_single_fault_campaign(ec);
  CHECK(report.cases == expected_case_count(ec));
  CHECK(report.failures.empty());
}

TEST_CASE("single-fault campaign over the CNOT exrec has zero failures") {
  ExRec cnot = build_exrec(build_logical_cnot_gadget(*layout()), layout(), tables());
  VerificationReport report = run_single_fault_campaign(cnot);
  CHECK(report.cases == expected_case_count(cnot));
  CHECK(report.failures.empty());
}

TEST_CASE("block-error campaign over the H exrec covers 458752 cases cleanly") {
  VerificationReport report = run_block_error_campaign(h_exrec());
  CHECK(report.cases == 7 * 65536);
  CHECK(report.failures.empty());
  CHECK(report.passes == report.cases);
}

TEST_CASE("reports are deterministic and independent of parallelism") {
  VerificationReport serial = run_single_fault_campaign(t_exrec(), 1);
  VerificationReport again = run_single_fault_campaign(t_exrec(), 1);
  VerificationReport parallel = run_single_fault_campaign(t_exrec(), 3);
  CHECK(report_to_json(serial) == report_to_json(again));
  CHECK(report_to_json(serial) == report_to_json(parallel));

  VerificationReport hs = run_block_error_campaign(h_exrec(), 1);
  VerificationReport hp = run_block_error_campaign(h_exrec(), 3);
  CHECK(report_to_json(hs) == report_to_json(hp));
}

TEST_CASE("double-fault search finds a witness on the T exrec") {
  DoubleFaultOutcome out = search_double_fault(t_exrec(), 10'000'000);
  REQUIRE(out.witness.has_value());
  CHECK(out.witness->logical_class != "00");
  REQUIRE(out.witness_faults.size() == 2);

  // the witness replays deterministically
  CaseOutcome replay = run_case(t_exrec(), out.witness_faults);
  CHECK(!replay.pass);
  CHECK(replay.logical_class == out.witness->logical_class);
  CHECK(replay.residual == out.witness->residual_pauli);

  // and the search itself is reproducible
  DoubleFaultOutcome again = search_double_fault(t_exrec(), 10'000'000);
  CHECK(report_to_json(out.report) == report_to_json(again.report));
  DoubleFaultOutcome parallel = search_double_fault(t_exrec(), 10'000'000, 3);
  CHECK(report_to_json(out.report) == report_to_json(parallel.report));
}

TEST_CASE("double-fault search finds a two-block witness on the H exrec") {
  DoubleFaultOutcome out = search_double_fault(h_exrec(), 1'000'000);
  REQUIRE(out.witness.has_value());
  REQUIRE(out.witness_block_errors.size() == 2);

  Pauli combined = out.witness_block_errors[0] * out.witness_block_errors[1];
  auto result = residual_logical_action(*layout(), std::span(&combined, 1),
                                        EcSchedule::InnerThenOuter, tables());
  CHECK(!result.pass);
}

TEST_CASE("double-fault search respects a zero budget") {
  DoubleFaultOutcome out = search_double_fault(t_exrec(), 0);
  CHECK(!out.witness.has_value());
  CHECK(out.exhausted);
  CHECK(out.examined == 0);
}

TEST_CASE("block error cases cover each coset exactly once") {
  const ExRec& h = h_exrec();
  // spot-check block/class/syndrome decomposition round trip
  for (uint64_t idx : {uint64_t{0}, uint64_t{16383}, uint64_t{16384}, uint64_t{65536},
                       uint64_t{7 * 65536 - 1}}) {
    Pauli e = block_error_case(h, idx);
    CHECK(e.n() == 105);
  }
  // case 0 is the identity representative
  CHECK(block_error_case(h, 0).is_trivial());
}

TEST_CASE("circuit-embedded EC agrees with the decode pipeline") {
  // For errors injected ahead of all EC, the in-circuit route (measure gates
  // plus decode gates under propagate) and the pipeline route must agree on
  // outcome and final class.
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<size_t> pos(0, 14);
  std::uniform_int_distribution<int> coin(0, 9);
  const char kinds[] = {'I', 'X', 'Y', 'Z'};
  ExRec ec = build_ec_only_exrec(layout(), tables());

  for (int trial = 0; trial < 60; ++trial) {
    Pauli e = Pauli::identity(105);
    for (size_t b = 0; b < 7; ++b) {
      char kind = kinds[pick(rng)];
      if (kind != 'I') e.mul_at(Pauli::single(15, pos(rng), kind), b * 15);
      if (coin(rng) == 0) e.mul_at(Pauli::x_type(layout()->inner.lx[0]), b * 15);
      if (coin(rng) == 0) e.mul_at(Pauli::z_type(layout()->inner.lz[0]), b * 15);
    }
    FaultEvent f{{Location::Kind::Input, 0}, e};
    CaseOutcome circuit_route = run_case(ec, std::span(&f, 1));
    auto pipeline_route = residual_logical_action(*layout(), std::span(&e, 1),
                                                  EcSchedule::InnerThenOuter, tables());
    CHECK(circuit_route.pass == pipeline_route.pass);
    if (!circuit_route.pass) {
      std::string cls;
      cls += pipeline_route.cls.first ? '1' : '0';
      cls += pipeline_route.cls.second ? '1' : '0';
      CHECK(circuit_route.logical_class == cls);
    }
  }
}

TEST_CASE("json report schema") {
  VerificationReport report = run_single_fault_campaign(t_exrec());
  std::string json = report_to_json(report);
  CHECK(json.find("\"gadget\": \"T\"") != std::string::npos);
  CHECK(json.find("\"cases\"") != std::string::npos);
  CHECK(json.find("\"passes\"") != std::string::npos);
  CHECK(json.find("\"failures\"") != std::string::npos);
  CHECK(json.find("\"config_hash\"") != std::string::npos);
}

}  // TEST_SUITE
