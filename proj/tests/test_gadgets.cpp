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

#include "qcat/gadgets.hpp"

#include <memory>
#include <set>

#include "doctest.h"
#include "qcat/statevector.hpp"

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

size_t count_kind(const Circuit& c, UnitaryKind kind) {
  size_t total = 0;
  for (const Gate& g : c.gates) {
    if (const auto* u = std::get_if<UnitaryGate>(&g)) {
      if (u->kind == kind) ++total;
    }
  }
  return total;
}

}  // namespace

TEST_SUITE("gadgets") {

TEST_CASE("T gadget structure") {
  Gadget t = build_logical_t_gadget(*layout());
  CHECK(t.schedule == EcSchedule::InnerOnly);
  Circuit phys = gadget_physical_circuit(t, *layout());
  CHECK(phys.n_qubits == 105);
  CHECK(phys.gates.size() == 75);
  CHECK(count_kind(phys, UnitaryKind::Cnot) == 60);
  CHECK(count_kind(phys, UnitaryKind::Tdg) == 15);

  // three participating blocks, on the outer logical-Z support
  std::set<uint32_t> blocks;
  for (const Gate& g : phys.gates) {
    const auto& u = std::get<UnitaryGate>(g);
    blocks.insert(u.q0 / 15);
    if (u.kind == UnitaryKind::Cnot) blocks.insert(u.q1 / 15);
  }
  CHECK(blocks == std::set<uint32_t>{0, 1, 2});
  CHECK(layout()->outer.lz[0] == BitVector::from_string("1110000"));

  // location counting: 105 inputs + 75 after-gate
  CHECK(enumerate_locations(phys).size() == 180);
}

TEST_CASE("T gadget is block transversal and its bare reduction is logical T") {
  Gadget t = build_logical_t_gadget(*layout());
  CHECK(gadget_is_block_transversal(t, *layout()));

  Circuit bare = bare_reduction(t, *layout());
  CHECK(bare.n_qubits == 7);
  CHECK(bare.gates.size() == 5);
  auto action = logical_action(layout()->outer, bare);
  REQUIRE(action.preserves_codespace);
  CHECK(matrices_equal_up_to_phase(action.matrix, unitary_matrix_2x2(UnitaryKind::T)));
}

TEST_CASE("single input faults on the T gadget stay sparse") {
  // residual touches at most 3 blocks with at most 1 qubit per block
  Gadget t = build_logical_t_gadget(*layout());
  Circuit phys = gadget_physical_circuit(t, *layout());
  for (const Location& loc : enumerate_locations(phys)) {
    if (loc.kind != Location::Kind::Input) continue;
    for (const FaultEvent& f : fault_alphabet(phys, loc)) {
      for (const Branch& br : propagate(phys, std::span(&f, 1))) {
        std::set<uint32_t> touched;
        for (size_t b = 0; b < 7; ++b) {
          size_t w = br.residual.slice(b * 15, 15).weight();
          CHECK(w <= 1);
          if (w) touched.insert(static_cast<uint32_t>(b));
        }
        CHECK(touched.size() <= 3);
      }
    }
  }
}

TEST_CASE("H gadget is seven non-transversal black boxes") {
  Gadget h = build_logical_h_gadget(*layout());
  CHECK(h.schedule == EcSchedule::InnerThenOuter);
  CHECK(h.block_abstract);
  CHECK(h.plan.size() == 7);
  for (const BlockOp& op : h.plan) CHECK(op.kind == BlockOp::Kind::BlackBoxH);
  CHECK(!gadget_is_block_transversal(h, *layout()));

  // bare reduction: H on each outer qubit, the outer logical H
  Circuit bare = bare_reduction(h, *layout());
  auto action = logical_action(layout()->outer, bare);
  REQUIRE(action.preserves_codespace);
  CHECK(matrices_equal_up_to_phase(action.matrix, unitary_matrix_2x2(UnitaryKind::H)));
}

TEST_CASE("CNOT gadget is 105 pairwise gates with logical CNOT reduction") {
  Gadget cnot = build_logical_cnot_gadget(*layout());
  CHECK(cnot.registers == 2);
  Circuit phys = gadget_physical_circuit(cnot, *layout());
  CHECK(phys.n_qubits == 210);
  CHECK(phys.gates.size() == 105);
  CHECK(count_kind(phys, UnitaryKind::Cnot) == 105);
  CHECK(gadget_is_block_transversal(cnot, *layout()));

  // single X fault on register A propagates to one qubit per register at the
  // same block position
  FaultEvent f{{Location::Kind::Input, 20}, Pauli::single(210, 20, 'X')};
  auto branches = propagate(phys, std::span(&f, 1));
  REQUIRE(branches.size() == 1);
  CHECK(branches[0].residual.weight() == 2);
  CHECK(branches[0].residual.at(20) == 'X');
  CHECK(branches[0].residual.at(125) == 'X');

  Circuit bare = bare_reduction(cnot, *layout());
  CHECK(bare.n_qubits == 14);
  // dense oracle at 14 qubits via the two-block helper is covered in the
  // statevector suite; here check the plan shape
  for (size_t b = 0; b < 7; ++b) {
    const auto& u = std::get<UnitaryGate>(bare.gates[b]);
    CHECK(u.q0 == b);
    CHECK(u.q1 == 7 + b);
  }
}

TEST_CASE("S gadget is diagonal and reduces to logical S") {
  Gadget s = build_logical_s_gadget(*layout());
  Circuit phys = gadget_physical_circuit(s, *layout());
  CHECK(phys.gates.size() == 105);
  CHECK(count_kind(phys, UnitaryKind::S) == 105);
  CHECK(gadget_is_block_transversal(s, *layout()));

  // diagonal: commutes with all Z-type Paulis
  Pauli all_z = Pauli::z_type(BitVector::from_string(std::string(105, '1')));
  FaultEvent f{{Location::Kind::Input, 0}, all_z};
  auto branches = propagate(phys, std::span(&f, 1));
  REQUIRE(branches.size() == 1);
  CHECK(branches[0].residual.x().is_zero());
  CHECK(branches[0].residual.z() == all_z.z());

  Circuit bare = bare_reduction(s, *layout());
  auto action = logical_action(layout()->outer, bare);
  REQUIRE(action.preserves_codespace);
  CHECK(matrices_equal_up_to_phase(action.matrix, unitary_matrix_2x2(UnitaryKind::S)));
}

TEST_CASE("inner EC gadget shape") {
  Circuit ec = build_inner_ec(*layout(), 3, tables());
  CHECK(ec_is_globally_transversal(ec));
  CHECK(count_kind(ec, UnitaryKind::Nop) == 30);
  size_t measures = 0;
  for (const Gate& g : ec.gates) {
    if (std::holds_alternative<MeasureGate>(g)) ++measures;
  }
  CHECK(measures == 14);
  // fault locations: 30 data points + 14 outcome flips (inputs belong to the
  // enclosing circuit)
  CHECK(enumerate_locations(ec).size() == 105 + 30 + 14);
}

TEST_CASE("outer EC gadget shape") {
  Circuit ec = build_outer_ec(*layout(), tables());
  CHECK(ec_is_globally_transversal(ec));
  CHECK(max_measured_observable_weight(ec) == 28);
  size_t measures = 0;
  for (const Gate& g : ec.gates) {
    if (std::holds_alternative<MeasureGate>(g)) ++measures;
  }
  CHECK(measures == 6);
}

TEST_CASE("no-fault EC rounds decode to the trivial outcome") {
  for (const Circuit& ec : {build_inner_ec(*layout(), 0, tables()),
                            build_outer_ec(*layout(), tables())}) {
    auto branches = propagate(ec, {});
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].residual.is_trivial());
    for (uint8_t bit : branches[0].bits) CHECK(bit == 0);
  }
}

TEST_CASE("inner EC corrects a single data error before the slice") {
  Circuit ec = build_inner_ec(*layout(), 2, tables());
  // the first 15 gates are the pre-slice fault points of block 2
  FaultEvent f{{Location::Kind::AfterGate, 4},
               Pauli::single(105, layout()->qubit(2, 4), 'X')};
  auto branches = propagate(ec, std::span(&f, 1));
  REQUIRE(branches.size() == 1);
  CHECK(branches[0].residual.is_trivial());
}

TEST_CASE("outcome flip applies the table entry, which a clean round cancels") {
  Circuit ec = build_inner_ec(*layout(), 0, tables());
  for (uint32_t bit = 0; bit < 14; ++bit) {
    FaultEvent f{{Location::Kind::MeasurementFlip, bit}, Pauli()};
    auto branches = propagate(ec, std::span(&f, 1));
    REQUIRE(branches.size() == 1);
    Pauli expected = tables().inner->correction(uint64_t{1} << bit).embedded(105, 0);
    // the applied correction is the residual error on otherwise clean data
    CHECK(branches[0].residual.x() == expected.x());
    CHECK(branches[0].residual.z() == expected.z());
    // a trailing clean EC applies the same entry and cancels it
    Pauli r = branches[0].residual;
    apply_inner_ec(*layout(), *tables().inner, 0, r);
    CHECK(r.is_trivial());
  }
}

TEST_CASE("exrec composition") {
  ExRec t = build_exrec(build_logical_t_gadget(*layout()), layout(), tables());
  // gadget + 7 scheduled inner ECs, then the ideal round
  size_t scheduled = 75 + 7 * 45;
  CHECK(t.circuit.fault_boundary == scheduled);
  CHECK(t.circuit.gates.size() > scheduled);
  CHECK(t.fault_model == FaultModel::Locations);

  ExRec h = build_exrec(build_logical_h_gadget(*layout()), layout(), tables());
  CHECK(h.fault_model == FaultModel::BlockErrors);

  ExRec ec = build_ec_only_exrec(layout(), tables());
  CHECK(ec.name == "EC");
  CHECK(ec.fault_model == FaultModel::Locations);

  ExRec cnot = build_exrec(build_logical_cnot_gadget(*layout()), layout(), tables());
  CHECK(cnot.circuit.n_qubits == 210);
  CHECK(cnot.registers == 2);
}

TEST_CASE("gadget serialization carries name and schedule") {
  std::string text = gadget_to_text(build_logical_h_gadget(*layout()), *layout());
  CHECK(text.find("GADGET H") == 0);
  CHECK(text.find("SCHEDULE inner+outer") != std::string::npos);
  CHECK(text.find("BLOCK H_inner 6") != std::string::npos);

  std::string t_text = gadget_to_text(build_logical_t_gadget(*layout()), *layout());
  CHECK(t_text.find("SCHEDULE inner\n") != std::string::npos);
  CHECK(t_text.find("TDG") != std::string::npos);
}

}  // TEST_SUITE
