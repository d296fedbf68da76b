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

#include "qcat/circuit.hpp"

#include <sstream>
#include <stdexcept>

namespace qcat {

namespace {

const char* unitary_name(UnitaryKind k) {
  switch (k) {
    case UnitaryKind::X: return "X";
    case UnitaryKind::Y: return "Y";
    case UnitaryKind::Z: return "Z";
    case UnitaryKind::H: return "H";
    case UnitaryKind::S: return "S";
    case UnitaryKind::Sdg: return "SDG";
    case UnitaryKind::T: return "T";
    case UnitaryKind::Tdg: return "TDG";
    case UnitaryKind::Cnot: return "CNOT";
    case UnitaryKind::Nop: return "NOP";
  }
  return "?";
}

/// In-place single-qubit conjugation on the (x, z, phase) monomial form.
/// Returns false when the gate requires branching (T/Tdg on X content).
bool conjugate_one(UnitaryKind kind, size_t q, Pauli& p, int& phase) {
  bool xb = p.x().get(q);
  bool zb = p.z().get(q);
  switch (kind) {
    case UnitaryKind::Nop:
      break;
    case UnitaryKind::X:
      if (zb) phase += 2;
      break;
    case UnitaryKind::Y:
      if (xb != zb) phase += 2;
      break;
    case UnitaryKind::Z:
      if (xb) phase += 2;
      break;
    case UnitaryKind::H:
      // X <-> Z, Y -> -Y
      if (xb && zb) phase += 2;
      break;
    case UnitaryKind::S:
      // S X S^dg = i XZ, S (XZ) S^dg = i X
      if (xb) phase += 1;
      break;
    case UnitaryKind::Sdg:
      if (xb) phase += 3;
      break;
    case UnitaryKind::T:
    case UnitaryKind::Tdg:
      if (xb) return false;
      break;
    default:
      throw std::logic_error("conjugate_one: not a single-qubit gate");
  }
  return true;
}

void apply_single_qubit_map(UnitaryKind kind, size_t q, Pauli& p) {
  bool xb = p.x().get(q);
  bool zb = p.z().get(q);
  switch (kind) {
    case UnitaryKind::H: {
      BitVector x = p.x(), z = p.z();
      x.set(q, zb);
      z.set(q, xb);
      p = Pauli::from_xz(std::move(x), std::move(z), p.phase_exponent());
      break;
    }
    case UnitaryKind::S:
    case UnitaryKind::Sdg: {
      if (xb) {
        BitVector z = p.z();
        z.set(q, !zb);
        p = Pauli::from_xz(p.x(), std::move(z), p.phase_exponent());
      }
      break;
    }
    default:
      break;  // Paulis, T on Z-content, Nop: support unchanged
  }
}

}  // namespace

Pauli conjugate_clifford(const UnitaryGate& g, Pauli p) {
  int phase = p.phase_exponent();
  if (g.kind == UnitaryKind::Cnot) {
    // x_t ^= x_c, z_c ^= z_t; no phase in the monomial representation
    BitVector x = p.x(), z = p.z();
    if (x.get(g.q0)) x.set(g.q1, !x.get(g.q1));
    if (z.get(g.q1)) z.set(g.q0, !z.get(g.q0));
    return Pauli::from_xz(std::move(x), std::move(z), phase);
  }
  if (!conjugate_one(g.kind, g.q0, p, phase)) {
    throw std::logic_error("conjugate_clifford: T gate on X/Y content branches");
  }
  apply_single_qubit_map(g.kind, g.q0, p);
  return Pauli::from_xz(p.x(), p.z(), phase);
}

std::vector<Pauli> conjugate_pauli(const UnitaryGate& g, const Pauli& p) {
  if ((g.kind == UnitaryKind::T || g.kind == UnitaryKind::Tdg) && p.x().get(g.q0)) {
    // T X T^dg = (X + Y)/sqrt(2), T Y T^dg = (Y - X)/sqrt(2): either way the
    // branch set replaces the factor by {X, Y} and drops phases. A dropped
    // phase means each branch is the plain letter product, so the stored
    // exponent is one i per Y factor.
    auto plain = [](const BitVector& x, BitVector z) {
      int y_count = static_cast<int>((x & z).weight());
      return Pauli::from_xz(x, std::move(z), y_count);
    };
    BitVector zx = p.z();
    zx.set(g.q0, false);
    BitVector zy = p.z();
    zy.set(g.q0, true);
    return {plain(p.x(), std::move(zx)), plain(p.x(), std::move(zy))};
  }
  return {conjugate_clifford(g, p)};
}

void Circuit::unitary(UnitaryKind kind, uint32_t q0, uint32_t q1) {
  gates.push_back(UnitaryGate{kind, q0, q1});
}

uint32_t Circuit::measure(Pauli observable) {
  auto bit = static_cast<uint32_t>(n_bits++);
  gates.push_back(MeasureGate{std::move(observable), bit});
  return bit;
}

void Circuit::decode(std::shared_ptr<const LookupTable> table, uint32_t bit_first,
                     uint32_t bit_count, uint32_t qubit_offset) {
  gates.push_back(DecodeGate{std::move(table), bit_first, bit_count, qubit_offset});
}

void Circuit::check_valid() const {
  std::vector<bool> written(n_bits, false);
  for (const Gate& g : gates) {
    if (const auto* u = std::get_if<UnitaryGate>(&g)) {
      if (u->q0 >= n_qubits || (u->kind == UnitaryKind::Cnot &&
                                (u->q1 >= n_qubits || u->q0 == u->q1))) {
        throw std::logic_error("circuit: qubit index out of range");
      }
    } else if (const auto* m = std::get_if<MeasureGate>(&g)) {
      if (m->observable.n() != n_qubits) throw std::logic_error("circuit: observable width");
      if (m->bit >= n_bits) throw std::logic_error("circuit: bit out of range");
      written[m->bit] = true;
    } else if (const auto* c = std::get_if<CorrectGate>(&g)) {
      if (!written[c->bit]) throw std::logic_error("circuit: bit read before write");
    } else if (const auto* d = std::get_if<DecodeGate>(&g)) {
      for (uint32_t b = d->bit_first; b < d->bit_first + d->bit_count; ++b) {
        if (b >= n_bits || !written[b]) throw std::logic_error("circuit: bit read before write");
      }
      if (d->qubit_offset + d->table->width > n_qubits) {
        throw std::logic_error("circuit: decode window out of range");
      }
    }
  }
}

std::vector<Location> enumerate_locations(const Circuit& c) {
  std::vector<Location> out;
  for (uint32_t q = 0; q < c.n_qubits; ++q) {
    out.push_back({Location::Kind::Input, q});
  }
  size_t boundary = c.effective_boundary();
  for (uint32_t i = 0; i < boundary; ++i) {
    if (std::holds_alternative<UnitaryGate>(c.gates[i])) {
      out.push_back({Location::Kind::AfterGate, i});
    }
  }
  for (uint32_t i = 0; i < boundary; ++i) {
    if (const auto* m = std::get_if<MeasureGate>(&c.gates[i])) {
      out.push_back({Location::Kind::MeasurementFlip, m->bit});
    }
  }
  return out;
}

std::vector<FaultEvent> fault_alphabet(const Circuit& c, const Location& loc) {
  std::vector<FaultEvent> out;
  auto single = [&](uint32_t q) {
    for (char kind : {'X', 'Y', 'Z'}) {
      out.push_back({loc, Pauli::single(c.n_qubits, q, kind)});
    }
  };
  switch (loc.kind) {
    case Location::Kind::Input:
      single(loc.index);
      break;
    case Location::Kind::AfterGate: {
      const auto& u = std::get<UnitaryGate>(c.gates[loc.index]);
      if (u.kind == UnitaryKind::Cnot) {
        const char kinds[4] = {'I', 'X', 'Y', 'Z'};
        for (int a = 0; a < 4; ++a) {
          for (int b = 0; b < 4; ++b) {
            if (a == 0 && b == 0) continue;
            Pauli p = Pauli::identity(c.n_qubits);
            if (a) p.mul_at(Pauli::single(c.n_qubits, u.q0, kinds[a]), 0);
            if (b) p.mul_at(Pauli::single(c.n_qubits, u.q1, kinds[b]), 0);
            out.push_back({loc, std::move(p)});
          }
        }
      } else {
        single(u.q0);
      }
      break;
    }
    case Location::Kind::MeasurementFlip:
      out.push_back({loc, Pauli()});
      break;
  }
  return out;
}

std::vector<Branch> propagate(const Circuit& c, std::span<const FaultEvent> faults) {
  std::vector<Branch> branches(1);
  branches[0].residual = Pauli::identity(c.n_qubits);
  branches[0].bits.assign(c.n_bits, 0);

  std::vector<uint8_t> flip(c.n_bits, 0);
  for (const FaultEvent& f : faults) {
    switch (f.location.kind) {
      case Location::Kind::Input:
        branches[0].residual.mul_at(f.pauli, 0);
        break;
      case Location::Kind::AfterGate:
        break;  // injected as the step completes
      case Location::Kind::MeasurementFlip:
        flip[f.location.index] ^= 1;
        break;
    }
  }

  for (size_t step = 0; step < c.gates.size(); ++step) {
    const Gate& g = c.gates[step];
    if (const auto* u = std::get_if<UnitaryGate>(&g)) {
      bool is_t = u->kind == UnitaryKind::T || u->kind == UnitaryKind::Tdg;
      size_t count = branches.size();
      for (size_t i = 0; i < count; ++i) {
        if (is_t && branches[i].residual.x().get(u->q0)) {
          // Conservative fork; each branch must be independently correctable.
          std::vector<Pauli> pair = conjugate_pauli(*u, branches[i].residual);
          Branch forked;
          forked.residual = std::move(pair[1]);
          forked.bits = branches[i].bits;
          branches[i].residual = std::move(pair[0]);
          branches.push_back(std::move(forked));
        } else {
          branches[i].residual = conjugate_clifford(*u, std::move(branches[i].residual));
        }
      }
    } else if (const auto* m = std::get_if<MeasureGate>(&g)) {
      for (Branch& br : branches) {
        uint8_t outcome = br.residual.commutes_with(m->observable) ? 0 : 1;
        br.bits[m->bit] = outcome ^ flip[m->bit];
      }
    } else if (const auto* corr = std::get_if<CorrectGate>(&g)) {
      for (Branch& br : branches) {
        if (br.bits[corr->bit]) br.residual.mul_at(corr->correction, 0);
      }
    } else if (const auto* d = std::get_if<DecodeGate>(&g)) {
      for (Branch& br : branches) {
        uint64_t s = 0;
        for (uint32_t b = 0; b < d->bit_count; ++b) {
          if (br.bits[d->bit_first + b]) s |= uint64_t{1} << b;
        }
        br.residual.mul_at(d->table->correction(s), d->qubit_offset);
      }
    } else if (const auto* blk = std::get_if<BlockGate>(&g)) {
      for (Branch& br : branches) {
        if (!br.residual.is_trivial()) {
          throw std::logic_error("propagate: black-box gate " + blk->name +
                                 " has no Pauli conjugation semantics");
        }
      }
    }
    for (const FaultEvent& f : faults) {
      if (f.location.kind == Location::Kind::AfterGate && f.location.index == step) {
        for (Branch& br : branches) br.residual.mul_at(f.pauli, 0);
      }
    }
  }
  return branches;
}

std::string location_to_string(const Circuit& c, const Location& loc) {
  switch (loc.kind) {
    case Location::Kind::Input:
      return "input q" + std::to_string(loc.index);
    case Location::Kind::AfterGate:
      return "after gate " + std::to_string(loc.index) + " (" +
             gate_to_text(c.gates[loc.index]) + ")";
    case Location::Kind::MeasurementFlip:
      return "flip bit " + std::to_string(loc.index);
  }
  return "?";
}

std::string gate_to_text(const Gate& g) {
  std::ostringstream out;
  if (const auto* u = std::get_if<UnitaryGate>(&g)) {
    out << unitary_name(u->kind) << ' ' << u->q0;
    if (u->kind == UnitaryKind::Cnot) out << ' ' << u->q1;
  } else if (const auto* m = std::get_if<MeasureGate>(&g)) {
    out << "MEASURE " << m->bit << ' ' << m->observable.to_string();
  } else if (const auto* corr = std::get_if<CorrectGate>(&g)) {
    out << "CORRECT " << corr->bit << ' ' << corr->correction.to_string();
  } else if (const auto* d = std::get_if<DecodeGate>(&g)) {
    out << "DECODE bits " << d->bit_first << ' ' << d->bit_count << " offset "
        << d->qubit_offset;
  } else if (const auto* blk = std::get_if<BlockGate>(&g)) {
    out << "BLOCK " << blk->name << ' ' << blk->block;
  }
  return out.str();
}

std::string circuit_to_text(const Circuit& c) {
  std::ostringstream out;
  out << "# qubits " << c.n_qubits << " bits " << c.n_bits << '\n';
  for (const Gate& g : c.gates) out << gate_to_text(g) << '\n';
  return out.str();
}

}  // namespace qcat
