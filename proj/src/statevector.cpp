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

#include "qcat/statevector.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <utility>

namespace qcat {

namespace {
using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
}  // namespace

StateVector::StateVector(size_t n) : n_(n) {
  if (n > kMaxQubits) {
    throw EnumerationBudgetExceeded("statevector on " + std::to_string(n) +
                                    " qubits refused");
  }
  amps_.assign(uint64_t{1} << n, cd{0.0, 0.0});
}

StateVector StateVector::basis_state(size_t n, uint64_t index) {
  StateVector s(n);
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double total = 0.0;
  for (const cd& a : amps_) total += std::norm(a);
  return std::sqrt(total);
}

cd StateVector::inner(const StateVector& other) const {
  cd total = 0.0;
  for (size_t i = 0; i < amps_.size(); ++i) {
    total += std::conj(amps_[i]) * other.amps_[i];
  }
  return total;
}

void StateVector::apply(const UnitaryGate& g) {
  uint64_t mask0 = uint64_t{1} << g.q0;
  switch (g.kind) {
    case UnitaryKind::Nop:
      break;
    case UnitaryKind::X:
      for (uint64_t i = 0; i < amps_.size(); ++i) {
        if (!(i & mask0)) std::swap(amps_[i], amps_[i | mask0]);
      }
      break;
    case UnitaryKind::Y:
      for (uint64_t i = 0; i < amps_.size(); ++i) {
        if (!(i & mask0)) {
          cd a0 = amps_[i];
          amps_[i] = cd{0, -1} * amps_[i | mask0];
          amps_[i | mask0] = cd{0, 1} * a0;
        }
      }
      break;
    case UnitaryKind::Z:
      for (uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & mask0) amps_[i] = -amps_[i];
      }
      break;
    case UnitaryKind::H: {
      double inv = 1.0 / std::sqrt(2.0);
      for (uint64_t i = 0; i < amps_.size(); ++i) {
        if (!(i & mask0)) {
          cd a0 = amps_[i], a1 = amps_[i | mask0];
          amps_[i] = inv * (a0 + a1);
          amps_[i | mask0] = inv * (a0 - a1);
        }
      }
      break;
    }
    case UnitaryKind::S:
    case UnitaryKind::Sdg:
    case UnitaryKind::T:
    case UnitaryKind::Tdg: {
      cd phase;
      switch (g.kind) {
        case UnitaryKind::S: phase = cd{0, 1}; break;
        case UnitaryKind::Sdg: phase = cd{0, -1}; break;
        case UnitaryKind::T: phase = std::polar(1.0, kPi / 4); break;
        default: phase = std::polar(1.0, -kPi / 4); break;
      }
      for (uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & mask0) amps_[i] *= phase;
      }
      break;
    }
    case UnitaryKind::Cnot: {
      uint64_t mask1 = uint64_t{1} << g.q1;
      for (uint64_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask0) && !(i & mask1)) std::swap(amps_[i], amps_[i | mask1]);
      }
      break;
    }
  }
}

void StateVector::apply_circuit(const Circuit& c) {
  if (c.n_qubits != n_) throw std::invalid_argument("apply_circuit: width mismatch");
  for (const Gate& g : c.gates) {
    const auto* u = std::get_if<UnitaryGate>(&g);
    if (u == nullptr) {
      throw std::logic_error("apply_circuit: only unitary segments are supported");
    }
    apply(*u);
  }
}

void StateVector::apply_pauli(const Pauli& p) {
  if (p.n() != n_) throw std::invalid_argument("apply_pauli: width mismatch");
  for (size_t q = 0; q < n_; ++q) {
    switch (p.at(q)) {
      case 'X': apply({UnitaryKind::X, static_cast<uint32_t>(q)}); break;
      case 'Y': apply({UnitaryKind::Y, static_cast<uint32_t>(q)}); break;
      case 'Z': apply({UnitaryKind::Z, static_cast<uint32_t>(q)}); break;
      default: break;
    }
  }
  static const cd phases[4] = {1.0, cd{0, 1}, -1.0, cd{0, -1}};
  // stored phase is relative to the X^x Z^z monomial; letters already carry
  // one i per Y
  int y_count = 0;
  for (size_t q = 0; q < n_; ++q) {
    if (p.at(q) == 'Y') ++y_count;
  }
  cd scalar = phases[((p.phase_exponent() - y_count) % 4 + 4) % 4];
  for (cd& a : amps_) a *= scalar;
}

StateVector encode_logical(const CssCode& c, cd amp0, cd amp1) {
  if (c.k() != 1) throw std::invalid_argument("encode_logical: k must be 1");
  StateVector s(c.n());
  RowReduction red = gf2_row_reduce(c.hx);
  uint64_t lx = c.lx[0].to_uint();
  double inv = 1.0 / std::sqrt(static_cast<double>(uint64_t{1} << red.rank));
  uint64_t word = 0;
  for (uint64_t code = 0; code < (uint64_t{1} << red.rank); ++code) {
    if (code != 0) word ^= red.rref.row(std::countr_zero(code)).to_uint();
    s.amp(word) += amp0 * inv;
    s.amp(word ^ lx) += amp1 * inv;
  }
  return s;
}

LogicalActionResult logical_action(const CssCode& c, const Circuit& circ, double tolerance) {
  LogicalActionResult out;
  StateVector zero = encode_logical(c, 1.0, 0.0);
  StateVector one = encode_logical(c, 0.0, 1.0);

  auto project = [&](const StateVector& img, size_t col) {
    cd m0 = zero.inner(img);
    cd m1 = one.inner(img);
    out.matrix[col] = m0;      // row 0
    out.matrix[2 + col] = m1;  // row 1
    double residual2 = 0.0;
    for (uint64_t i = 0; i < img.dim(); ++i) {
      residual2 += std::norm(img.amp(i) - m0 * zero.amp(i) - m1 * one.amp(i));
    }
    out.leakage = std::max(out.leakage, std::sqrt(residual2));
  };

  StateVector img0 = zero;
  img0.apply_circuit(circ);
  project(img0, 0);
  StateVector img1 = one;
  img1.apply_circuit(circ);
  project(img1, 1);
  out.preserves_codespace = out.leakage < tolerance;

  if (out.preserves_codespace) {
    // |+_L> consistency: the projected matrix must act linearly.
    StateVector plus = encode_logical(c, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
    plus.apply_circuit(circ);
    cd p0 = zero.inner(plus), p1 = one.inner(plus);
    double inv = 1.0 / std::sqrt(2.0);
    cd e0 = inv * (out.matrix[0] + out.matrix[1]);
    cd e1 = inv * (out.matrix[2] + out.matrix[3]);
    if (std::abs(p0 - e0) > 10 * tolerance || std::abs(p1 - e1) > 10 * tolerance) {
      out.preserves_codespace = false;
      out.leakage = std::max({out.leakage, std::abs(p0 - e0), std::abs(p1 - e1)});
    }
  }
  return out;
}

bool matrices_equal_up_to_phase(const std::array<cd, 4>& a, const std::array<cd, 4>& b,
                                double tolerance) {
  size_t ref = 0;
  for (size_t i = 1; i < 4; ++i) {
    if (std::abs(a[i]) > std::abs(a[ref])) ref = i;
  }
  if (std::abs(a[ref]) < tolerance) {
    for (size_t i = 0; i < 4; ++i) {
      if (std::abs(b[i]) > tolerance) return false;
    }
    return true;
  }
  if (std::abs(b[ref]) < tolerance) return false;
  cd phase = b[ref] / a[ref];
  phase /= std::abs(phase);
  for (size_t i = 0; i < 4; ++i) {
    if (std::abs(a[i] * phase - b[i]) > tolerance) return false;
  }
  return true;
}

std::array<cd, 4> unitary_matrix_2x2(UnitaryKind kind) {
  switch (kind) {
    case UnitaryKind::X: return {0, 1, 1, 0};
    case UnitaryKind::Y: return {0, cd{0, -1}, cd{0, 1}, 0};
    case UnitaryKind::Z: return {1, 0, 0, -1};
    case UnitaryKind::H: {
      double inv = 1.0 / std::sqrt(2.0);
      return {inv, inv, inv, -inv};
    }
    case UnitaryKind::S: return {1, 0, 0, cd{0, 1}};
    case UnitaryKind::Sdg: return {1, 0, 0, cd{0, -1}};
    case UnitaryKind::T: return {1, 0, 0, std::polar(1.0, kPi / 4)};
    case UnitaryKind::Tdg: return {1, 0, 0, std::polar(1.0, -kPi / 4)};
    default: return {1, 0, 0, 1};
  }
}

bool transversal_cnot_is_logical_cnot(const CssCode& c) {
  if (c.k() != 1 || c.n() > 63) {
    throw std::invalid_argument("transversal_cnot_is_logical_cnot: unsupported code");
  }
  RowReduction red = gf2_row_reduce(c.hx);
  std::vector<uint64_t> codewords;
  uint64_t word = 0;
  for (uint64_t code = 0; code < (uint64_t{1} << red.rank); ++code) {
    if (code != 0) word ^= red.rref.row(std::countr_zero(code)).to_uint();
    codewords.push_back(word);
  }
  uint64_t lx = c.lx[0].to_uint();

  // Pairwise CNOT maps |a>|b> -> |a>|a^b>, so on the uniform codeword
  // expansions the logical action is decidable by set comparison.
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      std::set<std::pair<uint64_t, uint64_t>> image, expected;
      for (uint64_t v : codewords) {
        for (uint64_t w : codewords) {
          uint64_t a = v ^ (x ? lx : 0);
          uint64_t b = w ^ (y ? lx : 0);
          image.insert({a, a ^ b});
          expected.insert({a, w ^ ((x ^ y) ? lx : 0)});
        }
      }
      if (image != expected) return false;
    }
  }
  return true;
}

}  // namespace qcat
