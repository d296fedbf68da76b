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

#include "qcat/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace qcat {

Pauli Pauli::single(size_t n, size_t qubit, char kind) {
  Pauli p(n);
  switch (kind) {
    case 'X':
      p.x_.set(qubit, true);
      break;
    case 'Z':
      p.z_.set(qubit, true);
      break;
    case 'Y':
      p.x_.set(qubit, true);
      p.z_.set(qubit, true);
      p.phase_ = 1;
      break;
    default:
      throw std::invalid_argument("Pauli::single: kind must be X, Y or Z");
  }
  return p;
}

Pauli Pauli::x_type(BitVector support) {
  Pauli p(support.size());
  p.x_ = std::move(support);
  return p;
}

Pauli Pauli::z_type(BitVector support) {
  Pauli p(support.size());
  p.z_ = std::move(support);
  return p;
}

Pauli Pauli::from_xz(BitVector x, BitVector z, int phase_exponent) {
  if (x.size() != z.size()) throw std::invalid_argument("Pauli: x/z length mismatch");
  Pauli p;
  p.x_ = std::move(x);
  p.z_ = std::move(z);
  p.phase_ = ((phase_exponent % 4) + 4) % 4;
  return p;
}

Pauli Pauli::parse(std::string_view text) {
  int phase = 0;
  size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase += 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  std::string_view letters = text.substr(pos);
  Pauli p(letters.size());
  for (size_t q = 0; q < letters.size(); ++q) {
    switch (letters[q]) {
      case 'I':
        break;
      case 'X':
        p.x_.set(q, true);
        break;
      case 'Z':
        p.z_.set(q, true);
        break;
      case 'Y':
        p.x_.set(q, true);
        p.z_.set(q, true);
        phase += 1;  // printed Y stands for iXZ
        break;
      default:
        throw std::invalid_argument("Pauli::parse: bad letter");
    }
  }
  p.phase_ = ((phase % 4) + 4) % 4;
  return p;
}

size_t Pauli::weight() const {
  size_t total = 0;
  const auto& xw = x_.words();
  const auto& zw = z_.words();
  for (size_t w = 0; w < xw.size(); ++w) {
    total += static_cast<size_t>(std::popcount(xw[w] | zw[w]));
  }
  return total;
}

char Pauli::at(size_t qubit) const {
  bool xb = x_.get(qubit);
  bool zb = z_.get(qubit);
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

Pauli Pauli::operator*(const Pauli& other) const {
  if (other.n() != n()) throw std::invalid_argument("Pauli product: length mismatch");
  Pauli out = *this;
  out.mul_at(other, 0);
  return out;
}

void Pauli::mul_at(const Pauli& block, size_t offset) {
  // i^p X^a Z^b * i^q X^c Z^d = i^{p+q} (-1)^{|b & c|} X^{a^c} Z^{b^d}
  size_t cross = 0;
  const auto& zw = z_.words();
  if (offset == 0 && block.n() == n()) {
    const auto& bw = block.x_.words();
    uint64_t acc = 0;
    for (size_t w = 0; w < zw.size(); ++w) acc ^= zw[w] & bw[w];
    cross = std::popcount(acc) & 1;
    x_ ^= block.x_;
    z_ ^= block.z_;
  } else {
    for (size_t i = 0; i < block.n(); ++i) {
      if (z_.get(offset + i) && block.x_.get(i)) cross ^= 1;
    }
    x_.xor_shifted(block.x_, offset);
    z_.xor_shifted(block.z_, offset);
  }
  phase_ = (phase_ + block.phase_ + 2 * static_cast<int>(cross)) % 4;
}

bool Pauli::commutes_with(const Pauli& other) const {
  if (other.n() != n()) throw std::invalid_argument("Pauli commutation: length mismatch");
  return !(x_.dot(other.z_) ^ z_.dot(other.x_));
}

Pauli Pauli::embedded(size_t total, size_t offset) const {
  Pauli out(total);
  out.x_.xor_shifted(x_, offset);
  out.z_.xor_shifted(z_, offset);
  out.phase_ = phase_;
  return out;
}

Pauli Pauli::slice(size_t begin, size_t count) const {
  Pauli out;
  out.x_ = x_.slice(begin, count);
  out.z_ = z_.slice(begin, count);
  out.phase_ = phase_;
  return out;
}

std::string Pauli::to_string() const {
  std::string letters(n(), 'I');
  int y_count = 0;
  for (size_t q = 0; q < n(); ++q) {
    letters[q] = at(q);
    if (letters[q] == 'Y') ++y_count;
  }
  // printed scalar = i^{phase - #Y} since each printed Y carries its own i
  int printed = ((phase_ - y_count) % 4 + 4) % 4;
  static const char* prefix[] = {"+", "+i", "-", "-i"};
  return prefix[printed] + letters;
}

}  // namespace qcat
