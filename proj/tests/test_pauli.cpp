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

#include <array>
#include <complex>
#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace qcat;

namespace {

using cd = std::complex<double>;
using Mat2 = std::array<cd, 4>;

Mat2 matmul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 scale(cd s, const Mat2& a) { return {s * a[0], s * a[1], s * a[2], s * a[3]}; }

/// 2x2 matrix of a one-qubit Pauli, the independent oracle for group algebra.
Mat2 matrix_of(const Pauli& p) {
  static const Mat2 kI{1, 0, 0, 1};
  static const Mat2 kX{0, 1, 1, 0};
  static const Mat2 kY{0, cd{0, -1}, cd{0, 1}, 0};
  static const Mat2 kZ{1, 0, 0, -1};
  Mat2 base = kI;
  switch (p.at(0)) {
    case 'X': base = kX; break;
    case 'Y': base = kY; break;
    case 'Z': base = kZ; break;
    default: break;
  }
  int y = p.at(0) == 'Y' ? 1 : 0;
  static const cd phases[4] = {1.0, {0, 1}, -1.0, {0, -1}};
  return scale(phases[((p.phase_exponent() - y) % 4 + 4) % 4], base);
}

bool approx_equal(const Mat2& a, const Mat2& b) {
  for (int i = 0; i < 4; ++i) {
    if (std::abs(a[i] - b[i]) > 1e-12) return false;
  }
  return true;
}

Pauli random_pauli(std::mt19937& rng, size_t n) {
  std::uniform_int_distribution<int> bit(0, 1);
  BitVector x(n), z(n);
  for (size_t i = 0; i < n; ++i) {
    x.set(i, bit(rng));
    z.set(i, bit(rng));
  }
  return Pauli::from_xz(std::move(x), std::move(z), bit(rng) + 2 * bit(rng));
}

}  // namespace

TEST_SUITE("pauli") {

TEST_CASE("commutation basics") {
  Pauli x0 = Pauli::single(1, 0, 'X');
  Pauli z0 = Pauli::single(1, 0, 'Z');
  CHECK(!x0.commutes_with(z0));

  Pauli xx = Pauli::parse("XX");
  Pauli zz = Pauli::parse("ZZ");
  CHECK(xx.commutes_with(zz));
  CHECK(xx.commutes_with(xx));
  CHECK(zz.commutes_with(zz));
}

TEST_CASE("products with phases") {
  Pauli x = Pauli::single(1, 0, 'X');
  Pauli z = Pauli::single(1, 0, 'Z');
  CHECK((x * z).to_string() == "-iY");
  CHECK((z * x).to_string() == "+iY");

  // P * P = +I for Hermitian P
  for (char kind : {'X', 'Y', 'Z'}) {
    Pauli p = Pauli::single(1, 0, kind);
    Pauli sq = p * p;
    CHECK(sq.is_trivial());
    CHECK(sq.phase_exponent() == 0);
  }

  Pauli xi = Pauli::parse("XI");
  Pauli iz = Pauli::parse("IZ");
  CHECK((xi * iz).to_string() == "+XZ");
}

TEST_CASE("all sixteen one-qubit products match matrix multiplication") {
  std::vector<Pauli> singles;
  singles.push_back(Pauli::identity(1));
  for (char kind : {'X', 'Y', 'Z'}) singles.push_back(Pauli::single(1, 0, kind));
  for (const Pauli& p : singles) {
    for (const Pauli& q : singles) {
      CHECK(approx_equal(matrix_of(p * q), matmul(matrix_of(p), matrix_of(q))));
    }
  }
}

TEST_CASE("product is associative") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Pauli a = random_pauli(rng, 6);
    Pauli b = random_pauli(rng, 6);
    Pauli c = random_pauli(rng, 6);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("weight") {
  CHECK(Pauli::identity(105).weight() == 0);
  CHECK(Pauli::parse("XYI").weight() == 2);
  CHECK(Pauli::parse("-iZZZ").weight() == 3);
}

TEST_CASE("weight is subadditive under products") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    Pauli a = random_pauli(rng, 12);
    Pauli b = random_pauli(rng, 12);
    CHECK((a * b).weight() <= a.weight() + b.weight());
  }
}

TEST_CASE("commutation is symmetric") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    Pauli a = random_pauli(rng, 16);
    Pauli b = random_pauli(rng, 16);
    CHECK(a.commutes_with(b) == b.commutes_with(a));
  }
}

TEST_CASE("parse and print round trip") {
  for (const char* text : {"+XIZY", "-iYYI", "+iZ", "-XX", "+IIIII"}) {
    CHECK(Pauli::parse(text).to_string() == text);
  }
}

TEST_CASE("embedding and slicing") {
  Pauli p = Pauli::parse("XZ");
  Pauli e = p.embedded(6, 2);
  CHECK(e.to_string() == "+IIXZII");
  CHECK(e.slice(2, 2) == p);
  CHECK(e.weight() == 2);

  Pauli big = Pauli::identity(6);
  big.mul_at(Pauli::parse("YY"), 3);
  CHECK(big.at(3) == 'Y');
  CHECK(big.at(4) == 'Y');
  CHECK(big.slice(3, 2).to_string() == "+YY");
}

TEST_CASE("length mismatch rejected") {
  CHECK_THROWS_AS((void)Pauli::parse("XX").commutes_with(Pauli::parse("X")),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)(Pauli::parse("XX") * Pauli::parse("X")), std::invalid_argument);
}

}  // TEST_SUITE
