// Copyright 2026 The tcldpc Authors
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

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tcldpc/errors.hpp"
#include "tcldpc/gf2_matrix.hpp"
#include "tcldpc/gf2_poly.hpp"
#include "tcldpc/rng.hpp"

using tcldpc::BitVector;
using tcldpc::Gf2Matrix;
using tcldpc::Gf2Polynomial;

namespace {

std::vector<std::vector<int>> to_ints(const Gf2Matrix& m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c) ? 1 : 0;
  return out;
}

Gf2Matrix random_matrix(std::size_t rows, std::size_t cols, tcldpc::SplitMix64& rng) {
  Gf2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, (rng.next() & 1) != 0);
  return m;
}

std::vector<int> to_coeffs(const Gf2Polynomial& p) {
  const std::size_t top = p.degree().value_or(0);
  std::vector<int> out(top + 1);
  for (std::size_t i = 0; i <= top; ++i) out[i] = p.coeff(i) ? 1 : 0;
  return out;
}

}  // namespace

TEST_CASE("rank matches the dense elimination oracle on random matrices") {
  tcldpc::SplitMix64 rng(2026);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 1 + rng.next() % 12;
    const std::size_t cols = 1 + rng.next() % 12;
    const Gf2Matrix m = random_matrix(rows, cols, rng);
    REQUIRE(m.rank() == oracles::gf2_rank(to_ints(m)));
  }
}

TEST_CASE("rank of identity and of a singular matrix") {
  CHECK(Gf2Matrix::identity(7).rank() == 7);
  Gf2Matrix m(3, 3);
  m.set(0, 0, true);
  m.set(0, 1, true);
  m.set(1, 1, true);
  m.set(1, 2, true);
  m.set(2, 0, true);
  m.set(2, 2, true);  // row2 = row0 + row1
  CHECK(m.rank() == 2);
}

TEST_CASE("matrix product and vector product agree with direct sums") {
  tcldpc::SplitMix64 rng(7);
  const Gf2Matrix a = random_matrix(5, 9, rng);
  const Gf2Matrix b = random_matrix(9, 4, rng);
  const Gf2Matrix ab = a.multiply(b);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      int sum = 0;
      for (std::size_t t = 0; t < 9; ++t) sum ^= (a.get(r, t) && b.get(t, c)) ? 1 : 0;
      REQUIRE(ab.get(r, c) == (sum != 0));
    }

  BitVector x(9);
  for (std::size_t i = 0; i < 9; ++i) x.set(i, (rng.next() & 1) != 0);
  const BitVector ax = a.mul_vector(x);
  for (std::size_t r = 0; r < 5; ++r) {
    int sum = 0;
    for (std::size_t t = 0; t < 9; ++t) sum ^= (a.get(r, t) && x.get(t)) ? 1 : 0;
    REQUIRE(ax.get(r) == (sum != 0));
  }
}

TEST_CASE("systematic_generator produces G with H G^T = 0 and identity on info columns") {
  tcldpc::SplitMix64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 6 + rng.next() % 10;
    const std::size_t r = 1 + rng.next() % (n - 2);
    const Gf2Matrix h = random_matrix(r, n, rng);
    if (h.rank() == n) continue;  // degenerate: no nonzero codewords
    const tcldpc::SystematicForm sys = tcldpc::systematic_generator(h);
    const std::size_t k = n - sys.rank;
    REQUIRE(sys.generator.rows() == k);
    REQUIRE(sys.generator.cols() == n);
    REQUIRE(sys.info_columns.size() == k);
    // info columns carry the identity
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        REQUIRE(sys.generator.get(i, sys.info_columns[j]) == (i == j));
    // every generator row is a codeword
    for (std::size_t i = 0; i < k; ++i)
      REQUIRE_FALSE(h.mul_vector(sys.generator.row(i)).any());
  }
}

TEST_CASE("systematic_generator throws DegenerateCode when H has full column rank") {
  CHECK_THROWS_AS(tcldpc::systematic_generator(Gf2Matrix::identity(4)),
                  tcldpc::DegenerateCode);
}

TEST_CASE("polynomial remainder matches schoolbook division on random inputs") {
  tcldpc::SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t ga = rng.next() | 2;  // degree >= 1
    const Gf2Polynomial g = Gf2Polynomial::from_mask(ga & 0x1ffff);
    const Gf2Polynomial a = Gf2Polynomial::from_mask(rng.next());
    const Gf2Polynomial r = a.mod(g);
    const std::vector<int> expect = oracles::poly_mod(to_coeffs(a), to_coeffs(g));
    std::vector<int> got = to_coeffs(r);
    if (r.is_zero()) got.clear();
    got.resize(std::max(got.size(), expect.size()), 0);
    std::vector<int> want = expect;
    want.resize(got.size(), 0);
    REQUIRE(got == want);
    REQUIRE(a.divisible_by(g) == oracles::poly_divisible(to_coeffs(a), to_coeffs(g)));
  }
}

TEST_CASE("x^20 mod the CCITT generator") {
  // frozen value computed by hand with schoolbook division
  const Gf2Polynomial g = Gf2Polynomial::from_mask(0x11021);
  const Gf2Polynomial r = tcldpc::pow_mod(Gf2Polynomial::monomial(1), 20, g);
  CHECK(r.to_mask() == 0x1231u);
  CHECK(Gf2Polynomial::monomial(20).mod(g).to_mask() == 0x1231u);
}

TEST_CASE("polynomial arithmetic identities") {
  const Gf2Polynomial g = Gf2Polynomial::from_mask(0x1d5);
  const Gf2Polynomial a = Gf2Polynomial::from_mask(0xabcdef);
  // (a*g) mod g == 0
  CHECK((a * g).mod(g).is_zero());
  // (a + a) == 0
  CHECK((a + a).is_zero());
  CHECK(a.shifted(5).to_mask() == (0xabcdefull << 5));
  CHECK_THROWS_AS(a.mod(Gf2Polynomial{}), tcldpc::DivisionByZeroPolynomial);
}

TEST_CASE("x_inverse_mod inverts multiplication by x") {
  const Gf2Polynomial g = Gf2Polynomial::from_mask(0x11021);
  const Gf2Polynomial xinv = tcldpc::x_inverse_mod(g);
  const Gf2Polynomial prod = tcldpc::mul_mod(xinv, Gf2Polynomial::monomial(1), g);
  CHECK(prod.to_mask() == 1u);
}
