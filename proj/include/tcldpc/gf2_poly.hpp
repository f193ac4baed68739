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

#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include "tcldpc/bitvec.hpp"
#include "tcldpc/errors.hpp"

namespace tcldpc {

// Polynomial over GF(2).  Coefficient of x^i is bit i of the coefficient
// vector, matching the convention that the first transmitted bit of a block
// is the x^0 coefficient.
class Gf2Polynomial {
 public:
  Gf2Polynomial() = default;  // zero polynomial

  explicit Gf2Polynomial(BitVector coefficients) : coeff_(std::move(coefficients)) {}

  // Bit j of mask is the coefficient of x^j (0x11021 -> x^16+x^12+x^5+1).
  static Gf2Polynomial from_mask(std::uint64_t mask) {
    BitVector v(64);
    for (std::size_t j = 0; j < 64; ++j)
      if ((mask >> j) & 1u) v.set(j, true);
    return Gf2Polynomial(std::move(v));
  }

  static Gf2Polynomial monomial(std::size_t degree) {
    BitVector v(degree + 1);
    v.set(degree, true);
    return Gf2Polynomial(std::move(v));
  }

  static Gf2Polynomial one() { return monomial(0); }

  const BitVector& coefficients() const { return coeff_; }

  bool coeff(std::size_t i) const { return i < coeff_.size() && coeff_.get(i); }

  std::optional<std::size_t> degree() const {
    auto words = coeff_.words();
    for (std::size_t w = words.size(); w-- > 0;)
      if (words[w]) return 64 * w + 63 - static_cast<std::size_t>(std::countl_zero(words[w]));
    return std::nullopt;
  }

  bool is_zero() const { return !coeff_.any(); }

  bool operator==(const Gf2Polynomial& other) const {
    const auto a = coeff_.words();
    const auto b = other.coeff_.words();
    const std::size_t common = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < common; ++i)
      if (a[i] != b[i]) return false;
    for (std::size_t i = common; i < a.size(); ++i)
      if (a[i]) return false;
    for (std::size_t i = common; i < b.size(); ++i)
      if (b[i]) return false;
    return true;
  }

  friend Gf2Polynomial operator+(const Gf2Polynomial& a, const Gf2Polynomial& b) {
    const std::size_t size = std::max(a.coeff_.size(), b.coeff_.size());
    BitVector out(size);
    auto* w = out.word_data();
    for (std::size_t i = 0; i < a.coeff_.words().size(); ++i) w[i] ^= a.coeff_.word(i);
    for (std::size_t i = 0; i < b.coeff_.words().size(); ++i) w[i] ^= b.coeff_.word(i);
    return Gf2Polynomial(std::move(out));
  }

  friend Gf2Polynomial operator*(const Gf2Polynomial& a, const Gf2Polynomial& b) {
    const auto da = a.degree(), db = b.degree();
    if (!da || !db) return Gf2Polynomial();
    std::vector<std::uint64_t> out((*da + *db + 1 + 63) / 64, 0);
    for (std::size_t i = 0; i <= *da; ++i)
      if (a.coeff_.get(i)) xor_shifted(out, b.coeff_.words(), i);
    return Gf2Polynomial(BitVector::from_words(std::move(out), *da + *db + 1));
  }

  // This polynomial times x^e.
  Gf2Polynomial shifted(std::size_t e) const {
    const auto d = degree();
    if (!d) return Gf2Polynomial();
    std::vector<std::uint64_t> out((*d + e + 1 + 63) / 64, 0);
    xor_shifted(out, coeff_.words(), e);
    return Gf2Polynomial(BitVector::from_words(std::move(out), *d + e + 1));
  }

  // Remainder after division by g; result has exactly deg(g) coefficient
  // slots.  Throws DivisionByZeroPolynomial when g is zero.
  Gf2Polynomial mod(const Gf2Polynomial& g) const {
    const auto dg = g.degree();
    if (!dg) throw DivisionByZeroPolynomial("polynomial reduction modulo zero");
    std::vector<std::uint64_t> r(coeff_.words().begin(), coeff_.words().end());
    const auto dr = degree();
    if (dr && *dr >= *dg) {
      for (std::size_t i = *dr + 1; i-- > *dg;)
        if ((r[i / 64] >> (i % 64)) & 1u) xor_shifted(r, g.coeff_.words(), i - *dg);
    }
    const std::size_t out_bits = *dg == 0 ? 1 : *dg;
    BitVector out(out_bits);
    auto* w = out.word_data();
    for (std::size_t i = 0; i < out_bits && i / 64 < r.size(); i += 64) w[i / 64] = r[i / 64];
    if (out_bits % 64 != 0) w[(out_bits - 1) / 64] &= (~std::uint64_t{0}) >> (64 - out_bits % 64);
    if (*dg == 0) w[0] = 0;
    return Gf2Polynomial(std::move(out));
  }

  bool divisible_by(const Gf2Polynomial& g) const { return mod(g).is_zero(); }

  // Low 64 coefficients as a mask; degree must be below 64.
  std::uint64_t to_mask() const {
    const auto d = degree();
    assert(!d || *d < 64);
    return coeff_.words().empty() ? 0 : coeff_.word(0);
  }

 private:
  static void xor_shifted(std::vector<std::uint64_t>& acc, std::span<const std::uint64_t> src,
                          std::size_t shift) {
    const std::size_t ws = shift / 64, bs = shift % 64;
    for (std::size_t j = 0; j < src.size(); ++j) {
      if (!src[j]) continue;
      if (j + ws < acc.size()) acc[j + ws] ^= src[j] << bs;
      if (bs != 0 && j + ws + 1 < acc.size()) acc[j + ws + 1] ^= src[j] >> (64 - bs);
    }
  }

  BitVector coeff_;
};

inline Gf2Polynomial mul_mod(const Gf2Polynomial& a, const Gf2Polynomial& b,
                             const Gf2Polynomial& g) {
  return (a * b).mod(g);
}

inline Gf2Polynomial pow_mod(const Gf2Polynomial& base, std::uint64_t exponent,
                             const Gf2Polynomial& g) {
  Gf2Polynomial result = Gf2Polynomial::one().mod(g);
  Gf2Polynomial b = base.mod(g);
  while (exponent) {
    if (exponent & 1u) result = mul_mod(result, b, g);
    b = mul_mod(b, b, g);
    exponent >>= 1;
  }
  return result;
}

// Multiplicative inverse of x modulo g, valid whenever g has a nonzero
// constant term: x * (g + 1)/x = g + 1 = 1 (mod g).
inline Gf2Polynomial x_inverse_mod(const Gf2Polynomial& g) {
  const auto dg = g.degree();
  if (!dg) throw DivisionByZeroPolynomial("inverse modulo zero polynomial");
  if (!g.coeff(0)) throw std::invalid_argument("x is not invertible: generator has zero constant term");
  BitVector v(*dg == 0 ? 1 : *dg);
  for (std::size_t i = 1; i <= *dg; ++i)
    if (g.coeff(i)) v.set(i - 1, true);
  return Gf2Polynomial(std::move(v));
}

}  // namespace tcldpc
