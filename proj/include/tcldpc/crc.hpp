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

#include <cstdint>

#include "tcldpc/bitvec.hpp"
#include "tcldpc/gf2_poly.hpp"

namespace tcldpc {

// Cyclic redundancy check code defined by its generator polynomial.
//
// With the zero-preset default, a block b(x) (bit i of the block is the
// coefficient of x^i) passes the check exactly when g divides b(x).  The
// ones_preset flag reproduces hardware framings that seed the shift
// register with all ones; it offsets the P check bits by the all-ones
// pattern and is never used in the error-rate analyses here.
struct CrcCode {
  Gf2Polynomial generator;
  std::size_t redundancy = 0;  // P = deg(g)
  bool ones_preset = false;

  static CrcCode from_mask(std::uint64_t mask, bool ones_preset = false) {
    CrcCode c;
    c.generator = Gf2Polynomial::from_mask(mask);
    const auto d = c.generator.degree();
    if (!d || *d == 0) throw std::invalid_argument("CRC generator must have positive degree");
    if (!c.generator.coeff(0))
      throw std::invalid_argument("CRC generator must have nonzero constant term");
    c.redundancy = *d;
    c.ones_preset = ones_preset;
    return c;
  }

  // x^16 + x^12 + x^5 + 1, the CCITT generator used on telecommand frames.
  static CrcCode crc16_ccitt() { return from_mask(0x11021); }

  // x^8 + x^7 + x^6 + x^4 + x^2 + 1 (the DVB-S2 CRC-8 generator).
  static CrcCode crc8_dvbs2() { return from_mask(0x1d5); }
};

namespace detail {
// Value the block polynomial must reduce to for a valid block of the given
// total length.  Zero for the zero-preset convention.
inline Gf2Polynomial crc_target(const CrcCode& crc, std::size_t block_bits) {
  if (!crc.ones_preset) return Gf2Polynomial();
  BitVector ones(crc.redundancy);
  for (std::size_t i = 0; i < crc.redundancy; ++i) ones.set(i, true);
  return Gf2Polynomial(ones).shifted(block_bits - crc.redundancy).mod(crc.generator);
}
}  // namespace detail

// Appends the P redundancy bits that make the whole block b(x) reduce to the
// preset target modulo g.  The appended bits occupy the highest-degree
// coefficients, so they solve pay(x) + x^len r(x) = target (mod g), giving
// r = (target + pay) * x^-len (mod g).
inline BitVector crc_append(const BitVector& payload, const CrcCode& crc) {
  const std::size_t len = payload.size();
  const Gf2Polynomial target = detail::crc_target(crc, len + crc.redundancy);
  const Gf2Polynomial pay(payload);
  const Gf2Polynomial xinv_len = pow_mod(x_inverse_mod(crc.generator), len, crc.generator);
  const Gf2Polynomial r = mul_mod(target + pay.mod(crc.generator), xinv_len, crc.generator);
  BitVector out = BitVector::concat(payload, BitVector(crc.redundancy));
  for (std::size_t i = 0; i < crc.redundancy; ++i)
    if (r.coeff(i)) out.set(len + i, true);
  return out;
}

// Validity test over a block whose last P bits are the redundancy field.
inline bool crc_check(const BitVector& block, const CrcCode& crc) {
  if (block.size() <= crc.redundancy) return false;
  const Gf2Polynomial target = detail::crc_target(crc, block.size());
  return Gf2Polynomial(block).mod(crc.generator) == target;
}

}  // namespace tcldpc
