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

#include <vector>

#include "tcldpc/crc.hpp"
#include "tcldpc/errors.hpp"

namespace tcldpc {

// Fill appended after the CRC to reach a whole number of code blocks.
enum class StuffPattern {
  alternating,  // 0101... restarting at the first fill bit
  zeros,
};

inline constexpr std::size_t min_frame_bits = 64;
inline constexpr std::size_t max_frame_bits = 8192;

// How a protected block of S bits (payload plus CRC) maps onto N
// information fields of k bits each.
struct FrameLayout {
  std::size_t s_bits = 0;      // payload + CRC
  std::size_t k = 0;           // information bits per code block
  std::size_t num_blocks = 0;  // N = ceil(S / k)
  std::size_t fill_bits = 0;   // N*k - S
};

namespace detail {
inline FrameLayout frame_layout_unchecked(std::size_t s_bits, std::size_t k) {
  FrameLayout layout;
  layout.s_bits = s_bits;
  layout.k = k;
  layout.num_blocks = (s_bits + k - 1) / k;
  layout.fill_bits = layout.num_blocks * k - s_bits;
  return layout;
}

inline bool fill_bit(StuffPattern pattern, std::size_t index) {
  return pattern == StuffPattern::alternating && index % 2 == 1;
}

// Splits s_bits of protected data into information fields with fill, with
// no range validation; the public frame_build enforces the frame bounds.
inline std::vector<BitVector> split_blocks(const BitVector& s_bits, std::size_t k,
                                           StuffPattern pattern) {
  const FrameLayout layout = frame_layout_unchecked(s_bits.size(), k);
  std::vector<BitVector> blocks(layout.num_blocks, BitVector(k));
  for (std::size_t i = 0; i < s_bits.size(); ++i)
    if (s_bits.get(i)) blocks[i / k].set(i % k, true);
  for (std::size_t j = 0; j < layout.fill_bits; ++j) {
    const std::size_t i = s_bits.size() + j;
    if (fill_bit(pattern, j)) blocks[i / k].set(i % k, true);
  }
  return blocks;
}
}  // namespace detail

// Layout for a payload of `payload_bits` (CRC excluded) over blocks with k
// information bits.  Throws PayloadOutOfRange unless the protected length
// S = payload + P lies within the transfer-frame bounds [64, 8192].
inline FrameLayout frame_layout(std::size_t payload_bits, const CrcCode& crc, std::size_t k) {
  const std::size_t s = payload_bits + crc.redundancy;
  if (s < min_frame_bits || s > max_frame_bits)
    throw PayloadOutOfRange("protected length " + std::to_string(s) + " outside [" +
                            std::to_string(min_frame_bits) + ", " + std::to_string(max_frame_bits) +
                            "]");
  return detail::frame_layout_unchecked(s, k);
}

// Appends the CRC to the payload and splits the result into N information
// fields of k bits, padding the tail block with the fill pattern.
inline std::vector<BitVector> frame_build(const BitVector& payload, std::size_t k,
                                          const CrcCode& crc,
                                          StuffPattern pattern = StuffPattern::alternating) {
  frame_layout(payload.size(), crc, k);  // validates the range
  return detail::split_blocks(crc_append(payload, crc), k, pattern);
}

// Concatenation of the information fields truncated to the protected length.
inline BitVector frame_protected_bits(const std::vector<BitVector>& blocks, std::size_t s_bits) {
  BitVector out(s_bits);
  for (std::size_t i = 0; i < s_bits; ++i) {
    const std::size_t k = blocks.front().size();
    if (blocks[i / k].get(i % k)) out.set(i, true);
  }
  return out;
}

// Recovers the payload (fill and CRC stripped) from received information
// fields.  The CRC is not verified here; run crc_check on
// frame_protected_bits to validate.
inline BitVector frame_parse(const std::vector<BitVector>& blocks, std::size_t payload_bits,
                             const CrcCode& crc) {
  const std::size_t s = payload_bits + crc.redundancy;
  return frame_protected_bits(blocks, s).slice(0, payload_bits);
}

}  // namespace tcldpc
