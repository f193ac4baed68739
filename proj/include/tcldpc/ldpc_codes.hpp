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
#include <optional>
#include <string>
#include <utility>

#include "tcldpc/gf2_matrix.hpp"
#include "tcldpc/qc.hpp"

namespace tcldpc {

// A binary linear block code with a fixed parity-check matrix and the
// systematic generator derived from it.
struct LinearCode {
  std::string name;
  std::size_t n = 0;
  std::size_t k = 0;
  Gf2Matrix h;
  Gf2Matrix g;                            // k x n, identity on info_columns
  std::vector<std::size_t> info_columns;  // message bit i -> codeword position
  std::optional<std::size_t> qc_block;    // circulant size when quasi-cyclic

  double rate() const { return static_cast<double>(k) / static_cast<double>(n); }

  BitVector encode(const BitVector& message) const {
    assert(message.size() == k);
    BitVector c(n);
    for (std::size_t i = 0; i < k; ++i)
      if (message.get(i)) c ^= g.row(i);
    return c;
  }

  bool in_code(const BitVector& word) const { return !h.mul_vector(word).any(); }

  // True when the information set is the leading k positions, i.e. a
  // codeword is the message followed by parity.
  bool systematic_prefix() const {
    for (std::size_t i = 0; i < info_columns.size(); ++i)
      if (info_columns[i] != i) return false;
    return true;
  }
};

inline LinearCode make_code(Gf2Matrix h, std::string name,
                            std::optional<std::size_t> qc_block = std::nullopt) {
  LinearCode code;
  code.name = std::move(name);
  code.n = h.cols();
  SystematicForm sys = systematic_generator(h);
  code.k = sys.info_columns.size();
  code.h = std::move(h);
  code.g = std::move(sys.generator);
  code.info_columns = std::move(sys.info_columns);
  code.qc_block = qc_block;
  return code;
}

inline LinearCode make_code(const CirculantBaseMatrix& base, std::string name) {
  return make_code(expand_base(base), std::move(name), base.m);
}

// Base matrix of the CCSDS (128,64) quasi-cyclic LDPC code for telecommand:
// 4x8 blocks of 16x16 circulants, H = [A | B] with the information part on
// the leading 64 columns.
inline CirculantBaseMatrix ccsds_ldpc_128_64_base() {
  CirculantBaseMatrix base;
  base.block_rows = 4;
  base.block_cols = 8;
  base.m = 16;
  base.cells = {
      {{0, 7}, {2}, {14}, {6}, {}, {0}, {13}, {0}},
      {{6}, {0, 15}, {0}, {1}, {0}, {}, {0}, {7}},
      {{4}, {1}, {0, 15}, {14}, {11}, {0}, {}, {3}},
      {{0}, {1}, {9}, {0, 13}, {14}, {1}, {0}, {}},
  };
  return base;
}

inline LinearCode build_ccsds_ldpc_128_64() {
  return make_code(ccsds_ldpc_128_64_base(), "ccsds-128-64");
}

// Small (32,16) quasi-cyclic companion code used for exhaustive desk checks:
// same cell pattern as the (128,64) code with 4x4 circulants.  Picked by
// `spectrum design --seed 7 --trials 400 --crc 0x1d5`: minimum distance 6
// with A_6 = 8, and no codeword of weight 6 or 8 has an information prefix
// divisible by the 0x1D5 CRC-8 generator.
inline CirculantBaseMatrix ldpc_32_16_base() {
  CirculantBaseMatrix base;
  base.block_rows = 4;
  base.block_cols = 8;
  base.m = 4;
  base.cells = {
      {{0, 3}, {1}, {0}, {0}, {}, {2}, {0}, {0}},
      {{3}, {0, 2}, {2}, {1}, {3}, {}, {3}, {2}},
      {{2}, {1}, {0, 2}, {2}, {0}, {1}, {}, {0}},
      {{3}, {2}, {2}, {0, 2}, {1}, {3}, {0}, {}},
  };
  return base;
}

inline LinearCode build_ldpc_32_16() { return make_code(ldpc_32_16_base(), "ldpc-32-16"); }

}  // namespace tcldpc
