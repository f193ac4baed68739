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

#include <tuple>

#include "tcldpc/detection.hpp"
#include "tcldpc/ldpc_codes.hpp"
#include "tcldpc/rng.hpp"
#include "tcldpc/spectrum.hpp"

namespace tcldpc {

// Randomized protograph-style search for a small companion code.
//
// Candidates reuse the cell pattern of the (128,64) telecommand base matrix
// (two-shift circulants on the diagonal of the information half, a ring of
// zero blocks in the parity half) with a smaller circulant size, drawing
// the shift exponents at random.  A candidate is kept when its parity half
// is invertible (so codewords are message-first systematic) and scored by
// exhaustive spectrum and CRC profile: higher minimum distance first, then
// CRC-transparent multiplicities L at the two lowest weights (zero wanted,
// so low-weight errors never pass the CRC), then fewer minimum-weight
// codewords, then more CRC-transparent codewords at the mid weights that
// dominate low-SNR undetected mass (so end-to-end events stay observable).
struct DesignConfig {
  std::size_t m = 4;          // circulant size; the code is (8m, 4m)
  std::size_t trials = 500;   // random candidates to score
  std::uint64_t seed = 1;
  CrcCode crc = CrcCode::crc8_dvbs2();
};

struct DesignResult {
  bool found = false;
  CirculantBaseMatrix base;
  WeightSpectrum spectrum;
  PerWeightCrcProfile profile;
  std::size_t trials_run = 0;
};

namespace detail {
// Lower tuples are better.
inline std::tuple<long, long, long, long, long> design_score(const WeightSpectrum& spectrum,
                                                             const PerWeightCrcProfile& profile) {
  const std::size_t dmin = spectrum.min_distance().value_or(0);
  const auto entry = [&](std::size_t w) {
    const auto it = profile.entries.find(w);
    return it == profile.entries.end() ? PerWeightCrcProfile::Entry{} : it->second;
  };
  long mid_transparent = 0;
  for (std::size_t w = dmin + 4; w <= dmin + 10; w += 2)
    mid_transparent += static_cast<long>(entry(w).divisible);
  return {
      -static_cast<long>(dmin),
      static_cast<long>(entry(dmin).divisible),
      static_cast<long>(entry(dmin + 2).divisible),
      static_cast<long>(spectrum.count(dmin)),
      -mid_transparent,
  };
}
}  // namespace detail

inline DesignResult design_search_32_16(const DesignConfig& config) {
  SplitMix64 rng(derive_seed(config.seed, 0xde51u, 0));
  DesignResult best;
  std::tuple<long, long, long, long, long> best_score{1, 0, 0, 0, 0};

  for (std::size_t t = 0; t < config.trials; ++t) {
    CirculantBaseMatrix base;
    base.block_rows = 4;
    base.block_cols = 8;
    base.m = config.m;
    base.cells.assign(4, std::vector<std::vector<std::uint32_t>>(8));
    auto exponent = [&] { return static_cast<std::uint32_t>(rng.next() % config.m); };
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        if (r == c) {
          const std::uint32_t e = 1 + static_cast<std::uint32_t>(rng.next() % (config.m - 1));
          base.cells[r][c] = {0, e};
        } else {
          base.cells[r][c] = {exponent()};
        }
      }
      for (std::size_t c = 4; c < 8; ++c) {
        if (c - 4 == r)
          base.cells[r][c] = {};  // zero block ring, as in the full-size code
        else
          base.cells[r][c] = {exponent()};
      }
    }

    const Gf2Matrix h = expand_base(base);
    LinearCode code;
    try {
      code = make_code(h, "design-candidate", base.m);
    } catch (const DegenerateCode&) {
      continue;
    }
    if (code.k != 4 * config.m || !code.systematic_prefix()) continue;

    const WeightSpectrum spectrum = exhaustive_spectrum(code);
    const PerWeightCrcProfile profile = crc_profile_exhaustive(code, config.crc);
    const auto score = detail::design_score(spectrum, profile);
    if (!best.found || score < best_score) {
      best.found = true;
      best.base = base;
      best.spectrum = spectrum;
      best.profile = profile;
      best_score = score;
    }
  }
  best.trials_run = config.trials;
  return best;
}

}  // namespace tcldpc
