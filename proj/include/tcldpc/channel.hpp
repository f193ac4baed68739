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

#include <cmath>
#include <vector>

#include "tcldpc/bitvec.hpp"
#include "tcldpc/rng.hpp"

namespace tcldpc {

// BPSK over AWGN with unit symbol energy: bit b maps to 1-2b, and the noise
// variance follows from Eb/N0 and the code rate.
struct ChannelParams {
  double eb_n0_db = 0.0;
  double rate = 0.5;
  double sigma2 = 0.0;  // N0/2

  ChannelParams() = default;
  ChannelParams(double eb_n0_db, double rate)
      : eb_n0_db(eb_n0_db),
        rate(rate),
        sigma2(1.0 / (2.0 * rate * std::pow(10.0, eb_n0_db / 10.0))) {
    if (!(rate > 0.0 && rate <= 1.0)) throw std::invalid_argument("code rate must be in (0, 1]");
  }
};

using LlrVector = std::vector<double>;

// Channel log-likelihood ratio of y under BPSK: positive favors bit 0.
inline double llr_from_observation(double y, double sigma2) { return 2.0 * y / sigma2; }

inline LlrVector transmit(const BitVector& codeword, const ChannelParams& params,
                          SplitMix64& rng) {
  const double sigma = std::sqrt(params.sigma2);
  LlrVector llr(codeword.size());
  for (std::size_t i = 0; i < codeword.size(); ++i) {
    const double symbol = codeword.get(i) ? -1.0 : 1.0;
    const double y = symbol + sigma * rng.gaussian();
    llr[i] = llr_from_observation(y, params.sigma2);
  }
  return llr;
}

// Noise-free observation of a codeword, useful for decoder sanity checks.
inline LlrVector transmit_noiseless(const BitVector& codeword, const ChannelParams& params) {
  LlrVector llr(codeword.size());
  for (std::size_t i = 0; i < codeword.size(); ++i)
    llr[i] = llr_from_observation(codeword.get(i) ? -1.0 : 1.0, params.sigma2);
  return llr;
}

}  // namespace tcldpc
