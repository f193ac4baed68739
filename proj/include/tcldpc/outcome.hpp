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

#include <optional>

#include "tcldpc/bitvec.hpp"
#include "tcldpc/gf2_matrix.hpp"

namespace tcldpc {

// Raw decoder output: the hard decision reached, whether it satisfies every
// parity check, and how many iterations were spent (0 for one-shot
// decoders).
struct DecodeResult {
  BitVector word;
  bool syndrome_ok = false;
  int iterations = 0;
};

enum class OutcomeKind {
  corrected,         // decoder returned the transmitted codeword
  detected_failure,  // decoder gave up without reaching a codeword
  undetected_error,  // decoder returned a different codeword
};

struct DecodeOutcome {
  OutcomeKind kind = OutcomeKind::detected_failure;
  std::optional<BitVector> decoded;  // present unless the failure is detected
  std::size_t error_weight = 0;      // Hamming distance to the transmitted codeword
  int iterations = 0;
};

// Splits a decode against the known transmitted codeword into the three
// events of interest.  Codeword membership is re-checked against h rather
// than trusting the decoder's flag.
inline DecodeOutcome classify(const DecodeResult& result, const BitVector& transmitted,
                              const Gf2Matrix& h) {
  DecodeOutcome outcome;
  outcome.iterations = result.iterations;
  if (result.word == transmitted) {
    outcome.kind = OutcomeKind::corrected;
    outcome.decoded = result.word;
    return outcome;
  }
  if (!h.mul_vector(result.word).any()) {
    outcome.kind = OutcomeKind::undetected_error;
    outcome.decoded = result.word;
    outcome.error_weight = (result.word ^ transmitted).weight();
    return outcome;
  }
  outcome.kind = OutcomeKind::detected_failure;
  return outcome;
}

}  // namespace tcldpc
