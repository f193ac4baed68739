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

#include <map>
#include <unordered_set>
#include <vector>

#include "tcldpc/channel.hpp"
#include "tcldpc/mrb.hpp"
#include "tcldpc/rng.hpp"
#include "tcldpc/spectrum.hpp"

namespace tcldpc {

// Error-impulse style search for low-weight codewords.
//
// Each trial observes the all-zero codeword at high confidence, superposes
// one or two strong negative impulses (optionally with position jitter on
// the remaining samples), and hands the result to an MRB decoder whose
// candidate collector retains every re-encoded candidate of weight at most
// max_weight.  Because every candidate the decoder enumerates is a
// codeword, a single decode can harvest hundreds of distinct low-weight
// codewords; impulses just steer the reliability ordering to new regions.
// Found codewords are closed under block-wise cyclic shift when the code is
// quasi-cyclic.
struct LowWeightSearchConfig {
  std::size_t budget = 1500;     // number of MRB decodes
  std::size_t max_weight = 18;   // retain codewords up to this weight
  int order = 4;                 // reprocessing order of the search decoder
  double base_llr = 8.0;         // confidence of the all-zero observation
  double impulse_llr = -24.0;    // impulse pushing a position toward 1
  double jitter = 2.0;           // llr noise once the sweep phases are done
};

struct LowWeightResult {
  WeightSpectrum spectrum;  // counts of the retained sets; lower bounds
  std::map<std::size_t, std::vector<BitVector>> codewords;  // by weight, sorted
  std::size_t decodes = 0;
};

inline LowWeightResult low_weight_search(const LinearCode& code,
                                         const LowWeightSearchConfig& config,
                                         std::uint64_t seed) {
  LowWeightResult result;
  result.spectrum.n = code.n;
  result.spectrum.k = code.k;
  if (config.budget == 0) return result;

  std::unordered_set<BitVector, BitVectorHash> found;
  MrbDecoder decoder(code, {config.order});
  decoder.set_collector(config.max_weight, [&](const BitVector& w) {
    if (!w.any() || found.count(w)) return;
    const std::vector<BitVector> orbit =
        code.qc_block ? orbit_expand(w, *code.qc_block) : std::vector<BitVector>{w};
    for (const BitVector& member : orbit) found.insert(member);
  });

  LlrVector llr(code.n);
  std::size_t used = 0;
  SplitMix64 rng(derive_seed(seed, 0x10u, 0));

  auto run_trial = [&](auto&& fill) {
    if (used >= config.budget) return false;
    fill();
    decoder.decode(llr);
    ++used;
    return true;
  };

  // Phase 1: single impulses.
  for (std::size_t p = 0; p < code.n; ++p) {
    const bool more = run_trial([&] {
      std::fill(llr.begin(), llr.end(), config.base_llr);
      llr[p] = config.impulse_llr;
    });
    if (!more) break;
  }

  // Phase 2: impulse pairs, first positions cycling ahead of second ones so
  // truncated budgets still spread over the block.
  for (std::size_t p = 0; p + 1 < code.n && used < config.budget; ++p) {
    for (std::size_t q = p + 1; q < code.n && used < config.budget; ++q) {
      if (used >= config.budget) break;
      // jittered pair trials explore more spectrum per decode than the full
      // deterministic pair sweep; keep pairs local and hand the rest to
      // phase 3
      if (q > p + code.n / 8) break;
      run_trial([&] {
        std::fill(llr.begin(), llr.end(), config.base_llr);
        llr[p] = config.impulse_llr;
        llr[q] = config.impulse_llr;
      });
    }
  }

  // Phase 3: jittered random impulses.
  while (used < config.budget) {
    run_trial([&] {
      for (double& v : llr) v = config.base_llr + config.jitter * rng.gaussian();
      const std::size_t impulses = 1 + (rng.next() % 3);
      for (std::size_t i = 0; i < impulses; ++i)
        llr[rng.next() % code.n] = config.impulse_llr * (0.5 + rng.uniform());
    });
  }

  decoder.clear_collector();

  // Phase 4: close the found set under pairwise sums.  Sums of codewords are
  // codewords, and stragglers the impulse trials miss are often sums of two
  // words already in hand; orbits of new sums feed the next pass until the
  // set stops growing.
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<BitVector> snapshot(found.begin(), found.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        BitVector sum = snapshot[i];
        sum ^= snapshot[j];
        if (!sum.any() || sum.weight() > config.max_weight || found.count(sum)) continue;
        const std::vector<BitVector> orbit =
            code.qc_block ? orbit_expand(sum, *code.qc_block) : std::vector<BitVector>{sum};
        for (const BitVector& member : orbit) found.insert(member);
        grew = true;
      }
    }
  }
  result.decodes = used;
  for (const BitVector& w : found) result.codewords[w.weight()].push_back(w);
  for (auto& [weight, words] : result.codewords) {
    std::sort(words.begin(), words.end(),
              [](const BitVector& a, const BitVector& b) { return a.lex_less(b); });
    result.spectrum.add(weight, words.size(), Exactness::lower_bound);
  }
  return result;
}

}  // namespace tcldpc
