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

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "tcldpc/ldpc_codes.hpp"
#include "tcldpc/outcome.hpp"

namespace tcldpc {

struct MrbConfig {
  int order = 4;  // maximum number of basis positions flipped per candidate
};

// Most-reliable-basis (ordered-statistics) decoder.
//
// Each decode re-derives a basis of the k most reliable independent
// positions, re-encodes the hard decision on that basis, and then scores
// every candidate obtained by flipping up to `order` basis positions.  The
// discrepancy metric is the sum of |LLR| over positions where the candidate
// disagrees with the channel hard decision, which over candidates of the
// fixed llr ordering is equivalent to maximizing correlation.  Exact score
// ties resolve to the lexicographically smallest codeword so decoding is a
// deterministic function of the input.
//
// The output always satisfies the parity checks, so a wrong decision is
// undetectable by the code itself.
//
// An optional collector observes every candidate codeword whose weight does
// not exceed a cap; the low-weight spectrum search uses this to harvest the
// entire candidate list of each decode.  While a collector is installed the
// score-based pruning is disabled so the full candidate set is visited.
class MrbDecoder {
 public:
  explicit MrbDecoder(const LinearCode& code, MrbConfig config = {})
      : code_(&code),
        order_(std::min<std::size_t>(std::max(config.order, 0), code.k)),
        n_(code.n),
        k_(code.k),
        par_(code.n - code.k),
        par_words_((par_ + 63) / 64 == 0 ? 1 : (par_ + 63) / 64),
        work_(code.g.rows(), BitVector(code.n)) {
    if (config.order < 0) throw std::invalid_argument("reprocessing order must be >= 0");
    order_idx_.resize(n_);
    basis_pos_.resize(k_);
    perm_.resize(k_);
    bpos_.resize(k_);
    brel_.resize(k_);
    hb_.resize(k_);
    npos_.resize(par_);
    nrel_.resize(par_);
    row_par_.resize(k_ * par_words_);
    hn_.resize(par_words_);
    par0_.resize(par_words_);
    diff0_.resize(par_words_);
    bufs_.resize(order_ + 1, std::vector<std::uint64_t>(par_words_));
    path_.resize(order_);
    in_basis_.resize(n_);
  }

  void set_collector(std::size_t max_weight, std::function<void(const BitVector&)> sink) {
    collect_cap_ = max_weight;
    sink_ = std::move(sink);
  }

  void clear_collector() {
    collect_cap_ = 0;
    sink_ = nullptr;
  }

  DecodeResult decode(std::span<const double> llr) {
    assert(llr.size() == n_);
    llr_ = llr;
    build_basis();
    project_parity_rows();

    // Candidate 0: hard decision on the basis, re-encoded.
    std::uint64_t hbw = 0;
    std::fill(par0_.begin(), par0_.end(), 0);
    for (std::size_t t = 0; t < k_; ++t) {
      hb_[t] = llr[bpos_[t]] < 0.0;
      if (hb_[t]) {
        ++hbw;
        xor_row(par0_.data(), t);
      }
    }
    basis_weight0_ = hbw;
    for (std::size_t w = 0; w < par_words_; ++w) diff0_[w] = par0_[w] ^ hn_[w];

    best_score_ = weighted_sum(diff0_.data());
    best_pattern_len_ = 0;
    best_word_ = reconstruct(nullptr, 0);
    if (sink_) collect(nullptr, 0, hbw, par0_.data());

    if (order_ > 0) enumerate(0, 0, 0.0, hbw, diff0_.data());
    return {best_word_, true, 0};
  }

 private:
  void build_basis() {
    std::iota(order_idx_.begin(), order_idx_.end(), 0u);
    std::sort(order_idx_.begin(), order_idx_.end(), [&](std::uint32_t a, std::uint32_t b) {
      const double ra = std::fabs(llr_[a]), rb = std::fabs(llr_[b]);
      return ra != rb ? ra > rb : a < b;
    });

    for (std::size_t i = 0; i < k_; ++i) work_[i] = code_->g.row(i);
    std::size_t b = 0;
    for (std::uint32_t pos : order_idx_) {
      if (b == k_) break;
      std::size_t pivot = b;
      while (pivot < k_ && !work_[pivot].get(pos)) ++pivot;
      if (pivot == k_) continue;  // dependent on the basis found so far
      std::swap(work_[pivot], work_[b]);
      for (std::size_t j = 0; j < k_; ++j)
        if (j != b && work_[j].get(pos)) work_[j] ^= work_[b];
      basis_pos_[b] = pos;
      ++b;
    }
    assert(b == k_);  // g has rank k, so the scan always completes

    // Enumerate flips from the least reliable basis position upward so the
    // partial flip cost is nondecreasing along each enumeration branch.
    std::iota(perm_.begin(), perm_.end(), 0u);
    std::sort(perm_.begin(), perm_.end(), [&](std::uint32_t a, std::uint32_t b2) {
      const double ra = std::fabs(llr_[basis_pos_[a]]), rb = std::fabs(llr_[basis_pos_[b2]]);
      return ra != rb ? ra < rb : basis_pos_[a] < basis_pos_[b2];
    });
    for (std::size_t t = 0; t < k_; ++t) {
      bpos_[t] = basis_pos_[perm_[t]];
      brel_[t] = std::fabs(llr_[bpos_[t]]);
    }
  }

  void project_parity_rows() {
    std::fill(in_basis_.begin(), in_basis_.end(), false);
    for (std::size_t t = 0; t < k_; ++t) in_basis_[bpos_[t]] = true;
    std::fill(hn_.begin(), hn_.end(), 0);
    std::size_t j = 0;
    for (std::size_t pos = 0; pos < n_; ++pos) {
      if (in_basis_[pos]) continue;
      npos_[j] = static_cast<std::uint32_t>(pos);
      nrel_[j] = std::fabs(llr_[pos]);
      if (llr_[pos] < 0.0) hn_[j / 64] |= std::uint64_t{1} << (j % 64);
      ++j;
    }
    assert(j == par_);

    std::fill(row_par_.begin(), row_par_.end(), 0);
    for (std::size_t t = 0; t < k_; ++t) {
      const BitVector& row = work_[perm_[t]];
      std::uint64_t* rp = &row_par_[t * par_words_];
      for (std::size_t jj = 0; jj < par_; ++jj)
        if (row.get(npos_[jj])) rp[jj / 64] |= std::uint64_t{1} << (jj % 64);
    }
  }

  void xor_row(std::uint64_t* acc, std::size_t t) const {
    const std::uint64_t* rp = &row_par_[t * par_words_];
    for (std::size_t w = 0; w < par_words_; ++w) acc[w] ^= rp[w];
  }

  double weighted_sum(const std::uint64_t* diff) const {
    double s = 0.0;
    for (std::size_t w = 0; w < par_words_; ++w) {
      std::uint64_t word = diff[w];
      while (word) {
        s += nrel_[64 * w + static_cast<std::size_t>(std::countr_zero(word))];
        word &= word - 1;
      }
    }
    return s;
  }

  std::size_t parity_popcount(const std::uint64_t* diff) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < par_words_; ++w)
      c += static_cast<std::size_t>(std::popcount(diff[w] ^ hn_[w]));
    return c;
  }

  // Candidate codeword for a flip pattern (indices into the sorted basis).
  BitVector reconstruct(const std::uint32_t* pattern, std::size_t len) const {
    BitVector word(n_);
    std::vector<std::uint64_t> pw(par0_);
    for (std::size_t t = 0; t < k_; ++t)
      if (hb_[t]) word.set(bpos_[t], true);
    for (std::size_t i = 0; i < len; ++i) {
      word.flip(bpos_[pattern[i]]);
      for (std::size_t w = 0; w < par_words_; ++w) pw[w] ^= row_par_[pattern[i] * par_words_ + w];
    }
    for (std::size_t j = 0; j < par_; ++j)
      if ((pw[j / 64] >> (j % 64)) & 1u) word.set(npos_[j], true);
    return word;
  }

  void consider(double score, std::size_t depth) {
    if (score < best_score_) {
      best_score_ = score;
      best_pattern_len_ = depth;
      best_word_ = reconstruct(path_.data(), depth);
    } else if (score == best_score_) {
      BitVector cand = reconstruct(path_.data(), depth);
      if (cand.lex_less(best_word_)) {
        best_pattern_len_ = depth;
        best_word_ = std::move(cand);
      }
    }
  }

  void collect(const std::uint32_t* pattern, std::size_t len, std::uint64_t basis_weight,
               const std::uint64_t* par) {
    std::size_t weight = basis_weight;
    for (std::size_t w = 0; w < par_words_; ++w)
      weight += static_cast<std::size_t>(std::popcount(par[w]));
    if (weight <= collect_cap_) sink_(reconstruct(pattern, len));
  }

  void enumerate(std::size_t start, std::size_t depth, double flip_sum, std::uint64_t basis_weight,
                 const std::uint64_t* prev) {
    std::uint64_t* buf = bufs_[depth + 1].data();
    for (std::size_t i = start; i < k_; ++i) {
      const double s = flip_sum + brel_[i];
      if (!sink_ && s >= best_score_) break;  // brel_ ascending: no later i can win
      for (std::size_t w = 0; w < par_words_; ++w) buf[w] = prev[w] ^ row_par_[i * par_words_ + w];
      path_[depth] = static_cast<std::uint32_t>(i);
      consider(s + weighted_sum(buf), depth + 1);
      const std::uint64_t bw = basis_weight + (hb_[i] ? -1 : 1);
      if (sink_) {
        // candidate parity = diff ^ hn
        std::size_t weight = bw;
        for (std::size_t w = 0; w < par_words_; ++w)
          weight += static_cast<std::size_t>(std::popcount(buf[w] ^ hn_[w]));
        if (weight <= collect_cap_) sink_(reconstruct(path_.data(), depth + 1));
      }
      if (depth + 1 < order_) enumerate(i + 1, depth + 1, s, bw, buf);
    }
  }

  const LinearCode* code_;
  std::size_t order_;
  std::size_t n_, k_, par_, par_words_;

  std::span<const double> llr_;
  std::vector<BitVector> work_;
  std::vector<std::uint32_t> order_idx_, basis_pos_, perm_, bpos_, npos_;
  std::vector<double> brel_, nrel_;
  std::vector<char> hb_;
  std::vector<bool> in_basis_;
  std::vector<std::uint64_t> row_par_, hn_, par0_, diff0_;
  std::vector<std::vector<std::uint64_t>> bufs_;
  std::vector<std::uint32_t> path_;
  std::uint64_t basis_weight0_ = 0;

  double best_score_ = 0.0;
  std::size_t best_pattern_len_ = 0;
  BitVector best_word_;

  std::size_t collect_cap_ = 0;
  std::function<void(const BitVector&)> sink_;
};

}  // namespace tcldpc
