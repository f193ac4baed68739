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
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tcldpc/crc.hpp"
#include "tcldpc/errors.hpp"
#include "tcldpc/ldpc_codes.hpp"
#include "tcldpc/spectrum.hpp"

namespace tcldpc {

// The divisibility test: an undetected error codeword c slips past the CRC
// exactly when its information part m(x) (the first k bits) is divisible by
// the CRC generator.  This follows from linearity: the corrupted frame is
// frame(x) + m(x)-per-block, and valid frames are multiples of g.
inline bool divisibility_test(const BitVector& codeword, std::size_t k, const CrcCode& crc) {
  return Gf2Polynomial(codeword.slice(0, k)).divisible_by(crc.generator);
}

// Remainders of x^i modulo g for i below a bound, packed as masks.  Turns
// long divisions of sparse or shifted polynomials into a handful of XORs.
class MonomialRemainders {
 public:
  MonomialRemainders(const CrcCode& crc, std::size_t max_degree) : rem_(max_degree + 1) {
    const std::uint64_t g_mask = crc.generator.coefficients().word(0);
    const std::size_t p = crc.redundancy;
    std::uint64_t r = 1;  // x^0
    for (std::size_t i = 0; i <= max_degree; ++i) {
      rem_[i] = r;
      r <<= 1;
      if ((r >> p) & 1u) r ^= g_mask;  // reduce the new x^p term
    }
  }

  std::uint64_t rem(std::size_t i) const { return rem_[i]; }

  // Remainder of sum(bit_i x^i) * x^shift modulo g.
  std::uint64_t reduce(const BitVector& bits, std::size_t shift) const {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < bits.words().size(); ++w) {
      std::uint64_t word = bits.word(w);
      while (word) {
        const std::size_t i = 64 * w + static_cast<std::size_t>(std::countr_zero(word));
        acc ^= rem_[i + shift];
        word &= word - 1;
      }
    }
    return acc;
  }

 private:
  std::vector<std::uint64_t> rem_;
};

// Whether x^(block_bits * block_offset) * m(x) is divisible by g.  Because
// gcd(x, g) = 1 for any CRC generator with nonzero constant term, this
// holds independently of the offset; the operation exists to let callers
// verify that frame position does not affect detectability.
inline bool shifted_divisibility(const Gf2Polynomial& m, std::size_t block_offset,
                                 const CrcCode& crc, std::size_t block_bits = 64) {
  const std::size_t shift = block_bits * block_offset;
  const auto dm = m.degree();
  const std::size_t max_deg = (dm ? *dm : 0) + shift;
  const MonomialRemainders table(crc, max_deg);
  return table.reduce(m.coefficients(), shift) == 0;
}

// Per-weight CRC failure profile: for each information-part weight class of
// the outer code's codewords, how many of the A_j codewords have a
// g-divisible information part (L_j), i.e. are undetectable.  Counts are
// exact integers; the ratio is only materialized on output.  The all-zero
// codeword is excluded from every count.
struct PerWeightCrcProfile {
  struct Entry {
    std::uint64_t divisible = 0;  // L_j
    std::uint64_t total = 0;      // A_j
    Exactness exactness = Exactness::exact;

    double ratio() const {
      return total == 0 ? 0.0 : static_cast<double>(divisible) / static_cast<double>(total);
    }
  };

  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t crc_mask = 0;
  std::map<std::size_t, Entry> entries;
};

// Profile over the full codebook (dimension permitting).
inline PerWeightCrcProfile crc_profile_exhaustive(const LinearCode& code, const CrcCode& crc,
                                                  std::size_t k_cap = default_enumeration_cap) {
  PerWeightCrcProfile profile;
  profile.n = code.n;
  profile.k = code.k;
  profile.crc_mask = crc.generator.coefficients().word(0);
  const MonomialRemainders table(crc, code.k == 0 ? 0 : code.k - 1);
  for_each_codeword(
      code,
      [&](const BitVector& w) {
        const std::size_t weight = w.weight();
        if (weight == 0) return;
        auto& entry = profile.entries[weight];
        ++entry.total;
        if (table.reduce(w.slice(0, code.k), 0) == 0) ++entry.divisible;
      },
      k_cap);
  return profile;
}

// Profile over an explicit per-weight codeword collection, e.g. the output
// of a low-weight search.  Weights whose collections are known to be
// complete can be marked exact through `exact_weights`.
inline PerWeightCrcProfile crc_profile_from_codewords(
    const std::map<std::size_t, std::vector<BitVector>>& by_weight, std::size_t k,
    const CrcCode& crc, const std::vector<std::size_t>& exact_weights = {}) {
  PerWeightCrcProfile profile;
  profile.k = k;
  profile.crc_mask = crc.generator.coefficients().word(0);
  for (const auto& [weight, words] : by_weight) {
    if (weight == 0) continue;
    auto& entry = profile.entries[weight];
    entry.exactness = Exactness::lower_bound;
    for (const BitVector& w : words) {
      profile.n = w.size();
      ++entry.total;
      if (divisibility_test(w, k, crc)) ++entry.divisible;
    }
  }
  for (std::size_t w : exact_weights) {
    const auto it = profile.entries.find(w);
    if (it != profile.entries.end()) it->second.exactness = Exactness::exact;
  }
  return profile;
}

// CSV form: "weight,L,A,ratio,exactness".
inline void write_crc_profile_csv(std::ostream& out, const PerWeightCrcProfile& profile) {
  out << "# n=" << profile.n << " k=" << profile.k << " crc=0x" << std::hex << profile.crc_mask
      << std::dec << '\n';
  out << "weight,L,A,ratio,exactness\n";
  for (const auto& [w, e] : profile.entries) {
    std::ostringstream ratio;
    ratio.precision(17);
    ratio << e.ratio();
    out << w << ',' << e.divisible << ',' << e.total << ',' << ratio.str() << ','
        << to_string(e.exactness) << '\n';
  }
}

inline PerWeightCrcProfile read_crc_profile_csv(std::istream& in) {
  PerWeightCrcProfile profile;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream meta(line.substr(1));
      std::string tok;
      while (meta >> tok) {
        if (tok.rfind("n=", 0) == 0) profile.n = std::stoull(tok.substr(2));
        if (tok.rfind("k=", 0) == 0) profile.k = std::stoull(tok.substr(2));
        if (tok.rfind("crc=0x", 0) == 0) profile.crc_mask = std::stoull(tok.substr(6), nullptr, 16);
      }
      continue;
    }
    if (!header_seen) {
      if (line.rfind("weight,", 0) != 0) throw ParseError("crc profile csv missing header");
      header_seen = true;
      continue;
    }
    std::istringstream row(line);
    std::string wtok, ltok, atok, rtok, etok;
    if (!std::getline(row, wtok, ',') || !std::getline(row, ltok, ',') ||
        !std::getline(row, atok, ',') || !std::getline(row, rtok, ',') ||
        !std::getline(row, etok))
      throw ParseError("bad crc profile row: " + line);
    auto& entry = profile.entries[std::stoull(wtok)];
    entry.divisible = std::stoull(ltok);
    entry.total = std::stoull(atok);
    entry.exactness = etok == "exact" ? Exactness::exact : Exactness::lower_bound;
  }
  if (!header_seen) throw ParseError("empty crc profile csv");
  return profile;
}

// Per-weight undetected-error profile of the outer decoder at one SNR
// point: how many decodes landed on a wrong codeword at distance j.
struct PerWeightLdpcProfile {
  double snr_db = 0.0;
  std::uint64_t frames = 0;
  std::map<std::size_t, std::uint64_t> undetected_by_weight;

  double ucer_total() const {
    std::uint64_t q = 0;
    for (const auto& [w, c] : undetected_by_weight) q += c;
    return frames == 0 ? 0.0 : static_cast<double>(q) / static_cast<double>(frames);
  }
};

// One weight's contribution to the combined rate, with provenance.
struct CombinedTerm {
  std::size_t weight = 0;
  double ldpc_ucer = 0.0;          // UCER_j of the outer decoder
  std::uint64_t crc_divisible = 0;  // L_j
  std::uint64_t crc_total = 0;      // A_j
  double contribution = 0.0;        // UCER_j * L_j / A_j
  Exactness exactness = Exactness::exact;
};

struct CombinedUcer {
  double ucer = 0.0;
  double ldpc_ucer_total = 0.0;
  std::size_t j_min = 0, j_max = 0;
  bool all_exact = true;
  std::vector<CombinedTerm> terms;
};

// The per-weight combination: UCER = sum_j UCER_j * (L_j / A_j) over
// weights j in [j_min, j_max].  Weights with simulated mass but no CRC
// profile entry raise MissingWeightData; weights with no mass contribute
// nothing and need no entry.
inline CombinedUcer combine_ucer(const PerWeightLdpcProfile& ldpc,
                                 const PerWeightCrcProfile& crc_profile, std::size_t j_min,
                                 std::size_t j_max) {
  CombinedUcer out;
  out.j_min = j_min;
  out.j_max = j_max;
  out.ldpc_ucer_total = ldpc.ucer_total();
  for (const auto& [weight, count] : ldpc.undetected_by_weight) {
    if (count == 0 || weight < j_min || weight > j_max) continue;
    const auto it = crc_profile.entries.find(weight);
    if (it == crc_profile.entries.end() || it->second.total == 0)
      throw MissingWeightData(weight);
    CombinedTerm term;
    term.weight = weight;
    term.ldpc_ucer = static_cast<double>(count) / static_cast<double>(ldpc.frames);
    term.crc_divisible = it->second.divisible;
    term.crc_total = it->second.total;
    term.exactness = it->second.exactness;
    term.contribution = term.ldpc_ucer * it->second.ratio();
    if (term.exactness != Exactness::exact) out.all_exact = false;
    out.ucer += term.contribution;
    out.terms.push_back(term);
  }
  return out;
}

// The conventional estimate: every undetected outer-code error survives the
// CRC with probability 2^-P, regardless of weight.
inline double conventional_estimate(double ldpc_ucer_total, std::size_t p_bits) {
  return ldpc_ucer_total * std::pow(2.0, -static_cast<double>(p_bits));
}

}  // namespace tcldpc
