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
#include <unordered_set>
#include <vector>

#include "tcldpc/erfc.hpp"
#include "tcldpc/errors.hpp"
#include "tcldpc/ldpc_codes.hpp"

namespace tcldpc {

enum class Exactness { exact, lower_bound };

inline const char* to_string(Exactness e) {
  return e == Exactness::exact ? "exact" : "lower_bound";
}

// Codeword multiplicities by Hamming weight.  Entries may be exact counts
// or lower bounds from a partial search; consumers that care must check.
struct WeightSpectrum {
  struct Entry {
    std::uint64_t count = 0;
    Exactness exactness = Exactness::exact;
  };

  std::size_t n = 0;
  std::size_t k = 0;
  std::map<std::size_t, Entry> entries;

  void add(std::size_t weight, std::uint64_t count, Exactness e = Exactness::exact) {
    auto& entry = entries[weight];
    entry.count += count;
    if (e == Exactness::lower_bound) entry.exactness = Exactness::lower_bound;
  }

  std::uint64_t count(std::size_t weight) const {
    const auto it = entries.find(weight);
    return it == entries.end() ? 0 : it->second.count;
  }

  // Smallest nonzero weight present.
  std::optional<std::size_t> min_distance() const {
    for (const auto& [w, e] : entries)
      if (w > 0 && e.count > 0) return w;
    return std::nullopt;
  }

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [w, e] : entries) t += e.count;
    return t;
  }
};

inline constexpr std::size_t default_enumeration_cap = 28;

// Visits every codeword once, in Gray-code order over messages so each step
// is a single generator-row XOR.  The visitor receives the codeword by
// const reference and must copy if it keeps it.  Dimension is capped
// because the walk is 2^k steps.
template <typename Visitor>
void for_each_codeword(const LinearCode& code, Visitor&& visit,
                       std::size_t k_cap = default_enumeration_cap) {
  if (code.k > k_cap)
    throw std::invalid_argument("exhaustive enumeration capped at k=" + std::to_string(k_cap) +
                                " (code has k=" + std::to_string(code.k) + ")");
  BitVector word(code.n);
  visit(static_cast<const BitVector&>(word));
  const std::uint64_t total = std::uint64_t{1} << code.k;
  for (std::uint64_t i = 1; i < total; ++i) {
    word ^= code.g.row(static_cast<std::size_t>(std::countr_zero(i)));
    visit(static_cast<const BitVector&>(word));
  }
}

inline WeightSpectrum exhaustive_spectrum(const LinearCode& code,
                                          std::size_t k_cap = default_enumeration_cap) {
  WeightSpectrum s;
  s.n = code.n;
  s.k = code.k;
  for_each_codeword(code, [&](const BitVector& w) { s.add(w.weight(), 1, Exactness::exact); },
                    k_cap);
  return s;
}

// Distinct images of a word under simultaneous cyclic right-shift of every
// length-m block.  Group theory makes the orbit size divide m.  Throws
// BlockMismatch when the length is not a multiple of m.
inline std::vector<BitVector> orbit_expand(const BitVector& word, std::size_t m) {
  if (m == 0 || word.size() % m != 0)
    throw BlockMismatch("word length " + std::to_string(word.size()) +
                        " is not a multiple of block size " + std::to_string(m));
  const std::size_t blocks = word.size() / m;
  std::vector<BitVector> orbit;
  std::unordered_set<BitVector, BitVectorHash> seen;
  for (std::size_t s = 0; s < m; ++s) {
    BitVector shifted(word.size());
    for (std::size_t b = 0; b < blocks; ++b)
      for (std::size_t j = 0; j < m; ++j)
        if (word.get(b * m + j)) shifted.set(b * m + (j + s) % m, true);
    if (seen.insert(shifted).second) orbit.push_back(std::move(shifted));
  }
  return orbit;
}

// Truncated union bound on codeword error rate under ML decoding of BPSK
// over AWGN: sum over weights of (A_w / 2) erfc(sqrt(w R Eb/N0)).
inline double union_bound_cer(const WeightSpectrum& spectrum, double rate, double eb_n0_db) {
  if (!(rate > 0.0 && rate <= 1.0)) throw std::invalid_argument("code rate must be in (0, 1]");
  const long double snr = std::pow(10.0L, static_cast<long double>(eb_n0_db) / 10.0L);
  long double sum = 0.0L;
  for (const auto& [w, entry] : spectrum.entries) {
    if (w == 0 || entry.count == 0) continue;
    sum += static_cast<long double>(entry.count) / 2.0L *
           erfc_accurate(std::sqrt(static_cast<long double>(w) * rate * snr));
  }
  return static_cast<double>(sum);
}

// Contribution of the minimum-distance term alone: the floor the full bound
// collapses to at high SNR.
inline double error_floor_term(const WeightSpectrum& spectrum, double rate, double eb_n0_db) {
  const auto dmin = spectrum.min_distance();
  if (!dmin) return 0.0;
  WeightSpectrum only;
  only.n = spectrum.n;
  only.k = spectrum.k;
  only.add(*dmin, spectrum.count(*dmin), Exactness::exact);
  return union_bound_cer(only, rate, eb_n0_db);
}

// CSV form: header "weight,multiplicity,exactness", one row per weight.
inline void write_spectrum_csv(std::ostream& out, const WeightSpectrum& s) {
  out << "# n=" << s.n << " k=" << s.k << '\n';
  out << "weight,multiplicity,exactness\n";
  for (const auto& [w, entry] : s.entries)
    out << w << ',' << entry.count << ',' << to_string(entry.exactness) << '\n';
}

inline WeightSpectrum read_spectrum_csv(std::istream& in) {
  WeightSpectrum s;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream meta(line.substr(1));
      std::string tok;
      while (meta >> tok) {
        if (tok.rfind("n=", 0) == 0) s.n = std::stoull(tok.substr(2));
        if (tok.rfind("k=", 0) == 0) s.k = std::stoull(tok.substr(2));
      }
      continue;
    }
    if (!header_seen) {
      if (line.rfind("weight,", 0) != 0) throw ParseError("spectrum csv missing header");
      header_seen = true;
      continue;
    }
    std::istringstream row(line);
    std::string wtok, ctok, etok;
    if (!std::getline(row, wtok, ',') || !std::getline(row, ctok, ',') ||
        !std::getline(row, etok))
      throw ParseError("bad spectrum csv row: " + line);
    const Exactness e = etok == "exact" ? Exactness::exact : Exactness::lower_bound;
    s.add(std::stoull(wtok), std::stoull(ctok), e);
  }
  if (!header_seen) throw ParseError("empty spectrum csv");
  return s;
}

// Published low-weight multiplicities of the CCSDS (128,64) telecommand
// code.  The three leading terms are exact; the tail terms are lower bounds
// from incomplete enumeration, which is all a truncated union bound needs.
inline WeightSpectrum ccsds_128_64_low_weight_spectrum() {
  WeightSpectrum s;
  s.n = 128;
  s.k = 64;
  s.add(14, 16, Exactness::exact);
  s.add(16, 528, Exactness::exact);
  s.add(18, 5632, Exactness::exact);
  s.add(20, 35968, Exactness::lower_bound);
  s.add(22, 123888, Exactness::lower_bound);
  s.add(24, 364944, Exactness::lower_bound);
  return s;
}

}  // namespace tcldpc
