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

#include <cmath>
#include <sstream>
#include <unordered_set>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tcldpc/codeword_io.hpp"
#include "tcldpc/erfc.hpp"
#include "tcldpc/ldpc_codes.hpp"
#include "tcldpc/lowweight.hpp"
#include "tcldpc/spectrum.hpp"

using tcldpc::BitVector;
using tcldpc::Exactness;
using tcldpc::LinearCode;
using tcldpc::WeightSpectrum;

TEST_CASE("erfc_accurate agrees with 256-bit arithmetic") {
  // grid straddling the series/continued-fraction switchover at x = 2
  for (double x = 0.0; x <= 25.0; x += 0.0625) {
    const double mine = static_cast<double>(tcldpc::erfc_accurate(x));
    const double ref = oracles::erfc_mpfr(x);
    REQUIRE_THAT(mine, Catch::Matchers::WithinRel(ref, 1e-13));
  }
  CHECK_THAT(static_cast<double>(tcldpc::erfc_accurate(-1.25)),
             Catch::Matchers::WithinRel(oracles::erfc_mpfr(-1.25), 1e-13));
  CHECK(tcldpc::erfc_accurate(0.0) == 1.0L);
}

TEST_CASE("union bound matches the high-precision oracle over the sweep range") {
  const WeightSpectrum spectrum = tcldpc::ccsds_128_64_low_weight_spectrum();
  std::vector<std::pair<std::size_t, std::uint64_t>> pairs;
  for (const auto& [w, e] : spectrum.entries) pairs.emplace_back(w, e.count);
  for (double snr = 0.0; snr <= 8.0 + 1e-9; snr += 0.125) {
    const double mine = tcldpc::union_bound_cer(spectrum, 0.5, snr);
    const double ref = oracles::union_bound_mpfr(pairs, 0.5, snr);
    REQUIRE_THAT(mine, Catch::Matchers::WithinRel(ref, 1e-12));
  }
}

TEST_CASE("error floor term is the minimum-distance contribution alone") {
  const WeightSpectrum spectrum = tcldpc::ccsds_128_64_low_weight_spectrum();
  const double floor = tcldpc::error_floor_term(spectrum, 0.5, 5.0);
  const double expect = oracles::union_bound_mpfr({{14, 16}}, 0.5, 5.0);
  CHECK_THAT(floor, Catch::Matchers::WithinRel(expect, 1e-12));
  CHECK(floor < tcldpc::union_bound_cer(spectrum, 0.5, 5.0));
}

TEST_CASE("published low-weight table of the (128,64) code") {
  const WeightSpectrum s = tcldpc::ccsds_128_64_low_weight_spectrum();
  CHECK(s.count(14) == 16);
  CHECK(s.count(16) == 528);
  CHECK(s.count(18) == 5632);
  CHECK(s.count(20) == 35968);
  CHECK(s.count(22) == 123888);
  CHECK(s.count(24) == 364944);
  CHECK(s.entries.at(14).exactness == Exactness::exact);
  CHECK(s.entries.at(18).exactness == Exactness::exact);
  CHECK(s.entries.at(20).exactness == Exactness::lower_bound);
  CHECK(s.min_distance() == std::size_t{14});
}

TEST_CASE("for_each_codeword walks all 2^k distinct codewords") {
  const LinearCode code = tcldpc::build_ldpc_32_16();
  std::unordered_set<BitVector, tcldpc::BitVectorHash> seen;
  tcldpc::for_each_codeword(code, [&](const BitVector& w) { seen.insert(w); });
  CHECK(seen.size() == std::size_t{1} << 16);
  for (const BitVector& w : seen) REQUIRE(code.in_code(w));
}

TEST_CASE("enumeration refuses dimensions beyond the cap") {
  const LinearCode code = tcldpc::build_ccsds_ldpc_128_64();
  CHECK_THROWS_AS(tcldpc::exhaustive_spectrum(code), std::invalid_argument);
}

TEST_CASE("toy code spectrum: frozen counts and symmetry") {
  const LinearCode code = tcldpc::build_ldpc_32_16();
  const WeightSpectrum s = tcldpc::exhaustive_spectrum(code);
  CHECK(s.total() == std::uint64_t{1} << 16);
  CHECK(s.min_distance() == std::size_t{6});
  CHECK(s.count(6) == 8);
  CHECK(s.count(8) == 332);
  CHECK(s.count(10) == 2088);
  CHECK(s.count(12) == 6720);
  CHECK(s.count(32) == 1);  // transparent code: contains the all-ones word
  for (std::size_t w = 0; w <= 32; ++w) REQUIRE(s.count(w) == s.count(32 - w));
}

TEST_CASE("orbit_expand sizes follow the pattern period") {
  // full-period block: orbit size m
  const BitVector single = BitVector::from_string("10000000");
  CHECK(tcldpc::orbit_expand(single, 8).size() == 8);
  // two blocks shifted together
  const BitVector pair = BitVector::from_string("10000100");
  const auto orbit = tcldpc::orbit_expand(pair, 4);
  CHECK(orbit.size() == 4);
  CHECK(orbit[0] == pair);
  CHECK(orbit[1] == BitVector::from_string("01000010"));
  // period-4 pattern inside m=8 blocks: orbit size 4
  CHECK(tcldpc::orbit_expand(BitVector::from_string("10001000"), 8).size() == 4);
  // period-2 pattern: orbit size 2; all-ones: orbit size 1
  CHECK(tcldpc::orbit_expand(BitVector::from_string("10101010"), 8).size() == 2);
  CHECK(tcldpc::orbit_expand(BitVector::from_string("11111111"), 8).size() == 1);
  CHECK_THROWS_AS(tcldpc::orbit_expand(BitVector(10), 4), tcldpc::BlockMismatch);
}

TEST_CASE("orbits of toy codewords are codewords with size dividing 4") {
  const LinearCode code = tcldpc::build_ldpc_32_16();
  tcldpc::SplitMix64 rng(21);
  for (int t = 0; t < 50; ++t) {
    BitVector msg(code.k);
    for (std::size_t i = 0; i < code.k; ++i) msg.set(i, (rng.next() & 1) != 0);
    const BitVector w = code.encode(msg);
    const auto orbit = tcldpc::orbit_expand(w, *code.qc_block);
    REQUIRE(4 % orbit.size() == 0);
    for (const BitVector& member : orbit) REQUIRE(code.in_code(member));
  }
}

TEST_CASE("spectrum csv round trip preserves counts and exactness") {
  WeightSpectrum s;
  s.n = 32;
  s.k = 16;
  s.add(6, 8, Exactness::exact);
  s.add(10, 2088, Exactness::lower_bound);
  std::ostringstream out;
  tcldpc::write_spectrum_csv(out, s);
  std::istringstream in(out.str());
  const WeightSpectrum back = tcldpc::read_spectrum_csv(in);
  CHECK(back.n == 32);
  CHECK(back.k == 16);
  CHECK(back.count(6) == 8);
  CHECK(back.count(10) == 2088);
  CHECK(back.entries.at(6).exactness == Exactness::exact);
  CHECK(back.entries.at(10).exactness == Exactness::lower_bound);
  std::istringstream empty("");
  CHECK_THROWS_AS(tcldpc::read_spectrum_csv(empty), tcldpc::ParseError);
}

TEST_CASE("codeword list io round trip") {
  const LinearCode code = tcldpc::build_ldpc_32_16();
  tcldpc::SplitMix64 rng(22);
  std::vector<BitVector> words;
  for (int t = 0; t < 10; ++t) {
    BitVector msg(code.k);
    for (std::size_t i = 0; i < code.k; ++i) msg.set(i, (rng.next() & 1) != 0);
    words.push_back(code.encode(msg));
  }
  std::ostringstream out;
  tcldpc::write_codewords(out, words, code.n);
  std::istringstream in(out.str());
  const tcldpc::CodewordList back = tcldpc::read_codewords(in);
  CHECK(back.n == code.n);
  REQUIRE(back.words.size() == words.size());
  for (std::size_t i = 0; i < words.size(); ++i) REQUIRE(back.words[i] == words[i]);
}

TEST_CASE("low-weight search on the toy code reproduces the exhaustive truth") {
  const LinearCode code = tcldpc::build_ldpc_32_16();
  tcldpc::LowWeightSearchConfig config;
  config.budget = 150;
  config.max_weight = 8;
  const tcldpc::LowWeightResult result = tcldpc::low_weight_search(code, config, 3);
  REQUIRE(result.spectrum.count(6) == 8);
  REQUIRE(result.spectrum.count(8) == 332);
  CHECK(result.spectrum.entries.at(6).exactness == Exactness::lower_bound);
  // every reported codeword is distinct, verified, of the claimed weight,
  // and the per-weight lists are lex sorted
  std::unordered_set<BitVector, tcldpc::BitVectorHash> seen;
  for (const auto& [weight, words] : result.codewords) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      REQUIRE(words[i].weight() == weight);
      REQUIRE(code.in_code(words[i]));
      REQUIRE(seen.insert(words[i]).second);
      if (i > 0) REQUIRE(words[i - 1].lex_less(words[i]));
    }
  }
}

TEST_CASE("low-weight search with zero budget returns nothing") {
  const LinearCode code = tcldpc::build_ldpc_32_16();
  const tcldpc::LowWeightResult result = tcldpc::low_weight_search(code, {.budget = 0}, 1);
  CHECK(result.decodes == 0);
  CHECK(result.codewords.empty());
  CHECK(result.spectrum.entries.empty());
}
