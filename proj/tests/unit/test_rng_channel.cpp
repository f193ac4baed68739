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

#include <catch2/catch_amalgamated.hpp>

#include "tcldpc/channel.hpp"
#include "tcldpc/rng.hpp"

using tcldpc::SplitMix64;

TEST_CASE("splitmix64 reference stream") {
  // reference values for seed 1234567 from the published splitmix64
  // recurrence
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 0x599ed017fb08fc85ull);
  CHECK(rng.next() == 0x2c73f08458540fa5ull);
  CHECK(rng.next() == 0x883ebce5a3f27c77ull);
}

TEST_CASE("derive_seed decorrelates streams and indices") {
  const std::uint64_t a = tcldpc::derive_seed(1, 0, 0);
  const std::uint64_t b = tcldpc::derive_seed(1, 0, 1);
  const std::uint64_t c = tcldpc::derive_seed(1, 1, 0);
  const std::uint64_t d = tcldpc::derive_seed(2, 0, 0);
  CHECK(a != b);
  CHECK(a != c);
  CHECK(a != d);
  CHECK(tcldpc::derive_seed(1, 0, 0) == a);
}

TEST_CASE("uniform stays in [0,1) and uniform_pos in (0,1]") {
  SplitMix64 rng(9);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    const double p = rng.uniform_pos();
    REQUIRE(p > 0.0);
    REQUIRE(p <= 1.0);
  }
}

TEST_CASE("gaussian moments over a million samples") {
  SplitMix64 rng(123);
  const int samples = 1000000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double g = rng.gaussian();
    sum += g;
    sum2 += g * g;
  }
  const double mean = sum / samples;
  const double var = sum2 / samples - mean * mean;
  // 5-sigma windows: sd(mean) ~ 1/sqrt(N), sd(var) ~ sqrt(2/N)
  CHECK(std::fabs(mean) < 5.0 / std::sqrt(samples));
  CHECK(std::fabs(var - 1.0) < 5.0 * std::sqrt(2.0 / samples));
}

TEST_CASE("noise variance follows sigma^2 = 1/(2 R Eb/N0)") {
  // frozen: 3.6 dB, rate 1/2 -> sigma^2 = 1/(2*0.5*10^0.36) = 0.43651583...
  const tcldpc::ChannelParams p(3.6, 0.5);
  CHECK_THAT(p.sigma2, Catch::Matchers::WithinRel(0.4365158322401661, 1e-12));
  const tcldpc::ChannelParams unit(0.0, 0.5);
  CHECK_THAT(unit.sigma2, Catch::Matchers::WithinRel(1.0, 1e-12));
}

TEST_CASE("bpsk map and llr scaling") {
  const tcldpc::ChannelParams p(2.0, 0.5);
  tcldpc::BitVector word(4);
  word.set(1, true);
  const tcldpc::LlrVector llr = tcldpc::transmit_noiseless(word, p);
  REQUIRE(llr.size() == 4);
  // bit 0 -> symbol +1 -> llr 2/sigma^2; bit 1 -> -2/sigma^2
  CHECK_THAT(llr[0], Catch::Matchers::WithinRel(2.0 / p.sigma2, 1e-12));
  CHECK_THAT(llr[1], Catch::Matchers::WithinRel(-2.0 / p.sigma2, 1e-12));
  CHECK(tcldpc::llr_from_observation(0.5, p.sigma2) == 1.0 / p.sigma2);

  // empirical: llr = 2y/sigma^2 with y ~ N(+1, sigma^2) for the zero word
  SplitMix64 rng(77);
  double sum = 0.0, sum2 = 0.0;
  const int samples = 200000;
  tcldpc::BitVector zero(1);
  for (int i = 0; i < samples; ++i) {
    const double y = tcldpc::transmit(zero, p, rng)[0] * p.sigma2 / 2.0;
    sum += y - 1.0;
    sum2 += (y - 1.0) * (y - 1.0);
  }
  const double mean = sum / samples;
  const double var = sum2 / samples - mean * mean;
  CHECK(std::fabs(mean) < 5.0 * std::sqrt(p.sigma2 / samples));
  CHECK(std::fabs(var - p.sigma2) < 5.0 * p.sigma2 * std::sqrt(2.0 / samples));
}
