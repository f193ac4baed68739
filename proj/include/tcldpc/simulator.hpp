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

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tcldpc/channel.hpp"
#include "tcldpc/detection.hpp"
#include "tcldpc/frame.hpp"
#include "tcldpc/iterative.hpp"
#include "tcldpc/mrb.hpp"
#include "tcldpc/outcome.hpp"
#include "tcldpc/rng.hpp"
#include "tcldpc/version.hpp"

namespace tcldpc {

enum class DecoderKind { spa, ms, nms, mrb };

inline const char* to_string(DecoderKind k) {
  switch (k) {
    case DecoderKind::spa: return "spa";
    case DecoderKind::ms: return "ms";
    case DecoderKind::nms: return "nms";
    case DecoderKind::mrb: return "mrb";
  }
  return "?";
}

struct DecoderSpec {
  DecoderKind kind = DecoderKind::spa;
  int max_iterations = 100;
  double alpha = 0.8;  // normalized min-sum only
  int mrb_order = 4;
};

// A run stops once every configured minimum is reached, or unconditionally
// at max_frames.  At least one field must be set.
struct StoppingRule {
  std::optional<std::uint64_t> min_errors;      // on total wrong/failed frames
  std::optional<std::uint64_t> min_undetected;  // on the undetected count
  std::optional<std::uint64_t> max_frames;
};

struct SimConfig {
  std::shared_ptr<const LinearCode> code;
  DecoderSpec decoder;
  std::vector<double> snr_points_db;
  StoppingRule stop;
  std::uint64_t seed = 1;
  unsigned workers = 0;  // 0: TCLDPC_THREADS env var, else hardware count
  bool all_zero = false;

  // End-to-end mode: payloads are CRC-protected and split over code blocks.
  std::optional<CrcCode> crc;
  std::size_t payload_bits = 0;  // 0 in end-to-end mode means k - P (single block)
  StuffPattern stuffing = StuffPattern::alternating;

  bool end_to_end() const { return crc.has_value(); }

  std::size_t effective_payload_bits() const {
    return payload_bits != 0 ? payload_bits : code->k - crc->redundancy;
  }

  unsigned effective_workers() const {
    if (workers != 0) return workers;
    if (const char* env = std::getenv("TCLDPC_THREADS")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
};

struct ConfidenceInterval {
  double lo = 0.0, hi = 0.0;
};

// Wilson score interval (95% by default): usable down to zero successes.
inline ConfidenceInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                          double z = 1.959963984540054) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = p + z2 / (2.0 * n);
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {std::max(0.0, (center - half) / denom), std::min(1.0, (center + half) / denom)};
}

// Outcome counts of one simulated point.  `errors` counts frames whose
// outer decoding was wrong or failed (Q); `undetected` those where every
// block decoded to a codeword yet the frame is wrong (Q_u); in end-to-end
// mode `crc_undetected` counts the Q_u frames that additionally passed the
// CRC.
struct SimRecord {
  double snr_db = 0.0;
  std::uint64_t frames = 0;
  std::uint64_t errors = 0;
  std::uint64_t undetected = 0;
  std::uint64_t crc_undetected = 0;
  std::map<std::size_t, std::uint64_t> undetected_by_weight;  // per wrong block
  bool end_to_end = false;
  double wall_seconds = 0.0;
  std::uint64_t seed = 0;
  std::string config_hash;

  double cer() const { return frames ? static_cast<double>(errors) / frames : 0.0; }
  double ucer() const { return frames ? static_cast<double>(undetected) / frames : 0.0; }
  double crc_ucer() const { return frames ? static_cast<double>(crc_undetected) / frames : 0.0; }
  ConfidenceInterval cer_ci() const { return wilson_interval(errors, frames); }
  ConfidenceInterval ucer_ci() const { return wilson_interval(undetected, frames); }
  ConfidenceInterval crc_ucer_ci() const { return wilson_interval(crc_undetected, frames); }

  PerWeightLdpcProfile ldpc_profile() const {
    PerWeightLdpcProfile p;
    p.snr_db = snr_db;
    p.frames = frames;
    p.undetected_by_weight = undetected_by_weight;
    return p;
  }
};

namespace detail {

struct Tally {
  std::uint64_t frames = 0, errors = 0, undetected = 0, crc_undetected = 0;
  std::map<std::size_t, std::uint64_t> by_weight;

  void merge(const Tally& o) {
    frames += o.frames;
    errors += o.errors;
    undetected += o.undetected;
    crc_undetected += o.crc_undetected;
    for (const auto& [w, c] : o.by_weight) by_weight[w] += c;
  }
};

// Per-worker decode state; each worker owns one so scratch is not shared.
class FrameWorker {
 public:
  FrameWorker(const SimConfig& config, const TannerGraph* graph)
      : config_(&config), code_(config.code.get()) {
    switch (config.decoder.kind) {
      case DecoderKind::spa:
        iterative_.emplace(*graph, CheckRule::sum_product);
        break;
      case DecoderKind::ms:
        iterative_.emplace(*graph, CheckRule::min_sum);
        break;
      case DecoderKind::nms:
        iterative_.emplace(*graph, CheckRule::normalized_min_sum, config.decoder.alpha);
        break;
      case DecoderKind::mrb:
        mrb_.emplace(*code_, MrbConfig{config.decoder.mrb_order});
        break;
    }
  }

  void run_frame(std::uint64_t snr_index, std::uint64_t frame_index, const ChannelParams& params,
                 Tally& tally) {
    SplitMix64 rng(derive_seed(config_->seed, snr_index, frame_index));
    if (config_->end_to_end())
      run_frame_e2e(rng, params, tally);
    else
      run_frame_plain(rng, params, tally);
  }

 private:
  DecodeResult decode(const LlrVector& llr) {
    if (mrb_) return mrb_->decode(llr);
    return iterative_->decode(llr, config_->decoder.max_iterations);
  }

  BitVector random_bits(SplitMix64& rng, std::size_t count) const {
    BitVector v(count);
    std::uint64_t* w = v.word_data();
    for (std::size_t i = 0; i < (count + 63) / 64; ++i) w[i] = rng.next();
    if (count % 64 != 0) w[count / 64] &= (~std::uint64_t{0}) >> (64 - count % 64);
    return v;
  }

  void run_frame_plain(SplitMix64& rng, const ChannelParams& params, Tally& tally) {
    const BitVector message =
        config_->all_zero ? BitVector(code_->k) : random_bits(rng, code_->k);
    const BitVector codeword = code_->encode(message);
    const LlrVector llr = transmit(codeword, params, rng);
    const DecodeOutcome outcome = classify(decode(llr), codeword, code_->h);
    ++tally.frames;
    if (outcome.kind != OutcomeKind::corrected) ++tally.errors;
    if (outcome.kind == OutcomeKind::undetected_error) {
      ++tally.undetected;
      ++tally.by_weight[outcome.error_weight];
    }
  }

  void run_frame_e2e(SplitMix64& rng, const ChannelParams& params, Tally& tally) {
    const CrcCode& crc = *config_->crc;
    const BitVector payload = config_->all_zero
                                  ? BitVector(config_->effective_payload_bits())
                                  : random_bits(rng, config_->effective_payload_bits());
    const BitVector protected_bits = crc_append(payload, crc);
    const std::vector<BitVector> blocks =
        detail::split_blocks(protected_bits, code_->k, config_->stuffing);

    bool any_failure = false, any_wrong = false;
    std::vector<BitVector> decoded_blocks;
    decoded_blocks.reserve(blocks.size());
    for (const BitVector& block : blocks) {
      const BitVector codeword = code_->encode(block);
      const LlrVector llr = transmit(codeword, params, rng);
      const DecodeOutcome outcome = classify(decode(llr), codeword, code_->h);
      if (outcome.kind == OutcomeKind::detected_failure) {
        any_failure = true;
        decoded_blocks.push_back(block);  // placeholder; frame already flagged
        continue;
      }
      if (outcome.kind == OutcomeKind::undetected_error) {
        any_wrong = true;
        ++tally.by_weight[outcome.error_weight];
      }
      decoded_blocks.push_back(outcome.decoded->slice(0, code_->k));
    }

    ++tally.frames;
    if (any_failure || any_wrong) ++tally.errors;
    if (!any_failure && any_wrong) {
      ++tally.undetected;
      const BitVector received = frame_protected_bits(decoded_blocks, protected_bits.size());
      if (crc_check(received, crc)) ++tally.crc_undetected;
    }
  }

  const SimConfig* config_;
  const LinearCode* code_;
  std::optional<IterativeDecoder> iterative_;
  std::optional<MrbDecoder> mrb_;
};

}  // namespace detail

// FNV-1a over the semantic run parameters (worker count excluded: it cannot
// affect results).
inline std::string config_hash(const SimConfig& config) {
  std::ostringstream s;
  s << "code=" << config.code->name << ";n=" << config.code->n << ";k=" << config.code->k
    << ";decoder=" << to_string(config.decoder.kind) << ";imax=" << config.decoder.max_iterations
    << ";alpha=" << config.decoder.alpha << ";order=" << config.decoder.mrb_order << ";snr=";
  s.precision(17);
  for (double p : config.snr_points_db) s << p << ',';
  s << ";min_errors=" << (config.stop.min_errors ? std::to_string(*config.stop.min_errors) : "-")
    << ";min_undetected="
    << (config.stop.min_undetected ? std::to_string(*config.stop.min_undetected) : "-")
    << ";max_frames=" << (config.stop.max_frames ? std::to_string(*config.stop.max_frames) : "-")
    << ";seed=" << config.seed << ";all_zero=" << config.all_zero;
  if (config.crc) {
    s << ";crc=" << config.crc->generator.coefficients().to_hex()
      << ";payload=" << config.effective_payload_bits()
      << ";stuff=" << (config.stuffing == StuffPattern::alternating ? "alternating" : "zeros");
  }
  s << ";rngv=" << rng_stream_version;
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : s.str()) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

// Frames are simulated in fixed-size batches with per-frame derived seeds,
// so results are bit-identical for any worker count and stopping decisions
// land on batch boundaries.
inline constexpr std::uint64_t sim_batch_frames = 1024;

inline void validate(const SimConfig& config) {
  if (!config.code) throw std::invalid_argument("simulation config has no code");
  if (!config.stop.min_errors && !config.stop.min_undetected && !config.stop.max_frames)
    throw std::invalid_argument("stopping rule must set at least one bound");
  if (config.end_to_end()) {
    if (!config.code->systematic_prefix())
      throw std::invalid_argument("end-to-end mode needs information bits in leading positions");
    if (config.code->k <= config.crc->redundancy && config.payload_bits == 0)
      throw std::invalid_argument("block too small for CRC redundancy");
  }
}

inline SimRecord run_point(const SimConfig& config, double snr_db, std::uint64_t snr_index,
                           const TannerGraph* graph = nullptr) {
  validate(config);
  const auto start_time = std::chrono::steady_clock::now();
  std::optional<TannerGraph> local_graph;
  if (!graph && config.decoder.kind != DecoderKind::mrb) {
    local_graph.emplace(config.code->h);
    graph = &*local_graph;
  }

  const ChannelParams params(snr_db, config.code->rate());
  const unsigned workers = config.effective_workers();
  detail::Tally total;

  auto stop_reached = [&] {
    if (config.stop.max_frames && total.frames >= *config.stop.max_frames) return true;
    bool any_min = false, all_met = true;
    if (config.stop.min_errors) {
      any_min = true;
      all_met &= total.errors >= *config.stop.min_errors;
    }
    if (config.stop.min_undetected) {
      any_min = true;
      const std::uint64_t u = config.end_to_end() ? total.crc_undetected : total.undetected;
      all_met &= u >= *config.stop.min_undetected;
    }
    return any_min && all_met;
  };

  std::vector<std::unique_ptr<detail::FrameWorker>> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.push_back(std::make_unique<detail::FrameWorker>(config, graph));

  std::uint64_t next_frame = 0;
  while (!stop_reached()) {
    const std::uint64_t begin = next_frame, end = begin + sim_batch_frames;
    next_frame = end;
    if (workers <= 1) {
      for (std::uint64_t f = begin; f < end; ++f)
        pool[0]->run_frame(snr_index, f, params, total);
    } else {
      std::vector<detail::Tally> parts(workers);
      std::vector<std::thread> threads;
      std::atomic<std::uint64_t> cursor{begin};
      for (unsigned w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
          for (std::uint64_t f; (f = cursor.fetch_add(1)) < end;)
            pool[w]->run_frame(snr_index, f, params, parts[w]);
        });
      for (auto& t : threads) t.join();
      for (const auto& part : parts) total.merge(part);
    }
  }

  SimRecord record;
  record.snr_db = snr_db;
  record.frames = total.frames;
  record.errors = total.errors;
  record.undetected = total.undetected;
  record.crc_undetected = total.crc_undetected;
  record.undetected_by_weight = total.by_weight;
  record.end_to_end = config.end_to_end();
  record.seed = config.seed;
  record.config_hash = config_hash(config);
  record.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
  return record;
}

inline std::vector<SimRecord> run_sweep(const SimConfig& config) {
  validate(config);
  std::optional<TannerGraph> graph;
  if (config.decoder.kind != DecoderKind::mrb) graph.emplace(config.code->h);
  std::vector<SimRecord> records;
  for (std::size_t i = 0; i < config.snr_points_db.size(); ++i)
    records.push_back(run_point(config, config.snr_points_db[i], i, graph ? &*graph : nullptr));
  return records;
}

// End-to-end undetected rate at one SNR point; config.crc must be set.
inline SimRecord end_to_end_ucer(const SimConfig& config, double snr_db,
                                 std::uint64_t snr_index = 0) {
  if (!config.end_to_end())
    throw std::invalid_argument("end_to_end_ucer requires a CRC in the config");
  return run_point(config, snr_db, snr_index);
}

// Long-format per-weight undetected-error profile, one row per (SNR,
// weight): the input table for the per-weight combination stage.
inline void write_ldpc_profile_csv(std::ostream& out, const std::vector<SimRecord>& records) {
  out << "snr_db,frames,weight,count,config_hash\n";
  out.precision(12);
  for (const auto& r : records)
    for (const auto& [w, c] : r.undetected_by_weight)
      out << r.snr_db << ',' << r.frames << ',' << w << ',' << c << ',' << r.config_hash << '\n';
}

inline std::vector<PerWeightLdpcProfile> read_ldpc_profile_csv(std::istream& in) {
  std::vector<PerWeightLdpcProfile> profiles;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line.rfind("snr_db,", 0) != 0) throw ParseError("ldpc profile csv missing header");
      header_seen = true;
      continue;
    }
    std::istringstream row(line);
    std::string snr, frames, weight, count;
    if (!std::getline(row, snr, ',') || !std::getline(row, frames, ',') ||
        !std::getline(row, weight, ',') || !std::getline(row, count, ','))
      throw ParseError("bad ldpc profile row: " + line);
    const double snr_db = std::stod(snr);
    if (profiles.empty() || profiles.back().snr_db != snr_db) {
      profiles.emplace_back();
      profiles.back().snr_db = snr_db;
    }
    profiles.back().frames = std::stoull(frames);
    profiles.back().undetected_by_weight[std::stoull(weight)] = std::stoull(count);
  }
  if (!header_seen) throw ParseError("empty ldpc profile csv");
  return profiles;
}

// Pinned CSV schema; histogram columns cover the union of weights seen.
inline void write_records_csv(std::ostream& out, const std::vector<SimRecord>& records) {
  std::vector<std::size_t> weights;
  for (const auto& r : records)
    for (const auto& [w, c] : r.undetected_by_weight)
      if (std::find(weights.begin(), weights.end(), w) == weights.end()) weights.push_back(w);
  std::sort(weights.begin(), weights.end());

  const bool e2e = !records.empty() && records.front().end_to_end;
  out << "snr_db,frames,Q,Q_u,cer,cer_ci_lo,cer_ci_hi,ucer,ucer_ci_lo,ucer_ci_hi";
  for (std::size_t w : weights) out << ",hist_" << w;
  if (e2e) out << ",crc_Q_u,crc_ucer,crc_ucer_ci_lo,crc_ucer_ci_hi";
  out << ",wall_seconds,seed,config_hash\n";

  out.precision(12);
  for (const auto& r : records) {
    const auto cer_ci = r.cer_ci(), ucer_ci = r.ucer_ci();
    out << r.snr_db << ',' << r.frames << ',' << r.errors << ',' << r.undetected << ',' << r.cer()
        << ',' << cer_ci.lo << ',' << cer_ci.hi << ',' << r.ucer() << ',' << ucer_ci.lo << ','
        << ucer_ci.hi;
    for (std::size_t w : weights) {
      const auto it = r.undetected_by_weight.find(w);
      out << ',' << (it == r.undetected_by_weight.end() ? 0 : it->second);
    }
    if (e2e) {
      const auto ci = r.crc_ucer_ci();
      out << ',' << r.crc_undetected << ',' << r.crc_ucer() << ',' << ci.lo << ',' << ci.hi;
    }
    out << ',' << r.wall_seconds << ',' << r.seed << ',' << r.config_hash << '\n';
  }
}

}  // namespace tcldpc
