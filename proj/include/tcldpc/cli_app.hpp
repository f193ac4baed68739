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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcldpc/design.hpp"
#include "tcldpc/report.hpp"
#include "tcldpc/tcldpc.hpp"

namespace tcldpc::cli {

namespace fs = std::filesystem;
using nlohmann::json;

// "a:b:step" (inclusive sweep), "x,y,z", or a single value.
inline std::vector<double> parse_snr_points(const std::string& text) {
  std::vector<double> points;
  if (text.find(':') != std::string::npos) {
    std::istringstream s(text);
    std::string a, b, step;
    if (!std::getline(s, a, ':') || !std::getline(s, b, ':') || !std::getline(s, step))
      throw std::invalid_argument("snr range must be start:stop:step");
    const double start = std::stod(a), stop = std::stod(b), inc = std::stod(step);
    if (inc <= 0.0) throw std::invalid_argument("snr step must be positive");
    for (double v = start; v <= stop + 1e-9; v += inc) points.push_back(v);
    return points;
  }
  std::istringstream s(text);
  std::string tok;
  while (std::getline(s, tok, ',')) points.push_back(std::stod(tok));
  if (points.empty()) throw std::invalid_argument("empty snr list");
  return points;
}

inline std::shared_ptr<const LinearCode> resolve_code(const std::string& name) {
  if (name == "ccsds-128-64")
    return std::make_shared<const LinearCode>(build_ccsds_ldpc_128_64());
  if (name == "ldpc-32-16") return std::make_shared<const LinearCode>(build_ldpc_32_16());
  const CirculantBaseMatrix base = parse_qc_file(name);
  return std::make_shared<const LinearCode>(make_code(base, fs::path(name).stem().string()));
}

inline CrcCode parse_crc_mask(const std::string& text) {
  return CrcCode::from_mask(std::stoull(text, nullptr, 0));
}

inline std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write: " + path.string());
  return out;
}

// FNV-1a over file bytes, for provenance fields of derived outputs.
inline std::string file_hash(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::uint64_t h = 0xcbf29ce484222325ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

struct GlobalOptions {
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string out_dir = ".";
  std::string format = "csv";

  fs::path resolve(const std::string& out) const {
    const fs::path p(out);
    return p.is_absolute() ? p : fs::path(out_dir) / p;
  }
};

inline json record_to_json(const SimRecord& r) {
  json j;
  j["snr_db"] = r.snr_db;
  j["frames"] = r.frames;
  j["Q"] = r.errors;
  j["Q_u"] = r.undetected;
  j["cer"] = r.cer();
  j["cer_ci"] = {r.cer_ci().lo, r.cer_ci().hi};
  j["ucer"] = r.ucer();
  j["ucer_ci"] = {r.ucer_ci().lo, r.ucer_ci().hi};
  json hist = json::object();
  for (const auto& [w, c] : r.undetected_by_weight) hist[std::to_string(w)] = c;
  j["hist"] = hist;
  if (r.end_to_end) {
    j["crc_Q_u"] = r.crc_undetected;
    j["crc_ucer"] = r.crc_ucer();
    j["crc_ucer_ci"] = {r.crc_ucer_ci().lo, r.crc_ucer_ci().hi};
  }
  j["wall_seconds"] = r.wall_seconds;
  j["seed"] = r.seed;
  j["config_hash"] = r.config_hash;
  return j;
}

// ---------------------------------------------------------------------------
// simulate

inline void cmd_simulate(const GlobalOptions& global, const std::string& code_name,
                         const std::string& decoder, int imax, double alpha, int mrb_order,
                         const std::string& snr, std::uint64_t min_errors,
                         std::uint64_t min_undetected, std::uint64_t max_frames, bool all_zero,
                         const std::string& crc_mask, std::size_t payload_bits,
                         const std::string& stuff, const std::string& out,
                         const std::string& profile_out) {
  SimConfig config;
  config.code = resolve_code(code_name);
  if (decoder == "spa")
    config.decoder.kind = DecoderKind::spa;
  else if (decoder == "ms")
    config.decoder.kind = DecoderKind::ms;
  else if (decoder == "nms")
    config.decoder.kind = DecoderKind::nms;
  else if (decoder == "mrb")
    config.decoder.kind = DecoderKind::mrb;
  else
    throw std::invalid_argument("unknown decoder: " + decoder);
  config.decoder.max_iterations = imax;
  config.decoder.alpha = alpha;
  config.decoder.mrb_order = mrb_order;
  config.snr_points_db = parse_snr_points(snr);
  if (min_errors) config.stop.min_errors = min_errors;
  if (min_undetected) config.stop.min_undetected = min_undetected;
  if (max_frames) config.stop.max_frames = max_frames;
  config.seed = global.seed;
  config.workers = global.threads;
  config.all_zero = all_zero;
  if (!crc_mask.empty()) {
    config.crc = parse_crc_mask(crc_mask);
    config.payload_bits = payload_bits;
    config.stuffing = stuff == "zeros" ? StuffPattern::zeros : StuffPattern::alternating;
  }

  const std::vector<SimRecord> records = run_sweep(config);

  const fs::path out_path = global.resolve(out);
  auto stream = open_output(out_path);
  if (global.format == "json") {
    json j = json::array();
    for (const auto& r : records) j.push_back(record_to_json(r));
    stream << j.dump(2) << '\n';
  } else {
    write_records_csv(stream, records);
  }
  std::cout << "wrote " << out_path.string() << '\n';

  if (!profile_out.empty()) {
    const fs::path profile_path = global.resolve(profile_out);
    auto pstream = open_output(profile_path);
    write_ldpc_profile_csv(pstream, records);
    std::cout << "wrote " << profile_path.string() << '\n';
  }
}

// ---------------------------------------------------------------------------
// spectrum

inline void cmd_spectrum_enumerate(const GlobalOptions& global, const std::string& code_name,
                                   std::size_t k_cap, const std::string& out,
                                   const std::string& codewords_out) {
  const auto code = resolve_code(code_name);
  const WeightSpectrum spectrum = exhaustive_spectrum(*code, k_cap);
  auto stream = open_output(global.resolve(out));
  if (global.format == "json") {
    json j;
    j["n"] = spectrum.n;
    j["k"] = spectrum.k;
    json entries = json::array();
    for (const auto& [w, e] : spectrum.entries)
      entries.push_back({{"weight", w}, {"multiplicity", e.count}, {"exactness", to_string(e.exactness)}});
    j["entries"] = entries;
    stream << j.dump(2) << '\n';
  } else {
    write_spectrum_csv(stream, spectrum);
  }
  std::cout << "wrote " << global.resolve(out).string() << '\n';

  if (!codewords_out.empty()) {
    std::vector<BitVector> words;
    for_each_codeword(*code, [&](const BitVector& w) {
      if (w.any()) words.push_back(w);
    }, k_cap);
    auto cw = open_output(global.resolve(codewords_out));
    write_codewords(cw, words, code->n);
    std::cout << "wrote " << global.resolve(codewords_out).string() << '\n';
  }
}

inline void cmd_spectrum_search(const GlobalOptions& global, const std::string& code_name,
                                std::size_t budget, std::size_t max_weight, int order,
                                const std::string& out, const std::string& codewords_out) {
  const auto code = resolve_code(code_name);
  LowWeightSearchConfig config;
  config.budget = budget;
  config.max_weight = max_weight;
  config.order = order;
  const LowWeightResult result = low_weight_search(*code, config, global.seed);

  auto stream = open_output(global.resolve(out));
  write_spectrum_csv(stream, result.spectrum);
  std::cout << "wrote " << global.resolve(out).string() << '\n';

  if (!codewords_out.empty()) {
    std::vector<BitVector> words;
    for (const auto& [w, list] : result.codewords)
      words.insert(words.end(), list.begin(), list.end());
    auto cw = open_output(global.resolve(codewords_out));
    write_codewords(cw, words, code->n);
    std::cout << "wrote " << global.resolve(codewords_out).string() << '\n';
  }
}

inline void cmd_spectrum_union_bound(const GlobalOptions& global, const std::string& spectrum_file,
                                     double rate, const std::string& snr_range,
                                     const std::string& out) {
  std::ifstream in(spectrum_file);
  if (!in) throw std::runtime_error("cannot open spectrum: " + spectrum_file);
  const WeightSpectrum spectrum = read_spectrum_csv(in);
  const std::vector<double> points = parse_snr_points(snr_range);

  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : spectrum_file + ":" + snr_range) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  std::ostringstream hash;
  hash << std::hex << h << file_hash(spectrum_file);

  auto stream = open_output(global.resolve(out));
  stream << "snr_db,cer_union_bound,error_floor,config_hash\n";
  stream.precision(12);
  for (const double snr : points)
    stream << snr << ',' << union_bound_cer(spectrum, rate, snr) << ','
           << error_floor_term(spectrum, rate, snr) << ',' << hash.str() << '\n';
  std::cout << "wrote " << global.resolve(out).string() << '\n';
}

inline void cmd_spectrum_design(const GlobalOptions& global, std::size_t m, std::size_t trials,
                                const std::string& crc_mask, const std::string& out,
                                const std::string& spectrum_out, const std::string& profile_out) {
  DesignConfig config;
  config.m = m;
  config.trials = trials;
  config.seed = global.seed;
  config.crc = parse_crc_mask(crc_mask);
  const DesignResult result = design_search_32_16(config);
  if (!result.found) throw std::runtime_error("design search found no valid candidate");

  auto stream = open_output(global.resolve(out));
  write_qc(stream, result.base);
  std::cout << "wrote " << global.resolve(out).string() << '\n';
  if (!spectrum_out.empty()) {
    auto s = open_output(global.resolve(spectrum_out));
    write_spectrum_csv(s, result.spectrum);
    std::cout << "wrote " << global.resolve(spectrum_out).string() << '\n';
  }
  if (!profile_out.empty()) {
    auto p = open_output(global.resolve(profile_out));
    write_crc_profile_csv(p, result.profile);
    std::cout << "wrote " << global.resolve(profile_out).string() << '\n';
  }
}

// ---------------------------------------------------------------------------
// detect

inline void cmd_detect_profile(const GlobalOptions& global, const std::string& code_name,
                               const std::string& crc_mask, bool exhaustive,
                               const std::string& from_codewords,
                               const std::string& exact_weights, std::size_t k_cap,
                               const std::string& out) {
  const CrcCode crc = parse_crc_mask(crc_mask);
  PerWeightCrcProfile profile;
  if (exhaustive) {
    const auto code = resolve_code(code_name);
    profile = crc_profile_exhaustive(*code, crc, k_cap);
  } else if (!from_codewords.empty()) {
    std::ifstream in(from_codewords);
    if (!in) throw std::runtime_error("cannot open codewords: " + from_codewords);
    const CodewordList list = read_codewords(in);
    const auto code = resolve_code(code_name);
    if (list.n != code->n) throw ParseError("codeword length does not match the code");
    std::map<std::size_t, std::vector<BitVector>> by_weight;
    for (const BitVector& w : list.words) by_weight[w.weight()].push_back(w);
    std::vector<std::size_t> exact;
    if (!exact_weights.empty()) {
      std::istringstream s(exact_weights);
      std::string tok;
      while (std::getline(s, tok, ',')) exact.push_back(std::stoull(tok));
    }
    profile = crc_profile_from_codewords(by_weight, code->k, crc, exact);
  } else {
    throw std::invalid_argument("choose --exhaustive or --from-codewords");
  }

  auto stream = open_output(global.resolve(out));
  if (global.format == "json") {
    json j;
    j["n"] = profile.n;
    j["k"] = profile.k;
    json entries = json::array();
    for (const auto& [w, e] : profile.entries)
      entries.push_back({{"weight", w},
                         {"L", e.divisible},
                         {"A", e.total},
                         {"ratio", e.ratio()},
                         {"exactness", to_string(e.exactness)}});
    j["entries"] = entries;
    stream << j.dump(2) << '\n';
  } else {
    write_crc_profile_csv(stream, profile);
  }
  std::cout << "wrote " << global.resolve(out).string() << '\n';
}

inline void cmd_detect_combine(const GlobalOptions& global, const std::string& ldpc_profile_file,
                               const std::string& crc_profile_file, std::size_t j_min,
                               std::size_t j_max, const std::string& out) {
  std::ifstream lin(ldpc_profile_file);
  if (!lin) throw std::runtime_error("cannot open ldpc profile: " + ldpc_profile_file);
  const std::vector<PerWeightLdpcProfile> points = read_ldpc_profile_csv(lin);
  std::ifstream cin_(crc_profile_file);
  if (!cin_) throw std::runtime_error("cannot open crc profile: " + crc_profile_file);
  const PerWeightCrcProfile crc_profile = read_crc_profile_csv(cin_);

  std::size_t p_bits = 0;
  if (crc_profile.crc_mask != 0) {
    std::uint64_t m = crc_profile.crc_mask;
    while (m > 1) {
      m >>= 1;
      ++p_bits;
    }
  }
  if (j_min == 0) {
    j_min = ~std::size_t{0};
    for (const auto& [w, e] : crc_profile.entries) j_min = std::min(j_min, w);
  }

  json output;
  output["j_min"] = j_min;
  output["j_max"] = j_max;
  output["p_bits"] = p_bits;
  output["config_hash"] = file_hash(ldpc_profile_file) + file_hash(crc_profile_file);
  json jpoints = json::array();
  bool all_exact = true;
  for (const PerWeightLdpcProfile& point : points) {
    const CombinedUcer combined = combine_ucer(point, crc_profile, j_min, j_max);
    json jp;
    jp["snr_db"] = point.snr_db;
    jp["frames"] = point.frames;
    jp["ucer_ldpc_total"] = combined.ldpc_ucer_total;
    jp["ucer_combined"] = combined.ucer;
    jp["ucer_conventional"] = conventional_estimate(combined.ldpc_ucer_total, p_bits);
    jp["all_exact"] = combined.all_exact;
    all_exact &= combined.all_exact;
    json terms = json::array();
    for (const CombinedTerm& t : combined.terms)
      terms.push_back({{"weight", t.weight},
                       {"ldpc_ucer", t.ldpc_ucer},
                       {"L", t.crc_divisible},
                       {"A", t.crc_total},
                       {"contribution", t.contribution},
                       {"exactness", to_string(t.exactness)}});
    jp["terms"] = terms;
    jpoints.push_back(jp);
  }
  output["points"] = jpoints;
  output["provenance"] = all_exact ? "exact" : "estimated";
  output["truncation"] = {{"j_min", j_min}, {"j_max", j_max}};

  auto stream = open_output(global.resolve(out));
  stream << output.dump(2) << '\n';
  std::cout << "wrote " << global.resolve(out).string() << '\n';
}

// ---------------------------------------------------------------------------
// frame

inline void cmd_frame_build(const GlobalOptions& global, const std::string& payload_hex,
                            std::size_t payload_bits, std::size_t k, const std::string& crc_mask,
                            const std::string& stuff, const std::string& out) {
  const CrcCode crc = parse_crc_mask(crc_mask);
  const BitVector payload = BitVector::from_hex(payload_hex, payload_bits);
  const StuffPattern pattern =
      stuff == "zeros" ? StuffPattern::zeros : StuffPattern::alternating;
  const std::vector<BitVector> blocks = frame_build(payload, k, crc, pattern);
  const FrameLayout layout = frame_layout(payload_bits, crc, k);

  json j;
  j["payload_bits"] = payload_bits;
  j["k"] = k;
  j["crc"] = crc.generator.coefficients().to_hex();
  j["stuffing"] = stuff;
  j["s_bits"] = layout.s_bits;
  j["num_blocks"] = layout.num_blocks;
  j["fill_bits"] = layout.fill_bits;
  json jb = json::array();
  for (const BitVector& b : blocks) jb.push_back(b.to_hex());
  j["blocks"] = jb;
  auto stream = open_output(global.resolve(out));
  stream << j.dump(2) << '\n';
  std::cout << "wrote " << global.resolve(out).string() << '\n';
}

inline void cmd_frame_parse(const GlobalOptions& global, const std::string& in_file,
                            std::size_t payload_bits, const std::string& crc_mask,
                            const std::string& out) {
  const CrcCode crc = parse_crc_mask(crc_mask);
  std::ifstream in(in_file);
  if (!in) throw std::runtime_error("cannot open frame file: " + in_file);
  const json j = json::parse(in);
  const std::size_t k = j.at("k").get<std::size_t>();
  std::vector<BitVector> blocks;
  for (const auto& hex : j.at("blocks")) blocks.push_back(BitVector::from_hex(hex.get<std::string>(), k));

  const BitVector payload = frame_parse(blocks, payload_bits, crc);
  const BitVector protected_bits = frame_protected_bits(blocks, payload_bits + crc.redundancy);
  json result;
  result["payload"] = payload.to_hex();
  result["payload_bits"] = payload_bits;
  result["crc_ok"] = crc_check(protected_bits, crc);
  if (out.empty()) {
    std::cout << result.dump(2) << '\n';
  } else {
    auto stream = open_output(global.resolve(out));
    stream << result.dump(2) << '\n';
    std::cout << "wrote " << global.resolve(out).string() << '\n';
  }
}

// ---------------------------------------------------------------------------
// entry point

// Stable error identifiers for the JSON error channel (never mangled
// type names, which are toolchain-specific).
inline const char* error_name(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const MissingWeightData*>(&e)) return "MissingWeightData";
  if (dynamic_cast<const DegenerateCode*>(&e)) return "DegenerateCode";
  if (dynamic_cast<const BlockMismatch*>(&e)) return "BlockMismatch";
  if (dynamic_cast<const PayloadOutOfRange*>(&e)) return "PayloadOutOfRange";
  if (dynamic_cast<const ExponentOutOfRange*>(&e)) return "ExponentOutOfRange";
  if (dynamic_cast<const DivisionByZeroPolynomial*>(&e)) return "DivisionByZeroPolynomial";
  if (dynamic_cast<const InvalidAlpha*>(&e)) return "InvalidAlpha";
  if (dynamic_cast<const std::invalid_argument*>(&e)) return "InvalidArgument";
  return "RuntimeError";
}

inline int run(std::vector<std::string> args) {
  // A JSON config file mirrors long option names; explicit command-line
  // values win because they parse later.
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] != "--config") continue;
    std::ifstream in(args[i + 1]);
    if (!in) {
      std::cerr << json{{"error", "MissingInput"}, {"message", "cannot open config: " + args[i + 1]}}
                << '\n';
      return 1;
    }
    const json config = json::parse(in);
    args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
    std::size_t insert_at = 0;
    while (insert_at < args.size() && insert_at < 2 && !args[insert_at].empty() &&
           args[insert_at][0] != '-')
      ++insert_at;
    std::vector<std::string> tokens;
    for (const auto& [key, value] : config.items()) {
      if (value.is_boolean()) {
        if (value.get<bool>()) tokens.push_back("--" + key);
        continue;
      }
      tokens.push_back("--" + key);
      tokens.push_back(value.is_string() ? value.get<std::string>() : value.dump());
    }
    args.insert(args.begin() + static_cast<long>(insert_at), tokens.begin(), tokens.end());
    break;
  }

  CLI::App app{"telecommand LDPC + CRC undetected-error analysis toolkit"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_version_flag("--version", version_string);
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  GlobalOptions global;
  app.add_option("--seed", global.seed, "master RNG seed")->capture_default_str();
  app.add_option("--threads", global.threads,
                 "worker threads (0: TCLDPC_THREADS env or hardware)");
  app.add_option("--out-dir", global.out_dir, "directory for relative output paths")
      ->capture_default_str();
  app.add_option("--format", global.format, "table output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  // simulate ----------------------------------------------------------------
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo decoding runs over an AWGN sweep");
  std::string sim_code, sim_decoder, sim_snr, sim_crc, sim_stuff = "alternating";
  std::string sim_out = "results.csv", sim_profile_out;
  int sim_imax = 100, sim_order = 4;
  double sim_alpha = 0.8;
  std::uint64_t sim_min_errors = 0, sim_min_undetected = 0, sim_max_frames = 0;
  std::size_t sim_payload_bits = 0;
  bool sim_all_zero = false;
  simulate->add_option("--code", sim_code, "ccsds-128-64, ldpc-32-16, or a .qc file")->required();
  simulate->add_option("--decoder", sim_decoder, "spa | ms | nms | mrb")->required();
  simulate->add_option("--imax", sim_imax, "iteration cap for iterative decoders")
      ->capture_default_str();
  simulate->add_option("--alpha", sim_alpha, "normalized min-sum factor in (0,1]")
      ->capture_default_str();
  simulate->add_option("--mrb-order", sim_order, "MRB reprocessing order")->capture_default_str();
  simulate->add_option("--snr", sim_snr, "Eb/N0 dB points: start:stop:step or list")->required();
  simulate->add_option("--min-errors", sim_min_errors, "stop after this many frame errors");
  simulate->add_option("--min-undetected", sim_min_undetected,
                       "stop after this many undetected events");
  simulate->add_option("--max-frames", sim_max_frames, "hard frame cap per point");
  simulate->add_flag("--all-zero", sim_all_zero, "transmit the all-zero codeword");
  simulate->add_option("--crc", sim_crc, "CRC generator mask (hex); enables end-to-end mode");
  simulate->add_option("--payload-bits", sim_payload_bits,
                       "end-to-end payload length before the CRC (default: k - P)");
  simulate->add_option("--stuff", sim_stuff, "fill pattern: alternating | zeros")
      ->check(CLI::IsMember({"alternating", "zeros"}));
  simulate->add_option("--out", sim_out, "results table path")->capture_default_str();
  simulate->add_option("--profile-out", sim_profile_out,
                       "also write the per-weight undetected profile (csv)");

  // spectrum ----------------------------------------------------------------
  auto* spectrum = app.add_subcommand("spectrum", "weight spectrum tools");
  spectrum->require_subcommand(1);

  auto* enumerate = spectrum->add_subcommand("enumerate", "exhaustive spectrum (small k)");
  std::string enum_code, enum_out = "spectrum.csv", enum_codewords;
  std::size_t enum_kcap = default_enumeration_cap;
  enumerate->add_option("--code", enum_code, "code name or .qc file")->required();
  enumerate->add_option("--kcap", enum_kcap, "dimension cap for the 2^k walk")
      ->capture_default_str();
  enumerate->add_option("--out", enum_out, "spectrum csv path")->capture_default_str();
  enumerate->add_option("--codewords", enum_codewords, "also write every nonzero codeword");

  auto* search = spectrum->add_subcommand("search", "low-weight codeword search (error impulse)");
  std::string search_code, search_out = "spectrum.csv", search_codewords;
  std::size_t search_budget = 1500, search_max_weight = 18;
  int search_order = 4;
  search->add_option("--code", search_code, "code name or .qc file")->required();
  search->add_option("--budget", search_budget, "decoder trials")->capture_default_str();
  search->add_option("--max-weight", search_max_weight, "retain codewords up to this weight")
      ->capture_default_str();
  search->add_option("--order", search_order, "MRB order for the search decoder")
      ->capture_default_str();
  search->add_option("--out", search_out, "spectrum csv (lower bounds)")->capture_default_str();
  search->add_option("--codewords", search_codewords, "codeword list output path");

  auto* union_bound = spectrum->add_subcommand("union-bound", "ML union bound over a spectrum");
  std::string ub_spectrum, ub_out = "union_bound.csv", ub_range = "0:8:0.1";
  double ub_rate = 0.5;
  union_bound->add_option("--spectrum", ub_spectrum, "spectrum csv input")->required();
  union_bound->add_option("--rate", ub_rate, "code rate")->capture_default_str();
  union_bound->add_option("--snr-range", ub_range, "Eb/N0 sweep: start:stop:step")
      ->capture_default_str();
  union_bound->add_option("--out", ub_out, "bound csv path")->capture_default_str();

  auto* design = spectrum->add_subcommand(
      "design", "search for a small companion code with a CRC-friendly spectrum");
  std::string design_out = "design.qc", design_spectrum_out, design_profile_out;
  std::string design_crc = "0x1d5";
  std::size_t design_m = 4, design_trials = 500;
  design->add_option("--m", design_m, "circulant size (code is (8m,4m))")->capture_default_str();
  design->add_option("--trials", design_trials, "random candidates")->capture_default_str();
  design->add_option("--crc", design_crc, "CRC mask scored against")->capture_default_str();
  design->add_option("--out", design_out, "qc base matrix output")->capture_default_str();
  design->add_option("--spectrum-out", design_spectrum_out, "spectrum of the chosen code");
  design->add_option("--profile-out", design_profile_out, "CRC profile of the chosen code");

  // detect ------------------------------------------------------------------
  auto* detect = app.add_subcommand("detect", "CRC detectability analysis");
  detect->require_subcommand(1);

  auto* profile = detect->add_subcommand("profile", "per-weight divisibility profile (L_j, A_j)");
  std::string prof_code, prof_crc, prof_from, prof_exact, prof_out = "crc_profile.csv";
  std::size_t prof_kcap = default_enumeration_cap;
  bool prof_exhaustive = false;
  profile->add_option("--code", prof_code, "code name or .qc file")->required();
  profile->add_option("--crc", prof_crc, "CRC generator mask (hex)")->required();
  profile->add_flag("--exhaustive", prof_exhaustive, "walk the whole codebook");
  profile->add_option("--from-codewords", prof_from, "profile a codeword list instead");
  profile->add_option("--exact-weights", prof_exact,
                      "weights whose codeword sets are complete (comma list)");
  profile->add_option("--kcap", prof_kcap, "dimension cap for --exhaustive")
      ->capture_default_str();
  profile->add_option("--out", prof_out, "profile csv path")->capture_default_str();

  auto* combine = detect->add_subcommand("combine", "per-weight UCER combination");
  std::string comb_ldpc, comb_crc, comb_out = "combined.json";
  std::size_t comb_jmin = 0, comb_jmax = default_enumeration_cap;
  combine->add_option("--ldpc-profile", comb_ldpc, "simulate --profile-out csv")->required();
  combine->add_option("--crc-profile", comb_crc, "detect profile csv")->required();
  combine->add_option("--jmin", comb_jmin, "lowest weight combined (0: profile minimum)");
  combine->add_option("--jmax", comb_jmax, "highest weight combined")->capture_default_str();
  combine->add_option("--out", comb_out, "combined json path")->capture_default_str();

  // frame -------------------------------------------------------------------
  auto* frame = app.add_subcommand("frame", "transfer-frame construction and parsing");
  frame->require_subcommand(1);

  auto* fbuild = frame->add_subcommand("build", "payload -> CRC -> blocks with fill");
  std::string fb_payload, fb_crc, fb_stuff = "alternating", fb_out = "frame.json";
  std::size_t fb_payload_bits = 0, fb_k = 64;
  fbuild->add_option("--payload", fb_payload, "payload bits in hex")->required();
  fbuild->add_option("--payload-bits", fb_payload_bits, "payload length in bits")->required();
  fbuild->add_option("--k", fb_k, "information bits per block")->capture_default_str();
  fbuild->add_option("--crc", fb_crc, "CRC generator mask (hex)")->required();
  fbuild->add_option("--stuff", fb_stuff, "fill pattern: alternating | zeros")
      ->check(CLI::IsMember({"alternating", "zeros"}));
  fbuild->add_option("--out", fb_out, "frame json path")->capture_default_str();

  auto* fparse = frame->add_subcommand("parse", "blocks -> payload with CRC verdict");
  std::string fp_in, fp_crc, fp_out;
  std::size_t fp_payload_bits = 0;
  fparse->add_option("--in", fp_in, "frame json from `frame build`")->required();
  fparse->add_option("--payload-bits", fp_payload_bits, "payload length in bits")->required();
  fparse->add_option("--crc", fp_crc, "CRC generator mask (hex)")->required();
  fparse->add_option("--out", fp_out, "result json path (default: stdout)");

  // report ------------------------------------------------------------------
  auto* report = app.add_subcommand("report", "figure table generation");
  report->require_subcommand(1);
  auto* figures = report->add_subcommand("figures", "one plot-ready csv per analysis figure");
  std::string rep_in_dir, rep_only;
  figures->add_option("--in-dir", rep_in_dir, "directory of run outputs (fixed names)")
      ->required();
  figures->add_option("--only", rep_only, "comma list of figures (default: all)");

  try {
    std::vector<const char*> argv;
    argv.push_back("tcldpc");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (*simulate) {
      cmd_simulate(global, sim_code, sim_decoder, sim_imax, sim_alpha, sim_order, sim_snr,
                   sim_min_errors, sim_min_undetected, sim_max_frames, sim_all_zero, sim_crc,
                   sim_payload_bits, sim_stuff, sim_out, sim_profile_out);
    } else if (*enumerate) {
      cmd_spectrum_enumerate(global, enum_code, enum_kcap, enum_out, enum_codewords);
    } else if (*search) {
      cmd_spectrum_search(global, search_code, search_budget, search_max_weight, search_order,
                          search_out, search_codewords);
    } else if (*union_bound) {
      cmd_spectrum_union_bound(global, ub_spectrum, ub_rate, ub_range, ub_out);
    } else if (*design) {
      cmd_spectrum_design(global, design_m, design_trials, design_crc, design_out,
                          design_spectrum_out, design_profile_out);
    } else if (*profile) {
      cmd_detect_profile(global, prof_code, prof_crc, prof_exhaustive, prof_from, prof_exact,
                         prof_kcap, prof_out);
    } else if (*combine) {
      cmd_detect_combine(global, comb_ldpc, comb_crc, comb_jmin, comb_jmax, comb_out);
    } else if (*fbuild) {
      cmd_frame_build(global, fb_payload, fb_payload_bits, fb_k, fb_crc, fb_stuff, fb_out);
    } else if (*fparse) {
      cmd_frame_parse(global, fp_in, fp_payload_bits, fp_crc, fp_out);
    } else if (*figures) {
      std::vector<std::string> only;
      if (!rep_only.empty()) {
        std::istringstream s(rep_only);
        std::string tok;
        while (std::getline(s, tok, ',')) only.push_back(tok);
      }
      const auto written = report_figures(rep_in_dir, global.out_dir, only);
      for (const auto& p : written) std::cout << "wrote " << p.string() << '\n';
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const MissingInput& e) {
    json j{{"error", "MissingInput"}, {"message", e.what()}, {"missing", e.missing}};
    std::cerr << j.dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    json j{{"error", error_name(e)}, {"message", e.what()}};
    std::cerr << j.dump() << '\n';
    return 1;
  }
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args));
}

}  // namespace tcldpc::cli
