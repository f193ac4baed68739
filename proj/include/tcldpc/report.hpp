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
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcldpc/errors.hpp"
#include "tcldpc/version.hpp"

namespace tcldpc {

// Minimal CSV table keyed by header names; all cells kept as strings so
// values round-trip exactly.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  static CsvTable read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open csv: " + path.string());
    CsvTable t;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::vector<std::string> cells;
      std::istringstream row(line);
      std::string cell;
      while (std::getline(row, cell, ',')) cells.push_back(cell);
      if (t.header.empty())
        t.header = std::move(cells);
      else
        t.rows.push_back(std::move(cells));
    }
    if (t.header.empty()) throw ParseError("empty csv: " + path.string());
    return t;
  }

  std::size_t column(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw ParseError("csv column missing: " + name);
    return static_cast<std::size_t>(it - header.begin());
  }

  std::vector<std::size_t> columns_with_prefix(const std::string& prefix) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i].rfind(prefix, 0) == 0) out.push_back(i);
    return out;
  }
};

// The report stage turns raw run outputs into one plot-ready CSV per
// figure of the reproduced analysis:
//   fig2  CER curves of all decoders plus the union bound and error floor
//   fig3  UCER curves (iterative vs complete decoding)
//   fig4  per-weight UCER decomposition of the small companion code
//   fig5  undetected-error weight histogram, complete decoder
//   fig6  combined vs conventional UCER estimate, companion code
//   fig7  undetected-error weight histogram, iterative decoder
//   fig8  combined vs conventional UCER estimate, (128,64) code
//
// Inputs are looked up in one directory under fixed names (see
// report_figure_inputs); outputs are deterministic functions of the inputs
// so regeneration is idempotent, and every row carries the config hash of
// the run that produced it.
inline const std::map<std::string, std::vector<std::string>>& report_figure_inputs() {
  static const std::map<std::string, std::vector<std::string>> inputs = {
      {"fig2", {"union_bound.csv", "cer_spa.csv", "cer_ms.csv", "cer_nms.csv", "cer_mrb.csv"}},
      {"fig3", {"cer_spa.csv", "cer_mrb.csv"}},
      {"fig4", {"perweight_toy_mrb.csv"}},
      {"fig5", {"perweight_mrb.csv"}},
      {"fig6", {"combined_toy_mrb.json"}},
      {"fig7", {"perweight_spa.csv"}},
      {"fig8", {"combined_mrb.json"}},
  };
  return inputs;
}

inline const std::map<std::string, std::string>& report_figure_outputs() {
  static const std::map<std::string, std::string> outputs = {
      {"fig2", "fig2_cer.csv"},          {"fig3", "fig3_ucer.csv"},
      {"fig4", "fig4_perweight_ucer.csv"}, {"fig5", "fig5_hist_mrb.csv"},
      {"fig6", "fig6_combined_toy.csv"}, {"fig7", "fig7_hist_spa.csv"},
      {"fig8", "fig8_ucer.csv"},
  };
  return outputs;
}

namespace detail {

inline void write_series_rows(std::ostream& out, const CsvTable& t, const std::string& series,
                              const std::string& value_col, const std::string& lo_col,
                              const std::string& hi_col) {
  const std::size_t snr = t.column("snr_db"), value = t.column(value_col);
  const std::size_t lo = t.column(lo_col), hi = t.column(hi_col);
  const std::size_t hash = t.column("config_hash");
  for (const auto& row : t.rows)
    out << row[snr] << ',' << series << ',' << row[value] << ',' << row[lo] << ',' << row[hi]
        << ',' << row[hash] << '\n';
}

inline void write_fig2(const std::filesystem::path& in_dir, std::ostream& out) {
  out << "snr_db,series,cer,ci_lo,ci_hi,config_hash\n";
  const CsvTable ub = CsvTable::read_file(in_dir / "union_bound.csv");
  const std::size_t snr = ub.column("snr_db"), cer = ub.column("cer_union_bound");
  const std::size_t floor_col = ub.column("error_floor"), hash = ub.column("config_hash");
  for (const auto& row : ub.rows)
    out << row[snr] << ",union_bound," << row[cer] << ",,," << row[hash] << '\n';
  for (const auto& row : ub.rows)
    out << row[snr] << ",error_floor," << row[floor_col] << ",,," << row[hash] << '\n';
  for (const char* dec : {"spa", "ms", "nms", "mrb"}) {
    const CsvTable t = CsvTable::read_file(in_dir / ("cer_" + std::string(dec) + ".csv"));
    write_series_rows(out, t, dec, "cer", "cer_ci_lo", "cer_ci_hi");
  }
}

inline void write_fig3(const std::filesystem::path& in_dir, std::ostream& out) {
  out << "snr_db,series,ucer,ci_lo,ci_hi,config_hash\n";
  const CsvTable spa = CsvTable::read_file(in_dir / "cer_spa.csv");
  write_series_rows(out, spa, "spa", "ucer", "ucer_ci_lo", "ucer_ci_hi");
  // Complete decoding never detects a failure, so its UCER is its CER.
  const CsvTable mrb = CsvTable::read_file(in_dir / "cer_mrb.csv");
  write_series_rows(out, mrb, "mrb", "cer", "cer_ci_lo", "cer_ci_hi");
}

// Long-format per-weight profile (snr_db,frames,weight,count,config_hash)
// into per-weight rates (fig4) or percentage histograms (fig5/fig7).
inline void write_perweight(const std::filesystem::path& file, std::ostream& out,
                            bool as_percent) {
  const CsvTable t = CsvTable::read_file(file);
  const std::size_t snr = t.column("snr_db"), frames = t.column("frames");
  const std::size_t weight = t.column("weight"), count = t.column("count");
  const std::size_t hash = t.column("config_hash");
  if (as_percent) {
    std::map<std::string, double> totals;
    for (const auto& row : t.rows) totals[row[snr]] += std::stod(row[count]);
    out << "snr_db,weight,count,frames,percent,config_hash\n";
    for (const auto& row : t.rows) {
      const double total = totals[row[snr]];
      std::ostringstream pct;
      pct.precision(12);
      pct << (total == 0.0 ? 0.0 : 100.0 * std::stod(row[count]) / total);
      out << row[snr] << ',' << row[weight] << ',' << row[count] << ',' << row[frames] << ','
          << pct.str() << ',' << row[hash] << '\n';
    }
  } else {
    out << "snr_db,weight,ucer_j,config_hash\n";
    for (const auto& row : t.rows) {
      std::ostringstream rate;
      rate.precision(12);
      rate << std::stod(row[count]) / std::stod(row[frames]);
      out << row[snr] << ',' << row[weight] << ',' << rate.str() << ',' << row[hash] << '\n';
    }
  }
}

inline void write_combined(const std::filesystem::path& file, std::ostream& out) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open json: " + file.string());
  nlohmann::json j = nlohmann::json::parse(in);
  out << "snr_db,method,ucer,config_hash\n";
  const std::string hash = j.value("config_hash", "");
  out.precision(12);
  for (const auto& point : j.at("points")) {
    out << point.at("snr_db").get<double>() << ",combined,"
        << point.at("ucer_combined").get<double>() << ',' << hash << '\n';
    out << point.at("snr_db").get<double>() << ",conventional,"
        << point.at("ucer_conventional").get<double>() << ',' << hash << '\n';
  }
}

}  // namespace detail

// Generates the requested figures (all seven by default).  Missing inputs
// are collected across every requested figure and reported in one
// MissingInput error before anything is written.
inline std::vector<std::filesystem::path> report_figures(
    const std::filesystem::path& in_dir, const std::filesystem::path& out_dir,
    std::vector<std::string> figures = {}) {
  if (figures.empty())
    for (const auto& [fig, _] : report_figure_inputs()) figures.push_back(fig);

  std::vector<std::string> missing;
  std::set<std::string> needed;
  for (const auto& fig : figures) {
    const auto it = report_figure_inputs().find(fig);
    if (it == report_figure_inputs().end()) throw std::invalid_argument("unknown figure: " + fig);
    for (const auto& f : it->second) needed.insert(f);
  }
  for (const auto& f : needed)
    if (!std::filesystem::exists(in_dir / f)) missing.push_back(f);
  if (!missing.empty()) throw MissingInput(missing);

  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  nlohmann::json meta;
  meta["version"] = version_string;
  meta["inputs"] = nlohmann::json::array();
  for (const auto& f : needed) meta["inputs"].push_back(f);

  for (const auto& fig : figures) {
    const std::filesystem::path out_path = out_dir / report_figure_outputs().at(fig);
    std::ofstream out(out_path);
    if (fig == "fig2")
      detail::write_fig2(in_dir, out);
    else if (fig == "fig3")
      detail::write_fig3(in_dir, out);
    else if (fig == "fig4")
      detail::write_perweight(in_dir / "perweight_toy_mrb.csv", out, false);
    else if (fig == "fig5")
      detail::write_perweight(in_dir / "perweight_mrb.csv", out, true);
    else if (fig == "fig6")
      detail::write_combined(in_dir / "combined_toy_mrb.json", out);
    else if (fig == "fig7")
      detail::write_perweight(in_dir / "perweight_spa.csv", out, true);
    else if (fig == "fig8")
      detail::write_combined(in_dir / "combined_mrb.json", out);
    written.push_back(out_path);
  }

  std::sort(figures.begin(), figures.end());
  meta["figures"] = figures;
  std::ofstream meta_out(out_dir / "meta.json");
  meta_out << meta.dump(2) << '\n';
  written.push_back(out_dir / "meta.json");
  return written;
}

}  // namespace tcldpc
