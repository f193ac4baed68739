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
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tcldpc/errors.hpp"
#include "tcldpc/gf2_matrix.hpp"

namespace tcldpc {

// Base matrix of a quasi-cyclic code.  Each cell is a (possibly empty) set
// of circulant exponents; exponent e stands for the identity cyclically
// right-shifted by e, and a multi-entry cell is the sum of those shifts.
struct CirculantBaseMatrix {
  std::size_t block_rows = 0;
  std::size_t block_cols = 0;
  std::size_t m = 0;  // circulant size
  std::vector<std::vector<std::vector<std::uint32_t>>> cells;

  void validate() const {
    if (m == 0) throw ParseError("circulant size must be positive");
    if (cells.size() != block_rows) throw ParseError("base matrix row count mismatch");
    for (const auto& row : cells) {
      if (row.size() != block_cols) throw ParseError("base matrix column count mismatch");
      for (const auto& cell : row) {
        for (std::uint32_t e : cell)
          if (e >= m)
            throw ExponentOutOfRange("circulant exponent " + std::to_string(e) +
                                     " not below M=" + std::to_string(m));
        for (std::size_t i = 1; i < cell.size(); ++i)
          if (cell[i] <= cell[i - 1]) throw ParseError("cell exponents must be strictly increasing");
      }
    }
  }
};

// Expands the base matrix into its full binary form.  Exponent e places
// ones at (i, (i + e) mod M) within the block, for local rows i.
inline Gf2Matrix expand_base(const CirculantBaseMatrix& base) {
  base.validate();
  Gf2Matrix h(base.block_rows * base.m, base.block_cols * base.m);
  for (std::size_t br = 0; br < base.block_rows; ++br)
    for (std::size_t bc = 0; bc < base.block_cols; ++bc)
      for (std::uint32_t e : base.cells[br][bc])
        for (std::size_t i = 0; i < base.m; ++i)
          h.set(br * base.m + i, bc * base.m + (i + e) % base.m, true);
  return h;
}

// Text format: a header line "qc <block_rows> <block_cols> <M>" followed by
// one line per block row; cells are "-" (zero block) or comma-separated
// exponents.  Lines starting with '#' are comments.
inline CirculantBaseMatrix parse_qc(std::istream& in) {
  CirculantBaseMatrix base;
  std::string line;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError("empty qc file");
  {
    std::istringstream hs(line);
    std::string tag;
    if (!(hs >> tag >> base.block_rows >> base.block_cols >> base.m) || tag != "qc")
      throw ParseError("qc header must be: qc <block_rows> <block_cols> <M>");
  }

  base.cells.resize(base.block_rows);
  for (std::size_t br = 0; br < base.block_rows; ++br) {
    if (!next_line()) throw ParseError("qc file truncated");
    std::istringstream rs(line);
    std::string cell;
    auto& row = base.cells[br];
    while (rs >> cell) {
      row.emplace_back();
      if (cell == "-") continue;
      std::istringstream cs(cell);
      std::string tok;
      while (std::getline(cs, tok, ',')) {
        if (tok.empty()) throw ParseError("empty exponent in qc cell");
        row.back().push_back(static_cast<std::uint32_t>(std::stoul(tok)));
      }
    }
    if (row.size() != base.block_cols) throw ParseError("qc row has wrong number of cells");
  }
  base.validate();
  return base;
}

inline CirculantBaseMatrix parse_qc_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open qc file: " + path);
  return parse_qc(in);
}

inline void write_qc(std::ostream& out, const CirculantBaseMatrix& base) {
  base.validate();
  out << "qc " << base.block_rows << ' ' << base.block_cols << ' ' << base.m << '\n';
  for (const auto& row : base.cells) {
    for (std::size_t bc = 0; bc < row.size(); ++bc) {
      if (bc) out << ' ';
      if (row[bc].empty()) {
        out << '-';
      } else {
        for (std::size_t i = 0; i < row[bc].size(); ++i) {
          if (i) out << ',';
          out << row[bc][i];
        }
      }
    }
    out << '\n';
  }
}

}  // namespace tcldpc
