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
#include <cstdint>
#include <vector>

#include "tcldpc/bitvec.hpp"
#include "tcldpc/errors.hpp"

namespace tcldpc {

// Dense binary matrix with packed rows.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), row_(rows, BitVector(cols)) {}

  static Gf2Matrix identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.row_[i].set(i, true);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return row_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { row_[r].set(c, v); }

  const BitVector& row(std::size_t r) const { return row_[r]; }
  BitVector& row(std::size_t r) { return row_[r]; }

  std::size_t row_weight(std::size_t r) const { return row_[r].weight(); }
  std::size_t col_weight(std::size_t c) const {
    std::size_t w = 0;
    for (const auto& r : row_) w += r.get(c);
    return w;
  }

  // Rank by elimination on a scratch copy.
  std::size_t rank() const {
    std::vector<BitVector> work = row_;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t pivot = r;
      while (pivot < rows_ && !work[pivot].get(c)) ++pivot;
      if (pivot == rows_) continue;
      std::swap(work[pivot], work[r]);
      for (std::size_t i = r + 1; i < rows_; ++i)
        if (work[i].get(c)) work[i] ^= work[r];
      ++r;
    }
    return r;
  }

  // Syndrome-style product: component r of the result is <row r, v>.
  BitVector mul_vector(const BitVector& v) const {
    assert(v.size() == cols_);
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::uint64_t acc = 0;
      auto rw = row_[r].words();
      auto vw = v.words();
      for (std::size_t i = 0; i < rw.size(); ++i) acc ^= rw[i] & vw[i];
      out.set(r, std::popcount(acc) & 1);
    }
    return out;
  }

  Gf2Matrix transpose() const {
    Gf2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (row_[r].get(c)) t.set(c, r, true);
    return t;
  }

  Gf2Matrix multiply(const Gf2Matrix& other) const {
    assert(cols_ == other.rows_);
    Gf2Matrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (row_[r].get(c)) out.row_[r] ^= other.row_[c];
    return out;
  }

  bool is_zero() const {
    for (const auto& r : row_)
      if (r.any()) return false;
    return true;
  }

  bool operator==(const Gf2Matrix& other) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BitVector> row_;
};

// Systematic generator derived from a parity-check matrix.  `generator` is
// k x n in the original column order; message bit i occupies codeword
// position info_columns[i], where the generator restricts to the identity.
struct SystematicForm {
  Gf2Matrix generator;
  std::vector<std::size_t> info_columns;
  std::size_t rank = 0;
};

// Reduces h to row-reduced echelon form choosing pivots from the rightmost
// columns, so the information set lands on the lowest-index free columns.
// For parity-check matrices of systematic codes this keeps the message in
// the leading codeword positions.  Throws DegenerateCode when rank(h) equals
// the column count (no free columns remain).
inline SystematicForm systematic_generator(const Gf2Matrix& h) {
  const std::size_t rows = h.rows(), n = h.cols();
  std::vector<BitVector> work;
  work.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) work.push_back(h.row(r));

  std::vector<std::size_t> pivot_col;
  std::size_t next = 0;
  for (std::size_t t = 0; t < n && next < rows; ++t) {
    const std::size_t c = n - 1 - t;
    std::size_t pivot = next;
    while (pivot < rows && !work[pivot].get(c)) ++pivot;
    if (pivot == rows) continue;
    std::swap(work[pivot], work[next]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != next && work[i].get(c)) work[i] ^= work[next];
    pivot_col.push_back(c);
    ++next;
  }

  const std::size_t rank = next;
  if (rank == n) throw DegenerateCode("parity-check matrix leaves no information positions");

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  SystematicForm out;
  out.rank = rank;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) out.info_columns.push_back(c);

  const std::size_t k = out.info_columns.size();
  out.generator = Gf2Matrix(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t f = out.info_columns[i];
    out.generator.set(i, f, true);
    for (std::size_t p = 0; p < rank; ++p)
      if (work[p].get(f)) out.generator.set(i, pivot_col[p], true);
  }
  return out;
}

}  // namespace tcldpc
