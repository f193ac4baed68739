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

#include <stdexcept>
#include <string>
#include <vector>

namespace tcldpc {

// Parity-check matrix has no information positions (rank equals columns).
struct DegenerateCode : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Polynomial reduction modulo the zero polynomial.
struct DivisionByZeroPolynomial : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Circulant exponent outside [0, M).
struct ExponentOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Frame payload length outside the supported transfer-frame range.
struct PayloadOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Vector length is not a multiple of the circulant block size.
struct BlockMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Normalization factor outside (0, 1].
struct InvalidAlpha : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A weight with simulated mass has no matching CRC profile entry.
struct MissingWeightData : std::runtime_error {
  explicit MissingWeightData(std::size_t weight)
      : std::runtime_error("no CRC profile entry for weight " + std::to_string(weight)),
        weight(weight) {}
  std::size_t weight;
};

// Report generation is missing one or more required input tables.
struct MissingInput : std::runtime_error {
  explicit MissingInput(std::vector<std::string> absent)
      : std::runtime_error(describe(absent)), missing(std::move(absent)) {}
  std::vector<std::string> missing;

 private:
  static std::string describe(const std::vector<std::string>& absent) {
    std::string s = "missing input tables:";
    for (const auto& a : absent) s += " " + a;
    return s;
  }
};

// Input file violates its documented format.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tcldpc
