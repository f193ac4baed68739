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

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tcldpc/bitvec.hpp"
#include "tcldpc/errors.hpp"

namespace tcldpc {

// Codeword-list format: a header "n <bits>" then one hex codeword per line
// (see BitVector::to_hex for the digit convention).  '#' lines are comments.
inline void write_codewords(std::ostream& out, const std::vector<BitVector>& words,
                            std::size_t n) {
  out << "n " << n << '\n';
  for (const BitVector& w : words) out << w.to_hex() << '\n';
}

struct CodewordList {
  std::size_t n = 0;
  std::vector<BitVector> words;
};

inline CodewordList read_codewords(std::istream& in) {
  CodewordList list;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      std::istringstream hs(line);
      std::string tag;
      if (!(hs >> tag >> list.n) || tag != "n")
        throw ParseError("codeword list must start with: n <bits>");
      header_seen = true;
      continue;
    }
    list.words.push_back(BitVector::from_hex(line, list.n));
  }
  if (!header_seen) throw ParseError("empty codeword list");
  return list;
}

}  // namespace tcldpc
