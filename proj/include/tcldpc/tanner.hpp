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

#include <cstdint>
#include <vector>

#include "tcldpc/gf2_matrix.hpp"

namespace tcldpc {

// Bipartite factor graph of a parity-check matrix with edge-indexed
// adjacency, so message arrays can be flat vectors over edges.
struct TannerGraph {
  struct Neighbor {
    std::uint32_t node;  // variable index on check side, check index on variable side
    std::uint32_t edge;
  };

  std::size_t num_checks = 0;
  std::size_t num_vars = 0;
  std::size_t num_edges = 0;
  std::vector<std::vector<Neighbor>> check_adj;
  std::vector<std::vector<Neighbor>> var_adj;

  explicit TannerGraph(const Gf2Matrix& h)
      : num_checks(h.rows()),
        num_vars(h.cols()),
        check_adj(h.rows()),
        var_adj(h.cols()) {
    std::uint32_t edge = 0;
    for (std::size_t r = 0; r < h.rows(); ++r)
      for (std::size_t c = 0; c < h.cols(); ++c)
        if (h.get(r, c)) {
          check_adj[r].push_back({static_cast<std::uint32_t>(c), edge});
          var_adj[c].push_back({static_cast<std::uint32_t>(r), edge});
          ++edge;
        }
    num_edges = edge;
  }

  bool syndrome_ok(const BitVector& word) const {
    for (const auto& adj : check_adj) {
      bool parity = false;
      for (const auto& nb : adj) parity ^= word.get(nb.node);
      if (parity) return false;
    }
    return true;
  }
};

}  // namespace tcldpc
