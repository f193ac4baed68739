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
#include <cmath>
#include <span>
#include <vector>

#include "tcldpc/channel.hpp"
#include "tcldpc/errors.hpp"
#include "tcldpc/outcome.hpp"
#include "tcldpc/tanner.hpp"

namespace tcldpc {

enum class CheckRule {
  sum_product,         // exact tanh rule
  min_sum,             // min-magnitude approximation
  normalized_min_sum,  // min-sum scaled by alpha
};

// Flooding-schedule belief propagation decoder.  One instance owns its
// message scratch, so reuse an instance per worker rather than sharing.
//
// Messages are clipped to +/-19.07 so the tanh products stay away from
// +/-1; the flooding schedule updates every check then every variable node
// once per iteration, stopping early as soon as the hard decision satisfies
// all checks.
class IterativeDecoder {
 public:
  IterativeDecoder(const TannerGraph& graph, CheckRule rule, double alpha = 1.0)
      : graph_(&graph),
        rule_(rule),
        alpha_(alpha),
        v2c_(graph.num_edges),
        c2v_(graph.num_edges),
        hard_(graph.num_vars) {
    if (rule == CheckRule::normalized_min_sum && !(alpha > 0.0 && alpha <= 1.0))
      throw InvalidAlpha("normalization factor must lie in (0, 1]");
  }

  DecodeResult decode(std::span<const double> llr, int max_iterations) {
    const TannerGraph& g = *graph_;
    for (std::size_t v = 0; v < g.num_vars; ++v) {
      hard_.set(v, llr[v] < 0.0);
      for (const auto& nb : g.var_adj[v]) v2c_[nb.edge] = clip(llr[v]);
    }
    if (g.syndrome_ok(hard_)) return {hard_, true, 0};

    for (int iter = 1; iter <= max_iterations; ++iter) {
      for (const auto& adj : g.check_adj) update_check(adj);
      for (std::size_t v = 0; v < g.num_vars; ++v) {
        double total = llr[v];
        for (const auto& nb : g.var_adj[v]) total += c2v_[nb.edge];
        hard_.set(v, total < 0.0);
        for (const auto& nb : g.var_adj[v]) v2c_[nb.edge] = clip(total - c2v_[nb.edge]);
      }
      if (g.syndrome_ok(hard_)) return {hard_, true, iter};
    }
    return {hard_, false, max_iterations};
  }

 private:
  static constexpr double kClip = 19.07;

  static double clip(double x) { return std::clamp(x, -kClip, kClip); }

  void update_check(const std::vector<TannerGraph::Neighbor>& adj) {
    if (rule_ == CheckRule::sum_product)
      update_check_spa(adj);
    else
      update_check_minsum(adj, rule_ == CheckRule::normalized_min_sum ? alpha_ : 1.0);
  }

  // Exact rule via forward/backward partial products of tanh(m/2).
  void update_check_spa(const std::vector<TannerGraph::Neighbor>& adj) {
    const std::size_t d = adj.size();
    fwd_.resize(d + 1);
    bwd_.resize(d + 1);
    fwd_[0] = 1.0;
    for (std::size_t j = 0; j < d; ++j) fwd_[j + 1] = fwd_[j] * std::tanh(0.5 * v2c_[adj[j].edge]);
    bwd_[d] = 1.0;
    for (std::size_t j = d; j-- > 0;) bwd_[j] = bwd_[j + 1] * std::tanh(0.5 * v2c_[adj[j].edge]);
    for (std::size_t j = 0; j < d; ++j) {
      const double p = std::clamp(fwd_[j] * bwd_[j + 1], -0.99999999999999, 0.99999999999999);
      c2v_[adj[j].edge] = clip(2.0 * std::atanh(p));
    }
  }

  // Sign product with the two smallest magnitudes, optionally scaled.
  void update_check_minsum(const std::vector<TannerGraph::Neighbor>& adj, double scale) {
    double min1 = HUGE_VAL, min2 = HUGE_VAL;
    std::size_t arg_min = 0;
    bool sign_all = false;  // true = negative
    for (std::size_t j = 0; j < adj.size(); ++j) {
      const double m = v2c_[adj[j].edge];
      const double mag = std::fabs(m);
      sign_all ^= (m < 0.0);
      if (mag < min1) {
        min2 = min1;
        min1 = mag;
        arg_min = j;
      } else if (mag < min2) {
        min2 = mag;
      }
    }
    if (adj.size() == 1) min2 = min1;  // degree-1 check: the excluded set is empty
    for (std::size_t j = 0; j < adj.size(); ++j) {
      const double m = v2c_[adj[j].edge];
      const bool neg = sign_all ^ (m < 0.0);
      const double mag = scale * (j == arg_min ? min2 : min1);
      c2v_[adj[j].edge] = neg ? -mag : mag;
    }
  }

  const TannerGraph* graph_;
  CheckRule rule_;
  double alpha_;
  std::vector<double> v2c_, c2v_, fwd_, bwd_;
  BitVector hard_;
};

// Convenience one-shot wrappers; construct an IterativeDecoder directly in
// throughput-sensitive loops.
inline DecodeResult decode_spa_llr(const TannerGraph& g, std::span<const double> llr,
                                   int max_iterations = 100) {
  return IterativeDecoder(g, CheckRule::sum_product).decode(llr, max_iterations);
}

inline DecodeResult decode_min_sum(const TannerGraph& g, std::span<const double> llr,
                                   int max_iterations = 100) {
  return IterativeDecoder(g, CheckRule::min_sum).decode(llr, max_iterations);
}

inline DecodeResult decode_normalized_min_sum(const TannerGraph& g, std::span<const double> llr,
                                              int max_iterations = 100, double alpha = 0.8) {
  return IterativeDecoder(g, CheckRule::normalized_min_sum, alpha).decode(llr, max_iterations);
}

}  // namespace tcldpc
