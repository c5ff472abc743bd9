// Copyright 2026 The polymatch developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//      http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polymatch/heuristic.hpp"

#include <algorithm>
#include <stdexcept>

#include "polymatch/oracle.hpp"

namespace polymatch {

std::int64_t matching_weight(const std::vector<std::pair<int, int>>& m,
                             const PathGraph& pg) {
  std::int64_t total = 0;
  for (auto [u, v] : m) {
    if (u < 0 || v < 0 || u >= pg.n || v >= pg.n || !pg.has_edge(u, v))
      throw std::invalid_argument("matching_weight: edge not in path graph");
    total += pg.weight(u, v);
  }
  return total;
}

namespace {

struct ResolvedConfig {
  std::int64_t w_max;
  std::int64_t trials;
};

ResolvedConfig resolve(const HeuristicConfig& cfg, int n) {
  ResolvedConfig r;
  r.w_max = cfg.w_max > 0 ? cfg.w_max : default_w_max(n);
  r.trials = cfg.trials > 0 ? cfg.trials : 8 * r.w_max;
  return r;
}

}  // namespace

DecodeOutcome multi_trial_decode_scored(const PathGraph& pg_gen,
                                        const PathGraph& pg_score,
                                        const HeuristicConfig& cfg) {
  if (pg_gen.n == 0) {
    DecodeOutcome out;
    out.status = DecodeStatus::kMatching;
    out.w_star = 0;
    out.weight_under = 0;
    return out;
  }
  const auto [w_max, trials] = resolve(cfg, pg_gen.n);

  std::vector<DecodeOutcome> slots(static_cast<std::size_t>(trials));
  if (cfg.early_exit) {
    for (std::int64_t t = 0; t < trials; ++t) {
      const auto pw = perturb(pg_gen, cfg.scheme, w_max, cfg.base_seed + t,
                              cfg.rng_kind);
      slots[t] = decode(pg_gen, pw, cfg.wth);
      if (slots[t].status == DecodeStatus::kMatching) break;
    }
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < trials; ++t) {
      const auto pw = perturb(pg_gen, cfg.scheme, w_max, cfg.base_seed + t,
                              cfg.rng_kind);
      slots[t] = decode(pg_gen, pw, cfg.wth);
    }
  }

  // Deterministic selection: minimum score weight, ties to the lowest trial.
  int best = -1;
  std::int64_t best_w = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    if (slots[t].status != DecodeStatus::kMatching) continue;
    const std::int64_t w = matching_weight(slots[t].matching, pg_score);
    if (best < 0 || w < best_w) {
      best = static_cast<int>(t);
      best_w = w;
    }
  }
  if (best < 0) return DecodeOutcome{};  // overflow failure: no candidate
  DecodeOutcome out = slots[best];
  out.weight_under = best_w;
  out.trial_index = best;
  return out;
}

DecodeOutcome multi_trial_decode(const PathGraph& pg,
                                 const HeuristicConfig& cfg) {
  return multi_trial_decode_scored(pg, pg, cfg);
}

DecodeOutcome variable_precision_decode(const DetectorGraph& g,
                                        const std::vector<int>& active,
                                        const HeuristicConfig& cfg,
                                        const DistanceTable* table_low,
                                        const DistanceTable* table_high) {
  if (cfg.b_low > cfg.b_high)
    throw std::invalid_argument("variable_precision_decode: b_low > b_high");
  const std::int64_t c_low = scale_for_precision(g, cfg.b_low);
  const std::int64_t c_high = scale_for_precision(g, cfg.b_high);
  const WeightFunction wf_high = discretize(g, c_high);
  const PathGraph pg_high =
      build_path_graph(g, wf_high, active, nullptr, table_high);
  if (c_low == c_high)
    return multi_trial_decode_scored(pg_high, pg_high, cfg);
  const WeightFunction wf_low = discretize(g, c_low);
  const PathGraph pg_low =
      build_path_graph(g, wf_low, active, nullptr, table_low);
  return multi_trial_decode_scored(pg_low, pg_high, cfg);
}

std::int64_t required_wth_bound(const PathGraph& pg, Scheme scheme,
                                std::int64_t w_max) {
  const auto ref = reference_mwpm_weight(pg);
  if (!ref)
    throw std::invalid_argument("required_wth_bound: no perfect matching");
  const std::int64_t half = pg.n / 2;
  const std::int64_t c_tilde =
      scheme == Scheme::kAmplified ? half * (w_max - 1) + 1 : 1;
  return 2 * (c_tilde * *ref + half * w_max) + 1;
}

}  // namespace polymatch
