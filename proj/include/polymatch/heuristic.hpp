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

#ifndef POLYMATCH_HEURISTIC_H
#define POLYMATCH_HEURISTIC_H

#include <cstdint>

#include "polymatch/decoder.hpp"
#include "polymatch/graph.hpp"

namespace polymatch {

/// Bit-length-reduction configuration. Zeros for trials/w_max select the
/// defaults K = 8 W_max and W_max = ceil(0.8 n^0.8) per path graph.
struct HeuristicConfig {
  std::size_t wth = 512;
  std::int64_t trials = 0;
  std::int64_t w_max = 0;
  int b_low = 4;
  int b_high = 8;
  std::uint64_t base_seed = 0;
  RngKind rng_kind = RngKind::kSplitMix64;
  Scheme scheme = Scheme::kPlain;
  bool early_exit = false;  // throughput mode; stops after the first
                            // candidate and is excluded from evaluations
};

/// Total weight of an edge set under the path graph's (unperturbed)
/// weights. Throws std::invalid_argument for edges absent from pg.
std::int64_t matching_weight(const std::vector<std::pair<int, int>>& m,
                             const PathGraph& pg);

/// K independent plain-perturbation trials with seeds base_seed + t;
/// validated trials become candidates and the one of minimum weight under
/// pg_score's weights wins (ties: lowest trial index). Zero candidates
/// yield an overflow failure.
DecodeOutcome multi_trial_decode_scored(const PathGraph& pg_gen,
                                        const PathGraph& pg_score,
                                        const HeuristicConfig& cfg);

/// Candidates generated and scored on the same graph.
DecodeOutcome multi_trial_decode(const PathGraph& pg,
                                 const HeuristicConfig& cfg);

/// Variable-precision scheme: candidates from the b_low weight function
/// (which bounds the ring bit length), selection by the b_high weights.
/// Optional precomputed tables must match the derived scales.
DecodeOutcome variable_precision_decode(const DetectorGraph& g,
                                        const std::vector<int>& active,
                                        const HeuristicConfig& cfg,
                                        const DistanceTable* table_low = nullptr,
                                        const DistanceTable* table_high = nullptr);

/// Lower bound on the ring width needed for a correct decode of pg:
/// 2 (C~ * mwpm_weight + (n/2) W_max) + 1, with every perturbation at its
/// maximum. C~ is 1 for the plain scheme.
std::int64_t required_wth_bound(const PathGraph& pg, Scheme scheme,
                                std::int64_t w_max);

}  // namespace polymatch

#endif
