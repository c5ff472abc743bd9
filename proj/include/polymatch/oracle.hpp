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

#ifndef POLYMATCH_ORACLE_H
#define POLYMATCH_ORACLE_H

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "polymatch/decoder.hpp"
#include "polymatch/graph.hpp"

namespace polymatch {

using Matching = std::vector<std::pair<int, int>>;

struct MwpmEnumeration {
  bool has_matching = false;
  std::int64_t weight = -1;
  std::vector<Matching> optimal;  // every minimum-weight perfect matching
};

/// Enumerates all perfect matchings by recursive pairing of the lowest
/// unmatched vertex and keeps every optimum. Weights may be overridden
/// (e.g. with perturbed effective weights) via edge_weight. Intended for
/// |V| <= 16; the matching count grows as (n-1)!!.
MwpmEnumeration exhaustive_mwpm(
    const PathGraph& pg,
    const std::function<std::int64_t(int edge_idx)>& edge_weight = {});

/// Exact MWPM weight for boundary-structured path graphs of any size the
/// sweeps produce (k = n/2 active detectors, subset DP over the actives).
/// Falls back to exhaustive enumeration for unstructured graphs.
std::optional<std::int64_t> reference_mwpm_weight(const PathGraph& pg);

/// Like reference_mwpm_weight but also reconstructs one optimal matching
/// (deterministic tie-breaking).
std::optional<std::pair<std::int64_t, Matching>> reference_mwpm(
    const PathGraph& pg);

/// The integer-arithmetic determinant decoder, run with arbitrary-precision
/// signed integers: matrix entries +/- 2^effective, exact determinant and
/// minors via the same division-free recursion as the ring decoder, w* from
/// the 2-adic valuation, edges selected where minor * 2^eff / 4^w* is odd.
/// Never overflows; det = 0 means no perfect matching exists.
DecodeOutcome appendix_a_decode(const PathGraph& pg,
                                const PerturbedWeights& pw);

/// 2-adic valuation of the exact integer determinant (for cross-checks
/// against the ring determinant's minimum degree); nullopt when det = 0.
std::optional<std::int64_t> appendix_a_det_valuation(
    const PathGraph& pg, const PerturbedWeights& pw);

/// Random even graph for cross-check workloads: a planted random perfect
/// matching (so one always exists) plus Bernoulli(edge_prob) extra edges,
/// weights uniform on [1, max_weight].
PathGraph random_even_graph(int n, std::int64_t max_weight, std::uint64_t seed,
                            double edge_prob = 0.5);

}  // namespace polymatch

#endif
