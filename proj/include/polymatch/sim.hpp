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

#ifndef POLYMATCH_SIM_H
#define POLYMATCH_SIM_H

#include <cstdint>
#include <vector>

#include "polymatch/graph.hpp"
#include "polymatch/heuristic.hpp"
#include "polymatch/io.hpp"

namespace polymatch {

/// Phenomenological noise on a rotated surface code memory experiment:
/// independent data flips (space-like edges) and measurement flips
/// (time-like edges), all at rate p.
struct NoiseModel {
  int d = 3;          // code distance, odd >= 3
  int rounds = 3;     // syndrome-extraction rounds (defaults to d)
  double p = 1e-3;    // physical error rate

  void validate() const;
};

/// Space-time detector graph of the Z-type detectors over `rounds` rounds:
/// one detector per Z plaquette per round, a single shared boundary vertex,
/// space-like edges from data-qubit flips (merged per plaquette pair, p
/// summed), time-like edges between consecutive rounds, and a time boundary
/// edge for last-round measurement flips. Edges whose data qubit sits on
/// the logical-Z column carry logical_flip.
DetectorGraph build_surface_detector_graph(const NoiseModel& nm);

struct ShotSample {
  std::vector<int> active;        // detectors with odd fault parity
  std::vector<int> fault_edges;   // indices into g.edges
};

/// Flips every edge independently with its p_e.
ShotSample sample_shot(const DetectorGraph& g, std::uint64_t seed);

/// Active detectors implied by a fault set (odd-parity endpoints).
std::vector<int> active_from_faults(const DetectorGraph& g,
                                    const std::vector<int>& fault_edges);

/// Parity of logical_flip over an edge multiset.
bool logical_class(const DetectorGraph& g, const std::vector<int>& edges);

/// Logical class of the correction that applies a path-graph matching:
/// every matched pair expands to the detector-graph edges on its shortest
/// path (boundary pairs to the nearest-boundary path).
bool correction_logical_class(const DetectorGraph& g, const PathGraph& pg,
                              const std::vector<std::pair<int, int>>& matching,
                              const PathResolver& resolver);

struct PrecisionSweepResult {
  std::vector<SweepRow> rows;     // axis "b"
  std::int64_t skipped_shots = 0; // beyond the exact reference's reach
};

/// Discretization-precision sweep: for each binary precision b, the
/// fraction of shots whose integer-weight MWPM pairing is not optimal
/// under the floating-point weights. Shots are shared across b values.
PrecisionSweepResult precision_sweep(const DetectorGraph& g,
                                     const std::vector<int>& b_values,
                                     std::int64_t shots, std::uint64_t seed);

struct ThresholdSweepConfig {
  std::vector<std::int64_t> wth_list;
  std::vector<int> k_multipliers;   // K = multiplier * W_max per shot
  int b_low = 4;
  int b_high = 8;
  int max_path_graph = 28;          // larger shots leave the denominator
  RngKind rng_kind = RngKind::kSplitMix64;
};

struct ThresholdSweepResult {
  std::vector<SweepRow> rows;       // axis "base_k<m>"/"ext_k<m>" + "proxy"
  std::int64_t included_shots = 0;
  std::int64_t excluded_shots = 0;
  double proxy_rate = 0.0;          // reference-decoder logical error proxy
};

/// Failure-probability sweep over (w_th, trial multiplier) for both the
/// high-precision candidate method ("base") and the variable-precision
/// method ("ext"). A shot fails at a grid point when no trial yields a
/// validated candidate below the ring width, or the selected matching
/// weighs more than the reference MWPM under the b_high weights. One ring
/// evaluation per trial at max(w_th) serves every grid point exactly.
ThresholdSweepResult threshold_sweep(const NoiseModel& nm,
                                     const ThresholdSweepConfig& cfg,
                                     std::int64_t shots, std::uint64_t seed);

}  // namespace polymatch

#endif
