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

#ifndef POLYMATCH_IO_H
#define POLYMATCH_IO_H

#include <iosfwd>
#include <string>
#include <vector>

#include "polymatch/decoder.hpp"
#include "polymatch/graph.hpp"

namespace polymatch {

// Detector-graph text format (line oriented, bit-exact contract):
//   dgraph v1 <num_vertices>
//   v <id> detector|boundary          one line per vertex, ids 0..n-1
//   e <id1> <id2> <p>                 optional trailing: w <int>
// Syndrome sample format: one line per shot, space-separated active
// detector ids; an empty line is a shot with no detections.

DetectorGraph read_detector_graph(std::istream& in);
DetectorGraph read_detector_graph_file(const std::string& path);
void write_detector_graph(std::ostream& out, const DetectorGraph& g);

std::vector<std::vector<int>> read_syndromes(std::istream& in);
std::vector<std::vector<int>> read_syndromes_file(const std::string& path);
void write_syndromes(std::ostream& out,
                     const std::vector<std::vector<int>>& shots);

/// One decode record:
///   shot <id> status <STATUS> wstar <int> weight <int> edges <pairs>
/// Matching pairs print as detector ids (`a-b`), boundary matches as
/// `a-B`; zero-weight pairings between unused boundary copies are omitted.
/// Failed shots print wstar/weight -1 and no pairs.
std::string format_shot_record(int shot_id, const DecodeOutcome& out,
                               const PathGraph& pg);

struct SweepRow {
  std::string axis;
  std::int64_t value = 0;
  std::int64_t trials = 0;
  std::int64_t failures = 0;
  double stderr_value = 0.0;
};

/// CSV with header `axis,value,trials,failures,stderr`; stderr prints with
/// %.9g so identical runs are byte identical.
std::string format_sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace polymatch

#endif
