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

#ifndef POLYMATCH_GRAPH_H
#define POLYMATCH_GRAPH_H

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace polymatch {

constexpr std::int64_t kInfWeight = std::numeric_limits<std::int64_t>::max() / 4;

enum class VertexKind : std::uint8_t { kDetector, kBoundary };

/// Graph of detectors and boundary vertices. Each edge is a single-fault
/// mechanism with flip probability p in (0,1); parallel mechanisms between
/// the same vertex pair are merged at construction time with their
/// probabilities summed. logical_flip marks mechanisms that toggle the
/// tracked logical observable (set for generated graphs; files carry no
/// such annotation).
struct DetectorGraph {
  struct Edge {
    int u = -1;
    int v = -1;
    double p = 0.0;
    std::int64_t w_override = -1;  // >= 1 substitutes for -ln(p) when set
    bool logical_flip = false;
  };

  std::vector<VertexKind> kinds;
  std::vector<Edge> edges;

  // adjacency: per vertex, (edge index, neighbor)
  std::vector<std::vector<std::pair<int, int>>> adj;

  int num_vertices() const { return static_cast<int>(kinds.size()); }
  int num_detectors() const;
  bool is_detector(int v) const { return kinds[v] == VertexKind::kDetector; }

  /// Builds adjacency and checks invariants (no self-loops, p in (0,1),
  /// every edge touches a detector). Throws std::invalid_argument.
  void finalize();
};

/// Integer edge weights at a given scale C: w(e) = ceil(-C ln p_e), or
/// ceil(C * w_override) for edges carrying an explicit base weight.
struct WeightFunction {
  std::int64_t scale_c = 1;
  std::vector<std::int64_t> w;  // per detector-graph edge, all >= 1
};

WeightFunction discretize(const DetectorGraph& g, std::int64_t c);

/// Smallest C >= 1 such that the minimum discretized edge weight has at
/// least b significant binary digits (value >= 2^(b-1)).
std::int64_t scale_for_precision(const DetectorGraph& g, int b);

/// Even-order weighted graph handed to the decoder. For graphs produced by
/// build_path_graph, vertices 0..k-1 are the active detectors (sorted by
/// id) and k..2k-1 their boundary copies; synthetic graphs used in tests
/// leave active_ids empty. Edge order is canonical and documented:
/// detector-detector pairs (i<j lexicographic), then detector-boundary
/// copies, then the zero-weight boundary-copy clique.
struct PathGraph {
  struct Edge {
    int u;
    int v;
    std::int64_t w;
  };

  int n = 0;
  std::vector<Edge> edges;
  std::vector<int> active_ids;   // size n/2 when built from a detector graph
  std::int64_t scale_c = 0;      // provenance: WeightFunction scale

  std::vector<std::int32_t> edge_index_;  // n*n lookup, -1 when absent

  int edge_index(int u, int v) const { return edge_index_[u * n + v]; }
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
  std::int64_t weight(int u, int v) const { return edges[edge_index(u, v)].w; }
  bool structured() const { return !active_ids.empty() || n == 0; }

  void add_edge(int u, int v, std::int64_t w);
  void rebuild_index();
};

/// Single-source shortest-path tree over a weighted detector graph.
struct DijkstraTree {
  std::vector<std::int64_t> dist;       // kInfWeight when unreachable
  std::vector<std::int32_t> pred_edge;  // edge entering v on the tree path
};

DijkstraTree dijkstra(const DetectorGraph& g, const WeightFunction& wf,
                      int source);
/// Multi-source run from every boundary vertex (their joint distance 0);
/// gives each detector its nearest-boundary distance and path.
DijkstraTree dijkstra_from_boundary(const DetectorGraph& g,
                                    const WeightFunction& wf);

/// All-pairs lookup table for one (graph, weight function): one Dijkstra
/// tree per detector plus the boundary tree, reused across shots. Rows are
/// built in parallel; the table is immutable afterwards.
struct DistanceTable {
  const DetectorGraph* g = nullptr;
  std::int64_t scale_c = 0;
  std::vector<DijkstraTree> rows;  // indexed by detector id
  DijkstraTree boundary;
};

DistanceTable build_distance_table(const DetectorGraph& g,
                                   const WeightFunction& wf);

/// Expands a path-graph matching edge back to the detector-graph edges on
/// the underlying shortest path (for applying corrections). Works from a
/// DistanceTable or from the per-shot trees produced by build_path_graph.
struct PathResolver {
  const DetectorGraph* g = nullptr;
  std::vector<DijkstraTree> source_trees;  // per active detector, in order
  std::vector<int> sources;                // active detector ids
  DijkstraTree boundary;
  const DistanceTable* table = nullptr;    // set when backed by a table

  /// Detector-graph edge indices from active source (by position in the
  /// path graph) to detector target id.
  std::vector<int> expand(int source_pos, int target_id) const;
  /// Edge indices from an active detector to its nearest boundary vertex.
  std::vector<int> expand_to_boundary(int source_pos) const;
};

/// Builds the even-order path graph over the active detectors: one
/// boundary copy per active detector, detector pairs weighted by shortest
/// path, each detector tied to its own copy at its boundary distance, and
/// all copies pairwise connected at weight 0. Throws unreachable-detector
/// errors for detectors with no usable edge. Passing a resolver keeps the
/// shortest-path trees for later correction expansion.
PathGraph build_path_graph(const DetectorGraph& g, const WeightFunction& wf,
                           const std::vector<int>& active,
                           PathResolver* resolver = nullptr,
                           const DistanceTable* table = nullptr);

}  // namespace polymatch

#endif
