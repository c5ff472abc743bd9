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

#include "polymatch/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace polymatch {

namespace {

/// ceil with deterministic handling of the discontinuity: values within
/// 2^-40 relative distance of an integer are treated as that integer, so
/// quantities like -ln(e^-3) discretize to 3 on every platform.
std::int64_t ceil_stable(double x) {
  const double nearest = std::nearbyint(x);
  if (std::abs(x - nearest) <= std::abs(x) * 0x1.0p-40)
    return static_cast<std::int64_t>(nearest);
  return static_cast<std::int64_t>(std::ceil(x));
}

double base_log_weight(const DetectorGraph::Edge& e) {
  if (e.w_override >= 1) return static_cast<double>(e.w_override);
  return -std::log(e.p);
}

}  // namespace

int DetectorGraph::num_detectors() const {
  int n = 0;
  for (VertexKind k : kinds)
    if (k == VertexKind::kDetector) ++n;
  return n;
}

void DetectorGraph::finalize() {
  const int nv = num_vertices();
  adj.assign(nv, {});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 0 || e.u >= nv || e.v < 0 || e.v >= nv)
      throw std::invalid_argument("DetectorGraph: edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("DetectorGraph: self-loop");
    if (!is_detector(e.u) && !is_detector(e.v))
      throw std::invalid_argument("DetectorGraph: edge between boundaries");
    if (!(e.p > 0.0 && e.p < 1.0))
      throw std::invalid_argument("DetectorGraph: flip probability outside (0,1)");
    adj[e.u].emplace_back(static_cast<int>(i), e.v);
    adj[e.v].emplace_back(static_cast<int>(i), e.u);
  }
}

WeightFunction discretize(const DetectorGraph& g, std::int64_t c) {
  if (c < 1) throw std::invalid_argument("discretize: C must be >= 1");
  WeightFunction wf;
  wf.scale_c = c;
  wf.w.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    if (!(e.p > 0.0 && e.p < 1.0))
      throw std::invalid_argument("discretize: flip probability outside (0,1)");
    const std::int64_t w =
        ceil_stable(static_cast<double>(c) * base_log_weight(e));
    wf.w.push_back(std::max<std::int64_t>(1, w));
  }
  return wf;
}

std::int64_t scale_for_precision(const DetectorGraph& g, int b) {
  if (b < 1) throw std::invalid_argument("scale_for_precision: b must be >= 1");
  if (g.edges.empty())
    throw std::invalid_argument("scale_for_precision: empty graph");
  double base_min = std::numeric_limits<double>::infinity();
  for (const auto& e : g.edges) base_min = std::min(base_min, base_log_weight(e));

  const std::int64_t target = std::int64_t{1} << (b - 1);
  const auto min_w_at = [&](std::int64_t c) {
    return std::max<std::int64_t>(
        1, ceil_stable(static_cast<double>(c) * base_min));
  };
  std::int64_t c = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(static_cast<double>(target) / base_min) - 2);
  while (min_w_at(c) < target) ++c;
  // Back off in case the estimate overshot past smaller valid C.
  while (c > 1 && min_w_at(c - 1) >= target) --c;
  return c;
}

void PathGraph::add_edge(int u, int v, std::int64_t w) {
  edges.push_back({u, v, w});
}

void PathGraph::rebuild_index() {
  edge_index_.assign(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    edge_index_[e.u * n + e.v] = static_cast<std::int32_t>(i);
    edge_index_[e.v * n + e.u] = static_cast<std::int32_t>(i);
  }
}

namespace {

DijkstraTree dijkstra_multi(const DetectorGraph& g, const WeightFunction& wf,
                            const std::vector<int>& sources) {
  const int nv = g.num_vertices();
  DijkstraTree t;
  t.dist.assign(nv, kInfWeight);
  t.pred_edge.assign(nv, -1);
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  for (int s : sources) {
    t.dist[s] = 0;
    pq.push({0, s});
  }
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != t.dist[u]) continue;
    for (auto [ei, v] : g.adj[u]) {
      const std::int64_t nd = d + wf.w[ei];
      if (nd < t.dist[v]) {
        t.dist[v] = nd;
        t.pred_edge[v] = ei;
        pq.push({nd, v});
      }
    }
  }
  return t;
}

}  // namespace

DijkstraTree dijkstra(const DetectorGraph& g, const WeightFunction& wf,
                      int source) {
  return dijkstra_multi(g, wf, {source});
}

DijkstraTree dijkstra_from_boundary(const DetectorGraph& g,
                                    const WeightFunction& wf) {
  std::vector<int> sources;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!g.is_detector(v)) sources.push_back(v);
  if (sources.empty()) {
    DijkstraTree t;
    t.dist.assign(g.num_vertices(), kInfWeight);
    t.pred_edge.assign(g.num_vertices(), -1);
    return t;
  }
  return dijkstra_multi(g, wf, sources);
}

DistanceTable build_distance_table(const DetectorGraph& g,
                                   const WeightFunction& wf) {
  DistanceTable table;
  table.g = &g;
  table.scale_c = wf.scale_c;
  const int nv = g.num_vertices();
  table.rows.resize(nv);
#pragma omp parallel for schedule(dynamic)
  for (int v = 0; v < nv; ++v) {
    if (g.is_detector(v)) table.rows[v] = dijkstra(g, wf, v);
  }
  table.boundary = dijkstra_from_boundary(g, wf);
  return table;
}

namespace {

std::vector<int> walk_tree(const DetectorGraph& g, const DijkstraTree& t,
                           int from, int stop_at_vertex, bool stop_at_boundary) {
  std::vector<int> out;
  int v = from;
  while (true) {
    if (stop_at_boundary && !g.is_detector(v)) break;
    if (!stop_at_boundary && v == stop_at_vertex) break;
    const int ei = t.pred_edge[v];
    if (ei < 0) throw std::logic_error("PathResolver: broken tree walk");
    out.push_back(ei);
    const auto& e = g.edges[ei];
    v = (e.u == v) ? e.v : e.u;
  }
  return out;
}

}  // namespace

std::vector<int> PathResolver::expand(int source_pos, int target_id) const {
  const DijkstraTree& t = table != nullptr ? table->rows[sources[source_pos]]
                                           : source_trees[source_pos];
  return walk_tree(*g, t, target_id, sources[source_pos], false);
}

std::vector<int> PathResolver::expand_to_boundary(int source_pos) const {
  const DijkstraTree& t = table != nullptr ? table->boundary : boundary;
  return walk_tree(*g, t, sources[source_pos], -1, true);
}

PathGraph build_path_graph(const DetectorGraph& g, const WeightFunction& wf,
                           const std::vector<int>& active,
                           PathResolver* resolver, const DistanceTable* table) {
  std::vector<int> act = active;
  std::sort(act.begin(), act.end());
  act.erase(std::unique(act.begin(), act.end()), act.end());
  for (int v : act) {
    if (v < 0 || v >= g.num_vertices() || !g.is_detector(v))
      throw std::invalid_argument("build_path_graph: active id is not a detector");
  }

  const int k = static_cast<int>(act.size());
  PathGraph pg;
  pg.n = 2 * k;
  pg.active_ids = act;
  pg.scale_c = wf.scale_c;

  if (resolver != nullptr) {
    resolver->g = &g;
    resolver->sources = act;
    resolver->table = table;
    resolver->source_trees.clear();
  }
  if (k == 0) {
    pg.rebuild_index();
    return pg;
  }

  std::vector<const DijkstraTree*> trees(k, nullptr);
  std::vector<DijkstraTree> local;
  const DijkstraTree* bdy_tree = nullptr;
  DijkstraTree local_bdy;
  if (table != nullptr) {
    if (table->scale_c != wf.scale_c)
      throw std::invalid_argument("build_path_graph: table built for another C");
    for (int i = 0; i < k; ++i) trees[i] = &table->rows[act[i]];
    bdy_tree = &table->boundary;
  } else {
    local.resize(k);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < k; ++i) local[i] = dijkstra(g, wf, act[i]);
    for (int i = 0; i < k; ++i) trees[i] = &local[i];
    local_bdy = dijkstra_from_boundary(g, wf);
    bdy_tree = &local_bdy;
  }

  // Canonical edge order: detector pairs, then boundary-copy ties, then the
  // zero-weight copy clique.
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const std::int64_t d = trees[i]->dist[act[j]];
      if (d < kInfWeight) pg.add_edge(i, j, d);
    }
  }
  for (int i = 0; i < k; ++i) {
    const std::int64_t d = bdy_tree->dist[act[i]];
    if (d < kInfWeight) pg.add_edge(i, k + i, d);
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) pg.add_edge(k + i, k + j, 0);
  pg.rebuild_index();

  // Every active detector must have at least one usable edge.
  for (int i = 0; i < k; ++i) {
    bool any = pg.has_edge(i, k + i);
    for (int j = 0; j < k && !any; ++j) any = j != i && pg.has_edge(i, j);
    if (!any)
      throw std::runtime_error("build_path_graph: unreachable detector " +
                               std::to_string(act[i]));
  }

  if (resolver != nullptr && table == nullptr) {
    resolver->source_trees = std::move(local);
    resolver->boundary = std::move(local_bdy);
  }
  return pg;
}

}  // namespace polymatch
