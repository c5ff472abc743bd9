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

#include "polymatch/sim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>

#include "polymatch/oracle.hpp"
#include "polymatch/rng.hpp"

namespace polymatch {

void NoiseModel::validate() const {
  if (d < 3 || d % 2 == 0)
    throw std::invalid_argument("NoiseModel: d must be odd and >= 3");
  if (rounds < 1) throw std::invalid_argument("NoiseModel: rounds must be >= 1");
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("NoiseModel: p must lie in (0,1)");
}

namespace {

// Rotated-surface-code layout. Data qubits live on the d x d grid; a
// plaquette with corner (r,c) covers qubits {r,r+1} x {c,c+1}. Z plaquettes
// are those with (r+c) even, including the half plaquettes in rows r = -1
// and r = d-1; X errors on a data qubit flip its 1 or 2 adjacent Z
// plaquettes. Logical Z runs down column 0, so a data flip there toggles
// the tracked observable.
struct ZLayout {
  int d;
  std::map<std::pair<int, int>, int> plaq_index;

  explicit ZLayout(int d_) : d(d_) {
    int idx = 0;
    for (int r = -1; r <= d - 1; ++r)
      for (int c = 0; c <= d - 2; ++c)
        if (((r + c) & 1) == 0) plaq_index[{r, c}] = idx++;
  }

  int num_plaquettes() const { return static_cast<int>(plaq_index.size()); }

  std::vector<int> plaquettes_of_qubit(int r, int c) const {
    std::vector<int> out;
    const std::pair<int, int> corners[4] = {
        {r - 1, c - 1}, {r - 1, c}, {r, c - 1}, {r, c}};
    for (const auto& key : corners) {
      auto it = plaq_index.find(key);
      if (it != plaq_index.end()) out.push_back(it->second);
    }
    return out;
  }
};

struct MechanismMerger {
  struct Acc {
    double p_sum = 0.0;
    double best_p = -1.0;
    bool flip = false;
  };
  std::map<std::pair<int, int>, Acc> merged;

  void add(int u, int v, double p, bool flip) {
    auto key = std::minmax(u, v);
    Acc& a = merged[key];
    a.p_sum += p;
    if (p > a.best_p) {
      a.best_p = p;
      a.flip = flip;
    }
  }
};

}  // namespace

DetectorGraph build_surface_detector_graph(const NoiseModel& nm) {
  nm.validate();
  const ZLayout layout(nm.d);
  const int np = layout.num_plaquettes();
  if (np != (nm.d * nm.d - 1) / 2)
    throw std::logic_error("surface layout: unexpected plaquette count");

  DetectorGraph g;
  const int boundary = nm.rounds * np;
  g.kinds.assign(boundary + 1, VertexKind::kDetector);
  g.kinds[boundary] = VertexKind::kBoundary;

  MechanismMerger mm;
  for (int t = 0; t < nm.rounds; ++t) {
    for (int r = 0; r < nm.d; ++r) {
      for (int c = 0; c < nm.d; ++c) {
        const auto ps = layout.plaquettes_of_qubit(r, c);
        if (ps.empty() || ps.size() > 2)
          throw std::logic_error("surface layout: qubit with bad degree");
        const bool flip = (c == 0);
        if (ps.size() == 2) {
          mm.add(t * np + ps[0], t * np + ps[1], nm.p, flip);
        } else {
          mm.add(t * np + ps[0], boundary, nm.p, flip);
        }
      }
    }
  }
  for (int pq = 0; pq < np; ++pq) {
    for (int t = 0; t + 1 < nm.rounds; ++t)
      mm.add(t * np + pq, (t + 1) * np + pq, nm.p, false);
    mm.add((nm.rounds - 1) * np + pq, boundary, nm.p, false);
  }

  for (const auto& [key, acc] : mm.merged) {
    DetectorGraph::Edge e;
    e.u = key.first;
    e.v = key.second;
    e.p = acc.p_sum;
    e.logical_flip = acc.flip;
    g.edges.push_back(e);
  }
  g.finalize();
  return g;
}

ShotSample sample_shot(const DetectorGraph& g, std::uint64_t seed) {
  Rng rng(seed);
  ShotSample s;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (rng.uniform01() < g.edges[i].p) s.fault_edges.push_back(static_cast<int>(i));
  s.active = active_from_faults(g, s.fault_edges);
  return s;
}

std::vector<int> active_from_faults(const DetectorGraph& g,
                                    const std::vector<int>& fault_edges) {
  std::vector<int> parity(g.num_vertices(), 0);
  for (int ei : fault_edges) {
    parity[g.edges[ei].u] ^= 1;
    parity[g.edges[ei].v] ^= 1;
  }
  std::vector<int> active;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (parity[v] && g.is_detector(v)) active.push_back(v);
  return active;
}

bool logical_class(const DetectorGraph& g, const std::vector<int>& edges) {
  bool cls = false;
  for (int ei : edges) cls ^= g.edges[ei].logical_flip;
  return cls;
}

bool correction_logical_class(const DetectorGraph& g, const PathGraph& pg,
                              const std::vector<std::pair<int, int>>& matching,
                              const PathResolver& resolver) {
  const int k = pg.n / 2;
  bool cls = false;
  for (auto [u, v] : matching) {
    if (u >= k) continue;  // spare boundary copies carry no correction
    std::vector<int> path;
    if (v >= k) {
      path = resolver.expand_to_boundary(u);
    } else {
      path = resolver.expand(u, pg.active_ids[v]);
    }
    for (int ei : path) cls ^= g.edges[ei].logical_flip;
  }
  return cls;
}

namespace {

double stderr_of(std::int64_t failures, std::int64_t trials) {
  if (trials <= 0) return 0.0;
  const double f = static_cast<double>(failures) / static_cast<double>(trials);
  return std::sqrt(f * (1.0 - f) / static_cast<double>(trials));
}

// Floating-point mirror of the lookup table: per-detector shortest-path
// distances under the raw -ln(p) weights, for the discretization reference.
struct FloatTable {
  std::vector<std::vector<double>> det_rows;
  std::vector<double> boundary;
};

FloatTable build_float_table(const DetectorGraph& g) {
  const int nv = g.num_vertices();
  const auto run = [&](const std::vector<int>& sources) {
    std::vector<double> dist(nv, std::numeric_limits<double>::infinity());
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    for (int s : sources) {
      dist[s] = 0.0;
      pq.push({0.0, s});
    }
    while (!pq.empty()) {
      auto [dd, u] = pq.top();
      pq.pop();
      if (dd != dist[u]) continue;
      for (auto [ei, v] : g.adj[u]) {
        const auto& e = g.edges[ei];
        const double w = e.w_override >= 1
                             ? static_cast<double>(e.w_override)
                             : -std::log(e.p);
        if (dd + w < dist[v]) {
          dist[v] = dd + w;
          pq.push({dd + w, v});
        }
      }
    }
    return dist;
  };

  FloatTable t;
  t.det_rows.resize(nv);
  for (int v = 0; v < nv; ++v)
    if (g.is_detector(v)) t.det_rows[v] = run({v});
  std::vector<int> bnd;
  for (int v = 0; v < nv; ++v)
    if (!g.is_detector(v)) bnd.push_back(v);
  t.boundary = bnd.empty()
                   ? std::vector<double>(nv, std::numeric_limits<double>::infinity())
                   : run(bnd);
  return t;
}

/// Minimum float weight over perfect matchings of the boundary-structured
/// path graph (same subset DP as the exact reference, double weights).
double float_mwpm_weight(const std::vector<int>& act, const FloatTable& ft) {
  const int k = static_cast<int>(act.size());
  const std::size_t sz = std::size_t{1} << k;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> f(sz, inf);
  f[0] = 0.0;
  for (std::uint32_t mask = 0; mask + 1 < sz; ++mask) {
    if (!(f[mask] < inf)) continue;
    int i = 0;
    while (mask & (1u << i)) ++i;
    const double wb = ft.boundary[act[i]];
    if (wb < inf) f[mask | (1u << i)] = std::min(f[mask | (1u << i)], f[mask] + wb);
    for (int j = i + 1; j < k; ++j) {
      if (mask & (1u << j)) continue;
      const double w = ft.det_rows[act[i]][act[j]];
      if (!(w < inf)) continue;
      const std::uint32_t nm = mask | (1u << i) | (1u << j);
      f[nm] = std::min(f[nm], f[mask] + w);
    }
  }
  return f[sz - 1];
}

double float_weight_of(const std::vector<std::pair<int, int>>& matching,
                       const PathGraph& pg, const FloatTable& ft) {
  const int k = pg.n / 2;
  double total = 0.0;
  for (auto [u, v] : matching) {
    if (u >= k) continue;
    if (v >= k) total += ft.boundary[pg.active_ids[u]];
    else total += ft.det_rows[pg.active_ids[u]][pg.active_ids[v]];
  }
  return total;
}

constexpr int kMaxDpActivesSim = 20;

}  // namespace

PrecisionSweepResult precision_sweep(const DetectorGraph& g,
                                     const std::vector<int>& b_values,
                                     std::int64_t shots, std::uint64_t seed) {
  const FloatTable ft = build_float_table(g);
  std::vector<WeightFunction> wfs;
  std::vector<DistanceTable> tables;
  for (int b : b_values) {
    wfs.push_back(discretize(g, scale_for_precision(g, b)));
    tables.push_back(build_distance_table(g, wfs.back()));
  }

  const std::size_t nb = b_values.size();
  std::vector<std::int64_t> mismatches(nb, 0);
  std::int64_t included = 0;
  std::int64_t skipped = 0;

#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t shot = 0; shot < shots; ++shot) {
    const ShotSample s = sample_shot(g, derive_seed(seed, shot));
    if (static_cast<int>(s.active.size()) > kMaxDpActivesSim) {
#pragma omp atomic
      ++skipped;
      continue;
    }
#pragma omp atomic
    ++included;
    if (s.active.empty()) continue;
    const double wf_min = float_mwpm_weight(s.active, ft);
    for (std::size_t bi = 0; bi < nb; ++bi) {
      PathGraph pg =
          build_path_graph(g, wfs[bi], s.active, nullptr, &tables[bi]);
      const auto ref = reference_mwpm(pg);
      if (!ref) throw std::logic_error("precision_sweep: no perfect matching");
      const double w_choice = float_weight_of(ref->second, pg, ft);
      if (w_choice > wf_min + 1e-9) {
#pragma omp atomic
        ++mismatches[bi];
      }
    }
  }

  PrecisionSweepResult out;
  out.skipped_shots = skipped;
  for (std::size_t bi = 0; bi < nb; ++bi) {
    SweepRow row;
    row.axis = "b";
    row.value = b_values[bi];
    row.trials = included;
    row.failures = mismatches[bi];
    row.stderr_value = stderr_of(mismatches[bi], included);
    out.rows.push_back(row);
  }
  return out;
}

ThresholdSweepResult threshold_sweep(const NoiseModel& nm,
                                     const ThresholdSweepConfig& cfg,
                                     std::int64_t shots, std::uint64_t seed) {
  if (cfg.wth_list.empty() || cfg.k_multipliers.empty())
    throw std::invalid_argument("threshold_sweep: empty grid");
  const DetectorGraph g = build_surface_detector_graph(nm);
  const std::int64_t c_low = scale_for_precision(g, cfg.b_low);
  const std::int64_t c_high = scale_for_precision(g, cfg.b_high);
  const WeightFunction wf_low = discretize(g, c_low);
  const WeightFunction wf_high = discretize(g, c_high);
  const DistanceTable table_low = build_distance_table(g, wf_low);
  const DistanceTable table_high = build_distance_table(g, wf_high);

  const std::size_t n_wth = cfg.wth_list.size();
  const std::size_t n_mult = cfg.k_multipliers.size();
  const std::size_t wth_max = static_cast<std::size_t>(
      *std::max_element(cfg.wth_list.begin(), cfg.wth_list.end()));
  const int mult_max =
      *std::max_element(cfg.k_multipliers.begin(), cfg.k_multipliers.end());

  // counts[method][wth][mult]
  std::vector<std::int64_t> fails(2 * n_wth * n_mult, 0);
  const auto slot = [&](int method, std::size_t wi, std::size_t mi) {
    return (method * n_wth + wi) * n_mult + mi;
  };
  std::int64_t included = 0, excluded = 0, proxy_fails = 0;

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t shot = 0; shot < shots; ++shot) {
    const std::uint64_t shot_seed = derive_seed(seed, shot);
    const ShotSample s = sample_shot(g, shot_seed);
    const int k = static_cast<int>(s.active.size());
    if (2 * k > cfg.max_path_graph) {
#pragma omp atomic
      ++excluded;
      continue;
    }
#pragma omp atomic
    ++included;
    if (k == 0) continue;  // empty matching is always correct

    PathResolver resolver;
    const PathGraph pg_high =
        build_path_graph(g, wf_high, s.active, &resolver, &table_high);
    const PathGraph pg_low =
        build_path_graph(g, wf_low, s.active, nullptr, &table_low);
    const auto ref = reference_mwpm(pg_high);
    if (!ref) throw std::logic_error("threshold_sweep: no perfect matching");

    const bool fault_cls = logical_class(g, s.fault_edges);
    const bool ref_cls = correction_logical_class(g, pg_high, ref->second, resolver);
    if (fault_cls != ref_cls) {
#pragma omp atomic
      ++proxy_fails;
    }

    const std::int64_t w_max = default_w_max(pg_high.n);
    const std::int64_t k_max = static_cast<std::int64_t>(mult_max) * w_max;
    for (int method = 0; method < 2; ++method) {
      const PathGraph& pg_gen = method == 0 ? pg_high : pg_low;
      // One ring evaluation per trial at the largest width fixes the
      // outcome at every smaller width on the grid.
      std::vector<std::int64_t> dmin(k_max), score(k_max);
      for (std::int64_t t = 0; t < k_max; ++t) {
        const auto pw =
            perturb(pg_gen, Scheme::kPlain, w_max, shot_seed + t, cfg.rng_kind);
        const auto ev = evaluate_trial(pg_gen, pw, wth_max);
        dmin[t] = ev.det_min_degree;
        score[t] = ev.valid ? matching_weight(ev.matching, pg_high) : -1;
      }
      for (std::size_t wi = 0; wi < n_wth; ++wi) {
        for (std::size_t mi = 0; mi < n_mult; ++mi) {
          const std::int64_t kk =
              static_cast<std::int64_t>(cfg.k_multipliers[mi]) * w_max;
          std::int64_t best = -1;
          for (std::int64_t t = 0; t < kk; ++t) {
            if (score[t] < 0 || dmin[t] < 0 || dmin[t] >= cfg.wth_list[wi])
              continue;
            if (best < 0 || score[t] < best) best = score[t];
          }
          if (best < 0 || best > ref->first) {
#pragma omp atomic
            ++fails[slot(method, wi, mi)];
          }
        }
      }
    }
  }

  ThresholdSweepResult out;
  out.included_shots = included;
  out.excluded_shots = excluded;
  out.proxy_rate =
      included > 0 ? static_cast<double>(proxy_fails) / included : 0.0;
  for (int method = 0; method < 2; ++method) {
    for (std::size_t wi = 0; wi < n_wth; ++wi) {
      for (std::size_t mi = 0; mi < n_mult; ++mi) {
        SweepRow row;
        row.axis = std::string(method == 0 ? "base" : "ext") + "_k" +
                   std::to_string(cfg.k_multipliers[mi]);
        row.value = cfg.wth_list[wi];
        row.trials = included;
        row.failures = fails[slot(method, wi, mi)];
        row.stderr_value = stderr_of(row.failures, included);
        out.rows.push_back(row);
      }
    }
  }
  SweepRow proxy;
  proxy.axis = "proxy";
  proxy.value = 0;
  proxy.trials = included;
  proxy.failures = proxy_fails;
  proxy.stderr_value = stderr_of(proxy_fails, included);
  out.rows.push_back(proxy);
  return out;
}

}  // namespace polymatch
