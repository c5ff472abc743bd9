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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polymatch/heuristic.hpp"
#include "polymatch/oracle.hpp"
#include "polymatch/sim.hpp"
#include "support/oracles.hpp"

using namespace polymatch;
using namespace polymatch::testing;

namespace {

PathGraph tiny_graph(std::vector<std::tuple<int, int, std::int64_t>> edges,
                     int n) {
  PathGraph pg;
  pg.n = n;
  for (auto [u, v, w] : edges) pg.add_edge(u, v, w);
  pg.rebuild_index();
  return pg;
}

}  // namespace

TEST_CASE("matching_weight") {
  CHECK(matching_weight({}, tiny_graph({{0, 1, 7}}, 2)) == 0);
  const auto pg = tiny_graph({{0, 1, 7}}, 2);
  CHECK(matching_weight({{0, 1}}, pg) == 7);
  CHECK_THROWS_AS(matching_weight({{0, 2}}, pg), std::invalid_argument);

  // re-summation oracle on random edge subsets
  for (int rep = 0; rep < 20; ++rep) {
    const auto g = random_even_graph(10, 50, 300 + rep);
    Rng rng(rep);
    std::vector<std::pair<int, int>> subset;
    std::int64_t expect = 0;
    for (const auto& e : g.edges) {
      if (rng.uniform01() < 0.3) {
        subset.emplace_back(e.u, e.v);
        expect += e.w;
      }
    }
    CHECK(matching_weight(subset, g) == expect);
  }
}

TEST_CASE("required_wth_bound examples") {
  const auto pg = tiny_graph({{0, 1, 3}}, 2);
  CHECK(required_wth_bound(pg, Scheme::kPlain, 2) == 11);
  CHECK(required_wth_bound(pg, Scheme::kAmplified, 2) == 17);
}

TEST_CASE("single-trial multi-trial equals a direct decode") {
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 4 + 2 * (rep % 3);
    const auto pg = random_even_graph(n, 64, 400 + rep);
    HeuristicConfig cfg;
    cfg.wth = 2048;
    cfg.trials = 1;
    cfg.base_seed = 1234 + rep;
    const auto multi = multi_trial_decode(pg, cfg);
    const auto pw = perturb(pg, Scheme::kPlain, default_w_max(n), cfg.base_seed);
    const auto direct = decode(pg, pw, cfg.wth);
    CHECK(multi.status == direct.status);
    if (direct.status == DecodeStatus::kMatching) {
      CHECK(multi.matching == direct.matching);
      CHECK(multi.w_star == direct.w_star);
      CHECK(multi.trial_index == 0);
    }
  }
}

TEST_CASE("selection takes the minimum-weight candidate, ties to lowest trial") {
  for (int rep = 0; rep < 15; ++rep) {
    const int n = 6 + 2 * (rep % 3);
    const auto pg = random_even_graph(n, 64, 520 + rep);
    HeuristicConfig cfg;
    cfg.wth = 4096;
    cfg.trials = 12;
    cfg.base_seed = 77 * rep;
    const auto out = multi_trial_decode(pg, cfg);
    if (out.status != DecodeStatus::kMatching) continue;
    int first_best = -1;
    std::int64_t best_w = -1;
    for (int t = 0; t < 12; ++t) {
      const auto pw = perturb(pg, Scheme::kPlain, default_w_max(n),
                              cfg.base_seed + t);
      const auto trial = decode(pg, pw, cfg.wth);
      if (trial.status != DecodeStatus::kMatching) continue;
      const auto w = matching_weight(trial.matching, pg);
      CHECK(out.weight_under <= w);
      if (first_best < 0 || w < best_w) {
        first_best = t;
        best_w = w;
      }
    }
    CHECK(out.trial_index == first_best);
    CHECK(out.weight_under == best_w);
  }
}

TEST_CASE("more trials never increase the selected weight") {
  for (int rep = 0; rep < 15; ++rep) {
    const int n = 6 + 2 * (rep % 3);
    const auto pg = random_even_graph(n, 64, 640 + rep);
    HeuristicConfig cfg;
    cfg.wth = 4096;
    cfg.base_seed = 55 + rep;
    std::int64_t prev = -1;
    for (int k : {2, 4, 8, 16}) {
      cfg.trials = k;
      const auto out = multi_trial_decode(pg, cfg);
      if (out.status != DecodeStatus::kMatching) continue;
      if (prev >= 0) CHECK(out.weight_under <= prev);
      prev = out.weight_under;
    }
  }
}

TEST_CASE("zero candidates yield an overflow failure") {
  const auto pg = tiny_graph({{0, 1, 50}}, 2);
  HeuristicConfig cfg;
  cfg.wth = 8;  // 2 w* is far beyond the ring width for every trial
  cfg.trials = 6;
  const auto out = multi_trial_decode(pg, cfg);
  CHECK(out.status == DecodeStatus::kOverflowFailure);
}

TEST_CASE("variable precision with equal precisions reduces to multi-trial") {
  NoiseModel nm;
  nm.d = 3;
  nm.rounds = 3;
  nm.p = 0.02;
  const auto g = build_surface_detector_graph(nm);
  for (int rep = 0; rep < 10; ++rep) {
    const auto s = sample_shot(g, derive_seed(999, rep));
    if (s.active.empty()) continue;
    HeuristicConfig cfg;
    cfg.wth = 512;
    cfg.b_low = 6;
    cfg.b_high = 6;
    cfg.base_seed = rep;
    const auto a = variable_precision_decode(g, s.active, cfg);
    const auto wf = discretize(g, scale_for_precision(g, 6));
    const auto pg = build_path_graph(g, wf, s.active);
    const auto b = multi_trial_decode(pg, cfg);
    CHECK(a.status == b.status);
    CHECK(a.matching == b.matching);
    CHECK(a.weight_under == b.weight_under);
  }
}

TEST_CASE("variable precision scores candidates on the fine weights") {
  NoiseModel nm;
  nm.d = 3;
  nm.rounds = 3;
  nm.p = 0.03;
  const auto g = build_surface_detector_graph(nm);
  const auto wf_high = discretize(g, scale_for_precision(g, 8));
  int checked = 0;
  for (int rep = 0; rep < 40 && checked < 15; ++rep) {
    const auto s = sample_shot(g, derive_seed(1234, rep));
    if (s.active.empty() || s.active.size() > 6) continue;
    HeuristicConfig cfg;
    cfg.wth = 512;
    cfg.base_seed = 7 * rep;
    const auto out = variable_precision_decode(g, s.active, cfg);
    if (out.status != DecodeStatus::kMatching) continue;
    const auto pg_high = build_path_graph(g, wf_high, s.active);
    const auto ref = exhaustive_mwpm(pg_high);
    REQUIRE(ref.has_matching);
    CHECK(out.weight_under >= ref.weight);
    if (out.weight_under == ref.weight) ++checked;
  }
  CHECK(checked >= 10);  // the defaults find the fine-weight optimum routinely
}

TEST_CASE("fixed seeds give identical results across worker counts") {
  const auto pg = random_even_graph(10, 64, 3232);
  HeuristicConfig cfg;
  cfg.wth = 2048;
  cfg.trials = 16;
  cfg.base_seed = 99;
#ifdef _OPENMP
  omp_set_num_threads(1);
#endif
  const auto a = multi_trial_decode(pg, cfg);
#ifdef _OPENMP
  omp_set_num_threads(4);
#endif
  const auto b = multi_trial_decode(pg, cfg);
  CHECK(a.status == b.status);
  CHECK(a.matching == b.matching);
  CHECK(a.weight_under == b.weight_under);
  CHECK(a.trial_index == b.trial_index);
}

TEST_CASE("mt19937 compatibility engine is available and deterministic") {
  const auto pg = random_even_graph(8, 64, 777);
  const auto a = perturb(pg, Scheme::kPlain, 6, 42, RngKind::kMt19937_64);
  const auto b = perturb(pg, Scheme::kPlain, 6, 42, RngKind::kMt19937_64);
  CHECK(a.w_perturb == b.w_perturb);
  const auto c = perturb(pg, Scheme::kPlain, 6, 42, RngKind::kSplitMix64);
  CHECK(a.w_perturb != c.w_perturb);  // engines are genuinely different
}
