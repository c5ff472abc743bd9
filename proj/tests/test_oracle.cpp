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

#include "polymatch/heuristic.hpp"
#include "polymatch/oracle.hpp"
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

/// Synthetic boundary-structured path graph on k fake active detectors.
PathGraph random_structured(int k, std::uint64_t seed) {
  Rng rng(seed);
  PathGraph pg;
  pg.n = 2 * k;
  for (int i = 0; i < k; ++i) pg.active_ids.push_back(i);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (rng.uniform01() < 0.7) pg.add_edge(i, j, rng.uniform_int(1, 100));
  for (int i = 0; i < k; ++i)
    if (rng.uniform01() < 0.9) pg.add_edge(i, k + i, rng.uniform_int(1, 100));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) pg.add_edge(k + i, k + j, 0);
  pg.rebuild_index();
  return pg;
}

}  // namespace

TEST_CASE("exhaustive enumeration basics") {
  const auto single = tiny_graph({{0, 1, 7}}, 2);
  const auto r = exhaustive_mwpm(single);
  REQUIRE(r.has_matching);
  CHECK(r.weight == 7);
  REQUIRE(r.optimal.size() == 1);
  CHECK(r.optimal[0] == Matching{{0, 1}});

  // K4 with a forced cheap pairing
  const auto k4 = tiny_graph({{0, 1, 1}, {2, 3, 1}, {0, 2, 5}, {1, 3, 5},
                              {0, 3, 5}, {1, 2, 5}},
                             4);
  const auto rk4 = exhaustive_mwpm(k4);
  CHECK(rk4.weight == 2);
  REQUIRE(rk4.optimal.size() == 1);
  CHECK(rk4.optimal[0] == Matching{{0, 1}, {2, 3}});

  // K6 has 5!! = 15 perfect matchings
  PathGraph k6;
  k6.n = 6;
  Rng rng(2);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) k6.add_edge(i, j, 10 * i + j);
  k6.rebuild_index();
  CHECK(all_perfect_matchings(k6).size() == 15);

  // odd order has no perfect matching, reported explicitly
  const auto odd = tiny_graph({{0, 1, 1}, {1, 2, 1}}, 3);
  CHECK(!exhaustive_mwpm(odd).has_matching);

  // the exhaustive oracle refuses orders beyond its blowup bound
  PathGraph big;
  big.n = 18;
  big.rebuild_index();
  CHECK_THROWS_AS(exhaustive_mwpm(big), std::invalid_argument);
}

TEST_CASE("planted matchings guarantee feasibility") {
  for (int rep = 0; rep < 40; ++rep) {
    const auto pg = random_even_graph(4 + 2 * (rep % 5), 99, 600 + rep, 0.2);
    CHECK(exhaustive_mwpm(pg).has_matching);
  }
}

TEST_CASE("structured DP agrees with exhaustive enumeration") {
  for (int rep = 0; rep < 60; ++rep) {
    const int k = 2 + rep % 6;  // path graphs up to order 14
    const auto pg = random_structured(k, 900 + rep);
    const auto ex = exhaustive_mwpm(pg);
    const auto dp_w = reference_mwpm_weight(pg);
    if (!ex.has_matching) {
      CHECK(!dp_w.has_value());
      continue;
    }
    REQUIRE(dp_w.has_value());
    CHECK(*dp_w == ex.weight);
    const auto dp = reference_mwpm(pg);
    REQUIRE(dp.has_value());
    CHECK(dp->first == ex.weight);
    // reconstructed matching is perfect and attains the weight
    std::vector<int> cover(pg.n, 0);
    std::int64_t total = 0;
    for (auto [u, v] : dp->second) {
      ++cover[u];
      ++cover[v];
      total += pg.weight(u, v);
    }
    CHECK(total == ex.weight);
    for (int c : cover) CHECK(c == 1);
  }
}

TEST_CASE("integer decoder on the forced two-vertex instance") {
  const auto pg = tiny_graph({{0, 1, 3}}, 2);
  PerturbedWeights pw;
  pw.effective = {3};
  pw.w_perturb = {1};
  const auto out = appendix_a_decode(pg, pw);
  REQUIRE(out.status == DecodeStatus::kMatching);
  CHECK(out.w_star == 3);
  CHECK(out.matching == Matching{{0, 1}});
}

TEST_CASE("integer decoder reports infeasible graphs via det = 0") {
  // a star cannot be perfectly matched
  const auto star = tiny_graph({{0, 1, 1}, {0, 2, 2}, {0, 3, 3}}, 4);
  PerturbedWeights pw;
  pw.effective = {1, 2, 3};
  CHECK(appendix_a_decode(star, pw).status == DecodeStatus::kNoPerfectMatching);
  CHECK(!appendix_a_det_valuation(star, pw).has_value());
}

TEST_CASE("ring and integer decoders agree on random instances") {
  int isolated = 0;
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 4 + 2 * (rep % 5);  // up to 12
    const auto pg = random_even_graph(n, 256, 15000 + rep);
    const auto w_max = default_w_max(n);
    const auto pw = perturb(pg, Scheme::kAmplified, w_max, 31 * rep + 1);
    const auto wth = static_cast<std::size_t>(
        required_wth_bound(pg, Scheme::kAmplified, w_max) + 2);
    const auto ring = decode(pg, pw, wth);
    const auto exact = appendix_a_decode(pg, pw);
    CHECK(ring.status == exact.status);
    CHECK(ring.w_star == exact.w_star);
    CHECK(ring.matching == exact.matching);
    if (ring.status == DecodeStatus::kMatching) ++isolated;
  }
  CHECK(isolated > 20);
}

TEST_CASE("2-adic valuation of the integer det matches the ring min degree") {
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 4 + 2 * (rep % 4);
    const auto pg = random_even_graph(n, 64, 16000 + rep);
    const auto pw = perturb(pg, Scheme::kPlain, 5, rep);
    const auto v2 = appendix_a_det_valuation(pg, pw);
    REQUIRE(v2.has_value());  // planted matching exists
    const std::size_t wth = static_cast<std::size_t>(*v2) + 8;
    const auto det = determinant(build_matrix(pg, pw, wth));
    REQUIRE(det.min_degree().has_value());
    CHECK(static_cast<std::int64_t>(*det.min_degree()) == *v2);
  }
}

TEST_CASE("amplified-scheme winners are minimal under the base weights") {
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 4 + 2 * (rep % 4);
    const auto pg = random_even_graph(n, 128, 17000 + rep);
    const auto w_max = default_w_max(n);
    const auto pw = perturb(pg, Scheme::kAmplified, w_max, rep);
    const auto wth = static_cast<std::size_t>(
        required_wth_bound(pg, Scheme::kAmplified, w_max) + 2);
    const auto out = decode(pg, pw, wth);
    if (out.status != DecodeStatus::kMatching) continue;
    const auto base = exhaustive_mwpm(pg);
    REQUIRE(base.has_matching);
    CHECK(matching_weight(out.matching, pg) == base.weight);
  }
}
