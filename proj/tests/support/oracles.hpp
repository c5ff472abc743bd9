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

// Brute-force reference implementations used only by tests. Everything here
// is deliberately naive and independent of the library's computation paths.

#ifndef POLYMATCH_TESTS_ORACLES_H
#define POLYMATCH_TESTS_ORACLES_H

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "polymatch/decoder.hpp"
#include "polymatch/graph.hpp"
#include "polymatch/poly.hpp"
#include "polymatch/rng.hpp"

namespace polymatch::testing {

// --- schoolbook F2 polynomial arithmetic on coefficient bytes ------------

using BitPoly = std::vector<std::uint8_t>;  // coefficient list, size w_th

inline BitPoly to_bits(const TruncatedPoly& p) {
  BitPoly b(p.wth(), 0);
  for (std::size_t i = 0; i < p.wth(); ++i) b[i] = p.bit(i) ? 1 : 0;
  return b;
}

inline TruncatedPoly from_bits(const BitPoly& b) {
  TruncatedPoly p(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) p.set_bit(i);
  return p;
}

inline BitPoly schoolbook_add(const BitPoly& a, const BitPoly& b) {
  BitPoly c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] ^ b[i];
  return c;
}

inline BitPoly schoolbook_mul(const BitPoly& a, const BitPoly& b) {
  const std::size_t n = a.size();
  BitPoly c(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j + i < n; ++j) c[i + j] ^= b[j];
  }
  return c;
}

inline TruncatedPoly random_poly(std::size_t wth, Rng& rng,
                                 double density = 0.5) {
  TruncatedPoly p(wth);
  for (std::size_t i = 0; i < wth; ++i)
    if (rng.uniform01() < density) p.set_bit(i);
  return p;
}

// --- Leibniz determinant over F2 (signs vanish) ---------------------------

inline TruncatedPoly leibniz_det(const RingMatrix& m) {
  const int n = m.n;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  TruncatedPoly det(m.wth);
  do {
    TruncatedPoly term = TruncatedPoly::one(m.wth);
    bool zero = false;
    for (int i = 0; i < n && !zero; ++i) {
      if (m.at(i, perm[i]).is_zero()) zero = true;
      else term = term * m.at(i, perm[i]);
    }
    if (!zero) det.add_assign(term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// --- all perfect matchings of a PathGraph by direct recursion -------------

inline void all_matchings_rec(const PathGraph& pg, std::vector<char>& used,
                              std::vector<std::pair<int, int>>& cur,
                              std::vector<std::vector<std::pair<int, int>>>& out) {
  int i = -1;
  for (int v = 0; v < pg.n; ++v)
    if (!used[v]) {
      i = v;
      break;
    }
  if (i < 0) {
    auto m = cur;
    std::sort(m.begin(), m.end());
    out.push_back(std::move(m));
    return;
  }
  used[i] = 1;
  for (int j = i + 1; j < pg.n; ++j) {
    if (used[j] || !pg.has_edge(i, j)) continue;
    used[j] = 1;
    cur.emplace_back(i, j);
    all_matchings_rec(pg, used, cur, out);
    cur.pop_back();
    used[j] = 0;
  }
  used[i] = 0;
}

inline std::vector<std::vector<std::pair<int, int>>> all_perfect_matchings(
    const PathGraph& pg) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<char> used(pg.n, 0);
  std::vector<std::pair<int, int>> cur;
  all_matchings_rec(pg, used, cur, out);
  return out;
}

// --- Floyd-Warshall over a weighted detector graph ------------------------

inline std::vector<std::vector<std::int64_t>> floyd_warshall(
    const DetectorGraph& g, const WeightFunction& wf) {
  const int n = g.num_vertices();
  std::vector<std::vector<std::int64_t>> d(
      n, std::vector<std::int64_t>(n, kInfWeight));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    const auto& e = g.edges[ei];
    d[e.u][e.v] = std::min(d[e.u][e.v], wf.w[ei]);
    d[e.v][e.u] = d[e.u][e.v];
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

}  // namespace polymatch::testing

#endif
