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

#include "polymatch/oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

namespace polymatch {

namespace {

struct EnumState {
  const PathGraph* pg;
  const std::function<std::int64_t(int)>* weight;
  std::vector<char> used;
  Matching current;
  std::int64_t current_w = 0;
  MwpmEnumeration result;

  std::int64_t edge_w(int ei) const {
    return *weight ? (*weight)(ei) : pg->edges[ei].w;
  }

  void recurse() {
    int i = -1;
    for (int v = 0; v < pg->n; ++v) {
      if (!used[v]) {
        i = v;
        break;
      }
    }
    if (i < 0) {
      if (!result.has_matching || current_w < result.weight) {
        result.has_matching = true;
        result.weight = current_w;
        result.optimal.clear();
      }
      if (current_w == result.weight) {
        Matching m = current;
        std::sort(m.begin(), m.end());
        result.optimal.push_back(std::move(m));
      }
      return;
    }
    used[i] = 1;
    for (int j = i + 1; j < pg->n; ++j) {
      if (used[j]) continue;
      const int ei = pg->edge_index(i, j);
      if (ei < 0) continue;
      const std::int64_t w = edge_w(ei);
      if (result.has_matching && current_w + w > result.weight) continue;
      used[j] = 1;
      current.emplace_back(i, j);
      current_w += w;
      recurse();
      current_w -= w;
      current.pop_back();
      used[j] = 0;
    }
    used[i] = 0;
  }
};

}  // namespace

MwpmEnumeration exhaustive_mwpm(
    const PathGraph& pg, const std::function<std::int64_t(int)>& edge_weight) {
  if (pg.n > 16)
    throw std::invalid_argument("exhaustive_mwpm: order above 16 (double "
                                "factorial blowup); use the reference matcher");
  MwpmEnumeration empty_result;
  if (pg.n == 0) {
    empty_result.has_matching = true;
    empty_result.weight = 0;
    empty_result.optimal.push_back({});
    return empty_result;
  }
  if (pg.n % 2 != 0) return empty_result;  // odd order: none exists

  EnumState st;
  st.pg = &pg;
  st.weight = &edge_weight;
  st.used.assign(pg.n, 0);
  st.recurse();
  return st.result;
}

namespace {

constexpr int kMaxDpActives = 20;

struct StructuredDp {
  int k;
  std::vector<std::int64_t> f;
  std::vector<std::int8_t> from_i;  // vertex settled by the recorded move
  std::vector<std::int8_t> from_j;  // its partner, or -1 for the boundary

  StructuredDp(const PathGraph& pg) : k(pg.n / 2) {
    if (k > kMaxDpActives)
      throw std::invalid_argument("reference_mwpm: path graph too large");
    const std::size_t sz = std::size_t{1} << k;
    f.assign(sz, kInfWeight);
    from_i.assign(sz, -2);
    from_j.assign(sz, -2);
    f[0] = 0;
    for (std::uint32_t mask = 0; mask + 1 < sz; ++mask) {
      if (f[mask] >= kInfWeight) continue;
      int i = 0;
      while (mask & (1u << i)) ++i;
      // settle i against the boundary, then against each later partner
      if (pg.has_edge(i, k + i)) {
        const std::int64_t w = f[mask] + pg.weight(i, k + i);
        const std::uint32_t nm = mask | (1u << i);
        if (w < f[nm]) {
          f[nm] = w;
          from_i[nm] = static_cast<std::int8_t>(i);
          from_j[nm] = -1;
        }
      }
      for (int j = i + 1; j < k; ++j) {
        if (mask & (1u << j)) continue;
        if (!pg.has_edge(i, j)) continue;
        const std::int64_t w = f[mask] + pg.weight(i, j);
        const std::uint32_t nm = mask | (1u << i) | (1u << j);
        if (w < f[nm]) {
          f[nm] = w;
          from_i[nm] = static_cast<std::int8_t>(i);
          from_j[nm] = static_cast<std::int8_t>(j);
        }
      }
    }
  }
};

}  // namespace

std::optional<std::int64_t> reference_mwpm_weight(const PathGraph& pg) {
  if (pg.n == 0) return 0;
  if (!pg.structured()) {
    const auto e = exhaustive_mwpm(pg);
    if (!e.has_matching) return std::nullopt;
    return e.weight;
  }
  StructuredDp dp(pg);
  const std::int64_t w = dp.f.back();
  if (w >= kInfWeight) return std::nullopt;
  return w;
}

std::optional<std::pair<std::int64_t, Matching>> reference_mwpm(
    const PathGraph& pg) {
  if (pg.n == 0) return std::make_pair(std::int64_t{0}, Matching{});
  if (!pg.structured()) {
    const auto e = exhaustive_mwpm(pg);
    if (!e.has_matching) return std::nullopt;
    return std::make_pair(e.weight, e.optimal.front());
  }
  StructuredDp dp(pg);
  if (dp.f.back() >= kInfWeight) return std::nullopt;

  const int k = dp.k;
  Matching m;
  std::uint32_t mask = (1u << k) - 1;
  while (mask != 0) {
    const int i = dp.from_i[mask];
    const int j = dp.from_j[mask];
    if (i < 0) throw std::logic_error("reference_mwpm: backtrack failed");
    if (j == -1) {
      m.emplace_back(i, k + i);
      mask &= ~(1u << i);
    } else {
      m.emplace_back(i, j);
      mask &= ~(1u << i) & ~(1u << static_cast<unsigned>(j));
    }
  }
  // pair the unused boundary copies at weight zero
  std::vector<char> used(pg.n, 0);
  for (auto [u, v] : m) used[u] = used[v] = 1;
  std::vector<int> free_copies;
  for (int v = k; v < pg.n; ++v)
    if (!used[v]) free_copies.push_back(v);
  for (std::size_t i = 0; i + 1 < free_copies.size(); i += 2)
    m.emplace_back(free_copies[i], free_copies[i + 1]);
  std::sort(m.begin(), m.end());
  return std::make_pair(dp.f.back(), std::move(m));
}

// ---------------------------------------------------------------------------
// Integer-arithmetic decoder (exact, arbitrary precision)

namespace {

struct IntMatrix {
  int n = 0;
  std::vector<mpz_class> a;
  IntMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_) {}
  mpz_class& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const mpz_class& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * n + j];
  }
};

/// Signed Samuelson-Berkowitz: q holds the coefficients of det(lambda I - A)
/// with q[0] = 1 (leading) down to q[n] = (-1)^n det(A).
std::vector<mpz_class> berkowitz_signed(const IntMatrix& m) {
  const int n = m.n;
  std::vector<mpz_class> q{mpz_class(1)};
  std::vector<mpz_class> v, vnext, t;
  for (int r = 0; r < n; ++r) {
    t.assign(static_cast<std::size_t>(r) + 2, mpz_class(0));
    t[0] = 1;
    t[1] = -m.at(r, r);
    if (r >= 1) {
      v.assign(r, mpz_class(0));
      for (int i = 0; i < r; ++i) v[i] = m.at(i, r);
      for (int k = 0; k < r; ++k) {
        mpz_class s(0);
        for (int i = 0; i < r; ++i) s += m.at(r, i) * v[i];
        t[k + 2] = -s;
        if (k + 1 < r) {
          vnext.assign(r, mpz_class(0));
          for (int i = 0; i < r; ++i)
            for (int l = 0; l < r; ++l) vnext[i] += m.at(i, l) * v[l];
          v.swap(vnext);
        }
      }
    }
    std::vector<mpz_class> qn(static_cast<std::size_t>(r) + 2, mpz_class(0));
    for (std::size_t i = 0; i < qn.size(); ++i)
      for (std::size_t j = 0; j <= std::min(i, q.size() - 1); ++j)
        qn[i] += t[i - j] * q[j];
    q = std::move(qn);
  }
  return q;
}

IntMatrix adjugate_signed(const IntMatrix& m, const std::vector<mpz_class>& q) {
  const int n = m.n;
  IntMatrix acc(n);
  for (int i = 0; i < n; ++i) acc.at(i, i) = 1;
  IntMatrix next(n);
  for (int k = n - 1; k >= 1; --k) {
    for (auto& z : next.a) z = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (m.at(i, l) == 0) continue;
        for (int j = 0; j < n; ++j) next.at(i, j) += m.at(i, l) * acc.at(l, j);
      }
    for (int i = 0; i < n; ++i) next.at(i, i) += q[n - k];
    std::swap(acc.a, next.a);
  }
  if ((n - 1) % 2 != 0)
    for (auto& z : acc.a) z = -z;
  return acc;
}

std::int64_t valuation2(const mpz_class& z) {
  mpz_class a = abs(z);
  return static_cast<std::int64_t>(mpz_scan1(a.get_mpz_t(), 0));
}

IntMatrix build_int_matrix(const PathGraph& pg, const PerturbedWeights& pw) {
  IntMatrix m(pg.n);
  mpz_class x;
  for (std::size_t i = 0; i < pg.edges.size(); ++i) {
    const auto& e = pg.edges[i];
    const int lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
    x = 1;
    x <<= static_cast<unsigned long>(pw.effective[i]);
    m.at(lo, hi) = x;
    m.at(hi, lo) = -x;
  }
  return m;
}

}  // namespace

DecodeOutcome appendix_a_decode(const PathGraph& pg,
                                const PerturbedWeights& pw) {
  if (pg.n % 2 != 0)
    throw std::invalid_argument("appendix_a_decode: order must be even");
  DecodeOutcome out;
  if (pg.n == 0) {
    out.status = DecodeStatus::kMatching;
    out.w_star = 0;
    out.weight_under = 0;
    return out;
  }
  const IntMatrix b = build_int_matrix(pg, pw);
  const std::vector<mpz_class> q = berkowitz_signed(b);
  const mpz_class& det = q.back();  // det = (-1)^n q[n] and n is even
  if (det == 0) {
    out.status = DecodeStatus::kNoPerfectMatching;
    return out;
  }
  const std::int64_t v2 = valuation2(det);
  if (v2 % 2 != 0)
    throw std::logic_error("appendix_a_decode: odd 2-adic valuation");
  const std::int64_t w_star = v2 / 2;

  const IntMatrix adj = adjugate_signed(b, q);
  Matching m;
  std::int64_t eff_total = 0;
  std::int64_t base_total = 0;
  for (std::size_t i = 0; i < pg.edges.size(); ++i) {
    const auto& e = pg.edges[i];
    // minor(u,v) carries the same 2-adic valuation as adj(v,u) up to sign
    const mpz_class& entry = adj.at(e.v, e.u);
    if (entry == 0) continue;
    if (valuation2(entry) + pw.effective[i] == 2 * w_star) {
      m.emplace_back(e.u, e.v);
      eff_total += pw.effective[i];
      base_total += e.w;
    }
  }
  std::vector<int> cover(pg.n, 0);
  for (auto [u, v] : m) {
    ++cover[u];
    ++cover[v];
  }
  const bool perfect =
      std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
  out.w_star = w_star;
  if (!perfect || eff_total != w_star) {
    out.status = DecodeStatus::kNotIsolated;
    return out;
  }
  std::sort(m.begin(), m.end());
  out.status = DecodeStatus::kMatching;
  out.matching = std::move(m);
  out.weight_under = base_total;
  return out;
}

std::optional<std::int64_t> appendix_a_det_valuation(
    const PathGraph& pg, const PerturbedWeights& pw) {
  if (pg.n == 0) return 0;
  const IntMatrix b = build_int_matrix(pg, pw);
  const mpz_class det = berkowitz_signed(b).back();
  if (det == 0) return std::nullopt;
  return valuation2(det);
}

PathGraph random_even_graph(int n, std::int64_t max_weight, std::uint64_t seed,
                            double edge_prob) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("random_even_graph: n must be even and >= 2");
  Rng rng(seed);
  PathGraph pg;
  pg.n = n;

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.uniform_int(0, i)]);

  std::vector<char> present(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; i += 2) {
    const auto [u, v] = std::minmax(perm[i], perm[i + 1]);
    present[u * n + v] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform01() < edge_prob) present[u * n + v] = 1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (present[u * n + v]) pg.add_edge(u, v, rng.uniform_int(1, max_weight));
  pg.rebuild_index();
  return pg;
}

}  // namespace polymatch
