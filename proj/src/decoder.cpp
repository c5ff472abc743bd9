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

#include "polymatch/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polymatch {

std::int64_t default_w_max(int n) {
  if (n <= 0) return 1;
  return static_cast<std::int64_t>(
      std::ceil(0.8 * std::pow(static_cast<double>(n), 0.8)));
}

PerturbedWeights perturb(const PathGraph& pg, Scheme scheme, std::int64_t w_max,
                         std::uint64_t seed, RngKind rng_kind) {
  if (pg.n == 0) throw std::invalid_argument("perturb: empty path graph");
  if (w_max < 1) throw std::invalid_argument("perturb: W_max must be >= 1");
  PerturbedWeights pw;
  pw.scheme = scheme;
  pw.w_max = w_max;
  pw.seed = seed;
  pw.c_tilde = scheme == Scheme::kAmplified
                   ? (static_cast<std::int64_t>(pg.n) / 2) * (w_max - 1) + 1
                   : 1;
  Rng rng(seed, rng_kind);
  pw.w_perturb.reserve(pg.edges.size());
  pw.effective.reserve(pg.edges.size());
  for (const auto& e : pg.edges) {
    const std::int64_t we = rng.uniform_int(1, w_max);
    pw.w_perturb.push_back(we);
    pw.effective.push_back(pw.c_tilde * e.w + we);
  }
  return pw;
}

RingMatrix::RingMatrix(int n_, std::size_t wth_) : n(n_), wth(wth_) {
  a.assign(static_cast<std::size_t>(n) * n, TruncatedPoly(wth));
}

RingMatrix build_matrix(const PathGraph& pg, const PerturbedWeights& pw,
                        std::size_t wth) {
  if (wth < 1) throw std::invalid_argument("build_matrix: w_th must be >= 1");
  RingMatrix m(pg.n, wth);
  for (std::size_t i = 0; i < pg.edges.size(); ++i) {
    const auto& e = pg.edges[i];
    const auto x = TruncatedPoly::monomial(
        static_cast<std::uint64_t>(pw.effective[i]), wth);
    m.at(e.u, e.v) = x;
    m.at(e.v, e.u) = x;
  }
  return m;
}

std::vector<TruncatedPoly> berkowitz_charpoly(const RingMatrix& m) {
  const int n = m.n;
  const std::size_t wth = m.wth;
  std::vector<TruncatedPoly> q{TruncatedPoly::one(wth)};
  TruncatedPoly scratch(wth);

  std::vector<TruncatedPoly> v, vnext, t;
  for (int r = 0; r < n; ++r) {
    // Toeplitz column for the (r+1) x (r+1) principal submatrix:
    // t = [1, a_rr, R C, R A C, ..., R A^(r-1) C].
    t.assign(static_cast<std::size_t>(r) + 2, TruncatedPoly(wth));
    t[0] = TruncatedPoly::one(wth);
    t[1] = m.at(r, r);
    if (r >= 1) {
      v.assign(r, TruncatedPoly(wth));
      for (int i = 0; i < r; ++i) v[i] = m.at(i, r);
      for (int k = 0; k < r; ++k) {
        for (int i = 0; i < r; ++i) fma_into(t[k + 2], m.at(r, i), v[i], scratch);
        if (k + 1 < r) {
          vnext.assign(r, TruncatedPoly(wth));
          for (int i = 0; i < r; ++i)
            for (int l = 0; l < r; ++l)
              fma_into(vnext[i], m.at(i, l), v[l], scratch);
          v.swap(vnext);
        }
      }
    }

    std::vector<TruncatedPoly> qn(static_cast<std::size_t>(r) + 2,
                                  TruncatedPoly(wth));
    for (std::size_t i = 0; i < qn.size(); ++i) {
      const std::size_t jmax = std::min(i, q.size() - 1);
      for (std::size_t j = 0; j <= jmax; ++j) {
        if (i - j == 0) {
          qn[i].add_assign(q[j]);  // t[0] = 1
        } else {
          fma_into(qn[i], t[i - j], q[j], scratch);
        }
      }
    }
    q = std::move(qn);
  }
  return q;
}

TruncatedPoly determinant(const RingMatrix& m) {
  if (m.n == 0) return TruncatedPoly::one(m.wth);
  return berkowitz_charpoly(m).back();
}

TruncatedPoly minor_det(const RingMatrix& m, int i, int j) {
  if (i < 0 || i >= m.n || j < 0 || j >= m.n)
    throw std::out_of_range("minor_det: index out of range");
  RingMatrix sub(m.n - 1, m.wth);
  for (int r = 0, rr = 0; r < m.n; ++r) {
    if (r == i) continue;
    for (int c = 0, cc = 0; c < m.n; ++c) {
      if (c == j) continue;
      sub.at(rr, cc) = m.at(r, c);
      ++cc;
    }
    ++rr;
  }
  return determinant(sub);
}

RingMatrix adjugate(const RingMatrix& m, const std::vector<TruncatedPoly>& q) {
  const int n = m.n;
  const std::size_t wth = m.wth;
  if (static_cast<int>(q.size()) != n + 1)
    throw std::invalid_argument("adjugate: characteristic vector size mismatch");
  RingMatrix acc(n, wth);
  for (int i = 0; i < n; ++i) acc.at(i, i) = TruncatedPoly::one(wth);
  RingMatrix next(n, wth);
  TruncatedPoly scratch(wth);
  for (int k = n - 1; k >= 1; --k) {
    for (auto& p : next.a) p = TruncatedPoly(wth);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        const TruncatedPoly& mil = m.at(i, l);
        if (mil.is_zero()) continue;
        for (int j = 0; j < n; ++j)
          fma_into(next.at(i, j), mil, acc.at(l, j), scratch);
      }
    // + q[n-k] * I  (coefficient of lambda^k in the characteristic vector)
    for (int i = 0; i < n; ++i) next.at(i, i).add_assign(q[n - k]);
    std::swap(acc.a, next.a);
  }
  return acc;
}

const char* to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::kMatching: return "MATCHING";
    case DecodeStatus::kOverflowFailure: return "OVERFLOW_FAILURE";
    case DecodeStatus::kNotIsolated: return "NOT_ISOLATED";
    case DecodeStatus::kNoPerfectMatching: return "NO_PERFECT_MATCHING";
  }
  return "?";
}

namespace {

/// Shared tail of both decode routes: checks the extracted edge set is a
/// perfect matching whose effective weight reproduces w*.
DecodeOutcome finish_decode(const PathGraph& pg, const PerturbedWeights& pw,
                            std::vector<std::pair<int, int>> m,
                            std::int64_t w_star) {
  DecodeOutcome out;
  out.w_star = w_star;
  std::vector<int> cover(pg.n, 0);
  std::int64_t eff_total = 0;
  std::int64_t base_total = 0;
  for (auto [u, v] : m) {
    ++cover[u];
    ++cover[v];
    const int ei = pg.edge_index(u, v);
    eff_total += pw.effective[ei];
    base_total += pg.edges[ei].w;
  }
  const bool perfect =
      std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
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

std::int64_t checked_wstar(const TruncatedPoly& det) {
  const auto dmin = det.min_degree();
  if (!dmin) throw std::logic_error("decode: zero determinant reached w* step");
  if (*dmin % 2 != 0)
    throw std::logic_error("decode: odd minimum degree in det(B)");
  return static_cast<std::int64_t>(*dmin) / 2;
}

}  // namespace

TrialEvaluation evaluate_trial(const PathGraph& pg, const PerturbedWeights& pw,
                               std::size_t wth) {
  TrialEvaluation ev;
  const RingMatrix b = build_matrix(pg, pw, wth);
  const std::vector<TruncatedPoly> q = berkowitz_charpoly(b);
  const TruncatedPoly& det = q.back();
  if (det.is_zero()) return ev;
  ev.det_min_degree = 2 * checked_wstar(det);

  const RingMatrix adj = adjugate(b, q);
  std::vector<int> cover(pg.n, 0);
  std::int64_t eff_total = 0;
  std::int64_t base_total = 0;
  for (std::size_t i = 0; i < pg.edges.size(); ++i) {
    const auto& e = pg.edges[i];
    // min_degree(minor(u,v) * X^eff) == min_degree(det) selects MWPM edges.
    const auto md = adj.at(e.u, e.v).min_degree();
    if (md && static_cast<std::int64_t>(*md) + pw.effective[i] ==
                  ev.det_min_degree) {
      ev.matching.emplace_back(e.u, e.v);
      ++cover[e.u];
      ++cover[e.v];
      eff_total += pw.effective[i];
      base_total += e.w;
    }
  }
  const bool perfect =
      std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
  ev.valid = perfect && 2 * eff_total == ev.det_min_degree;
  if (ev.valid) {
    std::sort(ev.matching.begin(), ev.matching.end());
    ev.weight_under = base_total;
  }
  return ev;
}

DecodeOutcome decode(const PathGraph& pg, const PerturbedWeights& pw,
                     std::size_t wth) {
  if (pg.n % 2 != 0)
    throw std::invalid_argument("decode: path graph order must be even");
  if (pg.n == 0) {
    DecodeOutcome out;
    out.status = DecodeStatus::kMatching;
    out.w_star = 0;
    out.weight_under = 0;
    return out;
  }

  const TrialEvaluation ev = evaluate_trial(pg, pw, wth);
  if (ev.det_min_degree < 0) return DecodeOutcome{};  // overflow failure
  DecodeOutcome out;
  out.w_star = ev.det_min_degree / 2;
  if (!ev.valid) {
    out.status = DecodeStatus::kNotIsolated;
    return out;
  }
  out.status = DecodeStatus::kMatching;
  out.matching = ev.matching;
  out.weight_under = ev.weight_under;
  return out;
}

DecodeOutcome decode_via_minors(const PathGraph& pg, const PerturbedWeights& pw,
                                std::size_t wth) {
  if (pg.n % 2 != 0)
    throw std::invalid_argument("decode: path graph order must be even");
  if (pg.n == 0) {
    DecodeOutcome out;
    out.status = DecodeStatus::kMatching;
    out.w_star = 0;
    out.weight_under = 0;
    return out;
  }

  const RingMatrix b = build_matrix(pg, pw, wth);
  const TruncatedPoly det = determinant(b);
  if (det.is_zero()) return DecodeOutcome{};
  const std::int64_t w_star = checked_wstar(det);

  const auto ne = static_cast<std::int64_t>(pg.edges.size());
  std::vector<char> in_matching(pg.edges.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < ne; ++i) {
    const auto& e = pg.edges[i];
    const auto md = minor_det(b, e.u, e.v).min_degree();
    if (md && static_cast<std::int64_t>(*md) + pw.effective[i] == 2 * w_star)
      in_matching[i] = 1;
  }
  std::vector<std::pair<int, int>> m;
  for (std::size_t i = 0; i < pg.edges.size(); ++i)
    if (in_matching[i]) m.emplace_back(pg.edges[i].u, pg.edges[i].v);
  return finish_decode(pg, pw, std::move(m), w_star);
}

}  // namespace polymatch
