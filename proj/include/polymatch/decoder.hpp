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

#ifndef POLYMATCH_DECODER_H
#define POLYMATCH_DECODER_H

#include <cstdint>
#include <utility>
#include <vector>

#include "polymatch/graph.hpp"
#include "polymatch/poly.hpp"
#include "polymatch/rng.hpp"

namespace polymatch {

enum class Scheme : std::uint8_t {
  kAmplified,  // effective(e) = C~ * w(e) + W(e), C~ = (n/2)(W_max - 1) + 1
  kPlain,      // effective(e) = w(e) + W(e)
};

/// Per-trial integer weight perturbation. W(e) is i.i.d. uniform on
/// {1..W_max} drawn in canonical edge order from the seeded generator, so a
/// (seed, scheme, W_max) triple pins the weights exactly.
struct PerturbedWeights {
  Scheme scheme = Scheme::kPlain;
  std::int64_t w_max = 1;
  std::uint64_t seed = 0;
  std::int64_t c_tilde = 1;  // 1 for the plain scheme
  std::vector<std::int64_t> w_perturb;   // per path-graph edge, in [1, W_max]
  std::vector<std::int64_t> effective;   // per path-graph edge, >= 1
};

PerturbedWeights perturb(const PathGraph& pg, Scheme scheme, std::int64_t w_max,
                         std::uint64_t seed,
                         RngKind rng_kind = RngKind::kSplitMix64);

/// Default perturbation range ceil(0.8 * n^0.8) for a path graph of size n.
std::int64_t default_w_max(int n);

/// Symmetric matrix over F2[X]/(X^w_th) with zero diagonal; entry (i,j) is
/// X^effective({i,j}) for path-graph edges (zero once the exponent reaches
/// w_th -- that silent truncation is exactly what failure detection keys on).
struct RingMatrix {
  int n = 0;
  std::size_t wth = 0;
  std::vector<TruncatedPoly> a;

  RingMatrix() = default;
  RingMatrix(int n, std::size_t wth);
  TruncatedPoly& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const TruncatedPoly& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * n + j];
  }
};

RingMatrix build_matrix(const PathGraph& pg, const PerturbedWeights& pw,
                        std::size_t wth);

/// Characteristic-vector coefficients of det(lambda I + M) by the
/// division-free Samuelson-Berkowitz recursion (signs vanish over F2);
/// q[0] = 1 and q[n] = det(M).
std::vector<TruncatedPoly> berkowitz_charpoly(const RingMatrix& m);

TruncatedPoly determinant(const RingMatrix& m);

/// Determinant of m with row i and column j removed.
TruncatedPoly minor_det(const RingMatrix& m, int i, int j);

/// Adjugate from the characteristic vector via the Cayley-Hamilton Horner
/// form adj(M) = M^(n-1) + q[1] M^(n-2) + ... + q[n-1] I; adj(M)(i,j) equals
/// the (j,i) minor up to sign, and signs vanish over F2.
RingMatrix adjugate(const RingMatrix& m, const std::vector<TruncatedPoly>& q);

enum class DecodeStatus : std::uint8_t {
  kMatching,
  kOverflowFailure,    // det(B) = 0 in the truncated ring
  kNotIsolated,        // extracted edge set failed validation
  kNoPerfectMatching,  // exact-arithmetic oracle found det = 0 over Z
};

const char* to_string(DecodeStatus s);

struct DecodeOutcome {
  DecodeStatus status = DecodeStatus::kOverflowFailure;
  std::vector<std::pair<int, int>> matching;  // sorted path-graph vertex pairs
  std::int64_t w_star = -1;        // perturbed matching weight (half min degree)
  std::int64_t weight_under = -1;  // weight under the unperturbed path weights
  int trial_index = -1;            // set by the multi-trial driver
};

/// Ring-stage result of one perturbation trial, evaluated at width wth.
/// Because reduction from w_th to any smaller width is a quotient
/// homomorphism of the ring, this fixes the decode outcome at every
/// w' <= wth: the trial overflows iff det_min_degree is absent or >= w',
/// and otherwise the extracted matching and degrees are unchanged.
struct TrialEvaluation {
  std::int64_t det_min_degree = -1;  // -1 when det(B) = 0 at wth
  bool valid = false;  // perfect matching whose effective weight equals w*
  std::vector<std::pair<int, int>> matching;
  std::int64_t weight_under = -1;  // unperturbed weight (when valid)
};

TrialEvaluation evaluate_trial(const PathGraph& pg, const PerturbedWeights& pw,
                               std::size_t wth);

/// The four-step determinant decoder. Returns the unique perturbed MWPM when
/// 2 w* < w_th and isolation held; an overflow failure when the determinant
/// vanished in the ring; kNotIsolated when the candidate edge set is not a
/// perfect matching or disagrees with w*. The empty graph decodes to the
/// empty matching without touching the ring.
DecodeOutcome decode(const PathGraph& pg, const PerturbedWeights& pw,
                     std::size_t wth);

/// Same contract as decode(), but evaluates one Berkowitz determinant per
/// edge minor (parallel across edges) instead of reading them off the
/// adjugate. Kept as the independently-structured reference; the two must
/// agree bit for bit.
DecodeOutcome decode_via_minors(const PathGraph& pg, const PerturbedWeights& pw,
                                std::size_t wth);

}  // namespace polymatch

#endif
