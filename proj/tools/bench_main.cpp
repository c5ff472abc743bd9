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

// Compares the parallel/fast kernels against their serial references:
//   - carry-less-multiply ring products vs the portable shift-XOR kernel
//   - adjugate-based decode vs independent per-edge minors
//   - OpenMP multi-trial decoding vs a forced single worker
// Timings are wall clock on this machine; outputs are checked for equality
// while timing so a mismatch aborts the run.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polymatch/decoder.hpp"
#include "polymatch/heuristic.hpp"
#include "polymatch/oracle.hpp"
#include "polymatch/parallel.hpp"
#include "polymatch/rng.hpp"

using namespace polymatch;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

TruncatedPoly random_poly(std::size_t wth, Rng& rng) {
  TruncatedPoly p(wth);
  for (std::size_t i = 0; i < wth; i += 61)
    if (rng.uniform01() < 0.9) p.set_bit(i % wth);
  for (std::size_t i = 0; i < wth; ++i)
    if (rng.uniform01() < 0.5) p.set_bit(i);
  return p;
}

void bench_mul(std::size_t wth, int reps) {
  Rng rng(7);
  const TruncatedPoly a = random_poly(wth, rng);
  const TruncatedPoly b = random_poly(wth, rng);
  const std::size_t n = a.num_words();

  std::vector<std::uint64_t> out_ref(n, 0), out_fast(n, 0);
  auto t0 = Clock::now();
  for (int r = 0; r < reps; ++r) {
    std::fill(out_ref.begin(), out_ref.end(), 0);
    detail::mul_words_ref(out_ref.data(), a.words().data(), b.words().data(), n,
                          wth);
  }
  const double ref_s = seconds_since(t0) / reps;

  double fast_s = -1.0;
  if (clmul_available()) {
    t0 = Clock::now();
    for (int r = 0; r < reps; ++r) {
      std::fill(out_fast.begin(), out_fast.end(), 0);
      detail::mul_words_clmul(out_fast.data(), a.words().data(),
                              b.words().data(), n);
    }
    fast_s = seconds_since(t0) / reps;
    out_fast[n - 1] &= out_ref[n - 1] | ~std::uint64_t{0};  // same width
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (out_ref[i] != out_fast[i]) {
        std::fprintf(stderr, "mul kernel mismatch at word %zu\n", i);
        std::exit(1);
      }
    }
  }
  std::printf("mul w_th=%-6zu ref %10.2f us/op   clmul %s\n", wth, ref_s * 1e6,
              fast_s < 0 ? "n/a" : [&] {
                static char buf[64];
                std::snprintf(buf, sizeof buf, "%10.2f us/op (%.1fx)",
                              fast_s * 1e6, ref_s / fast_s);
                return buf;
              }());
}

void bench_decode(int n, int reps) {
  const std::size_t wth = 4096;
  double adj_s = 0, minors_s = 0;
  for (int r = 0; r < reps; ++r) {
    const PathGraph pg = random_even_graph(n, 200, 1000 + r);
    const auto pw = perturb(pg, Scheme::kPlain, default_w_max(n), 55 + r);
    auto t0 = Clock::now();
    const DecodeOutcome a = decode(pg, pw, wth);
    adj_s += seconds_since(t0);
    t0 = Clock::now();
    const DecodeOutcome b = decode_via_minors(pg, pw, wth);
    minors_s += seconds_since(t0);
    if (a.status != b.status || a.matching != b.matching) {
      std::fprintf(stderr, "decode route mismatch at n=%d rep=%d\n", n, r);
      std::exit(1);
    }
  }
  std::printf("decode n=%-3d w_th=4096 adjugate %8.2f ms   per-edge minors %8.2f ms (%.1fx)\n",
              n, adj_s / reps * 1e3, minors_s / reps * 1e3, minors_s / adj_s);
}

void bench_trials(int n, int graphs) {
  HeuristicConfig cfg;
  cfg.wth = 1024;
  std::vector<PathGraph> pgs;
  for (int i = 0; i < graphs; ++i) pgs.push_back(random_even_graph(n, 200, 9000 + i));

  std::vector<DecodeOutcome> serial_out(graphs), parallel_out(graphs);
  auto t0 = Clock::now();
  for (int i = 0; i < graphs; ++i) {
    HeuristicConfig c = cfg;
    c.base_seed = derive_seed(3, i);
    c.early_exit = false;
#ifdef _OPENMP
    omp_set_num_threads(1);
#endif
    serial_out[i] = multi_trial_decode(pgs[i], c);
  }
  const double serial_s = seconds_since(t0);

#ifdef _OPENMP
  omp_set_num_threads(omp_get_num_procs());
#endif
  t0 = Clock::now();
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < graphs; ++i) {
    HeuristicConfig c = cfg;
    c.base_seed = derive_seed(3, i);
    parallel_out[i] = multi_trial_decode(pgs[i], c);
  }
  const double parallel_s = seconds_since(t0);

  for (int i = 0; i < graphs; ++i) {
    if (serial_out[i].matching != parallel_out[i].matching ||
        serial_out[i].weight_under != parallel_out[i].weight_under) {
      std::fprintf(stderr, "worker-count nondeterminism at graph %d\n", i);
      std::exit(1);
    }
  }
  std::printf("multi-trial n=%-3d x%-4d serial %8.2f ms   omp(%d) %8.2f ms (%.1fx)\n",
              n, graphs, serial_s * 1e3, worker_count(), parallel_s * 1e3,
              serial_s / parallel_s);
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap_from_env();
  const bool quick = argc > 1 && std::string_view(argv[1]) == "--quick";
  std::printf("workers: %d, clmul: %s\n", worker_count(),
              clmul_available() ? "yes" : "no");
  bench_mul(512, quick ? 200 : 2000);
  bench_mul(4096, quick ? 50 : 500);
  bench_mul(32768, quick ? 5 : 50);
  bench_decode(12, quick ? 3 : 10);
  bench_decode(20, quick ? 1 : 5);
  bench_trials(10, quick ? 16 : 64);
  return 0;
}
