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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "polymatch/heuristic.hpp"
#include "polymatch/io.hpp"
#include "polymatch/oracle.hpp"
#include "polymatch/parallel.hpp"
#include "polymatch/sim.hpp"

namespace {

using namespace polymatch;

std::uint64_t pick_seed(std::int64_t flag_value) {
  if (flag_value >= 0) return static_cast<std::uint64_t>(flag_value);
  std::random_device rd;
  const std::uint64_t s = rd() & 0xFFFFFFFFull;  // 32-bit seed space
  std::cerr << "seed " << s << "\n";
  return s;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

// Distance tables pay off for the sweep-sized graphs; huge graphs fall back
// to per-shot Dijkstra.
constexpr int kTableVertexLimit = 2048;

int run_decode(const std::string& graph_path, const std::string& syn_path,
               std::size_t wth, const std::string& scheme_name,
               std::int64_t trials, std::int64_t w_max, int b_low, int b_high,
               std::int64_t seed_flag, const std::string& rng_name,
               bool early_exit, const std::string& out_path) {
  const DetectorGraph g = read_detector_graph_file(graph_path);
  const auto shots = read_syndromes_file(syn_path);

  HeuristicConfig cfg;
  cfg.wth = wth;
  cfg.trials = trials;
  cfg.w_max = w_max;
  cfg.b_low = b_low;
  cfg.b_high = b_high;
  cfg.scheme = scheme_name == "amplified" ? Scheme::kAmplified : Scheme::kPlain;
  cfg.rng_kind =
      rng_name == "mt19937" ? RngKind::kMt19937_64 : RngKind::kSplitMix64;
  cfg.early_exit = early_exit;
  const std::uint64_t seed = pick_seed(seed_flag);

  const std::int64_t c_low = scale_for_precision(g, b_low);
  const std::int64_t c_high = scale_for_precision(g, b_high);
  const WeightFunction wf_low = discretize(g, c_low);
  const WeightFunction wf_high = discretize(g, c_high);

  DistanceTable table_low, table_high;
  const bool use_tables = g.num_vertices() <= kTableVertexLimit;
  if (use_tables) {
    table_low = build_distance_table(g, wf_low);
    table_high = build_distance_table(g, wf_high);
  }

  std::ostringstream out;
  for (std::size_t shot = 0; shot < shots.size(); ++shot) {
    const PathGraph pg_high =
        build_path_graph(g, wf_high, shots[shot], nullptr,
                         use_tables ? &table_high : nullptr);
    HeuristicConfig shot_cfg = cfg;
    shot_cfg.base_seed = derive_seed(seed, shot);
    DecodeOutcome res;
    if (c_low == c_high) {
      res = multi_trial_decode_scored(pg_high, pg_high, shot_cfg);
    } else {
      const PathGraph pg_low =
          build_path_graph(g, wf_low, shots[shot], nullptr,
                           use_tables ? &table_low : nullptr);
      res = multi_trial_decode_scored(pg_low, pg_high, shot_cfg);
    }
    out << format_shot_record(static_cast<int>(shot), res, pg_high) << "\n";
  }
  write_output(out_path, out.str());
  return 0;
}

int run_gen_graph(int d, int rounds, double p, const std::string& out_path) {
  NoiseModel nm;
  nm.d = d;
  nm.rounds = rounds > 0 ? rounds : d;
  nm.p = p;
  const DetectorGraph g = build_surface_detector_graph(nm);
  std::ostringstream out;
  write_detector_graph(out, g);
  write_output(out_path, out.str());
  return 0;
}

int run_sweep_precision(int d, int rounds, double p, int b_min, int b_max,
                        std::int64_t shots, std::int64_t seed_flag,
                        const std::string& out_path) {
  NoiseModel nm;
  nm.d = d;
  nm.rounds = rounds > 0 ? rounds : d;
  nm.p = p;
  const DetectorGraph g = build_surface_detector_graph(nm);
  std::vector<int> bs;
  for (int b = b_min; b <= b_max; ++b) bs.push_back(b);
  const auto res = precision_sweep(g, bs, shots, pick_seed(seed_flag));
  write_output(out_path, format_sweep_csv(res.rows));
  return 0;
}

int run_sweep_threshold(int d, int rounds, double p,
                        const std::string& wth_list_str,
                        const std::string& mult_list_str, int b_low, int b_high,
                        int max_pg, std::int64_t shots, std::int64_t seed_flag,
                        const std::string& out_path) {
  NoiseModel nm;
  nm.d = d;
  nm.rounds = rounds > 0 ? rounds : d;
  nm.p = p;
  ThresholdSweepConfig cfg;
  cfg.b_low = b_low;
  cfg.b_high = b_high;
  cfg.max_path_graph = max_pg;
  const auto parse_list = [](const std::string& csv) {
    std::vector<std::int64_t> out;
    std::istringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) out.push_back(std::stoll(item));
    return out;
  };
  cfg.wth_list = parse_list(wth_list_str);
  for (std::int64_t m : parse_list(mult_list_str))
    cfg.k_multipliers.push_back(static_cast<int>(m));
  const auto res = threshold_sweep(nm, cfg, shots, pick_seed(seed_flag));
  write_output(out_path, format_sweep_csv(res.rows));
  return 0;
}

int run_oracle_check(int n_max, int cases, std::int64_t seed_flag) {
  const std::uint64_t seed = pick_seed(seed_flag);
  int disagreements = 0;
  int isolated = 0;
  for (int c = 0; c < cases; ++c) {
    const std::uint64_t s = derive_seed(seed, c);
    const int n = 4 + 2 * static_cast<int>(Rng(s).uniform_int(0, (n_max - 4) / 2));
    const PathGraph pg = random_even_graph(n, 256, s + 1);
    const std::int64_t w_max = default_w_max(n);
    const auto pw = perturb(pg, Scheme::kAmplified, w_max, s + 2);
    const auto wth = static_cast<std::size_t>(
        required_wth_bound(pg, Scheme::kAmplified, w_max) + 2);
    const DecodeOutcome ring = decode(pg, pw, wth);
    const DecodeOutcome exact = appendix_a_decode(pg, pw);
    if (ring.status != exact.status || ring.w_star != exact.w_star ||
        ring.matching != exact.matching) {
      ++disagreements;
      std::cerr << "case " << c << ": ring " << to_string(ring.status)
                << " vs exact " << to_string(exact.status) << "\n";
      continue;
    }
    if (ring.status != DecodeStatus::kMatching) continue;
    ++isolated;
    const auto enumd = exhaustive_mwpm(
        pg, [&](int ei) { return pw.effective[ei]; });
    if (!enumd.has_matching || enumd.optimal.size() != 1) continue;
    if (enumd.optimal.front() != ring.matching) ++disagreements;
  }
  std::cout << "oracle-check cases " << cases << " matchings " << isolated
            << " disagreements " << disagreements << "\n";
  return disagreements == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  polymatch::apply_thread_cap_from_env();
  CLI::App app{"determinant-based MWPM decoder over F2[X]/(X^w_th)"};
  app.require_subcommand(1);

  // decode
  std::string graph_path, syn_path, out_path, scheme = "plain", rng = "splitmix";
  std::size_t wth = 512;
  std::int64_t trials = 0, wmax = 0, seed = -1, shots = 10000;
  int b_low = 4, b_high = 8;
  bool early_exit = false;
  auto* dec = app.add_subcommand("decode", "decode syndrome shots from files");
  dec->add_option("--graph", graph_path, "detector graph file")->required();
  dec->add_option("--syndromes", syn_path, "syndrome sample file")->required();
  dec->add_option("--w-th", wth, "ring truncation width in bits");
  dec->add_option("--scheme", scheme, "plain|amplified")
      ->check(CLI::IsMember({"plain", "amplified"}));
  dec->add_option("--trials", trials, "perturbation trials K (0: 8*W_max)");
  dec->add_option("--w-max", wmax, "perturbation range (0: ceil(0.8 n^0.8))");
  dec->add_option("--b-low", b_low, "candidate-generation binary precision");
  dec->add_option("--b-high", b_high, "verification binary precision");
  dec->add_option("--seed", seed, "base seed (default: random 32-bit)");
  dec->add_option("--rng", rng, "splitmix|mt19937")
      ->check(CLI::IsMember({"splitmix", "mt19937"}));
  dec->add_flag("--early-exit", early_exit,
                "stop a shot at its first candidate (throughput mode)");
  dec->add_option("--out", out_path, "output file (default stdout)");

  // gen-graph
  int d = 3, rounds = 0;
  double p = 1e-3;
  auto* gen = app.add_subcommand("gen-graph",
                                 "phenomenological rotated-surface-code graph");
  gen->add_option("--d", d, "code distance (odd)")->required();
  gen->add_option("--rounds", rounds, "rounds (default: d)");
  gen->add_option("--p", p, "physical error rate");
  gen->add_option("--out", out_path, "output file (default stdout)");

  // sweep-precision
  int b_min = 5, b_max = 11;
  auto* sp = app.add_subcommand("sweep-precision",
                                "discretization-precision mismatch sweep");
  sp->add_option("--d", d, "code distance (odd)");
  sp->add_option("--rounds", rounds, "rounds (default: d)");
  sp->add_option("--p", p, "physical error rate");
  sp->add_option("--b-min", b_min, "lowest binary precision");
  sp->add_option("--b-max", b_max, "highest binary precision");
  sp->add_option("--shots", shots, "Monte Carlo shots");
  sp->add_option("--seed", seed, "seed (default: random 32-bit)");
  sp->add_option("--out", out_path, "output CSV (default stdout)");

  // sweep-threshold
  std::string wth_list = "256,512", mults = "1,2,4,8";
  int max_pg = 28;
  auto* st = app.add_subcommand("sweep-threshold",
                                "failure probability vs ring width sweep");
  st->add_option("--d", d, "code distance (odd)");
  st->add_option("--rounds", rounds, "rounds (default: d)");
  st->add_option("--p", p, "physical error rate");
  st->add_option("--w-th-list", wth_list, "comma-separated ring widths");
  st->add_option("--k-multipliers", mults, "comma-separated trial multipliers");
  st->add_option("--b-low", b_low, "candidate-generation binary precision");
  st->add_option("--b-high", b_high, "verification binary precision");
  st->add_option("--max-path-graph", max_pg, "largest decoded path graph");
  st->add_option("--shots", shots, "Monte Carlo shots");
  st->add_option("--seed", seed, "seed (default: random 32-bit)");
  st->add_option("--out", out_path, "output CSV (default stdout)");

  // oracle-check
  int n_max = 12, cases = 200;
  auto* oc = app.add_subcommand(
      "oracle-check", "cross-check ring decoder against exact-integer oracle");
  oc->add_option("--n-max", n_max, "largest graph order (even, <= 16)");
  oc->add_option("--cases", cases, "number of random cases");
  oc->add_option("--seed", seed, "seed (default: random 32-bit)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*dec)
      return run_decode(graph_path, syn_path, wth, scheme, trials, wmax, b_low,
                        b_high, seed, rng, early_exit, out_path);
    if (*gen) return run_gen_graph(d, rounds, p, out_path);
    if (*sp)
      return run_sweep_precision(d, rounds, p, b_min, b_max, shots, seed,
                                 out_path);
    if (*st)
      return run_sweep_threshold(d, rounds, p, wth_list, mults, b_low, b_high,
                                 max_pg, shots, seed, out_path);
    if (*oc) return run_oracle_check(n_max, cases, seed);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
