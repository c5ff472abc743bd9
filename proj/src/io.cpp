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

#include "polymatch/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polymatch {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + msg);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

DetectorGraph read_detector_graph(std::istream& in) {
  DetectorGraph g;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  int declared_vertices = 0;
  std::vector<bool> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string tok;
    ss >> tok;
    if (!have_header) {
      std::string version;
      if (tok != "dgraph" || !(ss >> version >> declared_vertices) ||
          version != "v1" || declared_vertices < 0)
        fail(line_no, "expected header 'dgraph v1 <num_vertices>'");
      have_header = true;
      g.kinds.assign(declared_vertices, VertexKind::kDetector);
      seen.assign(declared_vertices, false);
      continue;
    }
    if (tok == "v") {
      int id;
      std::string kind;
      if (!(ss >> id >> kind)) fail(line_no, "bad vertex line");
      if (id < 0 || id >= declared_vertices) fail(line_no, "vertex id out of range");
      if (seen[id]) fail(line_no, "duplicate vertex id");
      seen[id] = true;
      if (kind == "detector") g.kinds[id] = VertexKind::kDetector;
      else if (kind == "boundary") g.kinds[id] = VertexKind::kBoundary;
      else fail(line_no, "vertex kind must be detector|boundary");
    } else if (tok == "e") {
      DetectorGraph::Edge e;
      if (!(ss >> e.u >> e.v >> e.p)) fail(line_no, "bad edge line");
      std::string opt;
      if (ss >> opt) {
        if (opt != "w" || !(ss >> e.w_override) || e.w_override < 1)
          fail(line_no, "bad weight override");
      }
      g.edges.push_back(e);
    } else {
      fail(line_no, "unknown record '" + tok + "'");
    }
  }
  if (!have_header) throw std::runtime_error("missing dgraph header");
  for (int i = 0; i < declared_vertices; ++i)
    if (!seen[i])
      throw std::runtime_error("vertex " + std::to_string(i) + " undeclared");
  g.finalize();
  return g;
}

DetectorGraph read_detector_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_detector_graph(in);
}

void write_detector_graph(std::ostream& out, const DetectorGraph& g) {
  out << "dgraph v1 " << g.num_vertices() << "\n";
  for (int v = 0; v < g.num_vertices(); ++v)
    out << "v " << v << ' ' << (g.is_detector(v) ? "detector" : "boundary")
        << "\n";
  for (const auto& e : g.edges) {
    out << "e " << e.u << ' ' << e.v << ' ' << format_double(e.p);
    if (e.w_override >= 1) out << " w " << e.w_override;
    out << "\n";
  }
}

std::vector<std::vector<int>> read_syndromes(std::istream& in) {
  std::vector<std::vector<int>> shots;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<int> shot;
    std::istringstream ss(line);
    int id;
    while (ss >> id) shot.push_back(id);
    if (!ss.eof())
      throw std::runtime_error("syndrome line " +
                               std::to_string(shots.size() + 1) +
                               ": non-integer token");
    shots.push_back(std::move(shot));
  }
  return shots;
}

std::vector<std::vector<int>> read_syndromes_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_syndromes(in);
}

void write_syndromes(std::ostream& out,
                     const std::vector<std::vector<int>>& shots) {
  for (const auto& shot : shots) {
    for (std::size_t i = 0; i < shot.size(); ++i) {
      if (i) out << ' ';
      out << shot[i];
    }
    out << "\n";
  }
}

std::string format_shot_record(int shot_id, const DecodeOutcome& out,
                               const PathGraph& pg) {
  std::ostringstream ss;
  ss << "shot " << shot_id << " status " << to_string(out.status);
  if (out.status == DecodeStatus::kMatching) {
    ss << " wstar " << out.w_star << " weight " << out.weight_under
       << " edges";
    const int k = pg.n / 2;
    for (auto [u, v] : out.matching) {
      if (u >= k && v >= k) continue;  // paired spare boundary copies
      ss << ' ';
      if (pg.structured() && !pg.active_ids.empty()) {
        ss << pg.active_ids[u] << '-';
        if (v >= k) ss << 'B';
        else ss << pg.active_ids[v];
      } else {
        ss << u << '-' << v;
      }
    }
  } else {
    ss << " wstar -1 weight -1 edges";
  }
  return ss.str();
}

std::string format_sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream ss;
  ss << "axis,value,trials,failures,stderr\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.9g", r.stderr_value);
    ss << r.axis << ',' << r.value << ',' << r.trials << ',' << r.failures
       << ',' << buf << "\n";
  }
  return ss.str();
}

}  // namespace polymatch
