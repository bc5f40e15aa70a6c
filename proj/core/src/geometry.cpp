// Copyright 2026 msdil Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "msdil/geometry.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace msdil {

const char* pattern_name(PatternFamily family) {
  switch (family) {
    case PatternFamily::DV: return "dv";
    case PatternFamily::DH: return "dh";
    case PatternFamily::CV: return "cv";
    case PatternFamily::CH: return "ch";
  }
  return "?";
}

PatternFamily pattern_from_name(const std::string& name) {
  if (name == "dv" || name == "DV") return PatternFamily::DV;
  if (name == "dh" || name == "DH") return PatternFamily::DH;
  if (name == "cv" || name == "CV") return PatternFamily::CV;
  if (name == "ch" || name == "CH") return PatternFamily::CH;
  throw std::invalid_argument("unknown sparsification pattern: " + name);
}

int SurfaceCode::diag_index(int qubit) const {
  const QubitCoord& q = qubits[qubit];
  return q.horizontal ? q.row + q.col : q.row + q.col + 1;
}

SurfaceCode build_surface_code(int d) {
  if (d < 2) throw std::invalid_argument("invalid-distance: d must be >= 2");

  SurfaceCode code;
  code.d = d;
  code.n = d * d + (d - 1) * (d - 1);
  code.qubits.reserve(code.n);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) code.qubits.push_back({true, r, c});
  for (int r = 0; r < d - 1; ++r)
    for (int c = 0; c < d - 1; ++c) code.qubits.push_back({false, r, c});

  code.z_checks.resize(d * (d - 1));
  for (int R = 0; R < d; ++R) {
    for (int C = 0; C < d - 1; ++C) {
      std::vector<int>& supp = code.z_checks[code.z_check_index(R, C)];
      supp.push_back(code.h_index(R, C));
      supp.push_back(code.h_index(R, C + 1));
      if (R > 0) supp.push_back(code.v_index(R - 1, C));
      if (R < d - 1) supp.push_back(code.v_index(R, C));
      std::sort(supp.begin(), supp.end());
    }
  }
  code.x_checks.resize((d - 1) * d);
  for (int R = 0; R < d - 1; ++R) {
    for (int C = 0; C < d; ++C) {
      std::vector<int>& supp = code.x_checks[code.x_check_index(R, C)];
      supp.push_back(code.h_index(R, C));
      supp.push_back(code.h_index(R + 1, C));
      if (C > 0) supp.push_back(code.v_index(R, C - 1));
      if (C < d - 1) supp.push_back(code.v_index(R, C));
      std::sort(supp.begin(), supp.end());
    }
  }

  // Logical X: the top row of horizontal qubits (left-right string in the
  // Z-lattice). Logical Z: the leftmost column (top-bottom in the X-lattice).
  for (int c = 0; c < d; ++c) code.logical_x.push_back(code.h_index(0, c));
  for (int r = 0; r < d; ++r) code.logical_z.push_back(code.h_index(r, 0));
  return code;
}

int DilutedGraph::num_active() const {
  int count = 0;
  for (uint8_t a : active) count += a;
  return count;
}

namespace {

// Line-retention rules. Diagonal patterns keep every edge on diagonals with
// D = 0 (mod s+1) and drop one orientation elsewhere; Cartesian patterns keep
// the grid lines with index = 1 (mod s+1) and drop the rest of that
// orientation outright.
bool qubit_retained(const SurfaceCode& code, int qubit, PatternFamily family, int s) {
  if (s == 0) return true;
  const QubitCoord& q = code.qubits[qubit];
  const int period = s + 1;
  switch (family) {
    case PatternFamily::DV: {
      if (q.horizontal) return true;
      return code.diag_index(qubit) % period == 0;
    }
    case PatternFamily::DH: {
      if (!q.horizontal) return true;
      return code.diag_index(qubit) % period == 0;
    }
    case PatternFamily::CH: {
      if (!q.horizontal) return true;
      return q.row % period == 1 % period;
    }
    case PatternFamily::CV: {
      if (q.horizontal) return true;
      return q.col % period == 1 % period;
    }
  }
  return true;
}

void build_edge_arrays_impl(DilutedGraph& g) {
  const int num_z = static_cast<int>(g.z_check_neighbors.size());
  const int num_x = static_cast<int>(g.x_check_neighbors.size());
  const int n = static_cast<int>(g.active.size());
  g.qubit_z_edges.assign(n, {});
  g.qubit_x_edges.assign(n, {});
  g.z_check_offsets.assign(num_z + 1, 0);
  g.x_check_offsets.assign(num_x + 1, 0);
  g.z_edge_qubit.clear();
  g.x_edge_qubit.clear();
  for (int a = 0; a < num_z; ++a) {
    for (int q : g.z_check_neighbors[a]) {
      g.qubit_z_edges[q].push_back(static_cast<int>(g.z_edge_qubit.size()));
      g.z_edge_qubit.push_back(q);
    }
    g.z_check_offsets[a + 1] = static_cast<int>(g.z_edge_qubit.size());
  }
  for (int a = 0; a < num_x; ++a) {
    for (int q : g.x_check_neighbors[a]) {
      g.qubit_x_edges[q].push_back(static_cast<int>(g.x_edge_qubit.size()));
      g.x_edge_qubit.push_back(q);
    }
    g.x_check_offsets[a + 1] = static_cast<int>(g.x_edge_qubit.size());
  }
}

}  // namespace

void rebuild_edge_arrays(DilutedGraph& graph) { build_edge_arrays_impl(graph); }

ComponentLattice component_lattice(const SurfaceCode& code, const DilutedGraph& graph,
                                   CheckType type) {
  ComponentLattice lat;
  lat.type = type;
  const auto& checks = (type == CheckType::Z) ? graph.z_check_neighbors : graph.x_check_neighbors;
  lat.num_checks = static_cast<int>(checks.size());
  lat.adj.assign(lat.num_checks, {});

  // Endpoint map: for every active qubit collect the (at most two) checks of
  // this type containing it.
  std::vector<std::array<int, 2>> ends(code.n, {-1, -1});
  for (int a = 0; a < lat.num_checks; ++a) {
    for (int q : checks[a]) {
      if (ends[q][0] == -1)
        ends[q][0] = a;
      else
        ends[q][1] = a;
    }
  }
  for (int q = 0; q < code.n; ++q) {
    if (!graph.is_active(q)) continue;
    const int e = lat.num_edges();
    lat.edge_qubit.push_back(q);
    std::array<int, 2> ep = ends[q];
    if (ep[0] == -1) std::swap(ep[0], ep[1]);
    lat.edge_checks.push_back(ep);
    if (ep[0] != -1) lat.adj[ep[0]].push_back({ep[1], e});
    if (ep[1] != -1) lat.adj[ep[1]].push_back({ep[0], e});
  }
  return lat;
}

int count_check_components(const ComponentLattice& lattice) {
  std::vector<uint8_t> seen(lattice.num_checks, 0);
  int components = 0;
  std::deque<int> queue;
  for (int start = 0; start < lattice.num_checks; ++start) {
    if (seen[start]) continue;
    ++components;
    seen[start] = 1;
    queue.push_back(start);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (const auto& [v, e] : lattice.adj[u]) {
        if (v >= 0 && !seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
      }
    }
  }
  return components;
}

int lattice_girth(const ComponentLattice& lattice) {
  // BFS from every vertex; a non-tree edge closing at depths a, b gives a
  // cycle of length a + b + 1. Exact for unweighted graphs.
  const int inf = std::numeric_limits<int>::max();
  int best = inf;
  std::vector<int> dist(lattice.num_checks);
  std::vector<int> via_edge(lattice.num_checks);
  for (int root = 0; root < lattice.num_checks; ++root) {
    std::fill(dist.begin(), dist.end(), inf);
    std::deque<int> queue;
    dist[root] = 0;
    via_edge[root] = -1;
    queue.push_back(root);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (2 * dist[u] >= best) continue;
      for (const auto& [v, e] : lattice.adj[u]) {
        if (v < 0) continue;  // boundary dangle, no cycle through it
        if (dist[v] == inf) {
          dist[v] = dist[u] + 1;
          via_edge[v] = e;
          queue.push_back(v);
        } else if (e != via_edge[u] && e != via_edge[v]) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  return best == inf ? 0 : best;
}

DilutedGraph sparsify(const SurfaceCode& code, SparsificationPattern pattern) {
  if (pattern.s < 0 || pattern.s >= code.d)
    throw std::invalid_argument("invalid-ratio: require 0 <= s < d");

  DilutedGraph g;
  g.s = pattern.s;
  g.family = pattern.family;
  g.active.assign(code.n, 0);
  for (int q = 0; q < code.n; ++q)
    g.active[q] = qubit_retained(code, q, pattern.family, pattern.s) ? 1 : 0;

  g.z_check_neighbors.resize(code.num_z_checks());
  for (int a = 0; a < code.num_z_checks(); ++a)
    for (int q : code.z_checks[a])
      if (g.active[q]) g.z_check_neighbors[a].push_back(q);
  g.x_check_neighbors.resize(code.num_x_checks());
  for (int a = 0; a < code.num_x_checks(); ++a)
    for (int q : code.x_checks[a])
      if (g.active[q]) g.x_check_neighbors[a].push_back(q);

  build_edge_arrays_impl(g);

  // Girth of the preserved decoding lattice: both component lattices for the
  // diagonal patterns (they are isomorphic), the Z-lattice for Cartesian.
  int girth = lattice_girth(component_lattice(code, g, CheckType::Z));
  if (pattern.family == PatternFamily::DV || pattern.family == PatternFamily::DH) {
    int gx = lattice_girth(component_lattice(code, g, CheckType::X));
    if (girth == 0 || (gx != 0 && gx < girth)) girth = gx;
  }
  g.girth = girth;
  return g;
}

DilutionSequence dilution_sequence(const SurfaceCode& code, PatternFamily family) {
  DilutionSequence seq;
  seq.family = family;
  // K = floor(log2(d-1)), computed without floating point.
  int K = 0;
  while ((2 << K) <= code.d - 1) ++K;
  for (int k = 0; k <= K; ++k) {
    int s = (1 << k) - 1;
    DilutedGraph stage = sparsify(code, {family, s});
    stage.stage_index = k;
    seq.stages.push_back(std::move(stage));
  }
  return seq;
}

std::string export_graph(const SurfaceCode& code, const DilutedGraph& graph,
                         GraphFormat format) {
  std::ostringstream out;
  if (format == GraphFormat::EdgeList) {
    for (int a = 0; a < static_cast<int>(graph.x_check_neighbors.size()); ++a)
      for (int q : graph.x_check_neighbors[a]) out << "X " << a << " " << q << "\n";
    for (int a = 0; a < static_cast<int>(graph.z_check_neighbors.size()); ++a)
      for (int q : graph.z_check_neighbors[a]) out << "Z " << a << " " << q << "\n";
    return out.str();
  }
  if (format == GraphFormat::Dot) {
    out << "graph tanner {\n";
    for (int q = 0; q < code.n; ++q) {
      if (!graph.is_active(q)) continue;
      out << "  q" << q << " [shape=circle];\n";
    }
    for (int a = 0; a < static_cast<int>(graph.x_check_neighbors.size()); ++a)
      if (!graph.x_check_neighbors[a].empty()) out << "  x" << a << " [shape=box];\n";
    for (int a = 0; a < static_cast<int>(graph.z_check_neighbors.size()); ++a)
      if (!graph.z_check_neighbors[a].empty()) out << "  z" << a << " [shape=box];\n";
    for (int a = 0; a < static_cast<int>(graph.x_check_neighbors.size()); ++a)
      for (int q : graph.x_check_neighbors[a]) out << "  x" << a << " -- q" << q << ";\n";
    for (int a = 0; a < static_cast<int>(graph.z_check_neighbors.size()); ++a)
      for (int q : graph.z_check_neighbors[a]) out << "  z" << a << " -- q" << q << ";\n";
    out << "}\n";
    return out.str();
  }
  throw std::invalid_argument("unknown graph format");
}

EdgeListGraph read_edge_list(std::istream& in) {
  EdgeListGraph g;
  std::string type;
  int check, qubit;
  while (in >> type >> check >> qubit) {
    auto& lists = (type == "X") ? g.x_check_neighbors
                : (type == "Z") ? g.z_check_neighbors
                                : throw std::invalid_argument("bad edge-list check type: " + type);
    if (static_cast<int>(lists.size()) <= check) lists.resize(check + 1);
    lists[check].push_back(qubit);
  }
  return g;
}

}  // namespace msdil
