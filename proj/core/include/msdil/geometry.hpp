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

#ifndef MSDIL_GEOMETRY_HPP
#define MSDIL_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace msdil {

// Planar (unrotated) distance-d surface code with qubits on lattice edges.
//
// Coordinate convention. Qubits are the edges of a d x d grid of horizontal
// edges plus a (d-1) x (d-1) grid of vertical edges:
//
//   horizontal qubit h(r, c):   r in [0, d),   c in [0, d)
//   vertical   qubit v(r, c):   r in [0, d-1), c in [0, d-1)
//
// Z-checks z(R, C), R in [0, d), C in [0, d-1), touch h(R,C), h(R,C+1) and
// the vertical qubits v(R-1,C), v(R,C) when present. X-checks x(R, C),
// R in [0, d-1), C in [0, d), touch h(R,C), h(R+1,C) and v(R,C-1), v(R,C).
// The Z-lattice has rough (open) boundaries on the left/right columns, the
// X-lattice on the top/bottom rows.
//
// Line indices used by the sparsification patterns:
//   diagonal index:   D(h(r,c)) = r + c,  D(v(r,c)) = r + c + 1
//   horizontal line:  r of a horizontal qubit
//   vertical line:    c of a vertical qubit

enum class CheckType : uint8_t { X, Z };

enum class PatternFamily : uint8_t { DV, DH, CV, CH };

const char* pattern_name(PatternFamily family);
PatternFamily pattern_from_name(const std::string& name);

struct QubitCoord {
  bool horizontal;
  int row;
  int col;
};

struct SurfaceCode {
  int d = 0;
  int n = 0;
  std::vector<QubitCoord> qubits;
  std::vector<std::vector<int>> x_checks;  // check id -> sorted qubit ids
  std::vector<std::vector<int>> z_checks;
  std::vector<int> logical_x;  // one minimum-weight representative each
  std::vector<int> logical_z;

  int num_x_checks() const { return static_cast<int>(x_checks.size()); }
  int num_z_checks() const { return static_cast<int>(z_checks.size()); }

  int h_index(int r, int c) const { return r * d + c; }
  int v_index(int r, int c) const { return d * d + r * (d - 1) + c; }
  int z_check_index(int R, int C) const { return R * (d - 1) + C; }
  int x_check_index(int R, int C) const { return R * d + C; }

  // Diagonal line index of a qubit (see convention above).
  int diag_index(int qubit) const;
};

SurfaceCode build_surface_code(int d);

struct SparsificationPattern {
  PatternFamily family;
  int s = 0;  // sparsification ratio, 0 = identity
};

// One stage's diluted Tanner graph. Checks are never removed; a check may
// end up with an empty retained neighbor list. Derived edge indexing (CSR
// over checks plus per-qubit reverse lists) is precomputed here so that
// decode trials can share one immutable graph.
struct DilutedGraph {
  int stage_index = -1;
  int s = 0;
  PatternFamily family = PatternFamily::DV;
  std::vector<uint8_t> active;                       // qubit mask, length n
  std::vector<std::vector<int>> x_check_neighbors;   // retained incidence
  std::vector<std::vector<int>> z_check_neighbors;
  int girth = 0;  // girth of the preserved decoding lattice, 0 if acyclic

  // Edge arrays. Edge e of type Z connects z-check z_edge_check[e] with
  // qubit z_edge_qubit[e]; z_check_offsets is CSR over z-checks.
  std::vector<int> z_check_offsets, z_edge_qubit;
  std::vector<int> x_check_offsets, x_edge_qubit;
  std::vector<std::vector<int>> qubit_z_edges;  // per qubit, edge ids
  std::vector<std::vector<int>> qubit_x_edges;

  int num_active() const;
  bool is_active(int qubit) const { return active[qubit] != 0; }
};

DilutedGraph sparsify(const SurfaceCode& code, SparsificationPattern pattern);

// Recomputes the CSR edge arrays and reverse lists from the neighbor lists.
// Needed when a graph is assembled by hand (synthetic Tanner graphs in the
// strip model and in tests).
void rebuild_edge_arrays(DilutedGraph& graph);

struct DilutionSequence {
  PatternFamily family = PatternFamily::DV;
  std::vector<DilutedGraph> stages;  // stages[k] has s_k = 2^k - 1

  int num_stages() const { return static_cast<int>(stages.size()); }
};

// Graph-dilution sequence with s_k = 2^k - 1 for k = 0..floor(log2(d-1)).
DilutionSequence dilution_sequence(const SurfaceCode& code, PatternFamily family);

// A component lattice: check vertices of one type plus an implicit open
// boundary; every active qubit is an edge (interior or dangling).
struct ComponentLattice {
  CheckType type = CheckType::Z;
  int num_checks = 0;
  std::vector<int> edge_qubit;                  // lattice edge -> qubit id
  std::vector<std::array<int, 2>> edge_checks;  // endpoints, -1 = boundary
  std::vector<std::vector<std::array<int, 2>>> adj;  // check -> {nbr check|-1, edge}

  int num_edges() const { return static_cast<int>(edge_qubit.size()); }
};

ComponentLattice component_lattice(const SurfaceCode& code, const DilutedGraph& graph,
                                   CheckType type);

// Number of connected components containing at least one check vertex.
int count_check_components(const ComponentLattice& lattice);

// Shortest cycle length among check vertices (boundary dangles excluded);
// 0 when the lattice is acyclic.
int lattice_girth(const ComponentLattice& lattice);

enum class GraphFormat { Dot, EdgeList };

// Deterministic serialization. Edge-list line format:
//   <check_type:X|Z> <check_id> <qubit_id>
std::string export_graph(const SurfaceCode& code, const DilutedGraph& graph,
                         GraphFormat format);

// Parses the edge-list format back into (x_check_neighbors, z_check_neighbors).
struct EdgeListGraph {
  std::vector<std::vector<int>> x_check_neighbors;
  std::vector<std::vector<int>> z_check_neighbors;
};
EdgeListGraph read_edge_list(std::istream& in);

}  // namespace msdil

#endif
