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

#ifndef MSDIL_ORACLE_HPP
#define MSDIL_ORACLE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "msdil/geometry.hpp"
#include "msdil/noise.hpp"
#include "msdil/pauli.hpp"

namespace msdil {

// Exact reference computations, independent of the message-passing path.
// Minimum-weight decoding is done by parity-annotated breadth-first search
// plus exhaustive enumeration over defect pairings (including boundary
// matchings), which keeps the oracle self-contained and auditable.

struct UnsatisfiableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Minimum-weight machinery for a single component lattice. The homology
// class of a zero-syndrome configuration is the parity of its overlap with a
// reference cut (the logical representative of the opposite type).
class MatchingOracle {
 public:
  static constexpr int kInf = 1 << 28;

  MatchingOracle(const ComponentLattice& lattice, std::vector<uint8_t> cut_qubit_mask);

  // Precomputes check-to-check and check-to-boundary distance tables for all
  // sources; required before min_weight_by_class.
  void precompute_tables();

  struct ClassCosts {
    int weight[2] = {kInf, kInf};  // indexed by crossing parity
  };

  // Exact minimum correction weight per class for a defect set (<= 16).
  ClassCosts min_weight_by_class(const std::vector<int>& defects) const;

  // Reconstructs one minimum-weight correction as a qubit set. Throws
  // UnsatisfiableError when the defect set cannot be matched on this lattice.
  std::vector<int> min_weight_correction(const std::vector<int>& defects) const;

  // Minimum weight of a nontrivial (odd-parity) zero-syndrome configuration.
  int min_logical_weight() const;

  // Greedy nearest-pair matching: upper bound with its class.
  std::pair<int, int> greedy_matching(const std::vector<int>& defects) const;

  int cut_parity_of_qubits(const std::vector<int>& qubits) const;
  const ComponentLattice& lattice() const { return lattice_; }

 private:
  struct Bfs {
    std::vector<int> dist;        // 2 * check + parity
    std::vector<int> parent_edge;
    std::vector<int> parent_state;
    int boundary_dist[2] = {kInf, kInf};
    int boundary_state[2] = {-1, -1};
    int boundary_edge[2] = {-1, -1};
  };
  Bfs bfs_from(int source) const;

  ComponentLattice lattice_;
  std::vector<uint8_t> cut_;  // per qubit id
  std::vector<uint8_t> edge_cut_;  // per lattice edge
  bool tables_ready_ = false;
  std::vector<uint16_t> dist_;      // [src][2*check+parity]
  std::vector<uint16_t> bdist_;     // [src][parity]
  int logical_weight_ = kInf;
};

// Exact minimum-weight correction for a single-type defect set on a possibly
// diluted lattice (Def.-style ideal decoder). Defects are check indices of
// the given type.
std::vector<int> min_weight_correction(const SurfaceCode& code, const DilutedGraph& graph,
                                       CheckType type, const std::vector<int>& defects);

// Minimum-weight configuration on the diluted lattice reproducing e's
// syndrome. e must be single-type (pure X or pure Z).
PauliConfig effective_error(const SurfaceCode& code, const DilutedGraph& graph,
                            const PauliConfig& e);

int theorem1_bound(int d, PatternFamily family, int s);

struct RadiusReport {
  int d = 0;
  PatternFamily family = PatternFamily::CH;
  int s = 0;
  int computed_radius = 0;
  int theorem_lower_bound = 0;
  int explored_weight = 0;   // exhaustive sweep cap actually used
  bool radius_is_exact = false;  // true when a failing error certifies the value
  std::vector<PauliConfig> witnesses;  // minimal failing errors, when found
};

// Exhaustive error-correcting radius under single-X noise: every error of
// weight <= t must be corrected logically-equivalently by the ideal decoder
// on the diluted Z-lattice. The sweep runs weights 1..max_weight and stops at
// the first failing weight.
RadiusReport error_correcting_radius(const SurfaceCode& code, SparsificationPattern pattern,
                                     int max_weight = 4, int num_threads = 0);

// Searches structured weight-w single-X errors (runs along retained rows)
// for one the ideal diluted decoder provably fails on. Used to certify
// radius upper bounds without an exhaustive weight-w sweep.
std::optional<PauliConfig> find_radius_witness(const SurfaceCode& code,
                                               SparsificationPattern pattern, int weight);

std::string radius_report_text(const RadiusReport& report);

// Cavity discrepancy of the mixed-type 4-cycle: total-variation distance
// between the conditional joint of (X_i, X_j) given Z_i xor Z_j = sigma and
// the product of its marginals.
double cavity_discrepancy_exact(const Prior& prior, int sigma);
double cavity_discrepancy_closed_form(const Prior& prior, int sigma);

struct Prop1Isomorphism {
  bool valid = false;
  std::vector<int> qubit_map;        // qubit id -> qubit id (transpose)
  std::vector<int> x_to_z_check;     // x-check id -> z-check id
};

// Explicit diagonal-reflection isomorphism between the diluted X- and
// Z-lattices for a diagonal pattern; throws for Cartesian patterns.
Prop1Isomorphism verify_prop1(const SurfaceCode& code, PatternFamily family, int s);

// Measured worst-case local expansion of the diagonal pattern: the maximum,
// over bulk errors on removed horizontal qubits, of the number of vertical
// qubits in the minimum-weight effective error. Equals 2*floor((s+1)/2).
int diagonal_local_expansion(const SurfaceCode& code, int s);

}  // namespace msdil

#endif
