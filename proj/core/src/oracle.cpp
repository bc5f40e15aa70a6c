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

#include "msdil/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <deque>
#include <sstream>
#include <thread>

namespace msdil {

MatchingOracle::MatchingOracle(const ComponentLattice& lattice,
                               std::vector<uint8_t> cut_qubit_mask)
    : lattice_(lattice), cut_(std::move(cut_qubit_mask)) {
  edge_cut_.resize(lattice_.num_edges());
  for (int e = 0; e < lattice_.num_edges(); ++e)
    edge_cut_[e] = cut_[lattice_.edge_qubit[e]];
}

MatchingOracle::Bfs MatchingOracle::bfs_from(int source) const {
  Bfs out;
  const int states = 2 * lattice_.num_checks;
  out.dist.assign(states, kInf);
  out.parent_edge.assign(states, -1);
  out.parent_state.assign(states, -1);
  std::deque<int> queue;
  out.dist[2 * source] = 0;
  queue.push_back(2 * source);
  while (!queue.empty()) {
    const int state = queue.front();
    queue.pop_front();
    const int u = state >> 1;
    const int p = state & 1;
    const int du = out.dist[state];
    for (const auto& [v, e] : lattice_.adj[u]) {
      const int q = p ^ edge_cut_[e];
      if (v < 0) {
        if (du + 1 < out.boundary_dist[q]) {
          out.boundary_dist[q] = du + 1;
          out.boundary_state[q] = state;
          out.boundary_edge[q] = e;
        }
        continue;
      }
      const int next = 2 * v + q;
      if (du + 1 < out.dist[next]) {
        out.dist[next] = du + 1;
        out.parent_edge[next] = e;
        out.parent_state[next] = state;
        queue.push_back(next);
      }
    }
  }
  return out;
}

void MatchingOracle::precompute_tables() {
  if (tables_ready_) return;
  const int m = lattice_.num_checks;
  dist_.assign(static_cast<size_t>(m) * 2 * m, static_cast<uint16_t>(kInf > 65535 ? 65535 : kInf));
  bdist_.assign(static_cast<size_t>(m) * 2, 65535);
  for (int s = 0; s < m; ++s) {
    Bfs bfs = bfs_from(s);
    for (int st = 0; st < 2 * m; ++st)
      dist_[static_cast<size_t>(s) * 2 * m + st] =
          static_cast<uint16_t>(std::min(bfs.dist[st], 65535));
    bdist_[2 * s] = static_cast<uint16_t>(std::min(bfs.boundary_dist[0], 65535));
    bdist_[2 * s + 1] = static_cast<uint16_t>(std::min(bfs.boundary_dist[1], 65535));
  }

  // Minimum nontrivial zero-syndrome weight: lightest boundary-to-boundary
  // string with odd cut parity. Multi-source BFS from every dangling edge.
  const int states = 2 * m;
  std::vector<int> dist(states, kInf);
  std::deque<int> queue;
  for (int u = 0; u < m; ++u) {
    for (const auto& [v, e] : lattice_.adj[u]) {
      if (v >= 0) continue;
      const int st = 2 * u + edge_cut_[e];
      if (dist[st] > 1) {
        dist[st] = 1;
        queue.push_back(st);
      }
    }
  }
  logical_weight_ = kInf;
  while (!queue.empty()) {
    const int state = queue.front();
    queue.pop_front();
    const int u = state >> 1;
    const int p = state & 1;
    const int du = dist[state];
    if (du >= logical_weight_) continue;
    for (const auto& [v, e] : lattice_.adj[u]) {
      const int q = p ^ edge_cut_[e];
      if (v < 0) {
        if (q == 1) logical_weight_ = std::min(logical_weight_, du + 1);
        continue;
      }
      const int next = 2 * v + q;
      if (du + 1 < dist[next]) {
        dist[next] = du + 1;
        queue.push_back(next);
      }
    }
  }
  tables_ready_ = true;
}

int MatchingOracle::min_logical_weight() const {
  if (!tables_ready_)
    const_cast<MatchingOracle*>(this)->precompute_tables();
  return logical_weight_;
}

int MatchingOracle::cut_parity_of_qubits(const std::vector<int>& qubits) const {
  int parity = 0;
  for (int q : qubits) parity ^= cut_[q];
  return parity;
}

namespace {

struct MatchEnumerator {
  const std::vector<int>& defects;
  std::vector<const uint16_t*> rows;    // per defect: [2*check+parity]
  std::vector<const uint16_t*> brows;   // per defect: [parity]
  int best[2];
  // For reconstruction: choice per defect index: (-2 - parity) for boundary
  // matches, partner_index * 2 + parity for pair matches.
  std::vector<int> choice, best_choice[2];
  uint32_t used = 0;

  explicit MatchEnumerator(const std::vector<int>& d) : defects(d) {
    best[0] = best[1] = MatchingOracle::kInf;
    rows.resize(defects.size());
    brows.resize(defects.size());
    choice.assign(defects.size(), -1);
  }

  void run(bool keep_choices) { recurse(0, 0, keep_choices); }

  void recurse(int cost, int parity, bool keep) {
    if (cost >= std::max(best[0], best[1])) return;
    int i = 0;
    const int n = static_cast<int>(defects.size());
    while (i < n && (used & (1u << i))) ++i;
    if (i == n) {
      if (cost < best[parity]) {
        best[parity] = cost;
        if (keep) best_choice[parity] = choice;
      }
      return;
    }
    used |= 1u << i;
    const uint16_t* row = rows[i];
    // Boundary matches for defect i. 65535 marks unreachable states.
    for (int p = 0; p < 2; ++p) {
      const int w = brows[i][p];
      if (w < 65535 && cost + w < std::max(best[0], best[1])) {
        choice[i] = -2 - p;
        recurse(cost + w, parity ^ p, keep);
      }
    }
    // Pair matches.
    for (int j = i + 1; j < n; ++j) {
      if (used & (1u << j)) continue;
      used |= 1u << j;
      for (int p = 0; p < 2; ++p) {
        const int w = row[2 * defects[j] + p];
        if (w < 65535 && cost + w < std::max(best[0], best[1])) {
          choice[i] = 2 * j + p;
          choice[j] = 2 * i + p;
          recurse(cost + w, parity ^ p, keep);
        }
      }
      used &= ~(1u << j);
    }
    used &= ~(1u << i);
  }
};

}  // namespace

MatchingOracle::ClassCosts MatchingOracle::min_weight_by_class(
    const std::vector<int>& defects) const {
  if (defects.size() > 16)
    throw std::invalid_argument("defect set too large for exhaustive matching");
  if (!tables_ready_)
    const_cast<MatchingOracle*>(this)->precompute_tables();
  ClassCosts costs;
  if (defects.empty()) {
    costs.weight[0] = 0;
    costs.weight[1] = min_logical_weight();
    return costs;
  }
  const int m = lattice_.num_checks;
  const int n = static_cast<int>(defects.size());
  MatchEnumerator enumerator(defects);
  for (int i = 0; i < n; ++i) {
    enumerator.rows[i] = &dist_[static_cast<size_t>(defects[i]) * 2 * m];
    enumerator.brows[i] = &bdist_[static_cast<size_t>(2) * defects[i]];
  }
  enumerator.run(false);
  costs.weight[0] = enumerator.best[0];
  costs.weight[1] = enumerator.best[1];
  // A matching in class c plus the lightest logical realizes class 1-c.
  const int logical = min_logical_weight();
  if (logical < kInf) {
    costs.weight[0] = std::min(costs.weight[0],
                               costs.weight[1] >= kInf ? kInf : costs.weight[1] + logical);
    costs.weight[1] = std::min(costs.weight[1],
                               costs.weight[0] >= kInf ? kInf : costs.weight[0] + logical);
  }
  return costs;
}

std::pair<int, int> MatchingOracle::greedy_matching(const std::vector<int>& defects) const {
  int cost = 0, parity = 0;
  std::vector<int> remaining = defects;
  while (!remaining.empty()) {
    const int u = remaining.back();
    remaining.pop_back();
    const uint16_t* row = &dist_[static_cast<size_t>(u) * 2 * lattice_.num_checks];
    int best_w = kInf, best_p = 0, best_j = -1;
    for (int p = 0; p < 2; ++p) {
      const int w = bdist_[2 * u + p];
      if (w < best_w) {
        best_w = w;
        best_p = p;
        best_j = -1;
      }
    }
    for (int j = 0; j < static_cast<int>(remaining.size()); ++j) {
      for (int p = 0; p < 2; ++p) {
        const int w = row[2 * remaining[j] + p];
        if (w < best_w) {
          best_w = w;
          best_p = p;
          best_j = j;
        }
      }
    }
    if (best_w >= 65535) return {kInf, 0};
    cost += best_w;
    parity ^= best_p;
    if (best_j >= 0) {
      remaining[best_j] = remaining.back();
      remaining.pop_back();
    }
  }
  return {cost, parity};
}

std::vector<int> MatchingOracle::min_weight_correction(const std::vector<int>& defects) const {
  if (defects.size() > 16)
    throw std::invalid_argument("defect set too large for exhaustive matching");
  if (defects.empty()) return {};
  const int n = static_cast<int>(defects.size());
  const int m = lattice_.num_checks;
  std::vector<Bfs> trees;
  trees.reserve(n);
  std::vector<uint16_t> dist(static_cast<size_t>(n) * 2 * m);
  std::vector<uint16_t> bdist(static_cast<size_t>(n) * 2);
  for (int i = 0; i < n; ++i) {
    trees.push_back(bfs_from(defects[i]));
    for (int st = 0; st < 2 * m; ++st)
      dist[static_cast<size_t>(i) * 2 * m + st] =
          static_cast<uint16_t>(std::min(trees[i].dist[st], 65535));
    bdist[2 * i] = static_cast<uint16_t>(std::min(trees[i].boundary_dist[0], 65535));
    bdist[2 * i + 1] = static_cast<uint16_t>(std::min(trees[i].boundary_dist[1], 65535));
  }

  MatchEnumerator enumerator(defects);
  for (int i = 0; i < n; ++i) {
    enumerator.rows[i] = &dist[static_cast<size_t>(i) * 2 * m];
    enumerator.brows[i] = &bdist[static_cast<size_t>(2) * i];
  }
  enumerator.run(true);
  const int cls = enumerator.best[1] < enumerator.best[0] ? 1 : 0;
  if (enumerator.best[cls] >= kInf)
    throw UnsatisfiableError("defect set unsatisfiable on this lattice");
  const std::vector<int>& choice = enumerator.best_choice[cls];

  std::vector<uint8_t> in_correction(lattice_.num_edges(), 0);
  auto xor_path_to_state = [&](const Bfs& tree, int state) {
    while (tree.parent_state[state] != -1) {
      in_correction[tree.parent_edge[state]] ^= 1;
      state = tree.parent_state[state];
    }
  };
  for (int i = 0; i < n; ++i) {
    const int c = choice[i];
    if (c <= -2) {
      const int p = -2 - c;
      in_correction[trees[i].boundary_edge[p]] ^= 1;
      xor_path_to_state(trees[i], trees[i].boundary_state[p]);
    } else if (c >= 0) {
      const int j = c >> 1;
      const int p = c & 1;
      if (j > i) xor_path_to_state(trees[i], 2 * defects[j] + p);
    }
  }
  std::vector<int> qubits;
  for (int e = 0; e < lattice_.num_edges(); ++e)
    if (in_correction[e]) qubits.push_back(lattice_.edge_qubit[e]);
  return qubits;
}

namespace {

std::vector<uint8_t> cut_mask_for(const SurfaceCode& code, CheckType type) {
  std::vector<uint8_t> cut(code.n, 0);
  const std::vector<int>& logical =
      (type == CheckType::Z) ? code.logical_z : code.logical_x;
  for (int q : logical) cut[q] = 1;
  return cut;
}

std::vector<int> defect_list(const std::vector<uint8_t>& bits) {
  std::vector<int> defects;
  for (int a = 0; a < static_cast<int>(bits.size()); ++a)
    if (bits[a]) defects.push_back(a);
  return defects;
}

}  // namespace

std::vector<int> min_weight_correction(const SurfaceCode& code, const DilutedGraph& graph,
                                       CheckType type, const std::vector<int>& defects) {
  if (defects.size() > 12)
    throw std::invalid_argument("min_weight_correction supports at most 12 defects");
  MatchingOracle oracle(component_lattice(code, graph, type), cut_mask_for(code, type));
  return oracle.min_weight_correction(defects);
}

PauliConfig effective_error(const SurfaceCode& code, const DilutedGraph& graph,
                            const PauliConfig& e) {
  bool has_x = false, has_z = false;
  for (int i = 0; i < e.size(); ++i) {
    has_x |= e.x_bits[i] != 0;
    has_z |= e.z_bits[i] != 0;
  }
  if (has_x && has_z)
    throw std::invalid_argument("effective_error requires a single-type configuration");
  const CheckType type = has_z ? CheckType::X : CheckType::Z;
  Syndrome s = syndrome(code, e);
  const std::vector<int> defects =
      defect_list(type == CheckType::Z ? s.z_check_bits : s.x_check_bits);
  const std::vector<int> qubits = min_weight_correction(code, graph, type, defects);
  PauliConfig out(code.n);
  for (int q : qubits) {
    if (type == CheckType::Z)
      out.x_bits[q] = 1;
    else
      out.z_bits[q] = 1;
  }
  return out;
}

int theorem1_bound(int d, PatternFamily family, int s) {
  if (s < 1) return (d - 1) / 2;
  switch (family) {
    case PatternFamily::DH:
      return (d - 1) / (2 * ((s + 1) / 2) + 2);
    case PatternFamily::CH:
      return (d - 1) / ((s - 1) / 2 + 2);
    default:
      throw std::invalid_argument("theorem bound is stated for DH and CH patterns");
  }
}

namespace {

// Exhaustive single-X sweep state. Errors are combinations of qubit indices;
// syndrome defects are maintained incrementally while recursing.
struct RadiusSweep {
  const SurfaceCode& code;
  const MatchingOracle& oracle;
  const std::vector<std::vector<int>>& qubit_checks;  // qubit -> z-check ids
  const std::vector<uint8_t>& cut;
  int logical_weight;

  std::vector<uint8_t> defect_bits;
  std::vector<int> defects;
  std::vector<int> error;
  int error_parity = 0;
  bool failed = false;
  std::vector<int> failing_error;

  RadiusSweep(const SurfaceCode& c, const MatchingOracle& o,
              const std::vector<std::vector<int>>& qc, const std::vector<uint8_t>& cut_mask)
      : code(c), oracle(o), qubit_checks(qc), cut(cut_mask) {
    logical_weight = oracle.min_logical_weight();
    defect_bits.assign(code.num_z_checks(), 0);
  }

  void toggle(int qubit) {
    for (int a : qubit_checks[qubit]) {
      if (defect_bits[a]) {
        defect_bits[a] = 0;
        defects.erase(std::find(defects.begin(), defects.end(), a));
      } else {
        defect_bits[a] = 1;
        defects.push_back(a);
      }
    }
    error_parity ^= cut[qubit];
  }

  bool corrected() {
    // Zero syndrome: the unique minimum correction is empty, so the error is
    // handled exactly when it is itself a stabilizer.
    if (defects.empty()) return error_parity == 0;
    auto [greedy_cost, greedy_parity] = oracle.greedy_matching(defects);
    if (greedy_parity == error_parity && 2 * greedy_cost < logical_weight) return true;
    MatchingOracle::ClassCosts costs = oracle.min_weight_by_class(defects);
    return costs.weight[error_parity] < costs.weight[1 - error_parity];
  }

  // Enumerates errors of exactly `depth` more qubits starting from `first`.
  void sweep(int first, int depth) {
    if (failed) return;
    if (depth == 0) {
      if (!corrected()) {
        failed = true;
        failing_error = error;
      }
      return;
    }
    for (int q = first; q <= code.n - depth && !failed; ++q) {
      toggle(q);
      error.push_back(q);
      sweep(q + 1, depth - 1);
      error.pop_back();
      toggle(q);
    }
  }
};

}  // namespace

RadiusReport error_correcting_radius(const SurfaceCode& code, SparsificationPattern pattern,
                                     int max_weight, int num_threads) {
  RadiusReport report;
  report.d = code.d;
  report.family = pattern.family;
  report.s = pattern.s;
  try {
    report.theorem_lower_bound = theorem1_bound(code.d, pattern.family, pattern.s);
  } catch (const std::invalid_argument&) {
    report.theorem_lower_bound = 0;
  }

  DilutedGraph graph = sparsify(code, pattern);
  MatchingOracle oracle(component_lattice(code, graph, CheckType::Z),
                        cut_mask_for(code, CheckType::Z));
  oracle.precompute_tables();

  std::vector<std::vector<int>> qubit_checks(code.n);
  for (int a = 0; a < code.num_z_checks(); ++a)
    for (int q : code.z_checks[a]) qubit_checks[q].push_back(a);
  const std::vector<uint8_t> cut = cut_mask_for(code, CheckType::Z);

  if (num_threads <= 0)
    num_threads = std::max(1u, std::thread::hardware_concurrency());

  report.computed_radius = 0;
  for (int w = 1; w <= max_weight; ++w) {
    // Partition by the first qubit index.
    std::vector<RadiusSweep> workers;
    workers.reserve(num_threads);
    for (int t = 0; t < num_threads; ++t)
      workers.emplace_back(code, oracle, qubit_checks, cut);
    std::vector<std::thread> threads;
    for (int t = 0; t < num_threads; ++t) {
      threads.emplace_back([&, t, w]() {
        RadiusSweep& sweep = workers[t];
        for (int q = t; q <= code.n - w; q += num_threads) {
          if (sweep.failed) break;
          sweep.toggle(q);
          sweep.error.push_back(q);
          sweep.sweep(q + 1, w - 1);
          sweep.error.pop_back();
          sweep.toggle(q);
        }
      });
    }
    for (auto& th : threads) th.join();

    bool any_failed = false;
    for (RadiusSweep& sweep : workers) {
      if (!sweep.failed) continue;
      any_failed = true;
      PauliConfig witness(code.n);
      for (int q : sweep.failing_error) witness.x_bits[q] = 1;
      report.witnesses.push_back(std::move(witness));
    }
    report.explored_weight = w;
    if (any_failed) {
      report.computed_radius = w - 1;
      report.radius_is_exact = true;
      return report;
    }
    report.computed_radius = w;
  }
  return report;
}

std::optional<PauliConfig> find_radius_witness(const SurfaceCode& code,
                                               SparsificationPattern pattern, int weight) {
  DilutedGraph graph = sparsify(code, pattern);
  MatchingOracle oracle(component_lattice(code, graph, CheckType::Z),
                        cut_mask_for(code, CheckType::Z));
  oracle.precompute_tables();
  const std::vector<uint8_t> cut = cut_mask_for(code, CheckType::Z);

  // Runs of consecutive horizontal qubits within one row: the classic
  // majority-flip failures of minimum-weight decoding.
  for (int r = 0; r < code.d; ++r) {
    for (int c0 = 0; c0 + weight <= code.d; ++c0) {
      PauliConfig e(code.n);
      std::vector<int> qubits;
      for (int c = c0; c < c0 + weight; ++c) {
        const int q = code.h_index(r, c);
        e.x_bits[q] = 1;
        qubits.push_back(q);
      }
      Syndrome s = syndrome(code, e);
      const std::vector<int> defects = defect_list(s.z_check_bits);
      if (defects.size() > 16) continue;
      int parity = 0;
      for (int q : qubits) parity ^= cut[q];
      MatchingOracle::ClassCosts costs = oracle.min_weight_by_class(defects);
      if (!(costs.weight[parity] < costs.weight[1 - parity])) return e;
    }
  }
  return std::nullopt;
}

std::string radius_report_text(const RadiusReport& report) {
  std::ostringstream out;
  out << "{\n"
      << "  \"d\": " << report.d << ",\n"
      << "  \"pattern\": \"" << pattern_name(report.family) << "\",\n"
      << "  \"s\": " << report.s << ",\n"
      << "  \"computed_radius\": " << report.computed_radius << ",\n"
      << "  \"radius_is_exact\": " << (report.radius_is_exact ? "true" : "false") << ",\n"
      << "  \"theorem_lower_bound\": " << report.theorem_lower_bound << ",\n"
      << "  \"explored_weight\": " << report.explored_weight << ",\n"
      << "  \"num_witnesses\": " << report.witnesses.size() << "\n"
      << "}\n";
  return out.str();
}

double cavity_discrepancy_exact(const Prior& prior, int sigma) {
  const double p[2][2] = {{prior.p_i, prior.p_z}, {prior.p_x, prior.p_y}};  // p[x][z]
  double joint[2][2] = {{0, 0}, {0, 0}};
  double total = 0.0;
  for (int xi = 0; xi < 2; ++xi)
    for (int zi = 0; zi < 2; ++zi)
      for (int xj = 0; xj < 2; ++xj)
        for (int zj = 0; zj < 2; ++zj) {
          if ((zi ^ zj) != sigma) continue;
          const double w = p[xi][zi] * p[xj][zj];
          joint[xi][xj] += w;
          total += w;
        }
  if (total <= 0.0) throw std::invalid_argument("conditioning event has probability zero");
  double mx_i[2] = {0, 0}, mx_j[2] = {0, 0};
  for (int xi = 0; xi < 2; ++xi)
    for (int xj = 0; xj < 2; ++xj) {
      joint[xi][xj] /= total;
      mx_i[xi] += joint[xi][xj];
      mx_j[xj] += joint[xi][xj];
    }
  double tv = 0.0;
  for (int xi = 0; xi < 2; ++xi)
    for (int xj = 0; xj < 2; ++xj) tv += std::fabs(joint[xi][xj] - mx_i[xi] * mx_j[xj]);
  return 0.5 * tv;
}

double cavity_discrepancy_closed_form(const Prior& prior, int sigma) {
  const double kappa = xz_coupling(prior);
  const double pz = prior.p_z + prior.p_y;
  const double denom = (sigma == 0)
                           ? (1.0 - pz) * (1.0 - pz) + pz * pz
                           : 2.0 * pz * (1.0 - pz);
  if (denom <= 0.0) throw std::invalid_argument("conditioning event has probability zero");
  return 2.0 * kappa * kappa / (denom * denom);
}

Prop1Isomorphism verify_prop1(const SurfaceCode& code, PatternFamily family, int s) {
  if (family != PatternFamily::DV && family != PatternFamily::DH)
    throw std::invalid_argument("prop1 reflection applies to diagonal patterns only");

  const int d = code.d;
  Prop1Isomorphism iso;
  iso.qubit_map.assign(code.n, -1);
  iso.x_to_z_check.assign(code.num_x_checks(), -1);

  // Transpose in doubled coordinates: h(r,c) <-> h(c,r), v(r,c) <-> v(c,r),
  // x(R,C) <-> z(C,R). Diagonal indices are invariant, so the diluted sets map
  // onto each other.
  for (int q = 0; q < code.n; ++q) {
    const QubitCoord& qc = code.qubits[q];
    iso.qubit_map[q] = qc.horizontal ? code.h_index(qc.col, qc.row)
                                     : code.v_index(qc.col, qc.row);
  }
  for (int R = 0; R < d - 1; ++R)
    for (int C = 0; C < d; ++C)
      iso.x_to_z_check[code.x_check_index(R, C)] = code.z_check_index(C, R);

  DilutedGraph graph = sparsify(code, {family, s});

  // Adjacency preservation on the diluted graphs: the image of every retained
  // X-incidence must be exactly the retained incidence of the image Z-check.
  for (int a = 0; a < code.num_x_checks(); ++a) {
    std::vector<int> mapped;
    for (int q : graph.x_check_neighbors[a]) {
      if (graph.active[q] != graph.active[iso.qubit_map[q]]) return iso;
      mapped.push_back(iso.qubit_map[q]);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped != graph.z_check_neighbors[iso.x_to_z_check[a]]) return iso;
  }
  // Bijectivity of the qubit map on the active set.
  for (int q = 0; q < code.n; ++q) {
    if (iso.qubit_map[iso.qubit_map[q]] != q) return iso;
    if (graph.active[q] != graph.active[iso.qubit_map[q]]) return iso;
  }
  iso.valid = true;
  return iso;
}

int diagonal_local_expansion(const SurfaceCode& code, int s) {
  // Worst bulk error on a removed horizontal qubit under DH: count the
  // vertical qubits of its minimum-weight effective error.
  DilutedGraph graph = sparsify(code, {PatternFamily::DH, s});
  MatchingOracle oracle(component_lattice(code, graph, CheckType::Z),
                        cut_mask_for(code, CheckType::Z));
  int worst = 0;
  const int margin = s + 2;
  for (int r = margin; r < code.d - margin; ++r) {
    for (int c = margin; c < code.d - margin; ++c) {
      const int q = code.h_index(r, c);
      if (graph.is_active(q)) continue;
      PauliConfig e(code.n);
      e.x_bits[q] = 1;
      Syndrome syn = syndrome(code, e);
      std::vector<int> correction =
          oracle.min_weight_correction(defect_list(syn.z_check_bits));
      // The detour spends exactly one horizontal qubit on a retained
      // diagonal; the rest is the interior vertical excursion. Counting by
      // total weight keeps the measurement invariant under minimizer ties.
      worst = std::max(worst, static_cast<int>(correction.size()) - 1);
    }
  }
  return worst;
}

}  // namespace msdil
