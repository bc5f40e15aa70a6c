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

#include "msdil/strip.hpp"

#include <algorithm>
#include <stdexcept>

#include "msdil/minsum.hpp"

namespace msdil {

namespace {

// Ring syndrome: check i is the parity of qubits i-1 and i.
std::vector<uint8_t> ring_syndrome(const std::vector<uint8_t>& e) {
  const int d = static_cast<int>(e.size());
  std::vector<uint8_t> sigma(d, 0);
  for (int i = 0; i < d; ++i) sigma[i] = e[(i + d - 1) % d] ^ e[i];
  return sigma;
}

// Synthetic Tanner graph of a length-L repetition ring: L qubits, L degree-2
// checks, expressed as Z-checks so the quaternary engine's X component runs
// it as plain binary Min-Sum.
DilutedGraph ring_graph(int length) {
  DilutedGraph g;
  g.active.assign(length, 1);
  g.z_check_neighbors.resize(length);
  for (int i = 0; i < length; ++i)
    g.z_check_neighbors[i] = {(i + length - 1) % length, i};
  g.x_check_neighbors = {};
  rebuild_edge_arrays(g);
  return g;
}

Syndrome as_engine_syndrome(const std::vector<uint8_t>& bits) {
  Syndrome s;
  s.z_check_bits = bits;
  s.x_check_bits = {};
  return s;
}

// Runs exactly `iters` binary Min-Sum iterations on a ring and returns the
// hard decision after each call-side test. The provided callback is invoked
// with the current decision once per iteration; returning true stops early.
template <typename StopFn>
std::vector<uint8_t> run_ring_minsum(const DilutedGraph& graph,
                                     const std::vector<uint8_t>& sigma, double p, double eps,
                                     int iters, int& used_iters, StopFn stop) {
  MpConfig config;
  config.mode = MpMode::MinSum;
  config.damping = eps;
  const Prior prior = prior_of({NoiseKind::SingleX, p});
  const PriorTables tables = make_prior_tables(prior, config.clip);
  const Syndrome target = as_engine_syndrome(sigma);
  MessageState st = init_state(graph, tables, config);
  std::vector<uint8_t> decision(graph.active.size(), 0);
  used_iters = 0;
  for (int t = 1; t <= iters; ++t) {
    check_update(graph, target, st, config);
    compute_fields(graph, tables, st, config);
    ++used_iters;
    for (int q = 0; q < static_cast<int>(decision.size()); ++q)
      decision[q] = st.h_x[q] < 0.0 ? 1 : 0;
    if (stop(decision)) return decision;
    variable_update(graph, tables, st, config);
    st.h_x_prev = st.h_x;
    st.h_z_prev = st.h_z;
  }
  return decision;
}

}  // namespace

Strip make_strip(int d) {
  if (d < 2) throw std::invalid_argument("strip length must be >= 2");
  Strip strip;
  strip.length = d;
  int K = 0;
  while (K + 1 < 31 && d % (1 << (K + 1)) == 0 && (d >> (K + 1)) >= 2) ++K;
  strip.num_stages = K + 1;
  return strip;
}

int strip_schedule(int k) { return std::min(1 << k, 20 * k + 20); }

std::vector<uint8_t> merge_syndrome(const std::vector<uint8_t>& sigma, int stage) {
  const int d = static_cast<int>(sigma.size());
  const int step = 1 << stage;
  if (d % step != 0) throw std::invalid_argument("ring not divisible by stage spacing");
  const int coarse = d / step;
  std::vector<uint8_t> merged(coarse, 0);
  for (int j = 0; j < coarse; ++j) {
    uint8_t parity = 0;
    for (int i = j * step + 1; i <= (j + 1) * step; ++i) parity ^= sigma[i % d];
    merged[j] = parity;
  }
  return merged;
}

std::vector<uint8_t> ring_min_weight(const std::vector<uint8_t>& merged_sigma) {
  const int L = static_cast<int>(merged_sigma.size());
  std::vector<uint8_t> selected(L, 0);
  // Two alternating fillings; defect at check j toggles membership at qubit j.
  int weight = 0;
  uint8_t inside = 0;
  for (int j = 0; j < L; ++j) {
    inside ^= merged_sigma[j];
    selected[j] = inside;
    weight += inside;
  }
  if (inside != 0) throw std::invalid_argument("odd defect count on a ring");
  if (2 * weight > L || (2 * weight == L && selected[0])) {
    for (int j = 0; j < L; ++j) selected[j] ^= 1;
  }
  return selected;
}

StripOutcome strip_decode(const Strip& strip, const std::vector<uint8_t>& error, double p,
                          double eps) {
  if (static_cast<int>(error.size()) != strip.length)
    throw std::invalid_argument("error length does not match strip");
  const int d = strip.length;
  const std::vector<uint8_t> target_sigma = ring_syndrome(error);

  std::vector<uint8_t> residual_sigma = target_sigma;
  std::vector<uint8_t> frozen(d, 0);
  StripOutcome outcome;

  for (int k = 0; k < strip.num_stages; ++k) {
    const int L = strip.stage_length(k);
    const int step = 1 << k;
    DilutedGraph graph = ring_graph(L);
    const std::vector<uint8_t> merged = merge_syndrome(residual_sigma, k);

    // Original-scale convergence test: the lifted coarse decision must
    // reproduce the residual syndrome exactly (merged bits cannot see
    // defect pairs hidden between surviving qubits).
    auto lift_matches = [&](const std::vector<uint8_t>& decision) {
      std::vector<uint8_t> lifted(d, 0);
      for (int j = 0; j < L; ++j) lifted[j * step] = decision[j];
      return ring_syndrome(lifted) == residual_sigma;
    };
    int used = 0;
    std::vector<uint8_t> decision =
        run_ring_minsum(graph, merged, p, eps, strip_schedule(k), used, lift_matches);
    outcome.total_iterations += used;
    if (lift_matches(decision)) {
      for (int j = 0; j < L; ++j) frozen[j * step] ^= decision[j];
      outcome.converged = true;
      break;
    }

    if (k + 1 < strip.num_stages) {
      // Freeze the qubits removed by the next stage.
      for (int j = 1; j < L; j += 2) {
        const int pos = j * step;
        if (!decision[j]) continue;
        frozen[pos] ^= 1;
        residual_sigma[pos] ^= 1;
        residual_sigma[(pos + 1) % d] ^= 1;
      }
    } else {
      for (int j = 0; j < L; ++j) frozen[j * step] ^= decision[j];
    }
  }

  std::vector<uint8_t> residual(d);
  int weight = 0;
  for (int i = 0; i < d; ++i) {
    residual[i] = error[i] ^ frozen[i];
    weight += residual[i];
  }
  outcome.success = ring_syndrome(residual) == std::vector<uint8_t>(d, 0) && weight % 2 == 0;
  return outcome;
}

std::vector<uint8_t> dilution_map_step(const Strip& strip, int k,
                                       const std::vector<uint8_t>& effective_error, double p,
                                       double eps) {
  const int d = strip.length;
  if (static_cast<int>(effective_error.size()) != d)
    throw std::invalid_argument("effective error length does not match strip");
  const int step = 1 << k;
  for (int i = 0; i < d; ++i)
    if (effective_error[i] && i % step != 0)
      throw std::invalid_argument("effective error not supported on the stage-k ring");
  if (k + 1 >= strip.num_stages)
    throw std::invalid_argument("no further dilution stage");

  const int L = strip.stage_length(k);
  DilutedGraph graph = ring_graph(L);
  std::vector<uint8_t> sigma = ring_syndrome(effective_error);
  const std::vector<uint8_t> merged = merge_syndrome(sigma, k);
  int used = 0;
  std::vector<uint8_t> decision = run_ring_minsum(
      graph, merged, p, eps, strip_schedule(k), used, [](const std::vector<uint8_t>&) {
        return false;  // fixed schedule, no early exit in the map
      });

  // Residue on the stage-k ring: subtract the decimated estimates only.
  std::vector<uint8_t> residue = effective_error;
  for (int j = 1; j < L; j += 2) residue[j * step] ^= decision[j];

  const std::vector<uint8_t> coarse_sigma = merge_syndrome(ring_syndrome(residue), k + 1);
  const std::vector<uint8_t> coarse = ring_min_weight(coarse_sigma);
  std::vector<uint8_t> out(d, 0);
  for (int j = 0; j < static_cast<int>(coarse.size()); ++j)
    out[j * 2 * step] = coarse[j];
  return out;
}

namespace {

// Ladder stage graph: a ring of `circumference` plaquettes. Qubit ids:
// rung i = i, top rail over plaquette i = circumference + i, bottom rail
// = 2*circumference + i. Rails are never diluted; stage k retains rungs at
// positions = 0 (mod 2^k).
struct Ladder {
  int circumference = 0;

  int rung(int i) const { return ((i % circumference) + circumference) % circumference; }
  int top(int i) const { return circumference + rung(i); }
  int bottom(int i) const { return 2 * circumference + rung(i); }
  int num_qubits() const { return 3 * circumference; }

  DilutedGraph stage_graph(int k) const {
    DilutedGraph g;
    g.active.assign(num_qubits(), 0);
    const int step = 1 << k;
    for (int i = 0; i < circumference; ++i) {
      if (i % step == 0) g.active[rung(i)] = 1;
      g.active[top(i)] = 1;
      g.active[bottom(i)] = 1;
    }
    g.z_check_neighbors.resize(circumference);
    for (int i = 0; i < circumference; ++i) {
      std::vector<int>& supp = g.z_check_neighbors[i];
      if (g.active[rung(i)]) supp.push_back(rung(i));
      if (g.active[rung(i + 1)]) supp.push_back(rung(i + 1));
      supp.push_back(top(i));
      supp.push_back(bottom(i));
      std::sort(supp.begin(), supp.end());
    }
    rebuild_edge_arrays(g);
    return g;
  }

  std::vector<uint8_t> syndrome_of(const std::vector<uint8_t>& e) const {
    std::vector<uint8_t> sigma(circumference, 0);
    for (int i = 0; i < circumference; ++i)
      sigma[i] = e[rung(i)] ^ e[rung(i + 1)] ^ e[top(i)] ^ e[bottom(i)];
    return sigma;
  }

  // Exact minimum-weight representative of a defect set on the stage-k
  // ladder. Retained rungs at stage >= 1 are isolated, so the optimum pairs
  // defects across retained rungs greedily and dangles the rest onto the top
  // rail (a deterministic minimizer among the rail ties).
  std::vector<uint8_t> min_weight_config(const std::vector<uint8_t>& sigma, int stage) const {
    const int step = 1 << stage;
    std::vector<uint8_t> defect = sigma;
    std::vector<uint8_t> out(num_qubits(), 0);
    for (int i = 0; i < circumference; i += step) {
      // Rung i joins plaquettes i-1 and i.
      if (defect[rung(i - 1)] && defect[rung(i)]) {
        out[rung(i)] = 1;
        defect[rung(i - 1)] = 0;
        defect[rung(i)] = 0;
      }
    }
    for (int i = 0; i < circumference; ++i)
      if (defect[i]) out[top(i)] = 1;
    return out;
  }
};

}  // namespace

int block_capacity(int k) { return (1 << (k + 2)) + 3; }

BlockExperimentResult block_experiment(int k, int input_weight, long samples, double w_corr,
                                       double w_wrong, double p, uint64_t seed) {
  if (k < 0 || k > 20) throw std::invalid_argument("stage out of range");
  if (input_weight < 1 || input_weight > block_capacity(k))
    throw std::invalid_argument("input weight exceeds block capacity at this stage");
  if (samples < 1) throw std::invalid_argument("need at least one sample");

  const int step = 1 << k;
  Ladder ladder;
  ladder.circumference = std::max(8 * step, 32);
  const DilutedGraph graph = ladder.stage_graph(k);

  // Closed block window: three consecutive stage-k rungs plus the rails
  // between them; the middle rung is the one decimated at stage k+1.
  const int start = (ladder.circumference / 2 / (2 * step)) * (2 * step);
  const int middle = start + step;
  std::vector<int> window;
  window.push_back(ladder.rung(start));
  window.push_back(ladder.rung(middle));
  window.push_back(ladder.rung(start + 2 * step));
  for (int i = start; i < start + 2 * step; ++i) {
    window.push_back(ladder.top(i));
    window.push_back(ladder.bottom(i));
  }

  MpConfig config;
  config.mode = MpMode::MinSum;
  config.damping = 0.0;
  const Prior prior = prior_of({NoiseKind::SingleX, p});
  const PriorTables tables = make_prior_tables(prior, config.clip);
  const int iters = strip_schedule(k);

  BlockExperimentResult result;
  result.k = k;
  result.input_weight = input_weight;
  result.w_corr = w_corr;
  result.w_wrong = w_wrong;

  SplitMix64 rng(seed);
  std::vector<int> pool;
  double weighted_sum = 0.0, weight_total = 0.0;

  for (long trial = 0; trial < samples; ++trial) {
    // Uniform weight-n_B subset of the window (partial Fisher-Yates).
    pool = window;
    std::vector<uint8_t> error(ladder.num_qubits(), 0);
    for (int pick = 0; pick < input_weight; ++pick) {
      const int j = pick + static_cast<int>(rng.next_u64() % (pool.size() - pick));
      std::swap(pool[pick], pool[j]);
      error[pool[pick]] = 1;
    }

    const std::vector<uint8_t> sigma = ladder.syndrome_of(error);
    Syndrome target = as_engine_syndrome(sigma);
    MessageState st = init_state(graph, tables, config);
    for (int t = 1; t <= iters; ++t) {
      check_update(graph, target, st, config);
      compute_fields(graph, tables, st, config);
      if (t < iters) {
        variable_update(graph, tables, st, config);
        st.h_x_prev = st.h_x;
        st.h_z_prev = st.h_z;
      }
    }

    // Freeze every rung removed at stage k+1; the residue picks up the
    // frozen estimates.
    std::vector<uint8_t> residue = error;
    bool middle_correct = true;
    for (int i = step; i < ladder.circumference; i += 2 * step) {
      const uint8_t est = st.h_x[ladder.rung(i)] < 0.0 ? 1 : 0;
      residue[ladder.rung(i)] ^= est;
      if (i == middle) middle_correct = (est == error[ladder.rung(middle)]);
    }
    const std::vector<uint8_t> renormalized =
        ladder.min_weight_config(ladder.syndrome_of(residue), k + 1);

    int out_weight = 0;
    for (int q : window)
      if (q != ladder.rung(middle) && renormalized[q]) ++out_weight;

    const double w = middle_correct ? w_corr : w_wrong;
    weighted_sum += w * out_weight;
    weight_total += w;
    ++result.num_samples;
    if (middle_correct)
      ++result.num_correct;
    else
      ++result.num_wrong;
  }
  result.weighted_mean_output_weight = weight_total > 0.0 ? weighted_sum / weight_total : 0.0;
  return result;
}

}  // namespace msdil
