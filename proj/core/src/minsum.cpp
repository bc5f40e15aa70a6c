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

#include "msdil/minsum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace msdil {

namespace {

inline double clip_to(double v, double clip) { return std::clamp(v, -clip, clip); }

inline double safe_log_ratio(double num, double den, double clip) {
  if (num <= 0.0 && den <= 0.0) return 0.0;
  if (den <= 0.0) return clip;
  if (num <= 0.0) return -clip;
  return clip_to(std::log(num / den), clip);
}

inline double phi_ratio(const double p[2][2], double opposite_sum, PhiMode phi, double clip) {
  // Weight of the opposite component being 1 relative to 0.
  const double w = std::exp(-clip_to(opposite_sum, 4.0 * clip));
  double num, den;
  if (phi == PhiMode::Sum) {
    num = p[0][0] + w * p[0][1];
    den = p[1][0] + w * p[1][1];
  } else {
    num = std::max(p[0][0], w * p[0][1]);
    den = std::max(p[1][0], w * p[1][1]);
  }
  return safe_log_ratio(num, den, clip);
}

inline double phi_ratio_transposed(const double p[2][2], double opposite_sum, PhiMode phi,
                                   double clip) {
  const double w = std::exp(-clip_to(opposite_sum, 4.0 * clip));
  double num, den;
  if (phi == PhiMode::Sum) {
    num = p[0][0] + w * p[1][0];
    den = p[0][1] + w * p[1][1];
  } else {
    num = std::max(p[0][0], w * p[1][0]);
    den = std::max(p[0][1], w * p[1][1]);
  }
  return safe_log_ratio(num, den, clip);
}

void minsum_check_pass(const std::vector<int>& offsets, const std::vector<uint8_t>& sigma,
                       const std::vector<double>& from_var, std::vector<double>& to_var,
                       double clip) {
  const int num_checks = static_cast<int>(offsets.size()) - 1;
  for (int a = 0; a < num_checks; ++a) {
    const int begin = offsets[a], end = offsets[a + 1];
    const int degree = end - begin;
    if (degree == 0) continue;
    const double check_sign = sigma[a] ? -1.0 : 1.0;
    if (degree == 1) {
      to_var[begin] = check_sign * clip;
      continue;
    }
    double min1 = HUGE_VAL, min2 = HUGE_VAL;
    double sign_all = check_sign;
    for (int e = begin; e < end; ++e) {
      const double m = from_var[e];
      if (m < 0.0) sign_all = -sign_all;
      const double mag = std::fabs(m);
      if (mag < min1) {
        min2 = min1;
        min1 = mag;
      } else if (mag < min2) {
        min2 = mag;
      }
    }
    for (int e = begin; e < end; ++e) {
      const double m = from_var[e];
      const double mag = std::fabs(m);
      const double out_mag = (mag > min1) ? min1 : min2;
      const double sign_others = (m < 0.0) ? -sign_all : sign_all;
      to_var[e] = sign_others * out_mag;
    }
  }
}

void sumproduct_check_pass(const std::vector<int>& offsets, const std::vector<uint8_t>& sigma,
                           const std::vector<double>& from_var, std::vector<double>& to_var,
                           double clip) {
  const int num_checks = static_cast<int>(offsets.size()) - 1;
  for (int a = 0; a < num_checks; ++a) {
    const int begin = offsets[a], end = offsets[a + 1];
    const int degree = end - begin;
    if (degree == 0) continue;
    const double check_sign = sigma[a] ? -1.0 : 1.0;
    if (degree == 1) {
      to_var[begin] = check_sign * clip;
      continue;
    }
    // Degrees are at most 4, so excluding one edge by direct recomputation is
    // both cheap and free of the divide-by-tanh(0) pitfall.
    for (int e = begin; e < end; ++e) {
      double prod = check_sign;
      for (int f = begin; f < end; ++f) {
        if (f == e) continue;
        prod *= std::tanh(0.5 * from_var[f]);
      }
      prod = std::clamp(prod, -1.0 + 1e-15, 1.0 - 1e-15);
      to_var[e] = clip_to(2.0 * std::atanh(prod), clip);
    }
  }
}

}  // namespace

PriorTables make_prior_tables(const Prior& prior, double clip) {
  PriorTables t;
  t.p[0][0] = prior.p_i;
  t.p[1][0] = prior.p_x;
  t.p[1][1] = prior.p_y;
  t.p[0][1] = prior.p_z;
  t.kappa = xz_coupling(prior);
  t.marginal_x = safe_log_ratio(prior.p_i + prior.p_z, prior.p_x + prior.p_y, clip);
  t.marginal_z = safe_log_ratio(prior.p_i + prior.p_x, prior.p_z + prior.p_y, clip);
  return t;
}

double correlation_ratio_x(const PriorTables& prior, double sum_x_msgs, PhiMode phi,
                           double clip) {
  if (prior.kappa == 0.0) return prior.marginal_x;
  return phi_ratio(prior.p, sum_x_msgs, phi, clip);
}

double correlation_ratio_z(const PriorTables& prior, double sum_z_msgs, PhiMode phi,
                           double clip) {
  if (prior.kappa == 0.0) return prior.marginal_z;
  return phi_ratio_transposed(prior.p, sum_z_msgs, phi, clip);
}

MessageState init_state(const DilutedGraph& graph, const PriorTables& prior,
                        const MpConfig& config) {
  MessageState st;
  const int n = static_cast<int>(graph.active.size());
  const PhiMode phi = (config.mode == MpMode::SumProduct) ? PhiMode::Sum : config.phi_mode;
  const double phi_x0 = correlation_ratio_x(prior, 0.0, phi, config.clip);
  const double phi_z0 = correlation_ratio_z(prior, 0.0, phi, config.clip);
  const double eps = config.damping;
  st.from_var_z.assign(graph.z_edge_qubit.size(), (1.0 - eps) * phi_x0);
  st.from_var_x.assign(graph.x_edge_qubit.size(), (1.0 - eps) * phi_z0);
  st.to_var_z.assign(graph.z_edge_qubit.size(), 0.0);
  st.to_var_x.assign(graph.x_edge_qubit.size(), 0.0);
  st.h_x.assign(n, 0.0);
  st.h_z.assign(n, 0.0);
  st.h_x_prev.assign(n, phi_x0);
  st.h_z_prev.assign(n, phi_z0);
  st.sum_z.assign(n, 0.0);
  st.sum_x.assign(n, 0.0);
  st.phi_x.assign(n, phi_x0);
  st.phi_z.assign(n, phi_z0);
  st.iteration = 0;
  return st;
}

void check_update(const DilutedGraph& graph, const Syndrome& target, MessageState& state,
                  const MpConfig& config) {
  if (config.mode == MpMode::MinSum) {
    minsum_check_pass(graph.z_check_offsets, target.z_check_bits,
                      state.from_var_z, state.to_var_z, config.clip);
    minsum_check_pass(graph.x_check_offsets, target.x_check_bits,
                      state.from_var_x, state.to_var_x, config.clip);
  } else {
    sumproduct_check_pass(graph.z_check_offsets, target.z_check_bits,
                          state.from_var_z, state.to_var_z, config.clip);
    sumproduct_check_pass(graph.x_check_offsets, target.x_check_bits,
                          state.from_var_x, state.to_var_x, config.clip);
  }
}

void compute_fields(const DilutedGraph& graph, const PriorTables& prior, MessageState& state,
                    const MpConfig& config) {
  const int n = static_cast<int>(graph.active.size());
  const PhiMode phi = (config.mode == MpMode::SumProduct) ? PhiMode::Sum : config.phi_mode;
  for (int q = 0; q < n; ++q) {
    if (!graph.is_active(q)) continue;
    double sz = 0.0, sx = 0.0;
    for (int e : graph.qubit_z_edges[q]) sz += state.to_var_z[e];
    for (int e : graph.qubit_x_edges[q]) sx += state.to_var_x[e];
    state.sum_z[q] = sz;
    state.sum_x[q] = sx;
    state.phi_x[q] = correlation_ratio_x(prior, sx, phi, config.clip);
    state.phi_z[q] = correlation_ratio_z(prior, sz, phi, config.clip);
    state.h_x[q] = sz + state.phi_x[q];
    state.h_z[q] = sx + state.phi_z[q];
  }
}

void variable_update(const DilutedGraph& graph, const PriorTables& prior, MessageState& state,
                     const MpConfig& config) {
  const int n = static_cast<int>(graph.active.size());
  const double eps = config.damping;
  for (int q = 0; q < n; ++q) {
    if (!graph.is_active(q)) continue;
    const double base_x = (1.0 - eps) * state.phi_x[q] + eps * state.h_x_prev[q];
    for (int e : graph.qubit_z_edges[q])
      state.from_var_z[e] = clip_to(state.sum_z[q] - state.to_var_z[e] + base_x, config.clip);
    const double base_z = (1.0 - eps) * state.phi_z[q] + eps * state.h_z_prev[q];
    for (int e : graph.qubit_x_edges[q])
      state.from_var_x[e] = clip_to(state.sum_x[q] - state.to_var_x[e] + base_z, config.clip);
  }
}

PauliConfig hard_decision(const DilutedGraph& graph, const MessageState& state) {
  const int n = static_cast<int>(graph.active.size());
  PauliConfig decision(n);
  for (int q = 0; q < n; ++q) {
    if (!graph.is_active(q)) continue;
    decision.x_bits[q] = state.h_x[q] < 0.0 ? 1 : 0;
    decision.z_bits[q] = state.h_z[q] < 0.0 ? 1 : 0;
  }
  return decision;
}

bool decision_matches_syndrome(const DilutedGraph& graph, const PauliConfig& decision,
                               const Syndrome& target) {
  const int num_z = static_cast<int>(graph.z_check_neighbors.size());
  for (int a = 0; a < num_z; ++a) {
    uint8_t parity = 0;
    for (int e = graph.z_check_offsets[a]; e < graph.z_check_offsets[a + 1]; ++e)
      parity ^= decision.x_bits[graph.z_edge_qubit[e]];
    if (parity != target.z_check_bits[a]) return false;
  }
  const int num_x = static_cast<int>(graph.x_check_neighbors.size());
  for (int a = 0; a < num_x; ++a) {
    uint8_t parity = 0;
    for (int e = graph.x_check_offsets[a]; e < graph.x_check_offsets[a + 1]; ++e)
      parity ^= decision.z_bits[graph.x_edge_qubit[e]];
    if (parity != target.x_check_bits[a]) return false;
  }
  return true;
}

MpResult run_mp(const DilutedGraph& graph, const Syndrome& target, const Prior& prior,
                const MpConfig& config, const MessageState* init) {
  if (static_cast<int>(target.z_check_bits.size()) != static_cast<int>(graph.z_check_neighbors.size()) ||
      static_cast<int>(target.x_check_bits.size()) != static_cast<int>(graph.x_check_neighbors.size()))
    throw std::invalid_argument("syndrome dimension does not match graph");
  if (config.damping < 0.0 || config.damping >= 1.0)
    throw std::invalid_argument("damping must be in [0, 1)");

  const PriorTables tables = make_prior_tables(prior, config.clip);
  MpResult result;
  result.state = init ? *init : init_state(graph, tables, config);
  MessageState& st = result.state;

  for (int t = 1; t <= config.max_iters; ++t) {
    check_update(graph, target, st, config);
    compute_fields(graph, tables, st, config);
    st.iteration = t;
    PauliConfig decision = hard_decision(graph, st);
    if (decision_matches_syndrome(graph, decision, target)) {
      result.converged_at = t;
      result.estimate = std::move(decision);
      return result;
    }
    variable_update(graph, tables, st, config);
    st.h_x_prev = st.h_x;
    st.h_z_prev = st.h_z;
  }
  result.estimate = hard_decision(graph, st);
  return result;
}

}  // namespace msdil
