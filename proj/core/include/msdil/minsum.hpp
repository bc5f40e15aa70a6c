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

#ifndef MSDIL_MINSUM_HPP
#define MSDIL_MINSUM_HPP

#include <optional>

#include "msdil/geometry.hpp"
#include "msdil/noise.hpp"
#include "msdil/pauli.hpp"

namespace msdil {

// Log-domain quaternary message passing on a diluted Tanner graph.
//
// All messages are log-likelihood ratios log(p(0)/p(1)) of one binary error
// component. Z-check edges carry X-component ratios, X-check edges carry
// Z-component ratios; the two families couple only through the per-qubit
// correlation ratios phi_X / phi_Z induced by the joint single-qubit prior.

enum class MpMode : uint8_t { MinSum, SumProduct };
enum class PhiMode : uint8_t { Max, Sum };

struct MpConfig {
  MpMode mode = MpMode::MinSum;
  // Marginalization over the opposite component inside the correlation
  // ratios. Only meaningful in MinSum mode; SumProduct always sums.
  PhiMode phi_mode = PhiMode::Max;
  double damping = 0.0;  // memory factor epsilon in [0, 1)
  int max_iters = 100;
  double clip = 30.0;  // per-edge message magnitude bound, also stands in for log(1/0)
};

// Prior in the form the engine consumes. When kappa == 0 the prior
// factorizes and the correlation ratios reduce to the constant component
// marginals; the engine takes that path exactly, which also makes quaternary
// message passing on a product prior bit-identical to two independent binary
// runs.
struct PriorTables {
  double p[2][2];  // p[x][z]
  double kappa = 0.0;
  double marginal_x = 0.0;  // log((p_I+p_Z)/(p_X+p_Y)), clipped
  double marginal_z = 0.0;
};

PriorTables make_prior_tables(const Prior& prior, double clip);

struct MessageState {
  std::vector<double> from_var_z, to_var_z;  // per Z-edge
  std::vector<double> from_var_x, to_var_x;  // per X-edge
  std::vector<double> h_x, h_z;              // effective fields, by qubit id
  std::vector<double> h_x_prev, h_z_prev;    // previous-iteration fields (damping memory)
  std::vector<double> sum_z, sum_x;          // scratch: incoming totals per qubit
  std::vector<double> phi_x, phi_z;          // scratch: correlation ratios per qubit
  int iteration = 0;
};

MessageState init_state(const DilutedGraph& graph, const PriorTables& prior,
                        const MpConfig& config);

// Factor-to-variable update for every check with at least one retained
// neighbor. Degree-1 checks send (-1)^sigma * clip.
void check_update(const DilutedGraph& graph, const Syndrome& target, MessageState& state,
                  const MpConfig& config);

// Correlation ratios (phi_X, phi_Z) for one qubit given the summed incoming
// opposite-component ratios. Exposed for tests.
double correlation_ratio_x(const PriorTables& prior, double sum_x_msgs, PhiMode phi,
                           double clip);
double correlation_ratio_z(const PriorTables& prior, double sum_z_msgs, PhiMode phi,
                           double clip);

// Recomputes per-qubit incoming sums, correlation ratios and effective fields
// from the current factor-to-variable messages.
void compute_fields(const DilutedGraph& graph, const PriorTables& prior, MessageState& state,
                    const MpConfig& config);

// Variable-to-factor update using the current check messages and the
// previous-iteration fields as damping memory:
//   m_{i->aZ} = sum_{bZ != aZ} mhat_{bZ->i} + (1-eps) phi_X(i) + eps h_X_prev(i)
void variable_update(const DilutedGraph& graph, const PriorTables& prior, MessageState& state,
                     const MpConfig& config);

// Componentwise sign decision on active qubits; ties resolve to 0.
PauliConfig hard_decision(const DilutedGraph& graph, const MessageState& state);

// Syndrome of a configuration evaluated through the retained incidence only.
bool decision_matches_syndrome(const DilutedGraph& graph, const PauliConfig& decision,
                               const Syndrome& target);

struct MpResult {
  MessageState state;
  std::optional<int> converged_at;  // iteration of first syndrome match
  PauliConfig estimate;             // hard decision at exit, active qubits only
};

// Flooding-schedule iterations up to config.max_iters with the convergence
// test evaluated every iteration. Non-convergence is an outcome, not an error.
MpResult run_mp(const DilutedGraph& graph, const Syndrome& target, const Prior& prior,
                const MpConfig& config, const MessageState* init = nullptr);

}  // namespace msdil

#endif
