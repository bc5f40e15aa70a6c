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

#include "msdil/decoder.hpp"

#include <stdexcept>

namespace msdil {

std::vector<int> default_schedule(int num_stages) {
  std::vector<int> schedule(num_stages);
  for (int k = 0; k < num_stages; ++k) schedule[k] = 20 * k + 20;
  return schedule;
}

int max_iteration_budget(int d) {
  if (d < 2) throw std::invalid_argument("invalid-distance: d must be >= 2");
  int K = 0;
  while ((2 << K) <= d - 1) ++K;
  return 10 * (K + 1) * (K + 2);
}

DecodeOutcome decode(const SurfaceCode& code, const DilutionSequence& sequence,
                     const Syndrome& target, const Prior& prior, const MpConfig& mp_config,
                     std::span<const int> schedule, DecodeTrace* trace) {
  if (sequence.stages.empty() ||
      static_cast<int>(sequence.stages[0].active.size()) != code.n)
    throw std::invalid_argument("dilution sequence does not match code");
  if (static_cast<int>(target.z_check_bits.size()) != code.num_z_checks() ||
      static_cast<int>(target.x_check_bits.size()) != code.num_x_checks())
    throw std::invalid_argument("syndrome does not match code");

  const int num_stages = sequence.num_stages();
  std::vector<int> default_iters;
  if (schedule.empty()) {
    default_iters = default_schedule(num_stages);
    schedule = default_iters;
  }
  if (static_cast<int>(schedule.size()) != num_stages)
    throw std::invalid_argument("iteration schedule does not match sequence");

  // Reverse incidence for folding frozen decisions into the residual.
  std::vector<std::vector<int>> qubit_z_checks(code.n), qubit_x_checks(code.n);
  for (int a = 0; a < code.num_z_checks(); ++a)
    for (int q : code.z_checks[a]) qubit_z_checks[q].push_back(a);
  for (int a = 0; a < code.num_x_checks(); ++a)
    for (int q : code.x_checks[a]) qubit_x_checks[q].push_back(a);

  DecodeOutcome outcome;
  outcome.estimate = PauliConfig(code.n);
  PauliConfig frozen(code.n);
  Syndrome residual = target;
  Syndrome frozen_syndrome;
  frozen_syndrome.z_check_bits.assign(code.num_z_checks(), 0);
  frozen_syndrome.x_check_bits.assign(code.num_x_checks(), 0);

  for (int k = 0; k < num_stages; ++k) {
    const DilutedGraph& graph = sequence.stages[k];
    MpConfig stage_config = mp_config;
    stage_config.max_iters = schedule[k];
    MpResult mp = run_mp(graph, residual, prior, stage_config);

    const int iters = mp.converged_at ? *mp.converged_at : schedule[k];
    outcome.per_stage_iterations.push_back(iters);
    outcome.total_iterations += iters;

    if (mp.converged_at) {
      outcome.converged = true;
      outcome.stage_of_convergence = k;
      outcome.estimate = apply(frozen, mp.estimate);
      if (trace) trace->stages.push_back({{}, frozen_syndrome, residual, iters});
      return outcome;
    }

    if (k + 1 < num_stages) {
      const DilutedGraph& next = sequence.stages[k + 1];
      StageTrace stage_trace;
      for (int q = 0; q < code.n; ++q) {
        if (!graph.is_active(q) || next.is_active(q)) continue;
        const uint8_t xb = mp.estimate.x_bits[q];
        const uint8_t zb = mp.estimate.z_bits[q];
        frozen.x_bits[q] = xb;
        frozen.z_bits[q] = zb;
        if (xb)
          for (int a : qubit_z_checks[q]) {
            residual.z_check_bits[a] ^= 1;
            frozen_syndrome.z_check_bits[a] ^= 1;
          }
        if (zb)
          for (int a : qubit_x_checks[q]) {
            residual.x_check_bits[a] ^= 1;
            frozen_syndrome.x_check_bits[a] ^= 1;
          }
        if (trace) stage_trace.frozen_qubits.push_back(q);
      }
      if (trace) {
        stage_trace.frozen_syndrome = frozen_syndrome;
        stage_trace.residual_after = residual;
        stage_trace.iterations = iters;
        trace->stages.push_back(std::move(stage_trace));
      }
    } else {
      // Final stage without convergence: hard decisions on what remains.
      outcome.estimate = apply(frozen, mp.estimate);
      if (trace) trace->stages.push_back({{}, frozen_syndrome, residual, iters});
    }
  }
  outcome.converged = false;
  return outcome;
}

}  // namespace msdil
