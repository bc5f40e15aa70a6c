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

#ifndef MSDIL_DECODER_HPP
#define MSDIL_DECODER_HPP

#include <optional>
#include <span>

#include "msdil/minsum.hpp"

namespace msdil {

// Message passing across the dilution sequence with collective decimation.
//
// Stage k runs quaternary MP on the stage-k graph against the residual
// syndrome for schedule[k] iterations, exiting as soon as the running total
// estimate (frozen decisions xor the current hard decision) reproduces the
// input syndrome. Between stages, qubits active at stage k but not k+1 are
// frozen to their current hard decision and their syndrome contribution is
// folded into the residual. Checks whose retained neighbor lists are empty
// keep their residual bits in the convergence test; a set bit there cannot be
// cleared by any later stage, so such trials simply run out their budget and
// report non-convergence, mirroring a fixed-budget hardware loop.

struct DecodeOutcome {
  PauliConfig estimate;  // full length n
  bool converged = false;
  std::optional<int> stage_of_convergence;
  int total_iterations = 0;
  std::vector<int> per_stage_iterations;
};

struct StageTrace {
  std::vector<int> frozen_qubits;  // decimated between this stage and the next
  Syndrome frozen_syndrome;        // syndrome of the cumulative frozen config
  Syndrome residual_after;
  int iterations = 0;
};

struct DecodeTrace {
  std::vector<StageTrace> stages;
};

// I_k = 20k + 20 for every stage of the sequence.
std::vector<int> default_schedule(int num_stages);

// Total budget sum_k (20k + 20) = 10 (K+1)(K+2) with K = floor(log2(d-1)).
int max_iteration_budget(int d);

DecodeOutcome decode(const SurfaceCode& code, const DilutionSequence& sequence,
                     const Syndrome& target, const Prior& prior, const MpConfig& mp_config,
                     std::span<const int> schedule = {}, DecodeTrace* trace = nullptr);

}  // namespace msdil

#endif
