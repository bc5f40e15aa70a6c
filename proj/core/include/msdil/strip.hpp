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

#ifndef MSDIL_STRIP_HPP
#define MSDIL_STRIP_HPP

#include <cstdint>
#include <vector>

#include "msdil/rng.hpp"

namespace msdil {

// One-dimensional periodic strip model.
//
// For decoding dynamics the strip is concretized as a cyclic repetition code:
// d qubits on a ring, one parity check between each adjacent pair, and the
// full ring as the logical loop. This is the exact reduction of the periodic
// strip for X noise confined to the edges along the loop. Stage k keeps the
// qubits at positions = 0 (mod 2^k); the residual syndrome renormalizes onto
// the coarser ring by merging the checks between surviving qubits.
//
// The block experiment instead works on the strip drawn as a ladder: a ring
// of plaquettes whose rungs are the ring qubits above and which additionally
// carries two boundary rails (one dangling edge per plaquette on each side)
// that are never diluted. Effective errors renormalize onto rails, which is
// what gives the block-to-cell map its nontrivial weight dynamics; the bare
// ring hides interior defect pairs and underestimates the output weight.

struct Strip {
  int length = 0;      // d, qubits on the ring
  int num_stages = 1;  // K+1, K capped so every diluted ring is uniform with >= 2 qubits

  int stage_length(int k) const { return length >> k; }
};

Strip make_strip(int d);

// Iteration schedule I'_k = min(2^k, 20k + 20).
int strip_schedule(int k);

// Merges original-ring syndrome bits onto the stage-k ring: merged check j is
// the parity of the original checks between surviving qubits j*2^k and
// (j+1)*2^k.
std::vector<uint8_t> merge_syndrome(const std::vector<uint8_t>& sigma, int stage);

// Exact minimum-weight representative of a merged syndrome on a ring: the
// defect intervals are selected alternately, taking the lighter of the two
// choices (ties keep the side not containing position 0).
std::vector<uint8_t> ring_min_weight(const std::vector<uint8_t>& merged_sigma);

struct StripOutcome {
  bool success = false;
  bool converged = false;
  int total_iterations = 0;
};

// Binary Min-Sum across the diluted rings with decimation between stages.
// Success means the final residual is trivial on the ring: zero syndrome and
// even overlap with the logical loop.
StripOutcome strip_decode(const Strip& strip, const std::vector<uint8_t>& error, double p,
                          double eps);

// One stage transition e^(k) -> e^(k+1) on the ring: BP at stage k, freeze
// the decimated qubits, renormalize the residual onto the stage-(k+1) ring.
std::vector<uint8_t> dilution_map_step(const Strip& strip, int k,
                                       const std::vector<uint8_t>& effective_error, double p,
                                       double eps);

struct BlockExperimentResult {
  int k = 0;
  int input_weight = 0;
  double weighted_mean_output_weight = 0.0;
  long num_samples = 0;
  long num_correct = 0;  // middle-edge decimation agreed with the true error
  long num_wrong = 0;
  double w_corr = 1.0;
  double w_wrong = 1.0;
};

// Samples stage-k effective errors of the given weight confined to one
// closed block window of the ladder (three stage-k rungs plus the rails
// between them, embedded in an otherwise error-free ring), applies one
// dilution step, and averages the output weight restricted to the image
// cell, weighting samples by whether the middle rung was decimated to the
// correct value.
BlockExperimentResult block_experiment(int k, int input_weight, long samples, double w_corr,
                                       double w_wrong, double p, uint64_t seed);

// Capacity of the block window at stage k (number of stage-k qubits in it).
int block_capacity(int k);

}  // namespace msdil

#endif
