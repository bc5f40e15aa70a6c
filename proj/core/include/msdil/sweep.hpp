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

#ifndef MSDIL_SWEEP_HPP
#define MSDIL_SWEEP_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "msdil/decoder.hpp"
#include "msdil/noise.hpp"

namespace msdil {

// Monte Carlo experiment runner. Trials are embarrassingly parallel with
// per-trial seeds derived from (master seed, row index, trial index), so a
// sweep's output is bit-identical regardless of thread count.

struct SweepSpec {
  std::vector<int> distances;
  std::vector<double> p_values;
  NoiseKind noise = NoiseKind::Depolarizing;
  std::optional<PatternFamily> pattern;  // empty = default pairing for the noise
  std::optional<double> eps;             // empty = per-distance default
  long trials = 10000;
  uint64_t master_seed = 1;
  MpMode mode = MpMode::MinSum;
  PhiMode phi_mode = PhiMode::Max;
  std::optional<int> budget;  // total iteration cap; empty = 20k+20 per stage
  int num_threads = 0;        // 0 = hardware concurrency
};

struct SweepRow {
  int d = 0;
  double p = 0.0;
  NoiseKind noise = NoiseKind::Depolarizing;
  PatternFamily pattern = PatternFamily::DV;
  double eps = 0.0;
  long trials = 0;
  long nonconverged = 0;
  long logical_fail = 0;
  double total_error_rate = 0.0;
  double mean_iters = 0.0;
  double median_iters = 0.0;
  int max_iters = 0;
  uint64_t seed = 0;
  double wall_seconds = 0.0;
};

// Default noise-to-pattern pairing: depolarizing -> DV, single-X -> CH.
PatternFamily default_pattern(NoiseKind noise);

// Damping defaults: 0.15 everywhere, except 0.1 at d=33 and 0.05 at d=65
// under single-X noise.
double default_damping(NoiseKind noise, int d);

// Runs every (d, p) point in spec order. The optional callback receives each
// finished row (streaming output); rows are also returned.
std::vector<SweepRow> run_sweep(const SweepSpec& spec,
                                const std::function<void(const SweepRow&)>& on_row = {});

// Fixed CSV schema:
//   d,p,noise,pattern,eps,trials,nonconv,logical_fail,total_error_rate,
//   mean_iters,median_iters,max_iters,seed
std::string csv_header();
std::string csv_row(const SweepRow& row);

struct IterationHistogram {
  int d = 0;
  double p = 0.0;
  std::vector<long> counts;          // index = total iterations of converged trials
  long nonconverged = 0;
  std::vector<int> stage_boundaries;  // cumulative schedule prefix sums
};

IterationHistogram iteration_histogram(const SweepSpec& spec, int d, double p);

struct NonconvVariantRow {
  bool dilution = false;
  double eps = 0.0;
  double p = 0.0;
  long trials = 0;
  long nonconverged = 0;
};

// The four dilution x damping variants of the non-convergence experiment;
// "no dilution" runs the stage-0 graph alone with the full iteration budget.
std::vector<NonconvVariantRow> nonconvergence_sweep(const SweepSpec& spec, int d,
                                                    double eps_on = 0.15);

}  // namespace msdil

#endif
