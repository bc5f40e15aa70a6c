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

#ifndef MSDIL_NOISE_HPP
#define MSDIL_NOISE_HPP

#include <string>

#include "msdil/pauli.hpp"
#include "msdil/rng.hpp"

namespace msdil {

// Single-qubit prior over {I, X, Y, Z}.
struct Prior {
  double p_i = 1.0;
  double p_x = 0.0;
  double p_y = 0.0;
  double p_z = 0.0;
};

enum class NoiseKind : uint8_t { SingleX, Depolarizing };

const char* noise_name(NoiseKind kind);
NoiseKind noise_from_name(const std::string& name);

struct NoiseModel {
  NoiseKind kind = NoiseKind::Depolarizing;
  double p = 0.0;
};

// SingleX: [1-p, p, 0, 0]. Depolarizing: [1-p, p/3, p/3, p/3].
Prior prior_of(NoiseModel model);

// X-Z coupling kappa = p_y - (p_x + p_y)(p_z + p_y), the covariance of the
// X- and Z-components of the prior. Zero exactly when the prior factorizes.
double xz_coupling(const Prior& prior);

// I.i.d. per-qubit draws from the model's prior; deterministic given rng state.
PauliConfig sample(NoiseModel model, int n, SplitMix64& rng);

}  // namespace msdil

#endif
