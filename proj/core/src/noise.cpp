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

#include "msdil/noise.hpp"

#include <stdexcept>

namespace msdil {

const char* noise_name(NoiseKind kind) {
  return kind == NoiseKind::SingleX ? "x" : "depolarizing";
}

NoiseKind noise_from_name(const std::string& name) {
  if (name == "x" || name == "single-x" || name == "singlex") return NoiseKind::SingleX;
  if (name == "depolarizing" || name == "dep") return NoiseKind::Depolarizing;
  throw std::invalid_argument("unknown noise model: " + name);
}

Prior prior_of(NoiseModel model) {
  if (model.p < 0.0 || model.p > 1.0)
    throw std::invalid_argument("physical error rate must be in [0, 1]");
  if (model.kind == NoiseKind::SingleX) return {1.0 - model.p, model.p, 0.0, 0.0};
  const double third = model.p / 3.0;
  return {1.0 - model.p, third, third, third};
}

double xz_coupling(const Prior& prior) {
  return prior.p_y - (prior.p_x + prior.p_y) * (prior.p_z + prior.p_y);
}

PauliConfig sample(NoiseModel model, int n, SplitMix64& rng) {
  PauliConfig e(n);
  if (model.kind == NoiseKind::SingleX) {
    for (int i = 0; i < n; ++i)
      if (rng.next_double() < model.p) e.x_bits[i] = 1;
    return e;
  }
  const double third = model.p / 3.0;
  for (int i = 0; i < n; ++i) {
    double u = rng.next_double();
    if (u < third) {
      e.x_bits[i] = 1;
    } else if (u < 2.0 * third) {
      e.x_bits[i] = 1;
      e.z_bits[i] = 1;
    } else if (u < model.p) {
      e.z_bits[i] = 1;
    }
  }
  return e;
}

}  // namespace msdil
