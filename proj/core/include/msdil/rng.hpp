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

#ifndef MSDIL_RNG_HPP
#define MSDIL_RNG_HPP

#include <cstdint>

namespace msdil {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen for bit-exact reproducibility
// across platforms: the whole generator is integer arithmetic with a written
// down algorithm, so a (seed, draw index) pair identifies every sample in a
// run. Statistical quality is more than enough for Monte Carlo sampling of
// i.i.d. Pauli errors.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

// Stateless per-trial seed derivation: one SplitMix64 scramble of the master
// seed combined with the trial index. Trials are independent streams and the
// assignment does not depend on scheduling, so concurrent sweeps reproduce
// bit-identical outputs.
inline uint64_t derive_seed(uint64_t master_seed, uint64_t trial_index) {
  SplitMix64 mix(master_seed ^ (trial_index * 0xD6E8FEB86659FD93ull + 0x2545F4914F6CDD1Dull));
  return mix.next_u64();
}

}  // namespace msdil

#endif
