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

#ifndef MSDIL_PAULI_HPP
#define MSDIL_PAULI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "msdil/geometry.hpp"

namespace msdil {

// Length-n Pauli configuration in the binary (x, z) representation:
// x_i = 1 iff e_i in {X, Y}, z_i = 1 iff e_i in {Z, Y}. Phases are dropped
// throughout; decoding is phase-insensitive.
struct PauliConfig {
  std::vector<uint8_t> x_bits;
  std::vector<uint8_t> z_bits;

  PauliConfig() = default;
  explicit PauliConfig(int n) : x_bits(n, 0), z_bits(n, 0) {}

  int size() const { return static_cast<int>(x_bits.size()); }
  int weight() const;
  bool is_identity() const;
  bool operator==(const PauliConfig& other) const = default;
};

struct Syndrome {
  std::vector<uint8_t> z_check_bits;  // parities of X-components, one per Z-check
  std::vector<uint8_t> x_check_bits;  // parities of Z-components, one per X-check

  bool all_zero() const;
  bool operator==(const Syndrome& other) const = default;
};

enum class ResidualClass : uint8_t { Stabilizer, LogicalX, LogicalZ, LogicalY, SyndromeMismatch };

const char* residual_class_name(ResidualClass cls);

Syndrome syndrome(const SurfaceCode& code, const PauliConfig& e);

// Classifies a residual (candidate correction xor true error) into the coset
// structure of the surface code: nonzero syndrome, stabilizer, or one of the
// three logical cosets. Membership is decided by commutation with the two
// logical representatives; no Gaussian elimination is needed since k = 1.
ResidualClass classify_residual(const SurfaceCode& code, const PauliConfig& residual);

PauliConfig apply(const PauliConfig& e1, const PauliConfig& e2);

std::string to_string(const PauliConfig& e);
PauliConfig pauli_from_string(const std::string& text);

}  // namespace msdil

#endif
