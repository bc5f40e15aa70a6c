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

#include "msdil/pauli.hpp"

#include <stdexcept>

namespace msdil {

int PauliConfig::weight() const {
  int w = 0;
  for (int i = 0; i < size(); ++i) w += (x_bits[i] | z_bits[i]);
  return w;
}

bool PauliConfig::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (x_bits[i] | z_bits[i]) return false;
  return true;
}

bool Syndrome::all_zero() const {
  for (uint8_t b : z_check_bits)
    if (b) return false;
  for (uint8_t b : x_check_bits)
    if (b) return false;
  return true;
}

const char* residual_class_name(ResidualClass cls) {
  switch (cls) {
    case ResidualClass::Stabilizer: return "stabilizer";
    case ResidualClass::LogicalX: return "logical-x";
    case ResidualClass::LogicalZ: return "logical-z";
    case ResidualClass::LogicalY: return "logical-y";
    case ResidualClass::SyndromeMismatch: return "syndrome-mismatch";
  }
  return "?";
}

Syndrome syndrome(const SurfaceCode& code, const PauliConfig& e) {
  if (e.size() != code.n) throw std::invalid_argument("pauli length does not match code");
  Syndrome s;
  s.z_check_bits.assign(code.num_z_checks(), 0);
  s.x_check_bits.assign(code.num_x_checks(), 0);
  for (int a = 0; a < code.num_z_checks(); ++a) {
    uint8_t parity = 0;
    for (int q : code.z_checks[a]) parity ^= e.x_bits[q];
    s.z_check_bits[a] = parity;
  }
  for (int a = 0; a < code.num_x_checks(); ++a) {
    uint8_t parity = 0;
    for (int q : code.x_checks[a]) parity ^= e.z_bits[q];
    s.x_check_bits[a] = parity;
  }
  return s;
}

ResidualClass classify_residual(const SurfaceCode& code, const PauliConfig& residual) {
  if (!syndrome(code, residual).all_zero()) return ResidualClass::SyndromeMismatch;
  // Symplectic overlap with the pure-Z logical sees the residual's X part and
  // vice versa.
  uint8_t anti_lz = 0, anti_lx = 0;
  for (int q : code.logical_z) anti_lz ^= residual.x_bits[q];
  for (int q : code.logical_x) anti_lx ^= residual.z_bits[q];
  if (anti_lz && anti_lx) return ResidualClass::LogicalY;
  if (anti_lz) return ResidualClass::LogicalX;
  if (anti_lx) return ResidualClass::LogicalZ;
  return ResidualClass::Stabilizer;
}

PauliConfig apply(const PauliConfig& e1, const PauliConfig& e2) {
  if (e1.size() != e2.size()) throw std::invalid_argument("pauli length mismatch");
  PauliConfig out(e1.size());
  for (int i = 0; i < e1.size(); ++i) {
    out.x_bits[i] = e1.x_bits[i] ^ e2.x_bits[i];
    out.z_bits[i] = e1.z_bits[i] ^ e2.z_bits[i];
  }
  return out;
}

std::string to_string(const PauliConfig& e) {
  std::string out(e.size(), 'I');
  for (int i = 0; i < e.size(); ++i) {
    if (e.x_bits[i] && e.z_bits[i])
      out[i] = 'Y';
    else if (e.x_bits[i])
      out[i] = 'X';
    else if (e.z_bits[i])
      out[i] = 'Z';
  }
  return out;
}

PauliConfig pauli_from_string(const std::string& text) {
  PauliConfig e(static_cast<int>(text.size()));
  for (int i = 0; i < e.size(); ++i) {
    switch (text[i]) {
      case 'I': break;
      case 'X': e.x_bits[i] = 1; break;
      case 'Z': e.z_bits[i] = 1; break;
      case 'Y': e.x_bits[i] = 1; e.z_bits[i] = 1; break;
      default: throw std::invalid_argument("bad pauli character in string");
    }
  }
  return e;
}

}  // namespace msdil
