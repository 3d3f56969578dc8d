// Copyright 2026 The qvqe developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qvqe/pauli.hpp"

namespace qvqe {

/// Dense statevector over n qubits. Qubit 0 is the least-significant bit of
/// the basis index. Amplitudes are mutated in place by gate application.
class StateVector {
 public:
  explicit StateVector(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }

  std::complex<double>& amp(std::size_t index) { return amps_[index]; }
  const std::complex<double>& amp(std::size_t index) const { return amps_[index]; }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

  double norm() const;

 private:
  int n_qubits_;
  std::vector<std::complex<double>> amps_;
};

/// Basis state from a bitstring in ket notation: the last character is
/// qubit 0, so "10" on two qubits puts the amplitude at index 2.
StateVector init_basis(int n_qubits, std::string_view bits);

/// Basis state from per-qubit bits in qubit order (bits[j] = qubit j).
StateVector init_basis(int n_qubits, const std::vector<std::uint8_t>& bits);

/// A gate parameter: either a bound value or a slot reference whose bound
/// angle is scale * params[slot].
struct GateParam {
  int slot = -1;  // -1 means bound
  double value = 0.0;
  double scale = 1.0;

  static GateParam bound(double v) { return {-1, v, 1.0}; }
  static GateParam slotted(int slot, double scale = 1.0) { return {slot, 0.0, scale}; }

  bool is_bound() const { return slot < 0; }
  double resolve(std::span<const double> params) const;
};

enum class GateKind { X, H, RX, RY, RZ, CNOT, CZ, SPBlock, PauliRot };

/// One circuit element. Rotation conventions:
///   RX/RY/RZ(theta) = exp(-i theta sigma / 2)     (half-angle)
///   PauliRot(P, theta) = exp(-i theta P)           (no 1/2)
/// SPBlock(q0, q1, theta, phi) is the Hermitian two-qubit block that fixes
/// |00> and |11> and mixes |01>/|10> with mixing angle theta and phase phi.
struct Gate {
  GateKind kind;
  int q0 = -1;
  int q1 = -1;
  GateParam theta;
  GateParam phi;
  PauliString pauli;
};

/// Ordered gate list with parameter slots and slot labels.
class Circuit {
 public:
  const std::vector<Gate>& gates() const { return gates_; }
  int slot_count() const { return int(labels_.size()); }
  const std::vector<std::string>& slot_labels() const { return labels_; }

  int add_slot(std::string label);

  void add_x(int q);
  void add_h(int q);
  void add_rx(int q, GateParam theta);
  void add_ry(int q, GateParam theta);
  void add_rz(int q, GateParam theta);
  void add_cnot(int control, int target);
  void add_cz(int control, int target);
  void add_sp_block(int q0, int q1, GateParam theta, GateParam phi);
  void add_pauli_rot(PauliString pauli, GateParam theta);

  /// Debug rendering, one gate per line:
  ///   GATE q[,q2] [slot=k scale=c | value=v]
  std::string to_text() const;

 private:
  std::vector<Gate> gates_;
  std::vector<std::string> labels_;
};

/// Applies one gate; slotted parameters are resolved against `params`.
void apply_gate(StateVector& state, const Gate& gate, std::span<const double> params = {});

/// Fused exp(-i theta P): state <- cos(theta) state - i sin(theta) P state.
void apply_pauli_rotation(StateVector& state, const PauliString& pauli, double theta);

/// Applies all gates in order with slots bound from `params`; requires
/// params.size() == slot_count. `shift_gate` >= 0 adds `shift` to that one
/// gate's resolved angle (used by parameter-shift gradients).
void apply_circuit(StateVector& state, const Circuit& circuit, std::span<const double> params,
                   int shift_gate = -1, double shift = 0.0);

/// <psi|H|psi> for a Hermitian PauliSum, computed term-by-term with
/// sign/flip traversal; the imaginary residue is asserted below 1e-10 and
/// discarded.
double expectation(const StateVector& state, const PauliSum& hamiltonian);

/// Writes amplitudes as little-endian (re,im) double pairs to `path` plus a
/// JSON sidecar {n_qubits, norm, sha256} at `path`.json.
void dump_amplitudes(const StateVector& state, const std::filesystem::path& path);

}  // namespace qvqe
