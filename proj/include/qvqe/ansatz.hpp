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

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qvqe/encodings.hpp"
#include "qvqe/simulator.hpp"

namespace qvqe {

/// Spin-conserving excitations from occupied to virtual spin-orbitals under
/// the interleaved convention (spin = index mod 2). Doubles are stored as
/// (i, j, a, b) with i<j occupied and a<b virtual.
struct ExcitationList {
  std::vector<std::pair<int, int>> singles;
  std::vector<std::array<int, 4>> doubles;

  std::size_t count() const { return singles.size() + doubles.size(); }
};

/// All spin-conserving singles and doubles from occupied {0..nelec-1} to
/// virtual {nelec..M-1}, in lexicographic order (singles first).
ExcitationList enumerate_excitations(int modes, int nelec);

enum class AnsatzKind { UCCSD, SP, HEA };
enum class Entangler { CNOT, CZ };

AnsatzKind parse_ansatz_kind(std::string_view name);
std::string ansatz_kind_name(AnsatzKind kind);
Entangler parse_entangler(std::string_view name);
std::string entangler_name(Entangler entangler);

struct AnsatzSpec {
  AnsatzKind kind = AnsatzKind::UCCSD;
  MappingScheme mapping = MappingScheme::JW;
  int modes = 0;       // qubit count
  int nelec = 0;       // UCCSD and SP
  int layers = 1;      // HEA only
  Entangler entangler = Entangler::CZ;  // HEA only
};

/// Single-Trotter-step UCCSD: for each excitation k with amplitude slot
/// theta_k, the mapped terms of t_k - t_k^dagger are emitted as consecutive
/// PauliRot gates (they commute, so the per-excitation exponential is
/// exact). The reference state is the caller's job.
Circuit build_uccsd(const AnsatzSpec& spec);

/// Symmetry-preserved ansatz: X on qubits 0..m-1, then alternating brick
/// layers of two-qubit SP blocks on pairs (0,1),(2,3),... and (1,2),(3,4),...
/// each consuming fresh (theta, phi) slots, appended layer-by-layer until
/// the slot count reaches 2*C(n,m) - 2.
Circuit build_sp(int n_qubits, int particles);

/// Hardware-efficient ansatz: per layer, RZ-RX-RZ on every qubit (three
/// fresh slots each) followed by the entangler on neighbouring pairs.
Circuit build_hea(int n_qubits, int layers, Entangler entangler);

/// Dispatch on spec.kind. SP requires the JW mapping, where Hamming weight
/// equals particle number.
Circuit build_ansatz(const AnsatzSpec& spec);

}  // namespace qvqe
