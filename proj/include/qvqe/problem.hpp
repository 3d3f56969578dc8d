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

#include <string>

#include "qvqe/ansatz.hpp"
#include "qvqe/encodings.hpp"
#include "qvqe/hamio.hpp"
#include "qvqe/pauli.hpp"
#include "qvqe/simulator.hpp"

namespace qvqe {

/// Everything a VQE run needs, assembled from parsed integrals: the mapped
/// Hamiltonian, the ansatz circuit, and the reference bitstring (ket order)
/// the circuit starts from. SP and HEA start from |0...0> since SP prepares
/// its own product state and HEA is reference-free.
struct PreparedProblem {
  PauliSum hamiltonian;
  Circuit circuit;
  std::string init_bits;
  int n_qubits = 0;
  int nelec = 0;
};

struct AnsatzChoice {
  AnsatzKind kind = AnsatzKind::UCCSD;
  int layers = 1;
  Entangler entangler = Entangler::CZ;
};

PreparedProblem prepare_problem(const MolecularIntegrals& ints, MappingScheme mapping,
                                const AnsatzChoice& ansatz);

/// Maps the molecular Hamiltonian only (for exact diagonalization).
PauliSum mapped_hamiltonian(const MolecularIntegrals& ints, MappingScheme mapping);

/// Ket-order bitstring (leftmost character = highest qubit) from per-qubit
/// bits in qubit order.
std::string ket_string(const std::vector<std::uint8_t>& bits);

}  // namespace qvqe
