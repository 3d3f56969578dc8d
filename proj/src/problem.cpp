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

#include "qvqe/problem.hpp"

namespace qvqe {

std::string ket_string(const std::vector<std::uint8_t>& bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) out.push_back(*it ? '1' : '0');
  return out;
}

PauliSum mapped_hamiltonian(const MolecularIntegrals& ints, MappingScheme mapping) {
  return map_fermion_sum(mapping, to_fermion_hamiltonian(ints), std::uint32_t(ints.modes()));
}

PreparedProblem prepare_problem(const MolecularIntegrals& ints, MappingScheme mapping,
                                const AnsatzChoice& ansatz) {
  PreparedProblem problem;
  problem.n_qubits = ints.modes();
  problem.nelec = ints.nelec();
  problem.hamiltonian = mapped_hamiltonian(ints, mapping);

  AnsatzSpec spec;
  spec.kind = ansatz.kind;
  spec.mapping = mapping;
  spec.modes = problem.n_qubits;
  spec.nelec = problem.nelec;
  spec.layers = ansatz.layers;
  spec.entangler = ansatz.entangler;
  problem.circuit = build_ansatz(spec);

  if (ansatz.kind == AnsatzKind::UCCSD) {
    OccupationVector hf = hf_reference(problem.nelec, problem.n_qubits);
    problem.init_bits = ket_string(encode_occupations(mapping, hf));
  } else {
    problem.init_bits = std::string(std::size_t(problem.n_qubits), '0');
  }
  return problem;
}

}  // namespace qvqe
