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

#include "qvqe/ansatz.hpp"

#include <algorithm>
#include <cmath>

#include "qvqe/errors.hpp"

namespace qvqe {

ExcitationList enumerate_excitations(int modes, int nelec) {
  if (nelec >= modes) {
    throw ConstraintError("no virtual orbitals: nelec=" + std::to_string(nelec) +
                          ", modes=" + std::to_string(modes));
  }
  ExcitationList list;
  auto spin = [](int p) { return p & 1; };

  for (int i = 0; i < nelec; ++i) {
    for (int a = nelec; a < modes; ++a) {
      if (spin(i) == spin(a)) list.singles.emplace_back(i, a);
    }
  }
  for (int i = 0; i < nelec; ++i) {
    for (int j = i + 1; j < nelec; ++j) {
      for (int a = nelec; a < modes; ++a) {
        for (int b = a + 1; b < modes; ++b) {
          int occ = spin(i) + spin(j);
          int vir = spin(a) + spin(b);
          if (occ == vir) list.doubles.push_back({i, j, a, b});
        }
      }
    }
  }
  return list;
}

AnsatzKind parse_ansatz_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return char(std::tolower(c)); });
  if (lower == "uccsd") return AnsatzKind::UCCSD;
  if (lower == "sp") return AnsatzKind::SP;
  if (lower == "hea") return AnsatzKind::HEA;
  throw ConstraintError("unknown ansatz '" + std::string(name) + "'; expected uccsd, sp or hea");
}

std::string ansatz_kind_name(AnsatzKind kind) {
  switch (kind) {
    case AnsatzKind::UCCSD: return "uccsd";
    case AnsatzKind::SP: return "sp";
    case AnsatzKind::HEA: return "hea";
  }
  return "?";
}

Entangler parse_entangler(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return char(std::tolower(c)); });
  if (lower == "cnot") return Entangler::CNOT;
  if (lower == "cz") return Entangler::CZ;
  throw ConstraintError("unknown entangler '" + std::string(name) + "'; expected cnot or cz");
}

std::string entangler_name(Entangler entangler) {
  return entangler == Entangler::CNOT ? "cnot" : "cz";
}

namespace {

// Emits exp(theta_k * (t - t^dag)) as PauliRot gates. The mapped generator is
// sum_j (i c_j) P_j with real c_j; each factor exp(i theta c_j P_j) is
// PauliRot(P_j, -c_j * theta).
void emit_excitation(Circuit& circuit, const FermionSum& t, MappingScheme scheme, int modes,
                     int slot) {
  PauliSum generator = map_fermion_sum(scheme, anti_hermitian_generator(t), std::uint32_t(modes));
  for (const auto& [pauli, coeff] : generator.terms()) {
    if (std::abs(coeff.real()) > 1e-12) {
      throw Error("excitation generator mapped to a non-skew term " + pauli.to_string());
    }
    circuit.add_pauli_rot(pauli, GateParam::slotted(slot, -coeff.imag()));
  }
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Circuit build_uccsd(const AnsatzSpec& spec) {
  ExcitationList excitations = enumerate_excitations(spec.modes, spec.nelec);
  Circuit circuit;
  for (const auto& [i, a] : excitations.singles) {
    int slot = circuit.add_slot("s(" + std::to_string(i) + "->" + std::to_string(a) + ")");
    FermionTerm t;
    t.ops = {{std::uint32_t(a), true}, {std::uint32_t(i), false}};
    emit_excitation(circuit, FermionSum(std::move(t)), spec.mapping, spec.modes, slot);
  }
  for (const auto& [i, j, a, b] : excitations.doubles) {
    int slot = circuit.add_slot("d(" + std::to_string(i) + "," + std::to_string(j) + "->" +
                                std::to_string(a) + "," + std::to_string(b) + ")");
    FermionTerm t;
    t.ops = {{std::uint32_t(a), true},
             {std::uint32_t(b), true},
             {std::uint32_t(j), false},
             {std::uint32_t(i), false}};
    emit_excitation(circuit, FermionSum(std::move(t)), spec.mapping, spec.modes, slot);
  }
  return circuit;
}

Circuit build_sp(int n_qubits, int particles) {
  if (particles <= 0 || particles >= n_qubits) {
    throw ConstraintError("SP ansatz needs 0 < particles < qubits, got " +
                          std::to_string(particles) + " of " + std::to_string(n_qubits));
  }
  const long long target = 2 * binomial(n_qubits, particles) - 2;
  // The freedom count alone leaves the brick network short of covering the
  // sector (shallow networks cannot cancel the partial-hop residues), so the
  // depth must also reach past the odd-even routing diameter of the chain.
  const int min_layers = n_qubits + 1;

  Circuit circuit;
  for (int q = 0; q < particles; ++q) circuit.add_x(q);

  // The first brick layer must contain the block straddling qubits
  // (particles-1, particles); a layer aligned with the filled block acts as
  // the identity on the reference state and wastes its freedoms.
  const int boundary_offset = (particles - 1) % 2;

  int layer = 0;
  while (circuit.slot_count() < target || layer < min_layers) {
    // On two qubits the odd offset has no room; that half of the brick
    // pattern is simply skipped.
    const int first = (boundary_offset + layer) % 2;
    for (int q = first; q + 1 < n_qubits; q += 2) {
      std::string tag = "sp[l" + std::to_string(layer) + ".q" + std::to_string(q) + "]";
      int theta = circuit.add_slot(tag + ".theta");
      int phi = circuit.add_slot(tag + ".phi");
      circuit.add_sp_block(q, q + 1, GateParam::slotted(theta), GateParam::slotted(phi));
    }
    ++layer;
  }
  return circuit;
}

Circuit build_hea(int n_qubits, int layers, Entangler entangler) {
  if (layers < 1) throw ConstraintError("HEA needs at least one layer");
  if (n_qubits < 2) throw ConstraintError("HEA entanglers need at least two qubits");

  Circuit circuit;
  for (int layer = 0; layer < layers; ++layer) {
    for (int q = 0; q < n_qubits; ++q) {
      std::string tag = "hea[l" + std::to_string(layer) + ".q" + std::to_string(q) + "]";
      circuit.add_rz(q, GateParam::slotted(circuit.add_slot(tag + ".rz0")));
      circuit.add_rx(q, GateParam::slotted(circuit.add_slot(tag + ".rx")));
      circuit.add_rz(q, GateParam::slotted(circuit.add_slot(tag + ".rz1")));
    }
    for (int q = 0; q + 1 < n_qubits; ++q) {
      if (entangler == Entangler::CNOT) {
        circuit.add_cnot(q, q + 1);
      } else {
        circuit.add_cz(q, q + 1);
      }
    }
  }
  return circuit;
}

Circuit build_ansatz(const AnsatzSpec& spec) {
  switch (spec.kind) {
    case AnsatzKind::UCCSD:
      return build_uccsd(spec);
    case AnsatzKind::SP:
      if (spec.mapping != MappingScheme::JW) {
        throw ConstraintError(
            "the SP ansatz conserves Hamming weight, which matches particle number "
            "only under the JW mapping");
      }
      return build_sp(spec.modes, spec.nelec);
    case AnsatzKind::HEA:
      return build_hea(spec.modes, spec.layers, spec.entangler);
  }
  throw ConstraintError("unknown ansatz kind");
}

}  // namespace qvqe
