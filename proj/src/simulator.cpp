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

#include "qvqe/simulator.hpp"

#include <cmath>
#include <fstream>

#include "qvqe/errors.hpp"
#include "qvqe/text.hpp"

namespace qvqe {

namespace {

using cd = std::complex<double>;
constexpr cd kImag{0.0, 1.0};

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) {
    throw ConstraintError("qubit " + std::to_string(q) + " out of range for " +
                          std::to_string(n) + " qubits");
  }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > 30) {
    throw ConstraintError("unsupported qubit count " + std::to_string(n_qubits));
  }
  amps_.assign(std::size_t(1) << n_qubits, cd{0.0, 0.0});
  amps_[0] = 1.0;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

StateVector init_basis(int n_qubits, std::string_view bits) {
  if (int(bits.size()) != n_qubits) {
    throw ConstraintError("bitstring length " + std::to_string(bits.size()) +
                          " does not match qubit count " + std::to_string(n_qubits));
  }
  std::size_t index = 0;
  for (int q = 0; q < n_qubits; ++q) {
    char c = bits[bits.size() - 1 - q];  // last character is qubit 0
    if (c != '0' && c != '1') throw ConstraintError("bitstring must contain only 0 and 1");
    if (c == '1') index |= std::size_t(1) << q;
  }
  StateVector state(n_qubits);
  state.amp(0) = 0.0;
  state.amp(index) = 1.0;
  return state;
}

StateVector init_basis(int n_qubits, const std::vector<std::uint8_t>& bits) {
  if (int(bits.size()) != n_qubits) {
    throw ConstraintError("bit vector length " + std::to_string(bits.size()) +
                          " does not match qubit count " + std::to_string(n_qubits));
  }
  std::size_t index = 0;
  for (int q = 0; q < n_qubits; ++q) {
    if (bits[q] & 1) index |= std::size_t(1) << q;
  }
  StateVector state(n_qubits);
  state.amp(0) = 0.0;
  state.amp(index) = 1.0;
  return state;
}

double GateParam::resolve(std::span<const double> params) const {
  if (is_bound()) return value;
  if (slot >= int(params.size())) {
    throw ConstraintError("unbound parameter slot " + std::to_string(slot));
  }
  return scale * params[std::size_t(slot)];
}

int Circuit::add_slot(std::string label) {
  labels_.push_back(std::move(label));
  return int(labels_.size()) - 1;
}

void Circuit::add_x(int q) { gates_.push_back({GateKind::X, q, -1, {}, {}, {}}); }
void Circuit::add_h(int q) { gates_.push_back({GateKind::H, q, -1, {}, {}, {}}); }
void Circuit::add_rx(int q, GateParam theta) {
  gates_.push_back({GateKind::RX, q, -1, theta, {}, {}});
}
void Circuit::add_ry(int q, GateParam theta) {
  gates_.push_back({GateKind::RY, q, -1, theta, {}, {}});
}
void Circuit::add_rz(int q, GateParam theta) {
  gates_.push_back({GateKind::RZ, q, -1, theta, {}, {}});
}
void Circuit::add_cnot(int control, int target) {
  gates_.push_back({GateKind::CNOT, control, target, {}, {}, {}});
}
void Circuit::add_cz(int control, int target) {
  gates_.push_back({GateKind::CZ, control, target, {}, {}, {}});
}
void Circuit::add_sp_block(int q0, int q1, GateParam theta, GateParam phi) {
  gates_.push_back({GateKind::SPBlock, q0, q1, theta, phi, {}});
}
void Circuit::add_pauli_rot(PauliString pauli, GateParam theta) {
  gates_.push_back({GateKind::PauliRot, -1, -1, theta, {}, std::move(pauli)});
}

namespace {

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::SPBlock: return "SP";
    case GateKind::PauliRot: return "PROT";
  }
  return "?";
}

std::string param_text(const GateParam& p) {
  if (p.is_bound()) return "value=" + format_double(p.value);
  return "slot=" + std::to_string(p.slot) + " scale=" + format_double(p.scale);
}

}  // namespace

std::string Circuit::to_text() const {
  std::string out;
  for (const auto& g : gates_) {
    out += gate_name(g.kind);
    if (g.kind == GateKind::PauliRot) {
      out += " [" + g.pauli.to_string() + "]";
    } else {
      out += " " + std::to_string(g.q0);
      if (g.q1 >= 0) out += "," + std::to_string(g.q1);
    }
    switch (g.kind) {
      case GateKind::RX:
      case GateKind::RY:
      case GateKind::RZ:
      case GateKind::PauliRot:
        out += " " + param_text(g.theta);
        break;
      case GateKind::SPBlock:
        out += " " + param_text(g.theta) + " " + param_text(g.phi);
        break;
      default:
        break;
    }
    out += "\n";
  }
  return out;
}

namespace {

// Generic 2x2 update on qubit q: [a00 a01; a10 a11].
void apply_1q(StateVector& state, int q, cd a00, cd a01, cd a10, cd a11) {
  const std::size_t bit = std::size_t(1) << q;
  const std::size_t dim = state.dim();
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & bit) continue;
    cd lo = state.amp(base);
    cd hi = state.amp(base | bit);
    state.amp(base) = a00 * lo + a01 * hi;
    state.amp(base | bit) = a10 * lo + a11 * hi;
  }
}

}  // namespace

void apply_gate(StateVector& state, const Gate& gate, std::span<const double> params) {
  const int n = state.n_qubits();
  switch (gate.kind) {
    case GateKind::X:
      check_qubit(gate.q0, n);
      apply_1q(state, gate.q0, 0, 1, 1, 0);
      break;
    case GateKind::H: {
      check_qubit(gate.q0, n);
      const double s = 1.0 / std::sqrt(2.0);
      apply_1q(state, gate.q0, s, s, s, -s);
      break;
    }
    case GateKind::RX: {
      check_qubit(gate.q0, n);
      double t = gate.theta.resolve(params) / 2.0;
      apply_1q(state, gate.q0, std::cos(t), -kImag * std::sin(t), -kImag * std::sin(t),
               std::cos(t));
      break;
    }
    case GateKind::RY: {
      check_qubit(gate.q0, n);
      double t = gate.theta.resolve(params) / 2.0;
      apply_1q(state, gate.q0, std::cos(t), -std::sin(t), std::sin(t), std::cos(t));
      break;
    }
    case GateKind::RZ: {
      check_qubit(gate.q0, n);
      double t = gate.theta.resolve(params) / 2.0;
      apply_1q(state, gate.q0, std::exp(-kImag * t), 0, 0, std::exp(kImag * t));
      break;
    }
    case GateKind::CNOT: {
      check_qubit(gate.q0, n);
      check_qubit(gate.q1, n);
      if (gate.q0 == gate.q1) throw ConstraintError("CNOT needs distinct qubits");
      const std::size_t cbit = std::size_t(1) << gate.q0;
      const std::size_t tbit = std::size_t(1) << gate.q1;
      for (std::size_t i = 0; i < state.dim(); ++i) {
        if ((i & cbit) && !(i & tbit)) std::swap(state.amp(i), state.amp(i | tbit));
      }
      break;
    }
    case GateKind::CZ: {
      check_qubit(gate.q0, n);
      check_qubit(gate.q1, n);
      if (gate.q0 == gate.q1) throw ConstraintError("CZ needs distinct qubits");
      const std::size_t mask = (std::size_t(1) << gate.q0) | (std::size_t(1) << gate.q1);
      for (std::size_t i = 0; i < state.dim(); ++i) {
        if ((i & mask) == mask) state.amp(i) = -state.amp(i);
      }
      break;
    }
    case GateKind::SPBlock: {
      check_qubit(gate.q0, n);
      check_qubit(gate.q1, n);
      if (gate.q0 == gate.q1) throw ConstraintError("SP block needs distinct qubits");
      const double theta = gate.theta.resolve(params);
      const double phi = gate.phi.resolve(params);
      const cd c = std::cos(theta);
      const cd s_pos = std::exp(kImag * phi) * std::sin(theta);
      const cd s_neg = std::exp(-kImag * phi) * std::sin(theta);
      const std::size_t bit0 = std::size_t(1) << gate.q0;
      const std::size_t bit1 = std::size_t(1) << gate.q1;
      for (std::size_t base = 0; base < state.dim(); ++base) {
        if (base & (bit0 | bit1)) continue;
        // |01> has q0 set, |10> has q1 set; |00> and |11> are untouched.
        cd a01 = state.amp(base | bit0);
        cd a10 = state.amp(base | bit1);
        state.amp(base | bit0) = c * a01 + s_pos * a10;
        state.amp(base | bit1) = s_neg * a01 - c * a10;
      }
      break;
    }
    case GateKind::PauliRot:
      if (gate.pauli.max_qubit() >= n) {
        throw ConstraintError("Pauli rotation touches qubit " +
                              std::to_string(gate.pauli.max_qubit()) + " of " +
                              std::to_string(n));
      }
      apply_pauli_rotation(state, gate.pauli, gate.theta.resolve(params));
      break;
  }
}

void apply_pauli_rotation(StateVector& state, const PauliString& pauli, double theta) {
  if (pauli.max_qubit() >= state.n_qubits()) {
    throw ConstraintError("Pauli rotation touches qubit " + std::to_string(pauli.max_qubit()) +
                          " of " + std::to_string(state.n_qubits()));
  }
  const double c = std::cos(theta);
  const cd ms = -kImag * std::sin(theta);

  std::size_t flip_mask = 0;
  for (const auto& [q, a] : pauli.factors()) {
    if (a != PauliAxis::Z) flip_mask |= std::size_t(1) << q;
  }

  // P|b> = coeff(b) |b ^ flip_mask>
  auto coeff = [&pauli](std::size_t b) -> cd {
    cd phase = 1.0;
    for (const auto& [q, a] : pauli.factors()) {
      bool bit = (b >> q) & 1;
      if (a == PauliAxis::Z) {
        if (bit) phase = -phase;
      } else if (a == PauliAxis::Y) {
        phase *= bit ? -kImag : kImag;
      }
    }
    return phase;
  };

  const std::size_t dim = state.dim();
  if (flip_mask == 0) {
    for (std::size_t b = 0; b < dim; ++b) {
      state.amp(b) *= c + ms * coeff(b);
    }
    return;
  }
  for (std::size_t b = 0; b < dim; ++b) {
    const std::size_t d = b ^ flip_mask;
    if (d < b) continue;  // each pair handled once
    cd vb = state.amp(b);
    cd vd = state.amp(d);
    state.amp(b) = c * vb + ms * coeff(d) * vd;
    state.amp(d) = c * vd + ms * coeff(b) * vb;
  }
}

void apply_circuit(StateVector& state, const Circuit& circuit, std::span<const double> params,
                   int shift_gate, double shift) {
  if (int(params.size()) != circuit.slot_count()) {
    throw ConstraintError("parameter vector length " + std::to_string(params.size()) +
                          " does not match slot count " + std::to_string(circuit.slot_count()));
  }
  const auto& gates = circuit.gates();
  for (std::size_t g = 0; g < gates.size(); ++g) {
    if (int(g) == shift_gate) {
      Gate shifted = gates[g];
      shifted.theta = GateParam::bound(gates[g].theta.resolve(params) + shift);
      if (shifted.kind == GateKind::SPBlock) {
        shifted.phi = GateParam::bound(gates[g].phi.resolve(params));
      }
      apply_gate(state, shifted, params);
    } else {
      apply_gate(state, gates[g], params);
    }
  }
}

double expectation(const StateVector& state, const PauliSum& hamiltonian) {
  if (!is_hermitian(hamiltonian)) {
    throw ConstraintError("expectation requires a Hermitian operator");
  }
  const std::size_t dim = state.dim();
  cd total = 0.0;
  for (const auto& [pauli, weight] : hamiltonian.terms()) {
    if (pauli.max_qubit() >= state.n_qubits()) {
      throw ConstraintError("operator touches qubit " + std::to_string(pauli.max_qubit()) +
                            " of " + std::to_string(state.n_qubits()));
    }
    std::size_t flip_mask = 0;
    for (const auto& [q, a] : pauli.factors()) {
      if (a != PauliAxis::Z) flip_mask |= std::size_t(1) << q;
    }
    cd acc = 0.0;
    for (std::size_t b = 0; b < dim; ++b) {
      cd phase = 1.0;
      for (const auto& [q, a] : pauli.factors()) {
        bool bit = (b >> q) & 1;
        if (a == PauliAxis::Z) {
          if (bit) phase = -phase;
        } else if (a == PauliAxis::Y) {
          phase *= bit ? -kImag : kImag;
        }
      }
      acc += std::conj(state.amp(b ^ flip_mask)) * phase * state.amp(b);
    }
    total += weight * acc;
  }
  if (std::abs(total.imag()) > 1e-10) {
    throw Error("expectation has non-negligible imaginary part " +
                format_double(total.imag()));
  }
  return total.real();
}

void dump_amplitudes(const StateVector& state, const std::filesystem::path& path) {
  std::string raw;
  raw.reserve(state.dim() * 2 * sizeof(double));
  for (std::size_t b = 0; b < state.dim(); ++b) {
    double re = state.amp(b).real();
    double im = state.amp(b).imag();
    raw.append(reinterpret_cast<const char*>(&re), sizeof(double));
    raw.append(reinterpret_cast<const char*>(&im), sizeof(double));
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write amplitude dump: " + path.string());
  out.write(raw.data(), std::streamsize(raw.size()));
  out.close();

  std::ofstream side(path.string() + ".json");
  side << "{\"n_qubits\":" << state.n_qubits() << ",\"norm\":" << format_double(state.norm())
       << ",\"sha256\":\"" << sha256_hex(raw) << "\"}\n";
}

}  // namespace qvqe
