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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>

#include "oracle.hpp"
#include "qvqe/encodings.hpp"
#include "qvqe/errors.hpp"
#include "qvqe/fermion.hpp"
#include "qvqe/hamio.hpp"
#include "qvqe/problem.hpp"
#include "qvqe/simulator.hpp"
#include "qvqe/text.hpp"

using namespace qvqe;
using oracle::Complex;

namespace {

Eigen::MatrixXcd gate_matrix(const Gate& gate, int n_qubits,
                             std::span<const double> params = {}) {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    StateVector state(n_qubits);
    state.amp(0) = 0.0;
    state.amp(std::size_t(col)) = 1.0;
    apply_gate(state, gate, params);
    for (Eigen::Index row = 0; row < dim; ++row) m(row, col) = state.amp(std::size_t(row));
  }
  return m;
}

StateVector random_state(std::mt19937& rng, int n_qubits) {
  StateVector state(n_qubits);
  double norm2 = 0.0;
  for (std::size_t b = 0; b < state.dim(); ++b) {
    state.amp(b) = Complex(oracle::random_real(rng, -1, 1), oracle::random_real(rng, -1, 1));
    norm2 += std::norm(state.amp(b));
  }
  for (std::size_t b = 0; b < state.dim(); ++b) state.amp(b) /= std::sqrt(norm2);
  return state;
}

}  // namespace

TEST_CASE("init_basis bit order") {
  StateVector zero = init_basis(2, "00");
  CHECK(zero.amp(0) == Complex{1, 0});
  CHECK(zero.amp(1) == Complex{0, 0});

  // "10" reads as |q1 q0> = |1 0>: qubit 0 clear, qubit 1 set, index 2.
  StateVector ten = init_basis(2, "10");
  CHECK(ten.amp(2) == Complex{1, 0});

  CHECK_THROWS_AS(init_basis(3, "10"), ConstraintError);
  CHECK_THROWS_AS(init_basis(2, "1x"), ConstraintError);
}

TEST_CASE("encoded reference state measures the right particle number") {
  OccupationVector hf = hf_reference(2, 4);
  auto encoded = encode_occupations(MappingScheme::Parity, hf);
  StateVector state = init_basis(4, ket_string(encoded));
  PauliSum number = map_fermion_sum(MappingScheme::Parity, total_number_operator(4), 4);
  CHECK(expectation(state, number) == doctest::Approx(2.0).epsilon(1e-12));

  // Mode 1 is empty in n = (1,0); its parity-mapped occupation reads 0.
  auto two = encode_occupations(MappingScheme::Parity, occupations_from_string("10"));
  StateVector s2 = init_basis(2, ket_string(two));
  PauliSum n1 = map_fermion_sum(MappingScheme::Parity, number_operator(1, 2), 2);
  CHECK(expectation(s2, n1) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("single-qubit gate actions") {
  StateVector s = init_basis(2, "00");
  Gate x{GateKind::X, 0, -1, {}, {}, {}};
  apply_gate(s, x);
  CHECK(s.amp(1) == Complex{1, 0});

  // RZ(theta)|0> = exp(-i theta/2)|0>.
  StateVector z = init_basis(1, "0");
  Gate rz{GateKind::RZ, 0, -1, GateParam::bound(0.7), {}, {}};
  apply_gate(z, rz);
  CHECK(std::abs(z.amp(0) - std::exp(Complex(0, -0.35))) < 1e-15);
}

TEST_CASE("every gate is unitary") {
  std::mt19937 rng(31);
  auto check_unitary = [&](const Gate& g, int n) {
    Eigen::MatrixXcd m = gate_matrix(g, n);
    Eigen::MatrixXcd gram = m.adjoint() * m;
    CHECK((gram - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <
          1e-12);
  };
  double t1 = oracle::random_real(rng, -3, 3);
  double t2 = oracle::random_real(rng, -3, 3);
  check_unitary({GateKind::X, 0, -1, {}, {}, {}}, 2);
  check_unitary({GateKind::H, 1, -1, {}, {}, {}}, 2);
  check_unitary({GateKind::RX, 0, -1, GateParam::bound(t1), {}, {}}, 2);
  check_unitary({GateKind::RY, 1, -1, GateParam::bound(t2), {}, {}}, 2);
  check_unitary({GateKind::RZ, 0, -1, GateParam::bound(t1), {}, {}}, 2);
  check_unitary({GateKind::CNOT, 0, 1, {}, {}, {}}, 2);
  check_unitary({GateKind::CZ, 1, 0, {}, {}, {}}, 2);
  check_unitary({GateKind::SPBlock, 0, 1, GateParam::bound(t1), GateParam::bound(t2), {}}, 2);
  check_unitary({GateKind::PauliRot, -1, -1, GateParam::bound(t2), {},
                 PauliString::from_factors({{0, PauliAxis::X}, {2, PauliAxis::Y}})},
                3);
}

TEST_CASE("SP block matches its defining matrix") {
  const double theta = 0.83;
  const double phi = -1.21;
  StateVector s01 = init_basis(2, "01");  // qubit 0 set
  Gate block{GateKind::SPBlock, 0, 1, GateParam::bound(theta), GateParam::bound(phi), {}};
  apply_gate(s01, block);
  CHECK(std::abs(s01.amp(1) - Complex(std::cos(theta), 0)) < 1e-14);
  CHECK(std::abs(s01.amp(2) - std::exp(Complex(0, -phi)) * std::sin(theta)) < 1e-14);

  // A|00> = |00>, A|11> = |11>, and A is an involution.
  std::mt19937 rng(37);
  StateVector s00 = init_basis(2, "00");
  apply_gate(s00, block);
  CHECK(std::abs(s00.amp(0) - Complex{1, 0}) < 1e-15);
  StateVector s11 = init_basis(2, "11");
  apply_gate(s11, block);
  CHECK(std::abs(s11.amp(3) - Complex{1, 0}) < 1e-15);

  StateVector random = random_state(rng, 3);
  std::vector<Complex> before(random.amplitudes().begin(), random.amplitudes().end());
  Gate wide{GateKind::SPBlock, 2, 0, GateParam::bound(theta), GateParam::bound(phi), {}};
  apply_gate(random, wide);
  apply_gate(random, wide);
  for (std::size_t b = 0; b < random.dim(); ++b) {
    CHECK(std::abs(random.amp(b) - before[b]) < 1e-12);
  }
}

TEST_CASE("pauli rotation edge values") {
  StateVector s = init_basis(1, "0");
  apply_pauli_rotation(s, PauliString::x(0), 0.0);
  CHECK(s.amp(0) == Complex{1, 0});

  apply_pauli_rotation(s, PauliString::x(0), std::numbers::pi / 2);
  CHECK(std::abs(s.amp(1) - Complex{0, -1}) < 1e-15);
  CHECK(std::abs(s.amp(0)) < 1e-15);
}

TEST_CASE("pauli rotation matches the dense exponential") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    PauliString p = oracle::random_string(rng, 3);
    double theta = oracle::random_real(rng, -3, 3);
    StateVector state = random_state(rng, 3);
    Eigen::VectorXcd vec(8);
    for (std::size_t b = 0; b < 8; ++b) vec(Eigen::Index(b)) = state.amp(b);

    apply_pauli_rotation(state, p, theta);
    Eigen::VectorXcd expected =
        oracle::expm_rotation(oracle::string_matrix(p, 3), theta) * vec;
    for (std::size_t b = 0; b < 8; ++b) {
      CHECK(std::abs(state.amp(b) - expected(Eigen::Index(b))) < 1e-12);
    }
    CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("expectation") {
  StateVector zeros = init_basis(3, "000");
  CHECK(expectation(zeros, PauliSum::term(PauliString::z(0), 1.0)) == 1.0);
  CHECK(expectation(zeros, PauliSum::term(PauliString::x(0), 1.0)) == 0.0);

  CHECK_THROWS_AS(expectation(zeros, PauliSum::term(PauliString::x(0), Complex{0, 1})),
                  ConstraintError);

  // Against the dense quadratic form on random states.
  std::mt19937 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    PauliSum h = oracle::random_sum(rng, 3, 6);
    PauliSum herm = h;
    for (const auto& [s, c] : h.terms()) herm.add_term(s, std::conj(c));  // h + h^dag
    StateVector state = random_state(rng, 3);
    Eigen::VectorXcd vec(8);
    for (std::size_t b = 0; b < 8; ++b) vec(Eigen::Index(b)) = state.amp(b);
    double dense = (vec.adjoint() * oracle::sum_matrix(herm, 3) * vec)(0).real();
    CHECK(expectation(state, herm) == doctest::Approx(dense).epsilon(1e-10));
  }
}

TEST_CASE("apply_circuit") {
  Circuit empty;
  StateVector s = init_basis(2, "01");
  apply_circuit(s, empty, {});
  CHECK(s.amp(1) == Complex{1, 0});

  Circuit twice;
  twice.add_x(0);
  twice.add_x(0);
  StateVector t = init_basis(1, "0");
  apply_circuit(t, twice, {});
  CHECK(t.amp(0) == Complex{1, 0});

  Circuit slotted;
  int k = slotted.add_slot("theta");
  slotted.add_pauli_rot(PauliString::x(0), GateParam::slotted(k, 2.0));
  std::vector<double> params{0.3};
  StateVector u = init_basis(1, "0");
  apply_circuit(u, slotted, params);
  // Angle is scale * theta = 0.6.
  CHECK(std::abs(u.amp(0) - Complex(std::cos(0.6), 0)) < 1e-14);

  CHECK_THROWS_AS(apply_circuit(u, slotted, {}), ConstraintError);
}

TEST_CASE("norm is preserved through long random circuits") {
  std::mt19937 rng(53);
  Circuit circuit;
  for (int g = 0; g < 60; ++g) {
    switch (rng() % 6) {
      case 0: circuit.add_h(int(rng() % 4)); break;
      case 1: circuit.add_rx(int(rng() % 4), GateParam::bound(oracle::random_real(rng, -2, 2)));
        break;
      case 2: circuit.add_cnot(0, 1 + int(rng() % 3)); break;
      case 3: circuit.add_cz(int(rng() % 2), 2 + int(rng() % 2)); break;
      case 4:
        circuit.add_sp_block(int(rng() % 2), 2 + int(rng() % 2),
                             GateParam::bound(oracle::random_real(rng, -2, 2)),
                             GateParam::bound(oracle::random_real(rng, -2, 2)));
        break;
      default:
        circuit.add_pauli_rot(oracle::random_string(rng, 4),
                              GateParam::bound(oracle::random_real(rng, -2, 2)));
        break;
    }
  }
  StateVector s = init_basis(4, "0000");
  apply_circuit(s, circuit, {});
  CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("circuit text dump") {
  Circuit c;
  int k = c.add_slot("theta");
  c.add_x(0);
  c.add_rz(1, GateParam::bound(0.5));
  c.add_cnot(0, 1);
  c.add_pauli_rot(PauliString::from_factors({{0, PauliAxis::Y}, {1, PauliAxis::X}}),
                  GateParam::slotted(k, -0.5));
  CHECK(c.to_text() ==
        "X 0\n"
        "RZ 1 value=0.5\n"
        "CNOT 0,1\n"
        "PROT [Y0 X1] slot=0 scale=-0.5\n");
}

TEST_CASE("amplitude dump") {
  auto dir = std::filesystem::temp_directory_path() / "qvqe_dump_test";
  std::filesystem::create_directories(dir);
  auto path = dir / "state.amps";

  StateVector s = init_basis(2, "01");
  Gate h{GateKind::H, 1, -1, {}, {}, {}};
  apply_gate(s, h);
  dump_amplitudes(s, path);

  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(raw.size() == 4 * 2 * sizeof(double));
  double first[2];
  std::memcpy(first, raw.data() + 8 * 2, sizeof(first));  // index 1 = (re, im)
  CHECK(first[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

  std::ifstream side(path.string() + ".json");
  std::string sidecar((std::istreambuf_iterator<char>(side)), std::istreambuf_iterator<char>());
  CHECK(sidecar.find("\"n_qubits\":2") != std::string::npos);
  CHECK(sidecar.find("\"sha256\":\"" + sha256_hex(raw) + "\"") != std::string::npos);
  std::filesystem::remove_all(dir);
}
