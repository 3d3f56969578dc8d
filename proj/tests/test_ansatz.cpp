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

#include "oracle.hpp"
#include "qvqe/ansatz.hpp"
#include "qvqe/errors.hpp"
#include "qvqe/hamio.hpp"
#include "qvqe/problem.hpp"
#include "qvqe/vqe.hpp"

using namespace qvqe;

namespace {

const std::filesystem::path kFixtures{QVQE_FIXTURE_DIR};

int popcount_index(std::size_t b) {
  int c = 0;
  while (b) {
    c += int(b & 1);
    b >>= 1;
  }
  return c;
}

double off_sector_norm(const StateVector& state, int weight) {
  double off = 0.0;
  for (std::size_t b = 0; b < state.dim(); ++b) {
    if (popcount_index(b) != weight) off += std::norm(state.amp(b));
  }
  return std::sqrt(off);
}

std::vector<double> random_params(std::mt19937& rng, int count, double scale) {
  std::vector<double> p(std::size_t(count), 0.0);
  for (auto& v : p) v = oracle::random_real(rng, -scale, scale);
  return p;
}

}  // namespace

TEST_CASE("excitation enumeration") {
  ExcitationList small = enumerate_excitations(4, 2);
  CHECK(small.singles == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
  REQUIRE(small.doubles.size() == 1);
  CHECK(small.doubles[0] == std::array<int, 4>{0, 1, 2, 3});
  CHECK(small.count() == 3);

  ExcitationList none = enumerate_excitations(4, 0);
  CHECK(none.count() == 0);

  ExcitationList wide = enumerate_excitations(8, 2);
  CHECK(wide.singles.size() == 6);
  CHECK(wide.doubles.size() == 9);

  CHECK_THROWS_AS(enumerate_excitations(4, 4), ConstraintError);
}

TEST_CASE("uccsd structure") {
  AnsatzSpec spec;
  spec.kind = AnsatzKind::UCCSD;
  spec.mapping = MappingScheme::JW;
  spec.modes = 4;
  spec.nelec = 2;
  Circuit circuit = build_uccsd(spec);
  CHECK(circuit.slot_count() == 3);
  CHECK(circuit.gates().size() == 12);  // 2 + 2 + 8 Pauli rotations
  for (const auto& gate : circuit.gates()) CHECK(gate.kind == GateKind::PauliRot);

  // Terms of one excitation are consecutive and mutually commute.
  auto gates = circuit.gates();
  for (std::size_t g = 0; g + 1 < gates.size(); ++g) {
    if (gates[g].theta.slot == gates[g + 1].theta.slot) {
      CHECK(commutes(gates[g].pauli, gates[g + 1].pauli));
    }
  }
}

TEST_CASE("uccsd at zero parameters is the identity") {
  for (MappingScheme scheme : {MappingScheme::JW, MappingScheme::Parity, MappingScheme::BK,
                               MappingScheme::BKTree}) {
    AnsatzSpec spec;
    spec.kind = AnsatzKind::UCCSD;
    spec.mapping = scheme;
    spec.modes = 4;
    spec.nelec = 2;
    Circuit circuit = build_uccsd(spec);

    std::mt19937 rng(61);
    StateVector state(4);
    for (std::size_t b = 0; b < state.dim(); ++b) {
      state.amp(b) = {oracle::random_real(rng, -1, 1), oracle::random_real(rng, -1, 1)};
    }
    std::vector<std::complex<double>> before(state.amplitudes().begin(),
                                             state.amplitudes().end());
    std::vector<double> zeros(3, 0.0);
    apply_circuit(state, circuit, zeros);
    for (std::size_t b = 0; b < state.dim(); ++b) CHECK(state.amp(b) == before[b]);
  }
}

TEST_CASE("uccsd conserves particle number") {
  auto ints = load_fcidump(kFixtures / "h2_sto3g_0.74.fcidump");
  std::mt19937 rng(67);

  // Under JW, particle number is Hamming weight.
  PreparedProblem jw = prepare_problem(ints, MappingScheme::JW, {AnsatzKind::UCCSD, 1,
                                                                 Entangler::CZ});
  for (int trial = 0; trial < 50; ++trial) {
    StateVector state = init_basis(4, jw.init_bits);
    auto params = random_params(rng, jw.circuit.slot_count(), 2.0);
    apply_circuit(state, jw.circuit, params);
    CHECK(off_sector_norm(state, 2) < 1e-10);
  }

  // Under any mapping, the mapped number operator's expectation stays nelec.
  for (MappingScheme scheme : {MappingScheme::Parity, MappingScheme::BKTree}) {
    PreparedProblem problem = prepare_problem(ints, scheme, {AnsatzKind::UCCSD, 1,
                                                             Entangler::CZ});
    PauliSum number = map_fermion_sum(scheme, total_number_operator(4), 4);
    for (int trial = 0; trial < 10; ++trial) {
      StateVector state = init_basis(4, problem.init_bits);
      auto params = random_params(rng, problem.circuit.slot_count(), 2.0);
      apply_circuit(state, problem.circuit, params);
      CHECK(expectation(state, number) == doctest::Approx(2.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("uccsd double-amplitude sweep reaches the exact ground energy") {
  auto ints = load_fcidump(kFixtures / "h2_sto3g_0.74.fcidump");
  PreparedProblem problem =
      prepare_problem(ints, MappingScheme::JW, {AnsatzKind::UCCSD, 1, Entangler::CZ});
  double exact = exact_ground_energy(problem.hamiltonian, 4);

  double best = 1e9;
  std::vector<double> params(3, 0.0);
  for (int step = -1000; step <= 1000; ++step) {
    params[2] = 0.5 * double(step) / 1000.0;  // slot 2 is the double excitation
    best = std::min(best,
                    evaluate_energy(problem.hamiltonian, problem.circuit, params,
                                    problem.init_bits));
  }
  CHECK(best == doctest::Approx(exact).epsilon(1e-6));
  CHECK(best >= exact - 1e-12);
}

TEST_CASE("sp ansatz structure") {
  // Freedom target 2*C(4,2) - 2 = 10; the depth floor of n+1 = 5 brick
  // layers (boundary-first: 1,2,1,2,1 blocks) lands at 14 slots.
  Circuit h2like = build_sp(4, 2);
  CHECK(h2like.slot_count() == 14);

  // n=2, m=1 meets its freedom target of 2 with the depth floor trivially
  // adding identical (0,1) blocks: the first block alone carries the target.
  Circuit two = build_sp(2, 1);
  CHECK(two.slot_count() >= 2);
  int blocks = 0;
  for (const auto& gate : two.gates()) {
    if (gate.kind == GateKind::SPBlock) ++blocks;
  }
  CHECK(blocks * 2 == two.slot_count());

  // Layer accounting: slots reach the freedom target, layers reach the
  // depth floor, and dropping the last layer would violate one of the two.
  for (int n = 3; n <= 6; ++n) {
    for (int m = 1; m < n; ++m) {
      Circuit c = build_sp(n, m);
      long long target = 1;
      for (int i = 1; i <= m; ++i) target = target * (n - m + i) / i;
      target = 2 * target - 2;

      int boundary = (m - 1) % 2;
      int layers = 0;
      long long slots = 0;
      while (slots < target || layers < n + 1) {
        int first = (boundary + layers) % 2;
        slots += 2 * ((n - first) / 2);
        ++layers;
      }
      CHECK(c.slot_count() == slots);
      CHECK(c.slot_count() >= target);
    }
  }

  CHECK_THROWS_AS(build_sp(4, 0), ConstraintError);
  CHECK_THROWS_AS(build_sp(4, 4), ConstraintError);
}

TEST_CASE("sp ansatz stays in the Hamming-weight sector") {
  std::mt19937 rng(71);
  for (auto [n, m] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{3, 1}}) {
    Circuit circuit = build_sp(n, m);
    for (int trial = 0; trial < 30; ++trial) {
      StateVector state(n);  // |0...0>; the circuit's X gates set the weight
      auto params = random_params(rng, circuit.slot_count(), 3.0);
      apply_circuit(state, circuit, params);
      CHECK(off_sector_norm(state, m) < 1e-12);
      CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("hea structure") {
  Circuit hea = build_hea(4, 2, Entangler::CZ);
  CHECK(hea.slot_count() == 24);  // 3 * 4 * 2

  // All-zero parameters with CZ fix |0...0> up to global phase.
  StateVector state(4);
  std::vector<double> zeros(24, 0.0);
  apply_circuit(state, hea, zeros);
  CHECK(std::abs(std::abs(state.amp(0)) - 1.0) < 1e-12);

  std::mt19937 rng(73);
  Circuit cnot = build_hea(2, 1, Entangler::CNOT);
  CHECK(cnot.slot_count() == 6);
  StateVector s2(2);
  auto params = random_params(rng, 6, 3.0);
  apply_circuit(s2, cnot, params);
  CHECK(s2.norm() == doctest::Approx(1.0).epsilon(1e-10));

  CHECK_THROWS_AS(build_hea(4, 0, Entangler::CZ), ConstraintError);
  CHECK_THROWS_AS(build_hea(1, 1, Entangler::CZ), ConstraintError);
}

TEST_CASE("ansatz dispatch") {
  AnsatzSpec sp;
  sp.kind = AnsatzKind::SP;
  sp.mapping = MappingScheme::Parity;
  sp.modes = 4;
  sp.nelec = 2;
  CHECK_THROWS_AS(build_ansatz(sp), ConstraintError);
  sp.mapping = MappingScheme::JW;
  CHECK(build_ansatz(sp).slot_count() == 14);

  CHECK(parse_ansatz_kind("uccsd") == AnsatzKind::UCCSD);
  CHECK(parse_entangler("cnot") == Entangler::CNOT);
  CHECK_THROWS_AS(parse_ansatz_kind("adapt"), ConstraintError);
  CHECK_THROWS_AS(parse_entangler("iswap"), ConstraintError);
}
