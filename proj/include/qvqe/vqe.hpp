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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qvqe/ansatz.hpp"
#include "qvqe/encodings.hpp"
#include "qvqe/pauli.hpp"
#include "qvqe/simulator.hpp"

namespace qvqe {

enum class OptimizerKind { NelderMead, GradientDescent };
enum class GradientMode { ParameterShift, FiniteDifference };
enum class InitMode { Zeros, Random, Explicit };

OptimizerKind parse_optimizer(std::string_view name);
std::string optimizer_name(OptimizerKind kind);
GradientMode parse_gradient_mode(std::string_view name);
std::string gradient_mode_name(GradientMode mode);

struct VqeConfig {
  OptimizerKind optimizer = OptimizerKind::NelderMead;
  GradientMode gradient = GradientMode::ParameterShift;
  double energy_tol = 1e-8;   // Hartree
  double param_tol = 1e-10;
  int max_iterations = 2000;
  std::uint64_t seed = 0;
  InitMode init = InitMode::Zeros;
  std::vector<double> initial_params;  // InitMode::Explicit
  double random_scale = 0.1;           // InitMode::Random draws from [-scale, scale]
};

struct TraceEntry {
  int iteration;
  double energy;
  std::uint64_t param_hash;
};

struct VqeResult {
  double energy = 0.0;
  std::vector<double> params;
  int iterations = 0;
  long evals = 0;
  bool converged = false;
  std::vector<TraceEntry> trace;
};

/// {energy, params, iterations, evals, converged, trace:[{it,e}]} with that
/// key order.
std::string result_to_json(const VqeResult& result);
VqeResult result_from_json(std::string_view text);

/// Prepares init_basis(bits), applies the circuit, returns the expectation.
double evaluate_energy(const PauliSum& hamiltonian, const Circuit& circuit,
                       std::span<const double> params, std::string_view init_bits);

/// Gradient of evaluate_energy.
///
/// ParameterShift uses dE/dalpha = E(alpha + pi/4) - E(alpha - pi/4), exact
/// for each PauliRot angle alpha since exp(-i alpha P) with P^2 = I makes
/// the energy a + b cos(2 alpha) + c sin(2 alpha); slot gradients combine
/// per-gate shifts through the chain rule. It rejects slots attached to
/// non-PauliRot gates. FiniteDifference uses central differences, h = 1e-5.
std::vector<double> gradient(const PauliSum& hamiltonian, const Circuit& circuit,
                             std::span<const double> params, std::string_view init_bits,
                             GradientMode mode);

/// Runs the configured optimizer from the configured initial point.
VqeResult minimize(const PauliSum& hamiltonian, const Circuit& circuit,
                   std::string_view init_bits, const VqeConfig& config);

/// Dense Hermitian eigensolve of to_matrix; smallest eigenvalue.
double exact_ground_energy(const PauliSum& hamiltonian, int n_qubits);

/// Restricts to basis states whose decoded occupation (under `scheme`) holds
/// exactly `particles` electrons, then diagonalizes the block.
double exact_ground_energy_sector(const PauliSum& hamiltonian, int n_qubits,
                                  MappingScheme scheme, int particles);

}  // namespace qvqe
