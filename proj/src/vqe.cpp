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

#include "qvqe/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <nlohmann/json.hpp>

#include "qvqe/errors.hpp"
#include "qvqe/text.hpp"

namespace qvqe {

OptimizerKind parse_optimizer(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return char(std::tolower(c)); });
  if (lower == "nelder-mead" || lower == "neldermead" || lower == "nm") {
    return OptimizerKind::NelderMead;
  }
  if (lower == "gradient-descent" || lower == "gd") return OptimizerKind::GradientDescent;
  throw ConstraintError("unknown optimizer '" + std::string(name) +
                   "'; expected nelder-mead or gradient-descent");
}

std::string optimizer_name(OptimizerKind kind) {
  return kind == OptimizerKind::NelderMead ? "nelder-mead" : "gradient-descent";
}

GradientMode parse_gradient_mode(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return char(std::tolower(c)); });
  if (lower == "parameter-shift" || lower == "ps") return GradientMode::ParameterShift;
  if (lower == "finite-difference" || lower == "fd") return GradientMode::FiniteDifference;
  throw ConstraintError("unknown gradient mode '" + std::string(name) +
                   "'; expected parameter-shift or finite-difference");
}

std::string gradient_mode_name(GradientMode mode) {
  return mode == GradientMode::ParameterShift ? "parameter-shift" : "finite-difference";
}

std::string result_to_json(const VqeResult& result) {
  nlohmann::ordered_json j;
  j["energy"] = result.energy;
  j["params"] = result.params;
  j["iterations"] = result.iterations;
  j["evals"] = result.evals;
  j["converged"] = result.converged;
  auto& trace = j["trace"] = nlohmann::ordered_json::array();
  for (const auto& entry : result.trace) {
    trace.push_back({{"it", entry.iteration}, {"e", entry.energy}});
  }
  return j.dump(2) + "\n";
}

VqeResult result_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad VQE result JSON: ") + e.what());
  }
  VqeResult r;
  try {
    r.energy = j.at("energy").get<double>();
    r.params = j.at("params").get<std::vector<double>>();
    r.iterations = j.at("iterations").get<int>();
    r.evals = j.at("evals").get<long>();
    r.converged = j.at("converged").get<bool>();
    for (const auto& entry : j.at("trace")) {
      r.trace.push_back({entry.at("it").get<int>(), entry.at("e").get<double>(), 0});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad VQE result JSON: ") + e.what());
  }
  return r;
}

double evaluate_energy(const PauliSum& hamiltonian, const Circuit& circuit,
                       std::span<const double> params, std::string_view init_bits) {
  StateVector state = init_basis(int(init_bits.size()), init_bits);
  apply_circuit(state, circuit, params);
  return expectation(state, hamiltonian);
}

namespace {

constexpr double kShift = std::numbers::pi / 4.0;

double evaluate_with_gate_shift(const PauliSum& hamiltonian, const Circuit& circuit,
                                std::span<const double> params, std::string_view init_bits,
                                int gate_index, double shift) {
  StateVector state = init_basis(int(init_bits.size()), init_bits);
  apply_circuit(state, circuit, params, gate_index, shift);
  return expectation(state, hamiltonian);
}

std::string offending_params(std::span<const double> params) {
  std::string out = "[";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ", ";
    out += format_double(params[i]);
  }
  return out + "]";
}

}  // namespace

std::vector<double> gradient(const PauliSum& hamiltonian, const Circuit& circuit,
                             std::span<const double> params, std::string_view init_bits,
                             GradientMode mode) {
  const int slots = circuit.slot_count();
  if (int(params.size()) != slots) {
    throw ConstraintError("parameter vector length does not match slot count");
  }
  std::vector<double> grad(slots, 0.0);

  if (mode == GradientMode::FiniteDifference) {
    constexpr double h = 1e-5;
    std::vector<double> probe(params.begin(), params.end());
    for (int k = 0; k < slots; ++k) {
      probe[k] = params[k] + h;
      double plus = evaluate_energy(hamiltonian, circuit, probe, init_bits);
      probe[k] = params[k] - h;
      double minus = evaluate_energy(hamiltonian, circuit, probe, init_bits);
      probe[k] = params[k];
      grad[k] = (plus - minus) / (2.0 * h);
    }
    return grad;
  }

  const auto& gates = circuit.gates();
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const Gate& gate = gates[g];
    auto contribute = [&](const GateParam& p) {
      if (p.is_bound()) return;
      if (gate.kind != GateKind::PauliRot) {
        throw ConstraintError(
            "parameter-shift gradient does not apply to slot " + std::to_string(p.slot) +
            " (" + circuit.slot_labels()[std::size_t(p.slot)] +
            "): gate is not a Pauli rotation; use finite-difference");
      }
      double plus = evaluate_with_gate_shift(hamiltonian, circuit, params, init_bits, int(g),
                                             kShift);
      double minus = evaluate_with_gate_shift(hamiltonian, circuit, params, init_bits, int(g),
                                              -kShift);
      grad[std::size_t(p.slot)] += p.scale * (plus - minus);
    };
    contribute(gate.theta);
    contribute(gate.phi);
  }
  return grad;
}

namespace {

// Deterministic uniform draw from [-scale, scale] built from raw mt19937_64
// bits; avoids distribution implementations that vary across standard
// libraries.
double uniform_symmetric(std::mt19937_64& rng, double scale) {
  double u = double(rng() >> 11) * 0x1.0p-53;  // [0, 1)
  return (2.0 * u - 1.0) * scale;
}

class Recorder {
 public:
  explicit Recorder(std::function<double(std::span<const double>)> fn) : fn_(std::move(fn)) {}

  double operator()(std::span<const double> x) {
    ++evals_;
    double e = fn_(x);
    if (!std::isfinite(e)) {
      throw Error("non-finite energy at params " + offending_params(x));
    }
    return e;
  }

  long evals() const { return evals_; }

 private:
  std::function<double(std::span<const double>)> fn_;
  long evals_ = 0;
};

void push_trace(VqeResult& result, int iteration, double energy,
                std::span<const double> params) {
  result.trace.push_back({iteration, energy, hash_doubles(params.data(), params.size())});
}

VqeResult minimize_nelder_mead(Recorder& energy, std::vector<double> x0,
                               const VqeConfig& config) {
  const int n = int(x0.size());
  VqeResult result;

  double f0 = energy(x0);
  push_trace(result, 0, f0, x0);
  if (n == 0) {
    result.energy = f0;
    result.params = std::move(x0);
    result.converged = true;
    result.evals = energy.evals();
    return result;
  }

  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;
  constexpr double kInitialStep = 0.05;

  std::vector<std::vector<double>> simplex{x0};
  std::vector<double> fvals{f0};
  for (int k = 0; k < n; ++k) {
    auto v = x0;
    v[k] += kInitialStep;
    fvals.push_back(energy(v));
    simplex.push_back(std::move(v));
  }

  auto order = [&] {
    std::vector<int> idx(simplex.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return fvals[a] < fvals[b]; });
    std::vector<std::vector<double>> s2;
    std::vector<double> f2;
    for (int i : idx) {
      s2.push_back(std::move(simplex[i]));
      f2.push_back(fvals[i]);
    }
    simplex = std::move(s2);
    fvals = std::move(f2);
  };

  int iteration = 0;
  bool converged = false;
  while (iteration < config.max_iterations) {
    order();
    double spread = fvals.back() - fvals.front();
    double param_spread = 0.0;
    for (int k = 0; k < n; ++k) {
      for (std::size_t v = 1; v < simplex.size(); ++v) {
        param_spread = std::max(param_spread, std::abs(simplex[v][k] - simplex[0][k]));
      }
    }
    if (spread < config.energy_tol || param_spread < config.param_tol) {
      converged = true;
      break;
    }
    ++iteration;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t v = 0; v + 1 < simplex.size(); ++v) {
      for (int k = 0; k < n; ++k) centroid[k] += simplex[v][k];
    }
    for (int k = 0; k < n; ++k) centroid[k] /= n;

    auto blend = [&](double coeff) {
      std::vector<double> p(n);
      for (int k = 0; k < n; ++k) p[k] = centroid[k] + coeff * (centroid[k] - simplex.back()[k]);
      return p;
    };

    auto reflected = blend(kReflect);
    double f_reflected = energy(reflected);

    if (f_reflected < fvals.front()) {
      auto expanded = blend(kExpand);
      double f_expanded = energy(expanded);
      if (f_expanded < f_reflected) {
        simplex.back() = std::move(expanded);
        fvals.back() = f_expanded;
      } else {
        simplex.back() = std::move(reflected);
        fvals.back() = f_reflected;
      }
    } else if (f_reflected < fvals[fvals.size() - 2]) {
      simplex.back() = std::move(reflected);
      fvals.back() = f_reflected;
    } else {
      bool outside = f_reflected < fvals.back();
      std::vector<double> contracted(n);
      const auto& toward = outside ? reflected : simplex.back();
      for (int k = 0; k < n; ++k) {
        contracted[k] = centroid[k] + kContract * (toward[k] - centroid[k]);
      }
      double f_contracted = energy(contracted);
      if (f_contracted < (outside ? f_reflected : fvals.back())) {
        simplex.back() = std::move(contracted);
        fvals.back() = f_contracted;
      } else {
        for (std::size_t v = 1; v < simplex.size(); ++v) {
          for (int k = 0; k < n; ++k) {
            simplex[v][k] = simplex[0][k] + kShrink * (simplex[v][k] - simplex[0][k]);
          }
          fvals[v] = energy(simplex[v]);
        }
      }
    }

    int best = int(std::min_element(fvals.begin(), fvals.end()) - fvals.begin());
    push_trace(result, iteration, fvals[std::size_t(best)], simplex[std::size_t(best)]);
  }

  order();
  result.energy = fvals.front();
  result.params = simplex.front();
  result.iterations = iteration;
  result.converged = converged;
  result.evals = energy.evals();
  return result;
}

VqeResult minimize_gradient_descent(Recorder& energy,
                                    const std::function<std::vector<double>(
                                        std::span<const double>)>& grad_fn,
                                    std::vector<double> x, const VqeConfig& config) {
  VqeResult result;
  double fx = energy(x);
  push_trace(result, 0, fx, x);

  constexpr double kInitialStep = 0.5;
  constexpr double kMinStep = 1e-14;
  // Steep sufficient-decrease constant: any step at or below the curvature
  // scale passes, while boundary-of-stability bounces get halved away.
  constexpr double kArmijo = 0.1;

  int iteration = 0;
  bool converged = x.empty();
  while (!x.empty() && iteration < config.max_iterations) {
    ++iteration;
    std::vector<double> g = grad_fn(x);
    double gnorm2 = 0.0;
    for (double v : g) gnorm2 += v * v;

    double step = kInitialStep;
    std::vector<double> candidate(x.size());
    double f_candidate = fx;
    bool improved = false;
    while (step >= kMinStep) {
      for (std::size_t k = 0; k < x.size(); ++k) candidate[k] = x[k] - step * g[k];
      f_candidate = energy(candidate);
      if (f_candidate <= fx - kArmijo * step * gnorm2) {
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) {
      converged = true;  // no descent possible along -g at any step size
      push_trace(result, iteration, fx, x);
      break;
    }

    double delta = fx - f_candidate;
    double move = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      move = std::max(move, std::abs(candidate[k] - x[k]));
    }
    x = candidate;
    fx = f_candidate;
    push_trace(result, iteration, fx, x);

    if (delta < config.energy_tol || move < config.param_tol) {
      converged = true;
      break;
    }
  }

  result.energy = fx;
  result.params = std::move(x);
  result.iterations = iteration;
  result.converged = converged;
  result.evals = energy.evals();
  return result;
}

}  // namespace

VqeResult minimize(const PauliSum& hamiltonian, const Circuit& circuit,
                   std::string_view init_bits, const VqeConfig& config) {
  if (config.energy_tol <= 0 || config.param_tol <= 0) {
    throw ConstraintError("tolerances must be positive");
  }
  if (config.max_iterations < 1) throw ConstraintError("max iterations must be at least 1");

  std::vector<double> x0(std::size_t(circuit.slot_count()), 0.0);
  switch (config.init) {
    case InitMode::Zeros:
      break;
    case InitMode::Random: {
      std::mt19937_64 rng(config.seed);
      for (auto& v : x0) v = uniform_symmetric(rng, config.random_scale);
      break;
    }
    case InitMode::Explicit:
      if (int(config.initial_params.size()) != circuit.slot_count()) {
        throw ConstraintError("initial parameter vector length " +
                              std::to_string(config.initial_params.size()) +
                              " does not match slot count " +
                              std::to_string(circuit.slot_count()));
      }
      x0 = config.initial_params;
      break;
  }

  const std::string bits(init_bits);
  Recorder energy([&](std::span<const double> p) {
    return evaluate_energy(hamiltonian, circuit, p, bits);
  });

  if (config.optimizer == OptimizerKind::NelderMead) {
    return minimize_nelder_mead(energy, std::move(x0), config);
  }
  auto grad_fn = [&](std::span<const double> p) {
    return gradient(hamiltonian, circuit, p, bits, config.gradient);
  };
  return minimize_gradient_descent(energy, grad_fn, std::move(x0), config);
}

double exact_ground_energy(const PauliSum& hamiltonian, int n_qubits) {
  if (!is_hermitian(hamiltonian)) {
    throw ConstraintError("exact diagonalization requires a Hermitian operator");
  }
  Eigen::MatrixXcd m = to_matrix(hamiltonian, n_qubits);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) throw Error("eigensolver failed");
  return solver.eigenvalues().minCoeff();
}

double exact_ground_energy_sector(const PauliSum& hamiltonian, int n_qubits,
                                  MappingScheme scheme, int particles) {
  if (!is_hermitian(hamiltonian)) {
    throw ConstraintError("exact diagonalization requires a Hermitian operator");
  }
  Eigen::MatrixXcd m = to_matrix(hamiltonian, n_qubits);

  std::vector<std::size_t> keep;
  for (std::size_t b = 0; b < (std::size_t(1) << n_qubits); ++b) {
    std::vector<std::uint8_t> x(static_cast<std::size_t>(n_qubits), 0);
    for (int q = 0; q < n_qubits; ++q) x[std::size_t(q)] = (b >> q) & 1;
    OccupationVector n = decode_bitstring(scheme, x);
    int count = 0;
    for (auto v : n) count += v;
    if (count == particles) keep.push_back(b);
  }
  if (keep.empty()) {
    throw ConstraintError("no basis states with particle number " + std::to_string(particles));
  }

  Eigen::MatrixXcd block(keep.size(), keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    for (std::size_t c = 0; c < keep.size(); ++c) block(r, c) = m(keep[r], keep[c]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block);
  if (solver.info() != Eigen::Success) throw Error("eigensolver failed");
  return solver.eigenvalues().minCoeff();
}

}  // namespace qvqe
