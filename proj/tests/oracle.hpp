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
//
// Test-only oracles, deliberately independent of the library's fast paths:
// matrices are assembled by explicit Kronecker products and ladder-operator
// matrices by direct occupation-basis enumeration.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "qvqe/fermion.hpp"
#include "qvqe/pauli.hpp"

namespace oracle {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

inline Eigen::Matrix2cd pauli_matrix(int axis) {
  Eigen::Matrix2cd m;
  switch (axis) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Qubit 0 is the least-significant bit, so it is the rightmost Kronecker
// factor.
inline Matrix string_matrix(const qvqe::PauliString& s, int n_qubits) {
  std::vector<int> axes(std::size_t(n_qubits), 0);
  for (const auto& [q, a] : s.factors()) axes[q] = int(a);
  Matrix m = Matrix::Identity(1, 1);
  for (int q = n_qubits - 1; q >= 0; --q) m = kron(m, pauli_matrix(axes[std::size_t(q)]));
  return m;
}

inline Matrix sum_matrix(const qvqe::PauliSum& s, int n_qubits) {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& [str, coeff] : s.terms()) m += coeff * string_matrix(str, n_qubits);
  return m;
}

// exp(-i theta P) for a Hermitian involution P via eigendecomposition.
inline Matrix expm_rotation(const Matrix& p, double theta) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(p);
  Matrix d = Matrix::Zero(p.rows(), p.cols());
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    d(i, i) = std::exp(Complex(0, -theta * solver.eigenvalues()(i)));
  }
  return solver.eigenvectors() * d * solver.eigenvectors().adjoint();
}

// Matrix of a single ladder operator on M modes in the occupation basis with
// basis index b <-> occupations n_j = bit j of b.
inline Matrix ladder_matrix(const qvqe::LadderOp& op, int modes) {
  const Eigen::Index dim = Eigen::Index(1) << modes;
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    qvqe::OccupationVector n(std::size_t(modes), 0);
    for (int j = 0; j < modes; ++j) n[std::size_t(j)] = (b >> j) & 1;
    auto [phase, out] = qvqe::apply_ladder(op, n);
    if (phase == 0) continue;
    Eigen::Index target = 0;
    for (int j = 0; j < modes; ++j) {
      if ((*out)[std::size_t(j)]) target |= Eigen::Index(1) << j;
    }
    m(target, b) += double(phase);
  }
  return m;
}

inline Matrix fermion_matrix(const qvqe::FermionSum& s, int modes) {
  const Eigen::Index dim = Eigen::Index(1) << modes;
  Matrix total = Matrix::Zero(dim, dim);
  for (const auto& term : s.terms()) {
    Matrix product = Matrix::Identity(dim, dim);
    for (const auto& op : term.ops) product = product * ladder_matrix(op, modes);
    total += term.coefficient * product;
  }
  return total;
}

inline qvqe::PauliString random_string(std::mt19937& rng, int n_qubits) {
  std::vector<qvqe::PauliString::Factor> factors;
  for (int q = 0; q < n_qubits; ++q) {
    switch (rng() % 4) {
      case 0: break;
      case 1: factors.emplace_back(std::uint32_t(q), qvqe::PauliAxis::X); break;
      case 2: factors.emplace_back(std::uint32_t(q), qvqe::PauliAxis::Y); break;
      default: factors.emplace_back(std::uint32_t(q), qvqe::PauliAxis::Z); break;
    }
  }
  return qvqe::PauliString::from_factors(std::move(factors));
}

inline double random_real(std::mt19937& rng, double lo, double hi) {
  return lo + (hi - lo) * double(rng() >> 8) / double(1u << 24);
}

inline qvqe::PauliSum random_sum(std::mt19937& rng, int n_qubits, int max_terms) {
  qvqe::PauliSum s;
  int terms = 1 + int(rng() % std::uint32_t(max_terms));
  for (int t = 0; t < terms; ++t) {
    s.add_term(random_string(rng, n_qubits),
               {random_real(rng, -1, 1), random_real(rng, -1, 1)});
  }
  return s;
}

}  // namespace oracle
