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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qvqe {

/// Non-identity single-qubit Pauli factor. Identity factors are never stored.
enum class PauliAxis : std::uint8_t { X = 1, Y = 2, Z = 3 };

char axis_char(PauliAxis axis);

/// Tensor product of single-qubit Pauli operators, stored as a sparse list of
/// (qubit, axis) factors sorted by qubit index. The empty list is the
/// identity. Phases never live here; they belong to the owning coefficient.
class PauliString {
 public:
  using Factor = std::pair<std::uint32_t, PauliAxis>;

  PauliString() = default;

  static PauliString single(std::uint32_t qubit, PauliAxis axis);
  static PauliString x(std::uint32_t qubit) { return single(qubit, PauliAxis::X); }
  static PauliString y(std::uint32_t qubit) { return single(qubit, PauliAxis::Y); }
  static PauliString z(std::uint32_t qubit) { return single(qubit, PauliAxis::Z); }

  /// Builds from arbitrary-order factors; rejects duplicate qubits.
  static PauliString from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_identity() const { return factors_.empty(); }
  std::size_t weight() const { return factors_.size(); }

  /// Largest qubit index touched; identity has none and returns -1.
  std::int64_t max_qubit() const;

  /// "X0 Z3" with factors in qubit order; "I" for the identity.
  std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend bool operator<(const PauliString& a, const PauliString& b) {
    return a.factors_ < b.factors_;
  }

 private:
  std::vector<Factor> factors_;
};

struct StringProduct {
  std::complex<double> phase;  // exactly one of 1, i, -1, -i
  PauliString string;
};

/// Operator product p*q, split into a unit phase and a phase-free string.
StringProduct mul_strings(const PauliString& p, const PauliString& q);

/// True iff p*q == q*p: the number of sites where both act non-trivially
/// with different axes is even.
bool commutes(const PauliString& p, const PauliString& q);

/// Complex-weighted sum of PauliStrings with exact term-key merging.
/// Coefficients below the pruning threshold are dropped on every mutation,
/// so the zero operator is always the empty sum.
class PauliSum {
 public:
  static constexpr double kPruneThreshold = 1e-12;

  PauliSum() = default;

  static PauliSum zero() { return {}; }
  static PauliSum identity(std::complex<double> coefficient = 1.0);
  static PauliSum term(PauliString string, std::complex<double> coefficient);

  const std::map<PauliString, std::complex<double>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of `string`, or 0 if absent.
  std::complex<double> coefficient(const PauliString& string) const;

  void add_term(const PauliString& string, std::complex<double> coefficient);

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(std::complex<double> scalar);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, std::complex<double> s) { return a *= s; }
  friend PauliSum operator*(std::complex<double> s, PauliSum a) { return a *= s; }

  /// One term per line: "(re,im) X0 Z1", identity support rendered as "I".
  /// Terms appear in canonical (sorted-string) order.
  std::string to_string() const;

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  std::map<PauliString, std::complex<double>> terms_;
};

/// Distributes mul_strings over all term pairs and merges.
PauliSum mul_sums(const PauliSum& a, const PauliSum& b);

inline PauliSum operator*(const PauliSum& a, const PauliSum& b) { return mul_sums(a, b); }

/// Strings are Hermitian, so a sum is Hermitian iff its coefficients are
/// real within `tol`.
bool is_hermitian(const PauliSum& sum, double tol = 1e-10);

/// Largest weight over stored terms; 0 for scalar or zero operators.
std::size_t max_weight(const PauliSum& sum);

/// Dense-matrix cap for to_matrix and the diagonalization oracle:
/// QVQE_ORACLE_LIMIT if set, else 12 qubits.
int oracle_limit();

/// Dense 2^n x 2^n matrix of the sum, identity on untouched qubits.
/// Qubit 0 is the least-significant bit of the basis index.
Eigen::MatrixXcd to_matrix(const PauliSum& sum, int n_qubits);

}  // namespace qvqe
