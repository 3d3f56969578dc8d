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

#include "qvqe/pauli.hpp"

#include <algorithm>
#include <cstdlib>

#include "qvqe/errors.hpp"
#include "qvqe/text.hpp"

namespace qvqe {

char axis_char(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X: return 'X';
    case PauliAxis::Y: return 'Y';
    case PauliAxis::Z: return 'Z';
  }
  return '?';
}

PauliString PauliString::single(std::uint32_t qubit, PauliAxis axis) {
  PauliString s;
  s.factors_.emplace_back(qubit, axis);
  return s;
}

PauliString PauliString::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i].first == factors[i - 1].first) {
      throw ConstraintError("duplicate qubit " + std::to_string(factors[i].first) +
                            " in Pauli string");
    }
  }
  PauliString s;
  s.factors_ = std::move(factors);
  return s;
}

std::int64_t PauliString::max_qubit() const {
  return factors_.empty() ? -1 : std::int64_t(factors_.back().first);
}

std::string PauliString::to_string() const {
  if (factors_.empty()) return "I";
  std::string out;
  for (const auto& [q, a] : factors_) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(axis_char(a));
    out += std::to_string(q);
  }
  return out;
}

namespace {

// axis codes 1=X, 2=Y, 3=Z; a*b = i^k c with c = a^b when a != b.
// Cyclic (X,Y), (Y,Z), (Z,X) pick up +i, the reverses -i.
inline void mul_axis(std::uint8_t a, std::uint8_t b, std::uint8_t& axis_out, int& phase_pow) {
  if (a == b) {
    axis_out = 0;
    return;
  }
  axis_out = a ^ b;
  bool cyclic = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
  phase_pow += cyclic ? 1 : 3;
}

inline std::complex<double> unit_phase(int pow_of_i) {
  switch (pow_of_i & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

StringProduct mul_strings(const PauliString& p, const PauliString& q) {
  const auto& a = p.factors();
  const auto& b = q.factors();
  std::vector<PauliString::Factor> out;
  out.reserve(a.size() + b.size());
  int phase_pow = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else if (a[i].first > b[j].first) {
      out.push_back(b[j++]);
    } else {
      std::uint8_t axis;
      mul_axis(std::uint8_t(a[i].second), std::uint8_t(b[j].second), axis, phase_pow);
      if (axis != 0) out.emplace_back(a[i].first, PauliAxis(axis));
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return {unit_phase(phase_pow), PauliString::from_factors(std::move(out))};
}

bool commutes(const PauliString& p, const PauliString& q) {
  const auto& a = p.factors();
  const auto& b = q.factors();
  std::size_t i = 0, j = 0;
  int clashes = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (a[i].first > b[j].first) {
      ++j;
    } else {
      if (a[i].second != b[j].second) ++clashes;
      ++i;
      ++j;
    }
  }
  return clashes % 2 == 0;
}

PauliSum PauliSum::identity(std::complex<double> coefficient) {
  return term(PauliString{}, coefficient);
}

PauliSum PauliSum::term(PauliString string, std::complex<double> coefficient) {
  PauliSum s;
  s.add_term(string, coefficient);
  return s;
}

std::complex<double> PauliSum::coefficient(const PauliString& string) const {
  auto it = terms_.find(string);
  return it == terms_.end() ? std::complex<double>{0.0, 0.0} : it->second;
}

void PauliSum::add_term(const PauliString& string, std::complex<double> coefficient) {
  auto [it, inserted] = terms_.try_emplace(string, coefficient);
  if (!inserted) it->second += coefficient;
  if (std::abs(it->second) < kPruneThreshold) terms_.erase(it);
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  for (const auto& [s, c] : other.terms_) add_term(s, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  for (const auto& [s, c] : other.terms_) add_term(s, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(std::complex<double> scalar) {
  if (std::abs(scalar) < kPruneThreshold) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= scalar;
  return *this;
}

std::string PauliSum::to_string() const {
  std::string out;
  for (const auto& [s, c] : terms_) {
    if (!out.empty()) out.push_back('\n');
    out += format_complex(c);
    out.push_back(' ');
    out += s.to_string();
  }
  return out;
}

PauliSum mul_sums(const PauliSum& a, const PauliSum& b) {
  PauliSum out;
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      auto [phase, s] = mul_strings(sa, sb);
      out.add_term(s, phase * ca * cb);
    }
  }
  return out;
}

bool is_hermitian(const PauliSum& sum, double tol) {
  for (const auto& [s, c] : sum.terms()) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

std::size_t max_weight(const PauliSum& sum) {
  std::size_t w = 0;
  for (const auto& [s, c] : sum.terms()) w = std::max(w, s.weight());
  return w;
}

int oracle_limit() {
  if (const char* env = std::getenv("QVQE_ORACLE_LIMIT")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 12;
}

Eigen::MatrixXcd to_matrix(const PauliSum& sum, int n_qubits) {
  if (n_qubits < 0 || n_qubits > oracle_limit()) {
    throw ConstraintError("to_matrix: " + std::to_string(n_qubits) +
                          " qubits exceeds the oracle limit of " +
                          std::to_string(oracle_limit()));
  }
  const std::size_t dim = std::size_t(1) << n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [s, c] : sum.terms()) {
    if (s.max_qubit() >= n_qubits) {
      throw ConstraintError("to_matrix: string " + s.to_string() + " exceeds " +
                            std::to_string(n_qubits) + " qubits");
    }
    std::size_t flip_mask = 0;
    for (const auto& [q, a] : s.factors()) {
      if (a != PauliAxis::Z) flip_mask |= std::size_t(1) << q;
    }
    for (std::size_t col = 0; col < dim; ++col) {
      // P|col> = phase * |col ^ flip_mask>
      std::complex<double> phase = 1.0;
      for (const auto& [q, a] : s.factors()) {
        bool bit = (col >> q) & 1;
        if (a == PauliAxis::Z) {
          if (bit) phase = -phase;
        } else if (a == PauliAxis::Y) {
          phase *= bit ? std::complex<double>(0.0, -1.0) : std::complex<double>(0.0, 1.0);
        }
      }
      m(col ^ flip_mask, col) += c * phase;
    }
  }
  return m;
}

}  // namespace qvqe
