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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qvqe {

/// Occupation-number basis state over M fermionic modes; entries are 0 or 1.
using OccupationVector = std::vector<std::uint8_t>;

/// Parses "1010" with character i giving the occupation of mode i.
OccupationVector occupations_from_string(std::string_view text);
std::string occupations_to_string(const OccupationVector& n);

/// A single creation (dagger) or annihilation operator on mode `mode`.
struct LadderOp {
  std::uint32_t mode;
  bool dagger;

  friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

/// Ordered product of ladder operators with a complex coefficient, written
/// left to right. An empty product is the scalar coefficient times identity.
struct FermionTerm {
  std::vector<LadderOp> ops;
  std::complex<double> coefficient{1.0, 0.0};
};

/// Sum of FermionTerms. No normal ordering is imposed; products are kept as
/// written and simplified only after mapping to Pauli operators.
class FermionSum {
 public:
  static constexpr double kPruneThreshold = 1e-12;

  FermionSum() = default;
  explicit FermionSum(FermionTerm term) { add_term(std::move(term)); }

  static FermionSum scalar(std::complex<double> c);

  const std::vector<FermionTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(FermionTerm term);

  FermionSum& operator+=(const FermionSum& other);
  FermionSum& operator-=(const FermionSum& other);

  /// Merges terms with identical operator sequences and drops coefficients
  /// below the pruning threshold.
  void simplify();

  /// Largest mode index referenced, or -1 for pure scalars.
  std::int64_t max_mode() const;

 private:
  std::vector<FermionTerm> terms_;
};

struct LadderAction {
  int phase;  // +1, -1, or 0 when the state is annihilated
  std::optional<OccupationVector> state;
};

/// Applies a_j or a_j^dagger to a basis state: creation fills an empty mode,
/// annihilation empties a filled one, both with the parity sign
/// (-1)^(sum of occupations below mode j); anything else gives (0, null).
LadderAction apply_ladder(const LadderOp& op, const OccupationVector& basis);

/// Hermitian adjoint: reverses each product, flips daggers, conjugates
/// coefficients.
FermionSum conjugate(const FermionSum& s);

/// t - t^dagger; maps to i times a real PauliSum under every encoding.
FermionSum anti_hermitian_generator(const FermionSum& t);

/// a_j^dagger a_j on an M-mode register.
FermionSum number_operator(std::uint32_t mode, std::uint32_t modes);

/// Sum of a_j^dagger a_j over all modes.
FermionSum total_number_operator(std::uint32_t modes);

/// Parses the CLI ladder syntax: whitespace-separated "a^ j" (creation) and
/// "a j" (annihilation) factors, e.g. "a^ 2 a 0". Reports the byte offset of
/// the offending token on failure.
FermionTerm parse_ladder_term(std::string_view text);

}  // namespace qvqe
