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

#include <string>
#include <string_view>
#include <vector>

#include "qvqe/fermion.hpp"
#include "qvqe/pauli.hpp"

namespace qvqe {

/// The four supported fermion-to-qubit encodings. BK requires a power-of-2
/// mode count; BKTree generalizes it to any M via the Fenwick tree.
enum class MappingScheme { JW, Parity, BK, BKTree };

MappingScheme parse_mapping(std::string_view name);
std::string mapping_name(MappingScheme scheme);

/// Rooted prefix-sum tree on modes {0..M-1}. Node M-1 is the root; every
/// child index is smaller than its parent's, so each subtree covers a
/// contiguous index interval ending at its root.
struct FenwickTree {
  int mode_count = 0;
  std::vector<int> parent;                 // parent[root] == -1
  std::vector<std::vector<int>> children;  // ascending per node

  int root() const { return mode_count - 1; }
};

/// Recursive midpoint bisection of [0, M-1]: the midpoint of each segment
/// becomes a child of the segment's upper end.
FenwickTree build_fenwick(int modes);

/// Per-mode index sets governing which qubits a mapped ladder operator
/// touches:
///   parity[j]    qubits whose stored bits XOR to the parity of modes < j
///   flip[j]      stored bits that relate qubit j's value to occupation j
///   update[j]    qubits whose stored bits include occupation j
///   summation[j] occupations folded into qubit j's stored bit (besides j)
struct IndexSets {
  int mode_count = 0;
  std::vector<std::vector<int>> parity;
  std::vector<std::vector<int>> flip;
  std::vector<std::vector<int>> update;
  std::vector<std::vector<int>> summation;

  /// parity[j] minus flip[j], preserving order.
  std::vector<int> remainder(int j) const;
};

/// Binary-digit construction of the BK sets; M must be a power of 2.
IndexSets build_sets_closed_form(int modes);

/// Derives the sets from tree relations: flip = children, summation =
/// descendants, update = ancestors, parity = Fenwick prefix query over
/// modes below j.
IndexSets sets_from_tree(const FenwickTree& tree);

/// Occupation-to-qubit state transform. JW stores occupations directly,
/// Parity stores inclusive prefix sums, BK/BKTree store subtree sums.
std::vector<std::uint8_t> encode_occupations(MappingScheme scheme, const OccupationVector& n);

/// Inverse of encode_occupations; the transforms are GF(2) bijections.
OccupationVector decode_bitstring(MappingScheme scheme, const std::vector<std::uint8_t>& x);

/// Image of a_j (dagger=false) or a_j^dagger (dagger=true) on an M-mode
/// register: two terms with coefficients 1/2 and +-i/2. Annihilation carries
/// +i on the Y-type term, creation -i.
PauliSum map_ladder(MappingScheme scheme, std::uint32_t mode, bool dagger, std::uint32_t modes);

/// Homomorphic image of a FermionSum: coefficients carried through, products
/// expanded with mul_sums, result pruned.
PauliSum map_fermion_sum(MappingScheme scheme, const FermionSum& s, std::uint32_t modes);

struct WeightProfile {
  std::vector<std::size_t> per_mode;
  std::size_t max = 0;
};

/// Pauli weight of the mapped annihilation operator per mode, plus the
/// maximum over modes.
WeightProfile pauli_weight_profile(MappingScheme scheme, std::uint32_t modes);

}  // namespace qvqe
