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

#include "qvqe/encodings.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "qvqe/errors.hpp"

namespace qvqe {

namespace {

bool is_power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

void require_bk_mode_count(int modes) {
  if (!is_power_of_two(modes)) {
    throw ConstraintError("BK requires a power-of-2 mode count, got " +
                          std::to_string(modes) + "; use bktree for general mode counts");
  }
}

}  // namespace

MappingScheme parse_mapping(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return char(std::tolower(c)); });
  if (lower == "jw" || lower == "jordan-wigner") return MappingScheme::JW;
  if (lower == "parity") return MappingScheme::Parity;
  if (lower == "bk" || lower == "bravyi-kitaev") return MappingScheme::BK;
  if (lower == "bktree" || lower == "bk-tree") return MappingScheme::BKTree;
  throw ConstraintError("unknown mapping scheme '" + std::string(name) +
                   "'; expected jw, parity, bk or bktree");
}

std::string mapping_name(MappingScheme scheme) {
  switch (scheme) {
    case MappingScheme::JW: return "jw";
    case MappingScheme::Parity: return "parity";
    case MappingScheme::BK: return "bk";
    case MappingScheme::BKTree: return "bktree";
  }
  return "?";
}

FenwickTree build_fenwick(int modes) {
  if (modes < 1) throw ConstraintError("Fenwick tree needs at least one mode");
  FenwickTree tree;
  tree.mode_count = modes;
  tree.parent.assign(modes, -1);
  tree.children.assign(modes, {});

  // Attach the midpoint of [lo, hi] as a child of hi, then recurse into the
  // two halves. Every child ends up with a smaller index than its parent.
  auto construct = [&](auto&& self, int lo, int hi) -> void {
    if (lo >= hi) return;
    int mid = (lo + hi) / 2;
    tree.parent[mid] = hi;
    self(self, lo, mid);
    self(self, mid + 1, hi);
  };
  construct(construct, 0, modes - 1);

  for (int j = 0; j < modes; ++j) {
    if (tree.parent[j] >= 0) tree.children[tree.parent[j]].push_back(j);
  }
  for (auto& c : tree.children) std::sort(c.begin(), c.end());
  return tree;
}

std::vector<int> IndexSets::remainder(int j) const {
  std::vector<int> out;
  for (int k : parity[j]) {
    if (std::find(flip[j].begin(), flip[j].end(), k) == flip[j].end()) out.push_back(k);
  }
  return out;
}

IndexSets build_sets_closed_form(int modes) {
  require_bk_mode_count(modes);
  int d = 0;
  while ((1 << d) < modes) ++d;

  IndexSets sets;
  sets.mode_count = modes;
  sets.parity.assign(modes, {});
  sets.flip.assign(modes, {});
  sets.update.assign(modes, {});
  sets.summation.assign(modes, {});

  for (int j = 0; j < modes; ++j) {
    // Flip set: clear one set bit of j whose lower bits are all ones.
    for (int b = 0; b < d; ++b) {
      if (!(j & (1 << b))) continue;
      int low = (1 << b) - 1;
      if ((j & low) == low) sets.flip[j].push_back(j & ~(1 << b));
    }
    // Parity set: clear one set bit of j and saturate everything below it.
    for (int b = 0; b < d; ++b) {
      if (!(j & (1 << b))) continue;
      int k = (j & ~((1 << (b + 1)) - 1)) | ((1 << b) - 1);
      sets.parity[j].push_back(k);
    }
    // Update set: saturate the lowest b bits of j, for every b that changes j.
    for (int b = 1; b <= d; ++b) {
      int k = j | ((1 << b) - 1);
      if (k != j && k < modes) sets.update[j].push_back(k);
    }
    // Summation set: every index sharing j's prefix above its trailing ones.
    int trailing = 0;
    while (trailing < d && (j & (1 << trailing))) ++trailing;
    int base = j & ~((1 << trailing) - 1);
    for (int t = 0; t < (1 << trailing); ++t) {
      if ((base | t) != j) sets.summation[j].push_back(base | t);
    }
    for (auto* v : {&sets.parity[j], &sets.flip[j], &sets.update[j], &sets.summation[j]}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
  }
  return sets;
}

IndexSets sets_from_tree(const FenwickTree& tree) {
  const int m = tree.mode_count;
  IndexSets sets;
  sets.mode_count = m;
  sets.parity.assign(m, {});
  sets.flip.assign(m, {});
  sets.update.assign(m, {});
  sets.summation.assign(m, {});

  for (int j = 0; j < m; ++j) {
    sets.flip[j] = tree.children[j];

    for (int a = tree.parent[j]; a >= 0; a = tree.parent[a]) sets.update[j].push_back(a);

    // Descendants via DFS; children lists are ascending, result sorted below.
    std::vector<int> stack(tree.children[j]);
    while (!stack.empty()) {
      int node = stack.back();
      stack.pop_back();
      sets.summation[j].push_back(node);
      stack.insert(stack.end(), tree.children[node].begin(), tree.children[node].end());
    }

    // Fenwick prefix query for sum of occupations on modes [0, j): walk from
    // j to the root collecting children below j; their subtrees partition
    // the prefix interval.
    for (int node = j; node >= 0; node = tree.parent[node]) {
      for (int c : tree.children[node]) {
        if (c < j) sets.parity[j].push_back(c);
      }
    }

    for (auto* v : {&sets.parity[j], &sets.update[j], &sets.summation[j]}) {
      std::sort(v->begin(), v->end());
    }
  }
  return sets;
}

namespace {

// Sets are built once per mode count and shared; they are immutable after
// construction.
const IndexSets& cached_tree_sets(int modes) {
  static std::mutex mu;
  static std::unordered_map<int, IndexSets> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(modes);
  if (it == cache.end()) {
    it = cache.emplace(modes, sets_from_tree(build_fenwick(modes))).first;
  }
  return it->second;
}

const IndexSets& cached_closed_form_sets(int modes) {
  static std::mutex mu;
  static std::unordered_map<int, IndexSets> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(modes);
  if (it == cache.end()) {
    it = cache.emplace(modes, build_sets_closed_form(modes)).first;
  }
  return it->second;
}

const IndexSets& sets_for(MappingScheme scheme, int modes) {
  if (scheme == MappingScheme::BK) {
    require_bk_mode_count(modes);
    return cached_closed_form_sets(modes);
  }
  return cached_tree_sets(modes);
}

void check_mode(std::uint32_t mode, std::uint32_t modes) {
  if (mode >= modes) {
    throw ConstraintError("mode " + std::to_string(mode) + " out of range for " +
                          std::to_string(modes) + " modes");
  }
}

}  // namespace

std::vector<std::uint8_t> encode_occupations(MappingScheme scheme, const OccupationVector& n) {
  const int m = int(n.size());
  std::vector<std::uint8_t> x(m, 0);
  switch (scheme) {
    case MappingScheme::JW:
      for (int j = 0; j < m; ++j) x[j] = n[j] & 1;
      break;
    case MappingScheme::Parity: {
      std::uint8_t acc = 0;
      for (int j = 0; j < m; ++j) {
        acc ^= n[j] & 1;
        x[j] = acc;
      }
      break;
    }
    case MappingScheme::BK:
    case MappingScheme::BKTree: {
      const IndexSets& sets = sets_for(scheme, m);
      for (int j = 0; j < m; ++j) {
        std::uint8_t acc = n[j] & 1;
        for (int k : sets.summation[j]) acc ^= n[k] & 1;
        x[j] = acc;
      }
      break;
    }
  }
  return x;
}

OccupationVector decode_bitstring(MappingScheme scheme, const std::vector<std::uint8_t>& x) {
  const int m = int(x.size());
  OccupationVector n(m, 0);
  switch (scheme) {
    case MappingScheme::JW:
      for (int j = 0; j < m; ++j) n[j] = x[j] & 1;
      break;
    case MappingScheme::Parity:
      for (int j = 0; j < m; ++j) n[j] = (x[j] ^ (j > 0 ? x[j - 1] : 0)) & 1;
      break;
    case MappingScheme::BK:
    case MappingScheme::BKTree: {
      const IndexSets& sets = sets_for(scheme, m);
      for (int j = 0; j < m; ++j) {
        std::uint8_t acc = x[j] & 1;
        for (int k : sets.flip[j]) acc ^= x[k] & 1;
        n[j] = acc;
      }
      break;
    }
  }
  return n;
}

PauliSum map_ladder(MappingScheme scheme, std::uint32_t mode, bool dagger, std::uint32_t modes) {
  check_mode(mode, modes);
  const std::complex<double> y_coeff{0.0, dagger ? -0.5 : 0.5};

  std::vector<PauliString::Factor> x_term;  // carries X on `mode`
  std::vector<PauliString::Factor> y_term;  // carries Y on `mode`

  switch (scheme) {
    case MappingScheme::JW:
      // Z string on everything below, X or Y on the mode itself.
      for (std::uint32_t k = 0; k < mode; ++k) {
        x_term.emplace_back(k, PauliAxis::Z);
        y_term.emplace_back(k, PauliAxis::Z);
      }
      break;
    case MappingScheme::Parity:
      // Parity read from the neighbour below, X string on everything above.
      if (mode > 0) x_term.emplace_back(mode - 1, PauliAxis::Z);
      for (std::uint32_t k = mode + 1; k < modes; ++k) {
        x_term.emplace_back(k, PauliAxis::X);
        y_term.emplace_back(k, PauliAxis::X);
      }
      break;
    case MappingScheme::BK:
    case MappingScheme::BKTree: {
      const IndexSets& sets = sets_for(scheme, int(modes));
      for (int k : sets.parity[int(mode)]) x_term.emplace_back(k, PauliAxis::Z);
      for (int k : sets.remainder(int(mode))) y_term.emplace_back(k, PauliAxis::Z);
      for (int k : sets.update[int(mode)]) {
        x_term.emplace_back(k, PauliAxis::X);
        y_term.emplace_back(k, PauliAxis::X);
      }
      break;
    }
  }

  x_term.emplace_back(mode, PauliAxis::X);
  y_term.emplace_back(mode, PauliAxis::Y);

  PauliSum out;
  out.add_term(PauliString::from_factors(std::move(x_term)), {0.5, 0.0});
  out.add_term(PauliString::from_factors(std::move(y_term)), y_coeff);
  return out;
}

PauliSum map_fermion_sum(MappingScheme scheme, const FermionSum& s, std::uint32_t modes) {
  PauliSum out;
  for (const auto& term : s.terms()) {
    PauliSum product = PauliSum::identity(term.coefficient);
    for (const auto& op : term.ops) {
      product = mul_sums(product, map_ladder(scheme, op.mode, op.dagger, modes));
    }
    out += product;
  }
  return out;
}

WeightProfile pauli_weight_profile(MappingScheme scheme, std::uint32_t modes) {
  WeightProfile profile;
  profile.per_mode.reserve(modes);
  for (std::uint32_t j = 0; j < modes; ++j) {
    std::size_t w = max_weight(map_ladder(scheme, j, false, modes));
    profile.per_mode.push_back(w);
    profile.max = std::max(profile.max, w);
  }
  return profile;
}

}  // namespace qvqe
