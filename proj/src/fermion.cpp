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

#include "qvqe/fermion.hpp"

#include <algorithm>
#include <map>

#include "qvqe/errors.hpp"

namespace qvqe {

OccupationVector occupations_from_string(std::string_view text) {
  OccupationVector n;
  n.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '0' && c != '1') {
      throw ParseError("occupation string must contain only 0 and 1", 1, int(i + 1));
    }
    n.push_back(c == '1' ? 1 : 0);
  }
  return n;
}

std::string occupations_to_string(const OccupationVector& n) {
  std::string out;
  out.reserve(n.size());
  for (auto b : n) out.push_back(b ? '1' : '0');
  return out;
}

FermionSum FermionSum::scalar(std::complex<double> c) {
  FermionSum s;
  s.add_term(FermionTerm{{}, c});
  return s;
}

void FermionSum::add_term(FermionTerm term) { terms_.push_back(std::move(term)); }

FermionSum& FermionSum::operator+=(const FermionSum& other) {
  for (const auto& t : other.terms_) terms_.push_back(t);
  return *this;
}

FermionSum& FermionSum::operator-=(const FermionSum& other) {
  for (const auto& t : other.terms_) {
    FermionTerm neg = t;
    neg.coefficient = -neg.coefficient;
    terms_.push_back(std::move(neg));
  }
  return *this;
}

namespace {

std::vector<std::pair<std::uint32_t, bool>> op_key(const FermionTerm& t) {
  std::vector<std::pair<std::uint32_t, bool>> key;
  key.reserve(t.ops.size());
  for (const auto& op : t.ops) key.emplace_back(op.mode, op.dagger);
  return key;
}

}  // namespace

void FermionSum::simplify() {
  std::map<std::vector<std::pair<std::uint32_t, bool>>, FermionTerm> merged;
  for (auto& t : terms_) {
    auto key = op_key(t);
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(std::move(key), std::move(t));
    } else {
      it->second.coefficient += t.coefficient;
    }
  }
  terms_.clear();
  for (auto& [key, term] : merged) {
    if (std::abs(term.coefficient) >= kPruneThreshold) terms_.push_back(std::move(term));
  }
}

std::int64_t FermionSum::max_mode() const {
  std::int64_t m = -1;
  for (const auto& t : terms_) {
    for (const auto& op : t.ops) m = std::max(m, std::int64_t(op.mode));
  }
  return m;
}

LadderAction apply_ladder(const LadderOp& op, const OccupationVector& basis) {
  if (op.mode >= basis.size()) {
    throw ConstraintError("ladder operator mode " + std::to_string(op.mode) +
                          " out of range for " + std::to_string(basis.size()) + " modes");
  }
  const std::uint8_t occupied = basis[op.mode];
  if (op.dagger ? occupied != 0 : occupied != 1) return {0, std::nullopt};
  int parity = 0;
  for (std::uint32_t k = 0; k < op.mode; ++k) parity ^= basis[k] & 1;
  OccupationVector out = basis;
  out[op.mode] = op.dagger ? 1 : 0;
  return {parity ? -1 : 1, std::move(out)};
}

FermionSum conjugate(const FermionSum& s) {
  FermionSum out;
  for (const auto& t : s.terms()) {
    FermionTerm adj;
    adj.coefficient = std::conj(t.coefficient);
    adj.ops.reserve(t.ops.size());
    for (auto it = t.ops.rbegin(); it != t.ops.rend(); ++it) {
      adj.ops.push_back({it->mode, !it->dagger});
    }
    out.add_term(std::move(adj));
  }
  return out;
}

FermionSum anti_hermitian_generator(const FermionSum& t) {
  FermionSum out = t;
  out -= conjugate(t);
  out.simplify();
  return out;
}

FermionSum number_operator(std::uint32_t mode, std::uint32_t modes) {
  if (mode >= modes) {
    throw ConstraintError("number operator mode " + std::to_string(mode) +
                          " out of range for " + std::to_string(modes) + " modes");
  }
  FermionTerm t;
  t.ops = {{mode, true}, {mode, false}};
  return FermionSum(std::move(t));
}

FermionSum total_number_operator(std::uint32_t modes) {
  FermionSum out;
  for (std::uint32_t j = 0; j < modes; ++j) out += number_operator(j, modes);
  return out;
}

FermionTerm parse_ladder_term(std::string_view text) {
  FermionTerm term;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    std::size_t tok_start = i;
    if (text[i] != 'a') {
      throw ParseError("expected 'a' or 'a^'", 1, int(tok_start + 1));
    }
    ++i;
    bool dagger = false;
    if (i < text.size() && text[i] == '^') {
      dagger = true;
      ++i;
    }
    skip_ws();
    std::size_t num_start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (num_start == i) {
      throw ParseError("expected mode index after '" + std::string(dagger ? "a^" : "a") + "'",
                       1, int(num_start + 1));
    }
    term.ops.push_back(
        {std::uint32_t(std::stoul(std::string(text.substr(num_start, i - num_start)))), dagger});
    skip_ws();
  }
  return term;
}

}  // namespace qvqe
