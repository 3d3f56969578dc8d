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

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qvqe/fermion.hpp"

namespace qvqe {

/// Parsed FCIDUMP content: spatial-orbital integrals in Hartree.
///
/// Two-electron values use chemists' notation (pq|rs) and are stored once
/// per 8-fold-symmetric equivalence class; reads expand the symmetry.
/// Spin-orbitals are interleaved: index 2p + sigma with sigma 0=alpha,
/// 1=beta, so an M = 2*norb mode register.
class MolecularIntegrals {
 public:
  MolecularIntegrals() = default;
  MolecularIntegrals(int norb, int nelec, int ms2);

  int norb() const { return norb_; }
  int nelec() const { return nelec_; }
  int ms2() const { return ms2_; }
  int modes() const { return 2 * norb_; }

  double e_core() const { return e_core_; }
  void set_e_core(double v) { e_core_ = v; }

  double h1(int p, int q) const;
  void set_h1(int p, int q, double v);  // sets both (p,q) and (q,p)

  /// (pq|rs) in chemists' notation, 0-based indices.
  double h2(int p, int q, int r, int s) const;
  void set_h2(int p, int q, int r, int s, double v);  // sets the 8-fold class

  /// Canonical stored two-electron entries as (p,q,r,s) -> value, for
  /// rendering and equality checks.
  const std::map<std::array<int, 4>, double>& h2_entries() const { return h2_; }

  friend bool operator==(const MolecularIntegrals&, const MolecularIntegrals&) = default;

 private:
  void check_orbital(int p) const;
  static std::array<int, 4> canonical_key(int p, int q, int r, int s);

  int norb_ = 0;
  int nelec_ = 0;
  int ms2_ = 0;
  double e_core_ = 0.0;
  std::vector<double> h1_;  // norb x norb, symmetric
  std::map<std::array<int, 4>, double> h2_;
};

/// Parses FCIDUMP text: a "&FCI ... &END" (or "/"-terminated) namelist with
/// NORB, NELEC, MS2 (ORBSYM/ISYM accepted and ignored), then free-format
/// records "value i j k l" with 1-based indices. Lines starting with '!'
/// are comments. Later duplicates overwrite earlier values.
MolecularIntegrals parse_fcidump(std::string_view text);

MolecularIntegrals load_fcidump(const std::filesystem::path& path);

/// Renders back to FCIDUMP text; parse(render(x)) == x.
std::string render_fcidump(const MolecularIntegrals& ints);

/// Second-quantized molecular Hamiltonian on 2*norb interleaved spin
/// orbitals:
///   e_core
///   + sum_{pq,sigma} h1[p,q] a^dag_{p sigma} a_{q sigma}
///   + 1/2 sum_{pqrs,sigma tau} (pq|rs) a^dag_{p sigma} a^dag_{r tau}
///                                a_{s tau} a_{q sigma}
FermionSum to_fermion_hamiltonian(const MolecularIntegrals& ints);

/// Lowest-index reference occupation: modes 0..nelec-1 filled. Assumes the
/// file's orbitals arrive energy-sorted, which FCIDUMP emitters provide.
OccupationVector hf_reference(int nelec, int modes);

}  // namespace qvqe
