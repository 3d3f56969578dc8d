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

#include "qvqe/hamio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qvqe/errors.hpp"
#include "qvqe/text.hpp"

namespace qvqe {

MolecularIntegrals::MolecularIntegrals(int norb, int nelec, int ms2)
    : norb_(norb), nelec_(nelec), ms2_(ms2), h1_(std::size_t(norb) * norb, 0.0) {
  if (norb < 1) throw ConstraintError("NORB must be positive");
  if (nelec < 0 || nelec > 2 * norb) {
    throw ConstraintError("NELEC=" + std::to_string(nelec) + " exceeds 2*NORB=" +
                          std::to_string(2 * norb));
  }
  if (std::abs(ms2) > nelec) {
    throw ConstraintError("|MS2| cannot exceed NELEC");
  }
}

void MolecularIntegrals::check_orbital(int p) const {
  if (p < 0 || p >= norb_) {
    throw ConstraintError("orbital index " + std::to_string(p + 1) + " outside 1.." +
                          std::to_string(norb_));
  }
}

double MolecularIntegrals::h1(int p, int q) const {
  check_orbital(p);
  check_orbital(q);
  return h1_[std::size_t(p) * norb_ + q];
}

void MolecularIntegrals::set_h1(int p, int q, double v) {
  check_orbital(p);
  check_orbital(q);
  h1_[std::size_t(p) * norb_ + q] = v;
  h1_[std::size_t(q) * norb_ + p] = v;
}

std::array<int, 4> MolecularIntegrals::canonical_key(int p, int q, int r, int s) {
  // (pq|rs) = (qp|rs) = (pq|sr) = (qp|sr) = (rs|pq) = ...
  if (p < q) std::swap(p, q);
  if (r < s) std::swap(r, s);
  if (p < r || (p == r && q < s)) {
    std::swap(p, r);
    std::swap(q, s);
  }
  return {p, q, r, s};
}

double MolecularIntegrals::h2(int p, int q, int r, int s) const {
  check_orbital(p);
  check_orbital(q);
  check_orbital(r);
  check_orbital(s);
  auto it = h2_.find(canonical_key(p, q, r, s));
  return it == h2_.end() ? 0.0 : it->second;
}

void MolecularIntegrals::set_h2(int p, int q, int r, int s, double v) {
  check_orbital(p);
  check_orbital(q);
  check_orbital(r);
  check_orbital(s);
  h2_[canonical_key(p, q, r, s)] = v;
}

namespace {

struct HeaderFields {
  int norb = -1;
  int nelec = -1;
  int ms2 = -1;
  bool have_ms2 = false;
};

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return char(std::toupper(c)); });
  return s;
}

// Header tokens look like KEY=VALUE or KEY=V1,V2,... spread over any number
// of lines until &END or a bare '/'.
void consume_header_token(HeaderFields& hdr, const std::string& token, int line_no) {
  auto eq = token.find('=');
  if (eq == std::string::npos) return;  // stray separator, e.g. trailing comma
  std::string key = upper(token.substr(0, eq));
  std::string value = token.substr(eq + 1);
  if (key == "ORBSYM" || key == "ISYM" || key == "IUHF") return;  // accepted, ignored
  int parsed = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
  if (ec != std::errc{}) {
    if (key == "NORB" || key == "NELEC" || key == "MS2") {
      throw ParseError("bad integer for " + key + ": '" + value + "'", line_no);
    }
    return;  // unknown non-integer keys are ignored
  }
  if (key == "NORB") hdr.norb = parsed;
  else if (key == "NELEC") hdr.nelec = parsed;
  else if (key == "MS2") { hdr.ms2 = parsed; hdr.have_ms2 = true; }
}

}  // namespace

MolecularIntegrals parse_fcidump(std::string_view text) {
  std::istringstream stream{std::string(text)};
  std::string line;
  int line_no = 0;

  HeaderFields hdr;
  bool saw_begin = false, saw_end = false;
  while (std::getline(stream, line)) {
    ++line_no;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty() || trimmed[0] == '!') continue;

    std::string body = trimmed;
    if (!saw_begin) {
      if (upper(body).rfind("&FCI", 0) != 0) {
        throw ParseError("expected '&FCI' namelist header", line_no);
      }
      saw_begin = true;
      body = body.substr(4);
    }
    // Header terminators may share a line with the last keys.
    auto endpos = upper(body).find("&END");
    if (endpos != std::string::npos) {
      body = body.substr(0, endpos);
      saw_end = true;
    } else if (auto slash = body.find('/'); slash != std::string::npos) {
      body = body.substr(0, slash);
      saw_end = true;
    }
    std::string token;
    for (char c : body + ",") {
      if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
        if (!token.empty()) consume_header_token(hdr, token, line_no);
        token.clear();
      } else {
        token.push_back(c);
      }
    }
    if (saw_end) break;
  }
  if (!saw_begin) throw ParseError("missing '&FCI' namelist header", line_no);
  if (!saw_end) throw ParseError("unterminated namelist header (no '&END' or '/')", line_no);
  if (hdr.norb < 0) throw ParseError("header is missing NORB", line_no);
  if (hdr.nelec < 0) throw ParseError("header is missing NELEC", line_no);
  if (!hdr.have_ms2) throw ParseError("header is missing MS2", line_no);

  MolecularIntegrals ints(hdr.norb, hdr.nelec, hdr.ms2);

  while (std::getline(stream, line)) {
    ++line_no;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty() || trimmed[0] == '!') continue;

    std::istringstream fields(trimmed);
    double value;
    int i, j, k, l;
    if (!(fields >> value >> i >> j >> k >> l)) {
      throw ParseError("malformed integral record: '" + trimmed + "'", line_no);
    }
    std::string rest;
    if (fields >> rest) {
      throw ParseError("trailing content on integral record: '" + rest + "'", line_no);
    }

    try {
      if (i == 0 && j == 0 && k == 0 && l == 0) {
        ints.set_e_core(value);
      } else if (k == 0 && l == 0) {
        if (i == 0 || j == 0) {
          throw ConstraintError("one-electron record needs two nonzero indices");
        }
        ints.set_h1(i - 1, j - 1, value);
      } else if (i != 0 && j != 0 && k != 0 && l != 0) {
        ints.set_h2(i - 1, j - 1, k - 1, l - 1, value);
      } else {
        throw ConstraintError("record must have 0, 2 or 4 nonzero indices");
      }
    } catch (const ConstraintError& e) {
      throw ParseError(std::string(e.what()), line_no);
    }
  }
  return ints;
}

MolecularIntegrals load_fcidump(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open FCIDUMP file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fcidump(buf.str());
}

std::string render_fcidump(const MolecularIntegrals& ints) {
  std::ostringstream out;
  out << "&FCI NORB=" << ints.norb() << ",NELEC=" << ints.nelec() << ",MS2=" << ints.ms2()
      << ",\n ORBSYM=";
  for (int p = 0; p < ints.norb(); ++p) out << "1,";
  out << "\n ISYM=1,\n&END\n";
  auto record = [&out](double v, int i, int j, int k, int l) {
    out << format_double(v) << ' ' << i << ' ' << j << ' ' << k << ' ' << l << '\n';
  };
  for (const auto& [key, v] : ints.h2_entries()) {
    record(v, key[0] + 1, key[1] + 1, key[2] + 1, key[3] + 1);
  }
  for (int p = 0; p < ints.norb(); ++p) {
    for (int q = 0; q <= p; ++q) {
      if (ints.h1(p, q) != 0.0) record(ints.h1(p, q), p + 1, q + 1, 0, 0);
    }
  }
  record(ints.e_core(), 0, 0, 0, 0);
  return out.str();
}

FermionSum to_fermion_hamiltonian(const MolecularIntegrals& ints) {
  const int norb = ints.norb();
  FermionSum h = FermionSum::scalar(ints.e_core());

  auto spin_orb = [](int p, int sigma) { return std::uint32_t(2 * p + sigma); };

  for (int p = 0; p < norb; ++p) {
    for (int q = 0; q < norb; ++q) {
      double v = ints.h1(p, q);
      if (v == 0.0) continue;
      for (int sigma = 0; sigma < 2; ++sigma) {
        FermionTerm t;
        t.coefficient = v;
        t.ops = {{spin_orb(p, sigma), true}, {spin_orb(q, sigma), false}};
        h.add_term(std::move(t));
      }
    }
  }

  for (int p = 0; p < norb; ++p) {
    for (int q = 0; q < norb; ++q) {
      for (int r = 0; r < norb; ++r) {
        for (int s = 0; s < norb; ++s) {
          double v = ints.h2(p, q, r, s);
          if (v == 0.0) continue;
          for (int sigma = 0; sigma < 2; ++sigma) {
            for (int tau = 0; tau < 2; ++tau) {
              FermionTerm t;
              t.coefficient = 0.5 * v;
              t.ops = {{spin_orb(p, sigma), true},
                       {spin_orb(r, tau), true},
                       {spin_orb(s, tau), false},
                       {spin_orb(q, sigma), false}};
              h.add_term(std::move(t));
            }
          }
        }
      }
    }
  }
  return h;
}

OccupationVector hf_reference(int nelec, int modes) {
  if (nelec < 0 || nelec > modes) {
    throw ConstraintError("cannot place " + std::to_string(nelec) + " electrons in " +
                          std::to_string(modes) + " modes");
  }
  OccupationVector n(modes, 0);
  for (int j = 0; j < nelec; ++j) n[j] = 1;
  return n;
}

}  // namespace qvqe
