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
#include <string>
#include <string_view>

namespace qvqe {

/// Shortest round-trip decimal rendering of a double ("0.5", "0", "1e-05").
/// Negative zero is normalized to "0".
std::string format_double(double value);

/// Renders a complex coefficient as "(re,im)" using format_double.
std::string format_complex(std::complex<double> value);

/// SHA-256 digest of `data`, lowercase hex.
std::string sha256_hex(std::string_view data);

/// FNV-1a over the raw bytes of a double vector; used for trace hashes.
std::uint64_t hash_doubles(const double* data, std::size_t count);

}  // namespace qvqe
