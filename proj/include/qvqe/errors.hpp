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

#include <stdexcept>
#include <string>

namespace qvqe {

/// Base class for all qvqe errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text: FCIDUMP files, ladder expressions, manifests, JSON.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg, int line = 0, int column = 0)
      : Error(msg), line(line), column(column) {}
  int line;
  int column;
};

/// A structurally valid request that violates a documented constraint
/// (BK with non-power-of-2 mode count, oracle limit, bad flag combination).
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// Checkpoint loading failures, with a distinct code per failure mode.
class CheckpointError : public Error {
 public:
  enum class Code { Corrupt, VersionMismatch, HashMismatch };
  CheckpointError(Code code, const std::string& msg) : Error(msg), code(code) {}
  Code code;
};

}  // namespace qvqe
