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

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qvqe/problem.hpp"
#include "qvqe/vqe.hpp"

namespace qvqe {

struct ScanPoint {
  std::string label;
  double parameter = 0.0;  // bond distance, angle, ... opaque to the engine
  std::filesystem::path fcidump;
};

/// Parsed scan manifest plus the canonical-content hash used to pair
/// checkpoints with the manifest they belong to.
struct ScanManifest {
  MappingScheme mapping = MappingScheme::JW;
  AnsatzChoice ansatz;
  VqeConfig vqe;
  bool warm_start = false;
  std::vector<ScanPoint> points;
  std::string hash;  // sha256 of the canonicalized manifest JSON
};

/// Parses manifest JSON:
///   {shared:{mapping, ansatz:{kind, layers?, entangler?},
///            vqe:{optimizer, tol, max_iter, seed}},
///    warm_start, points:[{label, parameter, fcidump}]}
/// Relative fcidump paths resolve against `base_dir`. Labels must be unique
/// and every path must exist.
ScanManifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir);
ScanManifest load_manifest(const std::filesystem::path& path);

enum class PointStatus { Pending, Running, Done, Failed };

std::string point_status_name(PointStatus status);
PointStatus parse_point_status(std::string_view name);

struct CheckpointEntry {
  PointStatus status = PointStatus::Pending;
  std::optional<VqeResult> result;  // Done only
  double wall_time_s = 0.0;
  std::string started_at;
  std::string finished_at;
  std::string error;  // Failed only
};

struct Checkpoint {
  static constexpr int kVersion = 1;
  int version = kVersion;
  std::string manifest_hash;
  std::uint64_t seed = 0;
  std::map<std::string, CheckpointEntry> points;  // keyed by point label
};

/// Atomic write: temp file in the same directory, then rename.
void write_checkpoint(const Checkpoint& checkpoint, const std::filesystem::path& path);

/// Throws CheckpointError with code Corrupt on unreadable/invalid JSON and
/// VersionMismatch on a foreign version. Hash agreement against a manifest
/// is the caller's job (run_scan checks it and reports both hashes).
Checkpoint load_checkpoint(const std::filesystem::path& path);

struct ScanRow {
  int index = 0;
  std::string label;
  double parameter = 0.0;
  PointStatus status = PointStatus::Pending;
  double energy = 0.0;
  int iterations = 0;
  long evals = 0;
  bool converged = false;
  double wall_time_s = 0.0;
  std::string error;
};

struct ScanReport {
  std::vector<ScanRow> rows;  // manifest order, all points
  int completed = 0;
  int failed = 0;
};

/// Execution knobs. The two time sources are injectable so tests can pin
/// the wall_time_s column; production uses the real clocks.
struct ScanOptions {
  int parallelism = 1;
  bool resume = false;
  int stop_after = -1;  // stop once this many points completed this run (tests)
  std::function<double()> monotonic_seconds;
  std::function<std::string()> timestamp;
};

/// Runs every pending point (parse -> map -> ansatz -> minimize), updating
/// the checkpoint atomically after each point and writing the CSV in
/// manifest order once all points settle. Warm starting (from the previous
/// point's best parameters) applies only at parallelism 1; with more
/// workers it is ignored. Per-point failures are recorded as Failed without
/// aborting the others.
ScanReport run_scan(const ScanManifest& manifest, const ScanOptions& options,
                    const std::filesystem::path& checkpoint_path,
                    const std::filesystem::path& csv_path);

/// Header "index,label,parameter,energy_hartree,iterations,evals,converged,
/// wall_time_s"; one row per Done point, manifest order.
std::string render_csv(const ScanReport& report);

}  // namespace qvqe
