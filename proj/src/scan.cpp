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

#include "qvqe/scan.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "qvqe/errors.hpp"
#include "qvqe/text.hpp"

namespace qvqe {

namespace {

double real_monotonic_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::string real_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

ScanManifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad manifest JSON: ") + e.what());
  }

  ScanManifest manifest;
  try {
    const auto& shared = j.at("shared");
    manifest.mapping = parse_mapping(shared.at("mapping").get<std::string>());

    const auto& ansatz = shared.at("ansatz");
    manifest.ansatz.kind = parse_ansatz_kind(ansatz.at("kind").get<std::string>());
    if (ansatz.contains("layers")) manifest.ansatz.layers = ansatz.at("layers").get<int>();
    if (ansatz.contains("entangler")) {
      manifest.ansatz.entangler = parse_entangler(ansatz.at("entangler").get<std::string>());
    }

    const auto& vqe = shared.at("vqe");
    if (vqe.contains("optimizer")) {
      manifest.vqe.optimizer = parse_optimizer(vqe.at("optimizer").get<std::string>());
    }
    if (vqe.contains("grad")) {
      manifest.vqe.gradient = parse_gradient_mode(vqe.at("grad").get<std::string>());
    }
    if (vqe.contains("tol")) manifest.vqe.energy_tol = vqe.at("tol").get<double>();
    if (vqe.contains("max_iter")) manifest.vqe.max_iterations = vqe.at("max_iter").get<int>();
    if (vqe.contains("seed")) manifest.vqe.seed = vqe.at("seed").get<std::uint64_t>();
    if (vqe.contains("init")) {
      std::string init = vqe.at("init").get<std::string>();
      if (init == "zeros") manifest.vqe.init = InitMode::Zeros;
      else if (init == "random") manifest.vqe.init = InitMode::Random;
      else throw ParseError("manifest vqe.init must be 'zeros' or 'random'");
    }

    if (j.contains("warm_start")) manifest.warm_start = j.at("warm_start").get<bool>();

    for (const auto& p : j.at("points")) {
      ScanPoint point;
      point.label = p.at("label").get<std::string>();
      point.parameter = p.at("parameter").get<double>();
      std::filesystem::path f = p.at("fcidump").get<std::string>();
      point.fcidump = f.is_absolute() ? f : base_dir / f;
      manifest.points.push_back(std::move(point));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad manifest: ") + e.what());
  }

  std::set<std::string> labels;
  for (const auto& p : manifest.points) {
    if (!labels.insert(p.label).second) {
      throw ConstraintError("duplicate point label '" + p.label + "'");
    }
    if (!std::filesystem::exists(p.fcidump)) {
      throw ConstraintError("FCIDUMP for point '" + p.label +
                            "' not found: " + p.fcidump.string());
    }
  }
  if (manifest.points.empty()) throw ConstraintError("manifest has no points");

  manifest.hash = sha256_hex(j.dump());
  return manifest;
}

ScanManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open manifest: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str(), path.parent_path());
}

std::string point_status_name(PointStatus status) {
  switch (status) {
    case PointStatus::Pending: return "pending";
    case PointStatus::Running: return "running";
    case PointStatus::Done: return "done";
    case PointStatus::Failed: return "failed";
  }
  return "?";
}

PointStatus parse_point_status(std::string_view name) {
  if (name == "pending") return PointStatus::Pending;
  if (name == "running") return PointStatus::Running;
  if (name == "done") return PointStatus::Done;
  if (name == "failed") return PointStatus::Failed;
  throw ParseError("unknown point status '" + std::string(name) + "'");
}

namespace {

nlohmann::ordered_json entry_to_json(const CheckpointEntry& entry) {
  nlohmann::ordered_json j;
  j["status"] = point_status_name(entry.status);
  j["wall_time_s"] = entry.wall_time_s;
  j["started_at"] = entry.started_at;
  j["finished_at"] = entry.finished_at;
  if (entry.result) j["result"] = nlohmann::ordered_json::parse(result_to_json(*entry.result));
  if (!entry.error.empty()) j["error"] = entry.error;
  return j;
}

CheckpointEntry entry_from_json(const nlohmann::json& j) {
  CheckpointEntry entry;
  entry.status = parse_point_status(j.at("status").get<std::string>());
  entry.wall_time_s = j.at("wall_time_s").get<double>();
  entry.started_at = j.value("started_at", "");
  entry.finished_at = j.value("finished_at", "");
  if (j.contains("result")) entry.result = result_from_json(j.at("result").dump());
  entry.error = j.value("error", "");
  if (entry.status == PointStatus::Done && !entry.result) {
    throw ParseError("done checkpoint entry has no result");
  }
  return entry;
}

}  // namespace

void write_checkpoint(const Checkpoint& checkpoint, const std::filesystem::path& path) {
  nlohmann::ordered_json j;
  j["version"] = checkpoint.version;
  j["manifest_hash"] = checkpoint.manifest_hash;
  j["seed"] = checkpoint.seed;
  auto& points = j["points"] = nlohmann::ordered_json::object();
  for (const auto& [label, entry] : checkpoint.points) points[label] = entry_to_json(entry);

  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write checkpoint: " + tmp.string());
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CheckpointError(CheckpointError::Code::Corrupt,
                          "cannot open checkpoint: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError(CheckpointError::Code::Corrupt,
                          std::string("corrupt checkpoint JSON: ") + e.what());
  }

  Checkpoint ckpt;
  try {
    ckpt.version = j.at("version").get<int>();
    if (ckpt.version != Checkpoint::kVersion) {
      throw CheckpointError(CheckpointError::Code::VersionMismatch,
                            "checkpoint version " + std::to_string(ckpt.version) +
                                " is not the supported version " +
                                std::to_string(Checkpoint::kVersion));
    }
    ckpt.manifest_hash = j.at("manifest_hash").get<std::string>();
    ckpt.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& [label, entry] : j.at("points").items()) {
      ckpt.points[label] = entry_from_json(entry);
    }
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError(CheckpointError::Code::Corrupt,
                          std::string("corrupt checkpoint: ") + e.what());
  } catch (const ParseError& e) {
    throw CheckpointError(CheckpointError::Code::Corrupt,
                          std::string("corrupt checkpoint: ") + e.what());
  }
  return ckpt;
}

namespace {

struct PointOutcome {
  CheckpointEntry entry;
};

PointOutcome execute_point(const ScanManifest& manifest, const ScanPoint& point,
                           const std::optional<std::vector<double>>& warm_params,
                           const ScanOptions& options) {
  PointOutcome outcome;
  outcome.entry.started_at = options.timestamp();
  double t0 = options.monotonic_seconds();
  try {
    MolecularIntegrals ints = load_fcidump(point.fcidump);
    PreparedProblem problem = prepare_problem(ints, manifest.mapping, manifest.ansatz);

    VqeConfig config = manifest.vqe;
    if (warm_params && int(warm_params->size()) == problem.circuit.slot_count()) {
      config.init = InitMode::Explicit;
      config.initial_params = *warm_params;
    }
    VqeResult result = minimize(problem.hamiltonian, problem.circuit, problem.init_bits, config);
    outcome.entry.status = PointStatus::Done;
    outcome.entry.result = std::move(result);
  } catch (const std::exception& e) {
    outcome.entry.status = PointStatus::Failed;
    outcome.entry.error = e.what();
  }
  outcome.entry.wall_time_s = options.monotonic_seconds() - t0;
  outcome.entry.finished_at = options.timestamp();
  return outcome;
}

}  // namespace

ScanReport run_scan(const ScanManifest& manifest, const ScanOptions& options,
                    const std::filesystem::path& checkpoint_path,
                    const std::filesystem::path& csv_path) {
  if (options.parallelism < 1) throw ConstraintError("parallelism must be at least 1");

  ScanOptions opts = options;
  if (!opts.monotonic_seconds) opts.monotonic_seconds = real_monotonic_seconds;
  if (!opts.timestamp) opts.timestamp = real_timestamp;

  Checkpoint ckpt;
  if (opts.resume) {
    ckpt = load_checkpoint(checkpoint_path);
    if (ckpt.manifest_hash != manifest.hash) {
      throw CheckpointError(CheckpointError::Code::HashMismatch,
                            "checkpoint belongs to manifest " + ckpt.manifest_hash +
                                " but the loaded manifest hashes to " + manifest.hash +
                                "; refusing to mix results");
    }
  } else {
    ckpt.manifest_hash = manifest.hash;
    ckpt.seed = manifest.vqe.seed;
  }

  // Interrupted "running" points are re-run; their results never made it in.
  std::vector<int> pending;
  for (int i = 0; i < int(manifest.points.size()); ++i) {
    auto it = ckpt.points.find(manifest.points[std::size_t(i)].label);
    if (it == ckpt.points.end() || it->second.status == PointStatus::Pending ||
        it->second.status == PointStatus::Running) {
      pending.push_back(i);
    }
  }

  const bool warm = manifest.warm_start && opts.parallelism == 1;
  if (manifest.warm_start && opts.parallelism > 1) {
    std::fprintf(stderr, "warning: warm_start is defined for sequential scans only; "
                         "ignoring it at parallelism %d\n", opts.parallelism);
  }

  std::mutex mu;  // guards ckpt and the checkpoint file
  auto commit = [&](const std::string& label, CheckpointEntry entry) {
    std::scoped_lock lock(mu);
    ckpt.points[label] = std::move(entry);
    write_checkpoint(ckpt, checkpoint_path);
  };

  int completed_this_run = 0;
  if (opts.parallelism == 1 || pending.size() <= 1) {
    for (int idx : pending) {
      if (opts.stop_after >= 0 && completed_this_run >= opts.stop_after) break;
      const ScanPoint& point = manifest.points[std::size_t(idx)];

      std::optional<std::vector<double>> warm_params;
      if (warm && idx > 0) {
        auto it = ckpt.points.find(manifest.points[std::size_t(idx - 1)].label);
        if (it != ckpt.points.end() && it->second.status == PointStatus::Done) {
          warm_params = it->second.result->params;
        }
      }

      {
        std::scoped_lock lock(mu);
        CheckpointEntry running;
        running.status = PointStatus::Running;
        running.started_at = opts.timestamp();
        ckpt.points[point.label] = running;
        write_checkpoint(ckpt, checkpoint_path);
      }
      commit(point.label, execute_point(manifest, point, warm_params, opts).entry);
      ++completed_this_run;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<int> budget{opts.stop_after >= 0 ? opts.stop_after
                                                 : int(pending.size())};
    auto worker = [&] {
      while (true) {
        if (budget.fetch_sub(1) <= 0) return;
        std::size_t mine = next.fetch_add(1);
        if (mine >= pending.size()) return;
        const ScanPoint& point = manifest.points[std::size_t(pending[mine])];
        {
          std::scoped_lock lock(mu);
          CheckpointEntry running;
          running.status = PointStatus::Running;
          running.started_at = opts.timestamp();
          ckpt.points[point.label] = running;
          write_checkpoint(ckpt, checkpoint_path);
        }
        commit(point.label, execute_point(manifest, point, std::nullopt, opts).entry);
      }
    };
    std::vector<std::thread> pool;
    int workers = std::min<int>(opts.parallelism, int(pending.size()));
    pool.reserve(std::size_t(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  ScanReport report;
  for (int i = 0; i < int(manifest.points.size()); ++i) {
    const ScanPoint& point = manifest.points[std::size_t(i)];
    ScanRow row;
    row.index = i;
    row.label = point.label;
    row.parameter = point.parameter;
    auto it = ckpt.points.find(point.label);
    if (it != ckpt.points.end()) {
      const CheckpointEntry& entry = it->second;
      row.status = entry.status;
      row.wall_time_s = entry.wall_time_s;
      row.error = entry.error;
      if (entry.status == PointStatus::Done) {
        row.energy = entry.result->energy;
        row.iterations = entry.result->iterations;
        row.evals = entry.result->evals;
        row.converged = entry.result->converged;
        ++report.completed;
      } else if (entry.status == PointStatus::Failed) {
        ++report.failed;
      }
    }
    report.rows.push_back(std::move(row));
  }

  std::filesystem::path tmp = csv_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write CSV: " + tmp.string());
    out << render_csv(report);
  }
  std::filesystem::rename(tmp, csv_path);
  return report;
}

std::string render_csv(const ScanReport& report) {
  std::string out = "index,label,parameter,energy_hartree,iterations,evals,converged,wall_time_s\n";
  for (const auto& row : report.rows) {
    if (row.status != PointStatus::Done) continue;
    char wall[32];
    std::snprintf(wall, sizeof(wall), "%.3f", row.wall_time_s);
    out += std::to_string(row.index) + "," + row.label + "," + format_double(row.parameter) +
           "," + format_double(row.energy) + "," + std::to_string(row.iterations) + "," +
           std::to_string(row.evals) + "," + (row.converged ? "true" : "false") + "," + wall +
           "\n";
  }
  return out;
}

}  // namespace qvqe
