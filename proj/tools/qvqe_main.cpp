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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qvqe/errors.hpp"
#include "qvqe/problem.hpp"
#include "qvqe/scan.hpp"
#include "qvqe/text.hpp"
#include "qvqe/vqe.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitConstraint = 3;
constexpr int kExitNoConvergence = 4;

std::string significant(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

struct MapArgs {
  std::string mapping = "jw";
  int modes = 0;
  std::string op;
};

int cmd_map(const MapArgs& args) {
  std::fprintf(stderr, "# map: mapping=%s modes=%d op=\"%s\"\n", args.mapping.c_str(),
               args.modes, args.op.c_str());
  qvqe::FermionTerm term;
  try {
    term = qvqe::parse_ladder_term(args.op);
  } catch (const qvqe::ParseError& e) {
    std::fprintf(stderr, "error: %s\n  %s\n  %*s\n", e.what(), args.op.c_str(), e.column, "^");
    return kExitParse;
  }
  auto scheme = qvqe::parse_mapping(args.mapping);
  qvqe::PauliSum mapped =
      qvqe::map_fermion_sum(scheme, qvqe::FermionSum(std::move(term)), std::uint32_t(args.modes));
  std::cout << mapped.to_string() << "\n";
  return kExitOk;
}

struct EnergyArgs {
  std::string fcidump;
  std::string mapping = "jw";
  std::string ansatz = "uccsd";
  int layers = 2;
  std::string entangler = "cz";
  std::string optimizer = "nelder-mead";
  std::string grad = "parameter-shift";
  std::string init = "auto";
  std::uint64_t seed = 0;
  double init_scale = 0.1;
  double tol = 1e-8;
  double param_tol = 1e-10;
  int max_iter = 2000;
  std::string out = "result.json";
  std::string dump_state;
  std::string dump_circuit;
};

int cmd_energy(const EnergyArgs& args) {
  auto scheme = qvqe::parse_mapping(args.mapping);
  qvqe::AnsatzChoice ansatz;
  ansatz.kind = qvqe::parse_ansatz_kind(args.ansatz);
  if (ansatz.kind == qvqe::AnsatzKind::HEA && args.layers < 1) {
    throw qvqe::ConstraintError("--layers must be at least 1");
  }
  ansatz.layers = args.layers;
  ansatz.entangler = qvqe::parse_entangler(args.entangler);

  qvqe::VqeConfig config;
  config.optimizer = qvqe::parse_optimizer(args.optimizer);
  config.gradient = qvqe::parse_gradient_mode(args.grad);
  config.energy_tol = args.tol;
  config.param_tol = args.param_tol;
  config.max_iterations = args.max_iter;
  config.seed = args.seed;
  config.random_scale = args.init_scale;
  std::string init = args.init;
  if (init == "auto") init = ansatz.kind == qvqe::AnsatzKind::HEA ? "random" : "zeros";
  if (init == "zeros") config.init = qvqe::InitMode::Zeros;
  else if (init == "random") config.init = qvqe::InitMode::Random;
  else throw qvqe::ConstraintError("--init must be zeros, random or auto");

  std::fprintf(stderr,
               "# energy: fcidump=%s mapping=%s ansatz=%s layers=%d entangler=%s "
               "optimizer=%s grad=%s init=%s seed=%llu tol=%s max_iter=%d out=%s\n",
               args.fcidump.c_str(), qvqe::mapping_name(scheme).c_str(),
               qvqe::ansatz_kind_name(ansatz.kind).c_str(), ansatz.layers,
               qvqe::entangler_name(ansatz.entangler).c_str(),
               qvqe::optimizer_name(config.optimizer).c_str(),
               qvqe::gradient_mode_name(config.gradient).c_str(), init.c_str(),
               static_cast<unsigned long long>(config.seed),
               qvqe::format_double(config.energy_tol).c_str(), config.max_iterations,
               args.out.c_str());

  qvqe::MolecularIntegrals ints = qvqe::load_fcidump(args.fcidump);
  qvqe::PreparedProblem problem = qvqe::prepare_problem(ints, scheme, ansatz);

  if (!args.dump_circuit.empty()) {
    std::ofstream out(args.dump_circuit);
    if (!out) throw qvqe::Error("cannot write circuit dump: " + args.dump_circuit);
    out << problem.circuit.to_text();
  }

  qvqe::VqeResult result =
      qvqe::minimize(problem.hamiltonian, problem.circuit, problem.init_bits, config);

  {
    std::ofstream out(args.out, std::ios::binary | std::ios::trunc);
    if (!out) throw qvqe::Error("cannot write result: " + args.out);
    out << qvqe::result_to_json(result);
  }

  if (!args.dump_state.empty()) {
    qvqe::StateVector state = qvqe::init_basis(problem.n_qubits, problem.init_bits);
    qvqe::apply_circuit(state, problem.circuit, result.params);
    qvqe::dump_amplitudes(state, args.dump_state);
  }

  std::printf("E = %s Ha (%d iters, converged=%s)\n", significant(result.energy).c_str(),
              result.iterations, result.converged ? "true" : "false");
  return result.converged ? kExitOk : kExitNoConvergence;
}

struct ExactArgs {
  std::string fcidump;
  std::string mapping = "jw";
  int sector = -1;
};

int cmd_exact(const ExactArgs& args) {
  std::fprintf(stderr, "# exact: fcidump=%s mapping=%s sector=%d\n", args.fcidump.c_str(),
               args.mapping.c_str(), args.sector);
  auto scheme = qvqe::parse_mapping(args.mapping);
  qvqe::MolecularIntegrals ints = qvqe::load_fcidump(args.fcidump);
  qvqe::PauliSum h = qvqe::mapped_hamiltonian(ints, scheme);
  double energy = args.sector >= 0
                      ? qvqe::exact_ground_energy_sector(h, ints.modes(), scheme, args.sector)
                      : qvqe::exact_ground_energy(h, ints.modes());
  std::printf("E_exact = %s Ha\n", significant(energy).c_str());
  return kExitOk;
}

struct ScanArgs {
  std::string manifest;
  int jobs = 1;
  bool resume = false;
  std::string out = "curve.csv";
  std::string checkpoint;
};

int cmd_scan(const ScanArgs& args) {
  std::filesystem::path csv = args.out;
  std::filesystem::path ckpt = args.checkpoint;
  if (ckpt.empty()) {
    ckpt = csv;
    ckpt.replace_extension();
    ckpt += ".ckpt.json";
  }
  std::fprintf(stderr, "# scan: manifest=%s jobs=%d resume=%s out=%s checkpoint=%s\n",
               args.manifest.c_str(), args.jobs, args.resume ? "true" : "false",
               csv.string().c_str(), ckpt.string().c_str());

  qvqe::ScanManifest manifest = qvqe::load_manifest(args.manifest);
  if (args.resume && !std::filesystem::exists(ckpt)) {
    throw qvqe::ConstraintError("--resume requested but checkpoint " + ckpt.string() +
                                " does not exist; run without --resume to start fresh");
  }
  qvqe::ScanOptions options;
  options.parallelism = args.jobs;
  options.resume = args.resume;
  qvqe::ScanReport report = qvqe::run_scan(manifest, options, ckpt, csv);

  for (const auto& row : report.rows) {
    if (row.status == qvqe::PointStatus::Failed) {
      std::fprintf(stderr, "point '%s' failed: %s\n", row.label.c_str(), row.error.c_str());
    }
  }
  std::printf("scan complete: %d/%zu points done, CSV at %s\n", report.completed,
              report.rows.size(), csv.string().c_str());
  return report.failed == 0 ? kExitOk : kExitNoConvergence;
}

struct EncodeArgs {
  std::string mapping = "jw";
  std::string occupations;
};

int cmd_encode_state(const EncodeArgs& args) {
  std::fprintf(stderr, "# encode-state: mapping=%s occupations=%s\n", args.mapping.c_str(),
               args.occupations.c_str());
  auto scheme = qvqe::parse_mapping(args.mapping);
  qvqe::OccupationVector n = qvqe::occupations_from_string(args.occupations);
  auto x = qvqe::encode_occupations(scheme, n);
  std::string out;
  for (auto b : x) out.push_back(b ? '1' : '0');
  std::printf("%s\n", out.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qvqe: variational quantum eigensolver chemistry simulator"};
  app.require_subcommand(1);

  MapArgs map_args;
  auto* map_cmd = app.add_subcommand("map", "Map a ladder-operator product to Pauli operators");
  map_cmd->add_option("--mapping", map_args.mapping, "Mapping: jw, parity, bk, bktree")
      ->capture_default_str();
  map_cmd->add_option("--modes", map_args.modes, "Number of fermionic modes")->required();
  map_cmd->add_option("--op", map_args.op, "Ladder expression, e.g. \"a^ 2 a 0\"")->required();

  EnergyArgs energy_args;
  auto* energy_cmd = app.add_subcommand("energy", "Run VQE on an FCIDUMP file");
  energy_cmd->add_option("--fcidump", energy_args.fcidump, "FCIDUMP file")->required();
  energy_cmd->add_option("--mapping", energy_args.mapping, "Mapping: jw, parity, bk, bktree")
      ->capture_default_str();
  energy_cmd->add_option("--ansatz", energy_args.ansatz, "Ansatz: uccsd, sp, hea")
      ->capture_default_str();
  energy_cmd->add_option("--layers", energy_args.layers, "HEA layer count")
      ->capture_default_str();
  energy_cmd->add_option("--entangler", energy_args.entangler, "HEA entangler: cnot, cz")
      ->capture_default_str();
  energy_cmd
      ->add_option("--optimizer", energy_args.optimizer,
                   "Optimizer: nelder-mead, gradient-descent")
      ->capture_default_str();
  energy_cmd
      ->add_option("--grad", energy_args.grad,
                   "Gradient mode: parameter-shift, finite-difference")
      ->capture_default_str();
  energy_cmd->add_option("--init", energy_args.init, "Initial parameters: zeros, random, auto")
      ->capture_default_str();
  energy_cmd->add_option("--seed", energy_args.seed, "RNG seed")->capture_default_str();
  energy_cmd
      ->add_option("--init-scale", energy_args.init_scale,
                   "Half-width of the seeded random initial parameter range")
      ->capture_default_str();
  energy_cmd->add_option("--tol", energy_args.tol, "Energy tolerance (Hartree)")
      ->capture_default_str();
  energy_cmd->add_option("--param-tol", energy_args.param_tol, "Parameter tolerance")
      ->capture_default_str();
  energy_cmd->add_option("--max-iter", energy_args.max_iter, "Iteration cap")
      ->capture_default_str();
  energy_cmd->add_option("--out", energy_args.out, "Result JSON path")->capture_default_str();
  energy_cmd->add_option("--dump-state", energy_args.dump_state,
                         "Write final-state amplitudes (binary) plus JSON sidecar");
  energy_cmd->add_option("--dump-circuit", energy_args.dump_circuit,
                         "Write the ansatz circuit as text");

  ExactArgs exact_args;
  auto* exact_cmd = app.add_subcommand("exact", "Exact ground energy by diagonalization");
  exact_cmd->add_option("--fcidump", exact_args.fcidump, "FCIDUMP file")->required();
  exact_cmd->add_option("--mapping", exact_args.mapping, "Mapping: jw, parity, bk, bktree")
      ->capture_default_str();
  exact_cmd
      ->add_option("--sector", exact_args.sector,
                   "Restrict to this particle number before diagonalizing")
      ->check(CLI::NonNegativeNumber);

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Run VQE over a manifest of FCIDUMP points");
  scan_cmd->add_option("--manifest", scan_args.manifest, "Scan manifest JSON")->required();
  scan_cmd->add_option("--jobs", scan_args.jobs, "Worker count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  scan_cmd->add_flag("--resume", scan_args.resume, "Resume from an existing checkpoint");
  scan_cmd->add_option("--out", scan_args.out, "Output CSV path")->capture_default_str();
  scan_cmd->add_option("--checkpoint", scan_args.checkpoint,
                       "Checkpoint path (default: CSV path with .ckpt.json)");

  EncodeArgs encode_args;
  auto* encode_cmd = app.add_subcommand("encode-state", "Encode an occupation vector");
  encode_cmd->add_option("--mapping", encode_args.mapping, "Mapping: jw, parity, bk, bktree")
      ->capture_default_str();
  encode_cmd->add_option("--occupations", encode_args.occupations, "Occupations, e.g. 1100")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // exits 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConstraint;
  }

  try {
    if (map_cmd->parsed()) return cmd_map(map_args);
    if (energy_cmd->parsed()) return cmd_energy(energy_args);
    if (exact_cmd->parsed()) return cmd_exact(exact_args);
    if (scan_cmd->parsed()) return cmd_scan(scan_args);
    if (encode_cmd->parsed()) return cmd_encode_state(encode_args);
  } catch (const qvqe::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  } catch (const qvqe::CheckpointError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.code == qvqe::CheckpointError::Code::Corrupt ? kExitParse : kExitConstraint;
  } catch (const qvqe::ConstraintError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConstraint;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return kExitOk;
}
