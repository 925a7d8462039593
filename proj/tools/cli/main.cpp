// Copyright 2026 The Lucent Authors
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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.hpp"

namespace {

using lucent::cli::Options;

void add_tol(CLI::App* cmd, Options& opts, const std::string& what) {
  cmd->add_option_function<double>(
         "--tol", [&opts](double v) { opts.tol = v; }, what)
      ->check(CLI::PositiveNumber);
}

void add_json(CLI::App* cmd, Options& opts) {
  cmd->add_flag("--json", opts.json, "Emit a single-line JSON record");
}

void add_output(CLI::App* cmd, Options& opts) {
  cmd->add_option_function<std::string>(
      "-o,--output", [&opts](const std::string& p) { opts.output = p; }, "Write to a file");
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output encoding")
      ->check(CLI::IsMember({"pauli", "dense"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lucent: local-unitary structure of multiqubit density matrices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "lucent 0.1.0");

  Options opts;
  std::string state, state_b, unitary, format = "pauli";
  lucent::cli::MakeRequest make;

  auto* validate = app.add_subcommand("validate", "Check the density-matrix constraints");
  validate->add_option("state", state, "State file")->required();
  add_tol(validate, opts, "Equality tolerance (default 1e-10)");
  add_json(validate, opts);
  add_output(validate, opts);

  auto* decompose =
      app.add_subcommand("decompose", "Split into identity, translated projections and Delta");
  decompose->add_option("state", state, "State file")->required();
  add_tol(decompose, opts, "Omit Delta terms with |coefficient| at or below this (default 1e-10)");
  decompose->add_option_function<std::string>(
      "--delta-out", [&opts](const std::string& p) { opts.delta_output = p; },
      "Also write Delta as a state file");
  add_json(decompose, opts);
  add_output(decompose, opts);

  auto* centralizer =
      app.add_subcommand("centralizer", "Describe the stabiliser of the one-qubit reductions");
  centralizer->add_option("state", state, "State file")->required();
  add_tol(centralizer, opts, "Maximally-mixed threshold on |r| (default 1e-9)");
  add_json(centralizer, opts);
  add_output(centralizer, opts);

  auto* evolve = app.add_subcommand("evolve", "Apply a local unitary U rho U^dagger");
  evolve->add_option("state", state, "State file")->required();
  evolve->add_option("unitary", unitary, "Unitary spec file")->required();
  evolve->add_flag("--require-centralizer", opts.require_centralizer,
                   "Reject U outside the centralizer and act on Delta only");
  add_tol(evolve, opts, "Commutator tolerance for --require-centralizer (default 1e-9)");
  add_format(evolve, format);
  add_output(evolve, opts);

  auto* sample = app.add_subcommand("sample", "Draw LM-equivalent family members");
  sample->add_option("state", state, "State file")->required();
  sample->add_option("--count", opts.count, "Number of members")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sample->add_option("--seed", opts.seed, "PRNG seed (mt19937_64)")->capture_default_str();
  add_tol(sample, opts, "Maximally-mixed threshold on |r| (default 1e-9)");
  add_format(sample, format);
  add_output(sample, opts);

  auto* compare = app.add_subcommand("compare", "Test LM-equivalence and purity");
  compare->add_option("a", state, "First state file")->required();
  compare->add_option("b", state_b, "Second state file")->required();
  add_tol(compare, opts, "Equality tolerance (default 1e-10)");
  add_json(compare, opts);
  add_output(compare, opts);

  auto* mk = app.add_subcommand("make", "Write a fixture state");
  mk->add_option("kind", make.kind, "mixed, ghz, werner or product")
      ->required()
      ->check(CLI::IsMember({"mixed", "ghz", "werner", "product"}));
  mk->add_option("-n,--qubits", make.qubits, "Number of qubits")
      ->check(CLI::Range(1, 12))
      ->capture_default_str();
  mk->add_option("-w,--weight", make.weight, "Werner weight")->capture_default_str();
  mk->add_option("--bloch", make.bloch, "Bloch components, 3 per qubit (product)");
  add_format(mk, format);
  add_output(mk, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lucent::cli::kExitInputError;
  }

  try {
    opts.format = lucent::cli::parse_encoding(format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return lucent::cli::kExitInputError;
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*validate) return lucent::cli::cmd_validate(state, opts, out, err);
  if (*decompose) return lucent::cli::cmd_decompose(state, opts, out, err);
  if (*centralizer) return lucent::cli::cmd_centralizer(state, opts, out, err);
  if (*evolve) return lucent::cli::cmd_evolve(state, unitary, opts, out, err);
  if (*sample) return lucent::cli::cmd_sample(state, opts, out, err);
  if (*compare) return lucent::cli::cmd_compare(state, state_b, opts, out, err);
  if (*mk) return lucent::cli::cmd_make(make, opts, out, err);
  return lucent::cli::kExitInputError;
}
