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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/state_file.hpp"

namespace lucent::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitRejected = 1,    // domain rejection: invalid state, non-centralizer unitary
  kExitInputError = 2,  // unreadable or malformed input, dimension mismatch
};

struct Options {
  std::optional<double> tol;  // falls back to the per-command default
  bool json = false;          // one JSON record per line instead of a table
  Encoding format = Encoding::kPauli;
  std::optional<std::string> output;
  std::optional<std::string> delta_output;
  std::uint64_t seed = 0;
  int count = 1;
  bool require_centralizer = false;
};

int cmd_validate(const std::string& state_path, const Options& opts, std::ostream& out,
                 std::ostream& err);
int cmd_decompose(const std::string& state_path, const Options& opts, std::ostream& out,
                  std::ostream& err);
int cmd_centralizer(const std::string& state_path, const Options& opts, std::ostream& out,
                    std::ostream& err);
int cmd_evolve(const std::string& state_path, const std::string& unitary_path,
               const Options& opts, std::ostream& out, std::ostream& err);
int cmd_sample(const std::string& state_path, const Options& opts, std::ostream& out,
               std::ostream& err);
int cmd_compare(const std::string& path_a, const std::string& path_b, const Options& opts,
                std::ostream& out, std::ostream& err);

/// Fixture generator: kind is one of mixed, ghz, werner, product.
struct MakeRequest {
  std::string kind;
  int qubits = 2;
  double weight = 1.0;
  std::vector<double> bloch;  // 3 values per qubit for `product`
};

int cmd_make(const MakeRequest& request, const Options& opts, std::ostream& out,
             std::ostream& err);

}  // namespace lucent::cli
