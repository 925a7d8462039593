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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "lucent/centralizer.hpp"
#include "lucent/pauli.hpp"

namespace lucent::cli {

inline constexpr int kStateFileVersion = 1;
inline constexpr int kUnitaryFileVersion = 1;

/// Malformed or unreadable input. Maps to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Encoding { kPauli, kDense };

Encoding parse_encoding(std::string_view name);
const char* to_string(Encoding e) noexcept;

/// On-disk state. Either a Pauli map (canonical) or a dense matrix of
/// [re, im] pairs. Pauli-map keys list qubit 1 first.
struct StateFile {
  int version = kStateFileVersion;
  std::optional<std::string> label;
  std::variant<PauliState, DenseOperator> data;

  int qubits() const;
  Encoding encoding() const;

  /// Coefficients, converting a dense payload (throws on non-Hermitian input).
  PauliState to_pauli() const;
};

StateFile make_state_file(const PauliState& state, Encoding encoding,
                          std::optional<std::string> label = std::nullopt);

StateFile parse_state_file(std::string_view text);
StateFile read_state_file(const std::string& path);

/// Single-line JSON; byte-stable for identical data.
std::string serialize_state_file(const StateFile& file, int indent = -1);

struct UnitaryEntry {
  int qubit = 1;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
  double angle = 0.0;
};

/// Per-qubit rotations exp(i angle axis.sigma); omitted qubits are identity.
struct UnitarySpecFile {
  int version = kUnitaryFileVersion;
  std::optional<int> qubits;
  std::vector<UnitaryEntry> entries;

  LocalUnitarySpec to_spec(int qubits) const;
};

UnitarySpecFile make_unitary_file(const LocalUnitarySpec& spec);
UnitarySpecFile parse_unitary_file(std::string_view text);
UnitarySpecFile read_unitary_file(const std::string& path);
std::string serialize_unitary_file(const UnitarySpecFile& file, int indent = -1);

std::string read_text(const std::string& path);

}  // namespace lucent::cli
