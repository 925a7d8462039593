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
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lucent/error.hpp"
#include "lucent/pauli.hpp"

namespace lucent {

/// Constraints a coefficient vector must satisfy to describe a density matrix.
enum class Constraint {
  kRealCoefficients,        // every r_alpha is a finite real
  kTraceNormalization,      // r_0 = 2^-n
  kCoefficientConsistency,  // r_alpha = 2^-n Tr{sigma_alpha rho}
  kPurityBound,             // Tr rho^2 <= 1
  kPositivity,              // rho >= 0
};

const char* to_string(Constraint c) noexcept;

struct Violation {
  Constraint constraint;
  std::string detail;
};

struct ValidationOptions {
  double equality_tol = kEqualityTol;
  double positivity_tol = kPositivityTol;
  double purity_tol = kPurityTol;
  int positivity_max_qubits = kMaxPositivityQubits;
};

struct ValidationReport;

/// A PauliState that passed validation. Only obtainable through validate(),
/// DensityState::from() or operations that provably preserve validity.
class DensityState {
 public:
  /// Validates and throws ValidationError on any violation.
  static DensityState from(PauliState state, const ValidationOptions& options = {});

  const PauliState& pauli() const noexcept { return state_; }
  int qubits() const noexcept { return state_.qubits(); }
  bool positivity_checked() const noexcept { return positivity_checked_; }

  friend bool operator==(const DensityState& a, const DensityState& b) {
    return a.state_ == b.state_;
  }

 private:
  DensityState(PauliState state, bool positivity_checked)
      : state_(std::move(state)), positivity_checked_(positivity_checked) {}

  friend ValidationReport validate(PauliState state, const ValidationOptions& options);
  friend DensityState assume_valid(PauliState, bool);

  PauliState state_;
  bool positivity_checked_;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool positivity_checked = false;
  std::optional<double> min_eigenvalue;
  std::optional<double> max_eigenvalue;
  double trace = 0.0;
  double purity = 0.0;
  std::optional<DensityState> state;

  bool valid() const noexcept { return violations.empty(); }
  bool violates(Constraint c) const noexcept;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Checks finiteness, trace normalization, coefficient/dense consistency,
/// Tr rho^2 <= 1 and positivity. Consistency and positivity need the
/// dense form and are only evaluated up to options.positivity_max_qubits;
/// above that the report carries positivity_checked = false.
ValidationReport validate(PauliState state, const ValidationOptions& options = {});

/// Wraps a state known to be valid, e.g. the unitary image of a valid state.
/// Performs no checks.
DensityState assume_valid(PauliState state, bool positivity_checked);

/// Tr rho^2 = 2^n sum_alpha r_alpha^2.
double purity(const DensityState& rho);
double purity(const PauliState& state);

/// Maximally mixed state 2^-n 1.
DensityState make_maximally_mixed(int qubits);

/// Projector onto (|0...0> + |1...1>)/sqrt(2), n >= 2.
DensityState make_ghz(int qubits);

/// Tensor product of single-qubit states (1 + r.sigma)/2, qubit 1 first.
DensityState make_product(std::span<const Eigen::Vector3d> bloch_vectors);

/// (1 - w) 2^-n 1 + w GHZ_n. Valid for w in [-1/(2^n - 1), 1]; other weights
/// fail validation with a positivity violation.
DensityState make_werner_like(int qubits, double weight);

/// rho_a (x) rho_b with rho_a on the leading qubits.
DensityState tensor_product(const DensityState& a, const DensityState& b);

}  // namespace lucent
