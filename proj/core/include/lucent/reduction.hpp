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

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lucent/pauli.hpp"
#include "lucent/states.hpp"

namespace lucent {

/// Bloch vector r_i of qubit i (1-based). Component a equals
/// 2^n r_{0..a..0} of the global coefficients.
struct BlochVector {
  int qubit = 1;
  Eigen::Vector3d r = Eigen::Vector3d::Zero();

  double norm() const { return r.norm(); }

  /// The 2x2 reduced density matrix (1 + r.sigma)/2.
  Matrix2c reduced_matrix() const;
};

/// pi_{Q_i}(rho): the state restricted to the four strings that are identity
/// everywhere except possibly on qubit i.
struct QProjection {
  int qubit = 1;
  PauliState state;
};

/// The weight-1 part of pi_{Q_i}(rho), i.e. the projection with its identity
/// component removed.
struct TranslatedProjection {
  int qubit = 1;
  PauliState state;
  /// The two distinct eigenvalues of the dense form, -|c| and +|c| where c
  /// holds the three weight-1 coefficients of this qubit.
  double lambda_minus = 0.0;
  double lambda_plus = 0.0;

  /// sqrt(Tr{X^2}) of the full 2^n-dimensional operator.
  double hs_norm() const;

  /// The same norm taken per copy of the 2x2 block, which is
  /// sqrt(lambda_-^2 + lambda_+^2).
  double reduced_norm() const;
};

/// rho = 2^-n 1 + sum_i rhobar_i + delta, split by Pauli weight.
struct Decomposition {
  double identity_coeff = 0.0;
  std::vector<TranslatedProjection> translated;
  PauliState delta;

  PauliState recompose() const;
};

/// Reads the Bloch vector of qubit i directly from the coefficients.
BlochVector partial_trace_single(const DensityState& rho, int qubit);
BlochVector partial_trace_single(const PauliState& state, int qubit);

std::vector<BlochVector> bloch_vectors(const DensityState& rho);

QProjection project_Q(const PauliState& state, int qubit);
QProjection project_Q(const DensityState& rho, int qubit);

/// rho - pi_{Q_i}(rho).
PauliState kernel_component(const PauliState& state, int qubit);
PauliState kernel_component(const DensityState& rho, int qubit);

Decomposition decompose(const DensityState& rho);
Decomposition decompose(const PauliState& state);

/// Weight >= 2 part of the coefficients.
PauliState correlation_part(const PauliState& state);

/// Tr{delta^2} = 2^n sum over weight >= 2 of r_alpha^2.
double delta_purity(const PauliState& state);
double delta_purity(const DensityState& rho);

/// Tr{A rho_i} for a Hermitian 2x2 observable A.
double local_expectation(const DensityState& rho, int qubit, const Matrix2c& observable,
                         double tol = kHermiticityTol);

/// Per-qubit agreement of Bloch vectors, componentwise within tol.
std::vector<bool> lm_agreement(const DensityState& a, const DensityState& b,
                               double tol = kClassificationTol);

/// True when every 1-qubit reduction of a and b agrees within tol.
bool lm_equivalent(const DensityState& a, const DensityState& b,
                   double tol = kClassificationTol);

}  // namespace lucent
