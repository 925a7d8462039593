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

#include <span>
#include <vector>

#include "lucent/pauli.hpp"

// Brute-force dense reference implementations. Nothing here shares code with
// the coefficient-space paths it is used to check; keep it that way.
namespace lucent::oracle {

/// Partial trace over every qubit except `keep` (1-based), by direct index
/// summation over computational-basis states.
Matrix2c dense_partial_trace(const DenseOperator& op, int keep);

/// (U_1 (x) ... (x) U_n) op (U_1 (x) ... (x) U_n)^dagger. Each factor must be
/// unitary within `tol`.
DenseOperator dense_conjugate(const DenseOperator& op, std::span<const Matrix2c> units,
                              double tol = 1e-12);

Matrix2c dense_commutator(const Matrix2c& a, const Matrix2c& b);

/// The Pauli string matrix for `digits` (qubit 1 first), built by explicit
/// entry formulas rather than repeated Kronecker products.
Eigen::MatrixXcd dense_pauli_string(std::span<const int> digits);

/// 2^-n Tr{sigma_alpha op} by a direct double loop.
Complex dense_expansion_coefficient(const DenseOperator& op, std::span<const int> digits);

/// Sorted eigenvalues of a Hermitian matrix.
Eigen::VectorXd dense_eigenvalues(const Eigen::MatrixXcd& hermitian);

}  // namespace lucent::oracle
