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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "lucent/tolerance.hpp"

namespace lucent {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;

/// Single-qubit Pauli letter. The numeric value is the base-4 digit.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// The 2x2 matrix of a single Pauli digit (0 = I, 1 = X, 2 = Y, 3 = Z).
Matrix2c pauli_matrix(int digit);

/// Multi-index over n qubits. Qubit 1 is the leftmost Kronecker factor; its
/// digit occupies the lowest bit pair of `code()`, so
/// code = sum_j digit(j) * 4^(j-1).
class PauliIndex {
 public:
  PauliIndex(int qubits, std::size_t code);

  /// digits[0] belongs to qubit 1.
  static PauliIndex from_digits(std::span<const int> digits);

  /// Letters over {I,X,Y,Z}, qubit 1 first, e.g. "XIZ".
  static PauliIndex from_string(std::string_view letters);

  /// The index with a single non-identity digit on `qubit` (1-based).
  static PauliIndex single(int qubits, int qubit, int digit);

  int qubits() const noexcept { return qubits_; }
  std::size_t code() const noexcept { return code_; }

  /// Digit of qubit `qubit`, 1-based.
  int digit(int qubit) const;
  std::vector<int> digits() const;

  /// Number of non-identity factors.
  int weight() const noexcept;

  std::string to_string() const;

  friend bool operator==(const PauliIndex&, const PauliIndex&) = default;

 private:
  int qubits_;
  std::size_t code_;
};

/// Number of basis strings on n qubits, 4^n.
constexpr std::size_t pauli_basis_size(int qubits) {
  return std::size_t{1} << (2 * qubits);
}

/// Weight of a raw code (count of nonzero base-4 digits).
int code_weight(std::size_t code) noexcept;

/// A 2^n x 2^n complex matrix together with its qubit count.
class DenseOperator {
 public:
  explicit DenseOperator(Eigen::MatrixXcd entries);

  int qubits() const noexcept { return qubits_; }
  Eigen::Index dimension() const noexcept { return entries_.rows(); }
  const Eigen::MatrixXcd& matrix() const noexcept { return entries_; }

  bool is_hermitian(double tol = kHermiticityTol) const;

 private:
  int qubits_;
  Eigen::MatrixXcd entries_;
};

/// Real coefficients r_alpha of a Hermitian operator in the Pauli-string
/// basis, indexed by PauliIndex::code().
class PauliState {
 public:
  explicit PauliState(int qubits);
  PauliState(int qubits, std::vector<double> coeffs);

  int qubits() const noexcept { return qubits_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const double> coeffs() const noexcept { return coeffs_; }

  double operator[](std::size_t code) const { return coeffs_[code]; }
  double& operator[](std::size_t code) { return coeffs_[code]; }
  double at(const PauliIndex& index) const;

  PauliState& operator+=(const PauliState& other);
  PauliState& operator-=(const PauliState& other);
  PauliState& operator*=(double factor);

  friend PauliState operator+(PauliState a, const PauliState& b) { return a += b; }
  friend PauliState operator-(PauliState a, const PauliState& b) { return a -= b; }
  friend PauliState operator*(double s, PauliState a) { return a *= s; }
  friend bool operator==(const PauliState&, const PauliState&) = default;

  /// Largest absolute coefficient difference.
  double max_abs_diff(const PauliState& other) const;

 private:
  int qubits_;
  std::vector<double> coeffs_;
};

/// Kronecker product sigma_{alpha_1} (x) ... (x) sigma_{alpha_n}.
DenseOperator sigma_dense(const PauliIndex& index);

/// Expansion coefficients 2^{-n} Tr{sigma_alpha op}. Throws kHermiticity when
/// any coefficient has an imaginary part above `tol`.
PauliState dense_to_coeffs(const DenseOperator& op, double tol = kHermiticityTol);

/// Inverse of dense_to_coeffs. Throws kCapacity above `max_qubits`.
DenseOperator coeffs_to_dense(const PauliState& state,
                              int max_qubits = kMaxDenseQubits);

/// Hilbert-Schmidt inner product Tr{AB} = 2^n sum_alpha a_alpha b_alpha.
double hs_inner(const PauliState& a, const PauliState& b);

/// Coefficients of A (x) B, with A on the leading qubits.
PauliState tensor_product(const PauliState& a, const PauliState& b);

}  // namespace lucent
