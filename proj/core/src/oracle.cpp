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

#include "lucent/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "lucent/error.hpp"

namespace lucent::oracle {

namespace {

// Bit of qubit j (1-based, qubit 1 most significant) in basis index x.
int qubit_bit(std::size_t x, int qubits, int j) {
  return static_cast<int>((x >> (qubits - j)) & 1U);
}

Complex single_entry(int digit, int row, int col) {
  switch (digit) {
    case 0: return row == col ? 1.0 : 0.0;
    case 1: return row != col ? 1.0 : 0.0;
    case 2:
      if (row == col) return 0.0;
      return row == 0 ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
    case 3: return row == col ? (row == 0 ? 1.0 : -1.0) : 0.0;
    default:
      throw Error(ErrorKind::kMalformedIndex, "Pauli digit out of range");
  }
}

}  // namespace

Matrix2c dense_partial_trace(const DenseOperator& op, int keep) {
  const int n = op.qubits();
  if (keep < 1 || keep > n) {
    throw Error(ErrorKind::kIndexOutOfRange, "kept qubit outside operator");
  }
  const auto dim = static_cast<std::size_t>(op.dimension());
  Matrix2c out = Matrix2c::Zero();
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      bool others_match = true;
      for (int j = 1; j <= n && others_match; ++j) {
        if (j != keep && qubit_bit(r, n, j) != qubit_bit(c, n, j)) others_match = false;
      }
      if (!others_match) continue;
      out(qubit_bit(r, n, keep), qubit_bit(c, n, keep)) +=
          op.matrix()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

DenseOperator dense_conjugate(const DenseOperator& op, std::span<const Matrix2c> units,
                              double tol) {
  const int n = op.qubits();
  if (static_cast<int>(units.size()) != n) {
    throw Error(ErrorKind::kDimension, "need one 2x2 factor per qubit");
  }
  for (const auto& u : units) {
    if ((u * u.adjoint() - Matrix2c::Identity()).cwiseAbs().maxCoeff() > tol) {
      throw Error(ErrorKind::kNonUnitary, "conjugation factor is not unitary");
    }
  }
  const auto dim = static_cast<Eigen::Index>(op.dimension());
  Eigen::MatrixXcd big(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      Complex v = 1.0;
      for (int j = 1; j <= n; ++j) {
        v *= units[j - 1](qubit_bit(static_cast<std::size_t>(r), n, j),
                          qubit_bit(static_cast<std::size_t>(c), n, j));
      }
      big(r, c) = v;
    }
  }
  return DenseOperator(big * op.matrix() * big.adjoint());
}

Matrix2c dense_commutator(const Matrix2c& a, const Matrix2c& b) { return a * b - b * a; }

Eigen::MatrixXcd dense_pauli_string(std::span<const int> digits) {
  const int n = static_cast<int>(digits.size());
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      Complex v = 1.0;
      for (int j = 1; j <= n; ++j) {
        v *= single_entry(digits[j - 1], qubit_bit(static_cast<std::size_t>(r), n, j),
                          qubit_bit(static_cast<std::size_t>(c), n, j));
      }
      out(r, c) = v;
    }
  }
  return out;
}

Complex dense_expansion_coefficient(const DenseOperator& op, std::span<const int> digits) {
  if (static_cast<int>(digits.size()) != op.qubits()) {
    throw Error(ErrorKind::kDimension, "digit count does not match operator");
  }
  const Eigen::MatrixXcd sigma = dense_pauli_string(digits);
  Complex trace = 0.0;
  for (Eigen::Index r = 0; r < sigma.rows(); ++r) {
    for (Eigen::Index k = 0; k < sigma.cols(); ++k) trace += sigma(r, k) * op.matrix()(k, r);
  }
  return trace / static_cast<double>(sigma.rows());
}

Eigen::VectorXd dense_eigenvalues(const Eigen::MatrixXcd& hermitian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = solver.eigenvalues();
  std::sort(ev.data(), ev.data() + ev.size());
  return ev;
}

}  // namespace lucent::oracle
