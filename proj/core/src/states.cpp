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

#include "lucent/states.hpp"

#include <cmath>
#include <sstream>

namespace lucent {

const char* to_string(Constraint c) noexcept {
  switch (c) {
    case Constraint::kRealCoefficients: return "real coefficients";
    case Constraint::kTraceNormalization: return "trace normalization";
    case Constraint::kCoefficientConsistency: return "coefficient consistency";
    case Constraint::kPurityBound: return "purity bound";
    case Constraint::kPositivity: return "positivity";
  }
  return "unknown";
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::ostringstream msg;
  msg << "invalid density state:";
  for (const auto& v : violations) msg << " [" << to_string(v.constraint) << ": " << v.detail << "]";
  return msg.str();
}

}  // namespace

bool ValidationReport::violates(Constraint c) const noexcept {
  for (const auto& v : violations) {
    if (v.constraint == c) return true;
  }
  return false;
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(ErrorKind::kInvalidState, summarize(violations)),
      violations_(std::move(violations)) {}

ValidationReport validate(PauliState state, const ValidationOptions& options) {
  ValidationReport report;
  const int n = state.qubits();
  const auto coeffs = state.coeffs();

  bool finite = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!std::isfinite(coeffs[k])) {
      finite = false;
      report.violations.push_back(
          {Constraint::kRealCoefficients,
           "coefficient " + PauliIndex(n, k).to_string() + " is not a finite real"});
      break;
    }
  }

  const double expected_identity = std::ldexp(1.0, -n);
  report.trace = std::ldexp(coeffs[0], n);
  if (!(std::abs(coeffs[0] - expected_identity) <= options.equality_tol)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "identity coefficient " << coeffs[0] << " != 2^-" << n << " (trace " << report.trace
        << ")";
    report.violations.push_back({Constraint::kTraceNormalization, msg.str()});
  }

  report.purity = purity(state);
  if (!(report.purity <= 1.0 + options.purity_tol)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "Tr rho^2 = " << report.purity << " exceeds 1";
    report.violations.push_back({Constraint::kPurityBound, msg.str()});
  }

  if (finite && n <= options.positivity_max_qubits) {
    const DenseOperator dense = coeffs_to_dense(state);

    // Re-deriving the coefficients from the dense form must reproduce them.
    const PauliState rederived = dense_to_coeffs(dense, kHermiticityTol);
    const double drift = rederived.max_abs_diff(state);
    if (drift > options.equality_tol) {
      std::ostringstream msg;
      msg << "coefficients drift by " << drift << " through the dense form";
      report.violations.push_back({Constraint::kCoefficientConsistency, msg.str()});
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense.matrix(),
                                                            Eigen::EigenvaluesOnly);
    report.positivity_checked = true;
    report.min_eigenvalue = solver.eigenvalues().minCoeff();
    report.max_eigenvalue = solver.eigenvalues().maxCoeff();
    if (*report.min_eigenvalue < -options.positivity_tol) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "minimum eigenvalue " << *report.min_eigenvalue << " is negative";
      report.violations.push_back({Constraint::kPositivity, msg.str()});
    }
  }

  if (report.valid()) {
    report.state = DensityState(std::move(state), report.positivity_checked);
  }
  return report;
}

DensityState DensityState::from(PauliState state, const ValidationOptions& options) {
  auto report = validate(std::move(state), options);
  if (!report.valid()) throw ValidationError(std::move(report.violations));
  return std::move(*report.state);
}

DensityState assume_valid(PauliState state, bool positivity_checked) {
  return DensityState(std::move(state), positivity_checked);
}

double purity(const PauliState& state) {
  double sum = 0.0;
  for (double c : state.coeffs()) sum += c * c;
  return std::ldexp(sum, state.qubits());
}

double purity(const DensityState& rho) { return purity(rho.pauli()); }

DensityState make_maximally_mixed(int qubits) {
  PauliState state(qubits);
  state[0] = std::ldexp(1.0, -qubits);
  return DensityState::from(std::move(state));
}

DensityState make_ghz(int qubits) {
  if (qubits < 2) {
    throw Error(ErrorKind::kDomain, "GHZ state needs at least 2 qubits, got " +
                                        std::to_string(qubits));
  }
  if (qubits > kMaxDenseQubits) {
    throw Error(ErrorKind::kCapacity, "GHZ construction is dense; too many qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  Eigen::MatrixXcd projector = Eigen::MatrixXcd::Zero(dim, dim);
  projector(0, 0) = projector(0, dim - 1) = projector(dim - 1, 0) =
      projector(dim - 1, dim - 1) = 0.5;
  return DensityState::from(dense_to_coeffs(DenseOperator(std::move(projector))));
}

DensityState make_product(std::span<const Eigen::Vector3d> bloch_vectors) {
  if (bloch_vectors.empty()) throw Error(ErrorKind::kDimension, "empty Bloch vector list");
  std::optional<PauliState> acc;
  for (std::size_t j = 0; j < bloch_vectors.size(); ++j) {
    const Eigen::Vector3d& r = bloch_vectors[j];
    if (!r.allFinite() || r.norm() > 1.0 + kEqualityTol) {
      std::ostringstream msg;
      msg << "Bloch vector of qubit " << j + 1 << " has norm " << r.norm() << " > 1";
      throw Error(ErrorKind::kInvalidBloch, msg.str());
    }
    PauliState single(1, {0.5, 0.5 * r.x(), 0.5 * r.y(), 0.5 * r.z()});
    acc = acc ? tensor_product(*acc, single) : std::move(single);
  }
  return DensityState::from(std::move(*acc));
}

DensityState make_werner_like(int qubits, double weight) {
  const DensityState ghz = make_ghz(qubits);
  PauliState mixed(qubits);
  mixed[0] = std::ldexp(1.0, -qubits);
  return DensityState::from((1.0 - weight) * mixed + weight * ghz.pauli());
}

DensityState tensor_product(const DensityState& a, const DensityState& b) {
  return DensityState::from(tensor_product(a.pauli(), b.pauli()));
}

}  // namespace lucent
