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

#include "lucent/reduction.hpp"

#include <cmath>

#include "lucent/error.hpp"

namespace lucent {

namespace {

void check_qubit(int qubits, int qubit) {
  if (qubit < 1 || qubit > qubits) {
    throw Error(ErrorKind::kIndexOutOfRange, "qubit " + std::to_string(qubit) +
                                                 " outside [1, " + std::to_string(qubits) +
                                                 "]");
  }
}

std::size_t single_code(int qubit, int digit) {
  return static_cast<std::size_t>(digit) << (2 * (qubit - 1));
}

}  // namespace

Matrix2c BlochVector::reduced_matrix() const {
  Matrix2c m = 0.5 * pauli_matrix(0);
  for (int a = 1; a <= 3; ++a) m += 0.5 * r[a - 1] * pauli_matrix(a);
  return m;
}

double TranslatedProjection::hs_norm() const { return std::sqrt(hs_inner(state, state)); }

double TranslatedProjection::reduced_norm() const {
  return std::sqrt(std::ldexp(hs_inner(state, state), 1 - state.qubits()));
}

PauliState Decomposition::recompose() const {
  PauliState out = delta;
  out[0] = identity_coeff;
  for (const auto& t : translated) {
    for (int a = 1; a <= 3; ++a) {
      const std::size_t code = single_code(t.qubit, a);
      out[code] = t.state[code];
    }
  }
  return out;
}

BlochVector partial_trace_single(const PauliState& state, int qubit) {
  const int n = state.qubits();
  check_qubit(n, qubit);
  BlochVector out;
  out.qubit = qubit;
  for (int a = 1; a <= 3; ++a) out.r[a - 1] = std::ldexp(state[single_code(qubit, a)], n);
  return out;
}

BlochVector partial_trace_single(const DensityState& rho, int qubit) {
  return partial_trace_single(rho.pauli(), qubit);
}

std::vector<BlochVector> bloch_vectors(const DensityState& rho) {
  std::vector<BlochVector> out;
  out.reserve(rho.qubits());
  for (int i = 1; i <= rho.qubits(); ++i) out.push_back(partial_trace_single(rho, i));
  return out;
}

QProjection project_Q(const PauliState& state, int qubit) {
  check_qubit(state.qubits(), qubit);
  QProjection out{qubit, PauliState(state.qubits())};
  for (int a = 0; a <= 3; ++a) {
    const std::size_t code = single_code(qubit, a);
    out.state[code] = state[code];
  }
  return out;
}

QProjection project_Q(const DensityState& rho, int qubit) {
  return project_Q(rho.pauli(), qubit);
}

PauliState kernel_component(const PauliState& state, int qubit) {
  check_qubit(state.qubits(), qubit);
  PauliState out = state;
  for (int a = 0; a <= 3; ++a) out[single_code(qubit, a)] = 0.0;
  return out;
}

PauliState kernel_component(const DensityState& rho, int qubit) {
  return kernel_component(rho.pauli(), qubit);
}

PauliState correlation_part(const PauliState& state) {
  PauliState out(state.qubits());
  for (std::size_t k = 0; k < state.size(); ++k) {
    if (code_weight(k) >= 2) out[k] = state[k];
  }
  return out;
}

Decomposition decompose(const PauliState& state) {
  const int n = state.qubits();
  Decomposition out{state[0], {}, correlation_part(state)};
  out.translated.reserve(n);
  for (int i = 1; i <= n; ++i) {
    TranslatedProjection t{i, PauliState(n)};
    double sq = 0.0;
    for (int a = 1; a <= 3; ++a) {
      const std::size_t code = single_code(i, a);
      t.state[code] = state[code];
      sq += state[code] * state[code];
    }
    t.lambda_plus = std::sqrt(sq);
    t.lambda_minus = -t.lambda_plus;
    out.translated.push_back(std::move(t));
  }
  return out;
}

Decomposition decompose(const DensityState& rho) { return decompose(rho.pauli()); }

double delta_purity(const PauliState& state) {
  double sum = 0.0;
  for (std::size_t k = 0; k < state.size(); ++k) {
    if (code_weight(k) >= 2) sum += state[k] * state[k];
  }
  return std::ldexp(sum, state.qubits());
}

double delta_purity(const DensityState& rho) { return delta_purity(rho.pauli()); }

double local_expectation(const DensityState& rho, int qubit, const Matrix2c& observable,
                         double tol) {
  if ((observable - observable.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw Error(ErrorKind::kHermiticity, "local observable is not Hermitian");
  }
  const BlochVector b = partial_trace_single(rho, qubit);
  // Tr{A (1 + r.sigma)/2} = (Tr A + sum_a r_a Tr{A sigma_a}) / 2
  Complex value = observable.trace();
  for (int a = 1; a <= 3; ++a) value += b.r[a - 1] * (observable * pauli_matrix(a)).trace();
  return 0.5 * value.real();
}

std::vector<bool> lm_agreement(const DensityState& a, const DensityState& b, double tol) {
  if (a.qubits() != b.qubits()) {
    throw Error(ErrorKind::kDimension, "cannot compare states on " +
                                           std::to_string(a.qubits()) + " and " +
                                           std::to_string(b.qubits()) + " qubits");
  }
  std::vector<bool> out(a.qubits());
  for (int i = 1; i <= a.qubits(); ++i) {
    const auto ra = partial_trace_single(a, i).r;
    const auto rb = partial_trace_single(b, i).r;
    out[i - 1] = (ra - rb).cwiseAbs().maxCoeff() <= tol;
  }
  return out;
}

bool lm_equivalent(const DensityState& a, const DensityState& b, double tol) {
  for (bool same : lm_agreement(a, b, tol)) {
    if (!same) return false;
  }
  return true;
}

}  // namespace lucent
