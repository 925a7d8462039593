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

#include "lucent/centralizer.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace lucent {

namespace {

Eigen::Matrix3d cross_matrix(const Eigen::Vector3d& n) {
  Eigen::Matrix3d k;
  k << 0.0, -n.z(), n.y(),
       n.z(), 0.0, -n.x(),
       -n.y(), n.x(), 0.0;
  return k;
}

Matrix2c dot_sigma(const Eigen::Vector3d& v) {
  return v.x() * pauli_matrix(1) + v.y() * pauli_matrix(2) + v.z() * pauli_matrix(3);
}

}  // namespace

// ---------------------------------------------------------------------------
// AxisAngle / LocalUnitarySpec

AxisAngle::AxisAngle(const Eigen::Vector3d& axis, double angle) : angle_(angle) {
  if (angle == 0.0) return;
  const double len = axis.norm();
  if (!(len >= kDegenerateAxisTol) || !std::isfinite(len) || !std::isfinite(angle)) {
    throw Error(ErrorKind::kDegenerateAxis, "rotation axis must be a finite nonzero vector");
  }
  // Rescaling an axis that is already unit would perturb its last bits.
  const bool unit = std::abs(len - 1.0) <= 4 * std::numeric_limits<double>::epsilon();
  axis_ = unit ? axis : Eigen::Vector3d(axis / len);
}

AxisAngle AxisAngle::from_generator(const Eigen::Vector3d& generator) {
  const double len = generator.norm();
  if (len == 0.0) return AxisAngle{};
  return AxisAngle(generator / len, len);
}

AxisAngle AxisAngle::from_spherical(double phi, double theta, double angle) {
  const Eigen::Vector3d axis(std::cos(phi) * std::sin(theta), std::sin(phi) * std::sin(theta),
                             std::cos(theta));
  return AxisAngle(axis, angle);
}

Matrix2c AxisAngle::matrix() const {
  const Complex i{0.0, 1.0};
  return std::cos(angle_) * Matrix2c::Identity() + i * std::sin(angle_) * dot_sigma(axis_);
}

AxisAngle compose(const AxisAngle& a, const AxisAngle& b) {
  // (c1 + i s1 n1.sigma)(c2 + i s2 n2.sigma)
  //   = c1 c2 - s1 s2 n1.n2 + i (c1 s2 n2 + c2 s1 n1 - s1 s2 n1 x n2).sigma
  const double c1 = std::cos(a.angle()), s1 = std::sin(a.angle());
  const double c2 = std::cos(b.angle()), s2 = std::sin(b.angle());
  const double scalar = c1 * c2 - s1 * s2 * a.axis().dot(b.axis());
  const Eigen::Vector3d vec =
      c1 * s2 * b.axis() + c2 * s1 * a.axis() - s1 * s2 * a.axis().cross(b.axis());
  const double len = vec.norm();
  if (len == 0.0) return scalar >= 0.0 ? AxisAngle{} : AxisAngle(Eigen::Vector3d::UnitZ(), std::numbers::pi);
  return AxisAngle(vec / len, std::atan2(len, scalar));
}

LocalUnitarySpec::LocalUnitarySpec(std::vector<AxisAngle> factors) : factors_(std::move(factors)) {
  if (factors_.empty() || static_cast<int>(factors_.size()) > kMaxQubits) {
    throw Error(ErrorKind::kDimension, "local unitary spec needs 1.." +
                                           std::to_string(kMaxQubits) + " factors");
  }
}

LocalUnitarySpec LocalUnitarySpec::identity(int qubits) {
  return LocalUnitarySpec(std::vector<AxisAngle>(static_cast<std::size_t>(std::max(qubits, 0))));
}

const AxisAngle& LocalUnitarySpec::factor(int qubit) const {
  if (qubit < 1 || qubit > qubits()) {
    throw Error(ErrorKind::kIndexOutOfRange, "qubit " + std::to_string(qubit) + " outside spec");
  }
  return factors_[qubit - 1];
}

std::vector<Matrix2c> LocalUnitarySpec::matrices() const {
  std::vector<Matrix2c> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.matrix());
  return out;
}

LocalUnitarySpec LocalUnitarySpec::inverse() const {
  std::vector<AxisAngle> inv;
  inv.reserve(factors_.size());
  for (const auto& f : factors_) inv.push_back(f.inverse());
  return LocalUnitarySpec(std::move(inv));
}

LocalUnitarySpec compose(const LocalUnitarySpec& a, const LocalUnitarySpec& b) {
  if (a.qubits() != b.qubits()) throw Error(ErrorKind::kDimension, "spec qubit counts differ");
  std::vector<AxisAngle> out;
  out.reserve(a.qubits());
  for (int j = 1; j <= a.qubits(); ++j) out.push_back(compose(a.factor(j), b.factor(j)));
  return LocalUnitarySpec(std::move(out));
}

Eigen::Matrix3d so3_rotation(const AxisAngle& u) {
  const double theta = 2.0 * u.angle();
  const Eigen::Vector3d& n = u.axis();
  return std::cos(theta) * Eigen::Matrix3d::Identity() - std::sin(theta) * cross_matrix(n) +
         (1.0 - std::cos(theta)) * n * n.transpose();
}

// ---------------------------------------------------------------------------
// Cyclic unitaries

Matrix2c cyclic_unitary(const BlochVector& bloch, double xi) {
  const double len = bloch.r.norm();
  if (len < kDegenerateAxisTol) {
    throw Error(ErrorKind::kDegenerateAxis,
                "qubit " + std::to_string(bloch.qubit) +
                    " is maximally mixed; every SU(2) element fixes it (use the full factor)");
  }
  return AxisAngle(bloch.r / len, xi * len).matrix();
}

Matrix2c reduction_commutator(const Matrix2c& u, const BlochVector& bloch) {
  const Matrix2c rho = bloch.reduced_matrix();
  return u * rho - rho * u;
}

Eigen::Vector3d generator_commutator(const Eigen::Vector3d& s, const Eigen::Vector3d& r) {
  // [sigma_k, sigma_l] = 2i eps_klu sigma_u
  return 2.0 * s.cross(r);
}

bool commutes_with_reduction(const Matrix2c& u, const BlochVector& bloch, double tol) {
  const double unitarity = (u * u.adjoint() - Matrix2c::Identity()).cwiseAbs().maxCoeff();
  if (unitarity > std::max(tol, kEqualityTol)) {
    std::ostringstream msg;
    msg << "matrix is not unitary (max |UU^dagger - 1| = " << unitarity << ")";
    throw Error(ErrorKind::kNonUnitary, msg.str());
  }
  return reduction_commutator(u, bloch).cwiseAbs().maxCoeff() <= tol;
}

// ---------------------------------------------------------------------------
// Centralizer classification and sampling

int CentralizerDescriptor::parameter_count(int qubit) const {
  if (qubit < 1 || qubit > qubit_count()) {
    throw Error(ErrorKind::kIndexOutOfRange, "qubit outside descriptor");
  }
  return std::holds_alternative<FullFactor>(qubits[qubit - 1]) ? 3 : 1;
}

CentralizerDescriptor classify_centralizer(const DensityState& rho, double tol) {
  CentralizerDescriptor desc;
  desc.tol = tol;
  for (const auto& b : bloch_vectors(rho)) {
    const double len = b.r.norm();
    if (len < tol) {
      desc.qubits.emplace_back(FullFactor{});
    } else {
      desc.qubits.emplace_back(AxisFactor{b.r / len, len});
      ++desc.m;
    }
  }
  desc.dim = 3 * desc.qubit_count() - 2 * desc.m;
  return desc;
}

LocalUnitarySpec sample_centralizer(const CentralizerDescriptor& desc,
                                    std::span<const std::vector<double>> params) {
  if (static_cast<int>(params.size()) != desc.qubit_count()) {
    throw Error(ErrorKind::kArity, "expected parameters for " +
                                       std::to_string(desc.qubit_count()) + " qubits, got " +
                                       std::to_string(params.size()));
  }
  std::vector<AxisAngle> factors;
  factors.reserve(params.size());
  for (int j = 1; j <= desc.qubit_count(); ++j) {
    const auto& p = params[j - 1];
    const int expected = desc.parameter_count(j);
    if (static_cast<int>(p.size()) != expected) {
      throw Error(ErrorKind::kArity, "qubit " + std::to_string(j) + " takes " +
                                         std::to_string(expected) + " parameter(s), got " +
                                         std::to_string(p.size()));
    }
    if (const auto* axis = std::get_if<AxisFactor>(&desc.qubits[j - 1])) {
      factors.emplace_back(axis->axis, p[0] * axis->bloch_norm);
    } else {
      factors.push_back(AxisAngle::from_spherical(p[0], p[1], p[2]));
    }
  }
  return LocalUnitarySpec(std::move(factors));
}

std::vector<std::vector<double>> draw_centralizer_parameters(const CentralizerDescriptor& desc,
                                                             std::mt19937_64& rng) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<double>> out;
  out.reserve(desc.qubits.size());
  for (const auto& q : desc.qubits) {
    if (const auto* axis = std::get_if<AxisFactor>(&q)) {
      out.push_back({kTwoPi * unit(rng) / axis->bloch_norm});
    } else {
      const double phi = kTwoPi * unit(rng);
      const double theta = std::acos(1.0 - 2.0 * unit(rng));
      const double omega = kTwoPi * unit(rng);
      out.push_back({phi, theta, omega});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Adjoint action

PauliState conjugate(const PauliState& state, const LocalUnitarySpec& u) {
  if (state.qubits() != u.qubits()) {
    throw Error(ErrorKind::kDimension, "state has " + std::to_string(state.qubits()) +
                                           " qubits, unitary spec has " +
                                           std::to_string(u.qubits()));
  }
  PauliState out = state;
  for (int j = 1; j <= u.qubits(); ++j) {
    const AxisAngle& f = u.factor(j);
    if (f.is_identity()) continue;
    const Eigen::Matrix3d rot = so3_rotation(f);
    const std::size_t stride = std::size_t{1} << (2 * (j - 1));
    for (std::size_t base = 0; base < out.size(); base += 4 * stride) {
      for (std::size_t off = 0; off < stride; ++off) {
        const std::size_t k = base + off;
        const Eigen::Vector3d v(out[k + stride], out[k + 2 * stride], out[k + 3 * stride]);
        const Eigen::Vector3d w = rot * v;
        out[k + stride] = w.x();
        out[k + 2 * stride] = w.y();
        out[k + 3 * stride] = w.z();
      }
    }
  }
  return out;
}

DensityState adjoint_action(const DensityState& rho, const LocalUnitarySpec& u) {
  return assume_valid(conjugate(rho.pauli(), u), rho.positivity_checked());
}

std::vector<QubitCommutator> centralizer_diagnostics(const DensityState& rho,
                                                     const LocalUnitarySpec& u, double tol) {
  if (rho.qubits() != u.qubits()) {
    throw Error(ErrorKind::kDimension, "state and unitary spec qubit counts differ");
  }
  std::vector<QubitCommutator> out;
  out.reserve(u.qubits());
  for (int j = 1; j <= u.qubits(); ++j) {
    const BlochVector b = partial_trace_single(rho, j);
    const double worst = reduction_commutator(u.factor(j).matrix(), b).cwiseAbs().maxCoeff();
    out.push_back({j, worst, worst <= tol});
  }
  return out;
}

bool is_in_centralizer(const DensityState& rho, const LocalUnitarySpec& u, double tol) {
  for (const auto& d : centralizer_diagnostics(rho, u, tol)) {
    if (!d.commutes) return false;
  }
  return true;
}

namespace {

std::string rejection_message(const std::vector<QubitCommutator>& diagnostics) {
  std::ostringstream msg;
  msg << "unitary is not in the centralizer:";
  for (const auto& d : diagnostics) {
    if (!d.commutes) msg << " qubit " << d.qubit << " (max commutator entry " << d.max_entry << ")";
  }
  return msg.str();
}

}  // namespace

CentralizerRejection::CentralizerRejection(std::vector<QubitCommutator> diagnostics)
    : Error(ErrorKind::kNotInCentralizer, rejection_message(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

DensityState family_member(const DensityState& rho, const LocalUnitarySpec& u, double tol) {
  auto diagnostics = centralizer_diagnostics(rho, u, tol);
  for (const auto& d : diagnostics) {
    if (!d.commutes) throw CentralizerRejection(std::move(diagnostics));
  }
  Decomposition parts = decompose(rho);
  parts.delta = conjugate(parts.delta, u);
  return assume_valid(parts.recompose(), rho.positivity_checked());
}

// ---------------------------------------------------------------------------
// Family discrimination

const char* to_string(FamilyVerdict v) noexcept {
  switch (v) {
    case FamilyVerdict::kExcludedByReductions: return "ExcludedByReductions";
    case FamilyVerdict::kExcludedByPurity: return "ExcludedByPurity";
    case FamilyVerdict::kExcludedByDeltaPurity: return "ExcludedByDeltaPurity";
    case FamilyVerdict::kInconclusive: return "Inconclusive";
  }
  return "unknown";
}

FamilyComparison compare_family(const DensityState& a, const DensityState& b, double tol) {
  FamilyComparison out;
  out.tol = tol;
  out.lm_agreement = lm_agreement(a, b, tol);
  out.purity_a = purity(a);
  out.purity_b = purity(b);
  out.delta_purity_a = delta_purity(a);
  out.delta_purity_b = delta_purity(b);

  bool lm = true;
  for (bool same : out.lm_agreement) lm = lm && same;
  if (!lm) {
    out.verdict = FamilyVerdict::kExcludedByReductions;
  } else if (std::abs(out.purity_a - out.purity_b) > tol) {
    out.verdict = FamilyVerdict::kExcludedByPurity;
  } else if (std::abs(out.delta_purity_a - out.delta_purity_b) > tol) {
    out.verdict = FamilyVerdict::kExcludedByDeltaPurity;
  } else {
    out.verdict = FamilyVerdict::kInconclusive;
  }
  return out;
}

FamilyVerdict family_discriminator(const DensityState& a, const DensityState& b, double tol) {
  return compare_family(a, b, tol).verdict;
}

bool verify_subspace_invariance(const DensityState& rho, const LocalUnitarySpec& u, int qubit,
                                double tol) {
  const PauliState lhs = project_Q(conjugate(rho.pauli(), u), qubit).state;
  const PauliState rhs = conjugate(project_Q(rho, qubit).state, u);
  if (lhs.max_abs_diff(rhs) > tol) return false;

  // Conjugating the kernel component must leave nothing in Q_i.
  const PauliState kernel_image = conjugate(kernel_component(rho, qubit), u);
  const PauliState leaked = project_Q(kernel_image, qubit).state;
  for (double c : leaked.coeffs()) {
    if (std::abs(c) > tol) return false;
  }
  return true;
}

}  // namespace lucent
