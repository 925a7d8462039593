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

#include <random>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "lucent/error.hpp"
#include "lucent/pauli.hpp"
#include "lucent/reduction.hpp"
#include "lucent/states.hpp"

namespace lucent {

/// A single-qubit SU(2) element exp(i * angle * axis.sigma)
///   = cos(angle) 1 + i sin(angle) axis.sigma.
/// The axis is unit length whenever angle != 0 and canonically (0,0,1) when
/// angle == 0. Any real angle is accepted.
class AxisAngle {
 public:
  AxisAngle() = default;

  /// Normalizes `axis`; throws kDegenerateAxis for a zero axis with a nonzero
  /// angle.
  AxisAngle(const Eigen::Vector3d& axis, double angle);

  /// From the generator s = angle * axis.
  static AxisAngle from_generator(const Eigen::Vector3d& generator);

  /// axis = (cos phi sin theta, sin phi sin theta, cos theta).
  static AxisAngle from_spherical(double phi, double theta, double angle);

  const Eigen::Vector3d& axis() const noexcept { return axis_; }
  double angle() const noexcept { return angle_; }
  Eigen::Vector3d generator() const { return angle_ * axis_; }
  bool is_identity() const noexcept { return angle_ == 0.0; }

  Matrix2c matrix() const;
  AxisAngle inverse() const { return AxisAngle(axis_, -angle_); }

 private:
  Eigen::Vector3d axis_ = Eigen::Vector3d::UnitZ();
  double angle_ = 0.0;
};

/// Axis-angle form of U_a U_b.
AxisAngle compose(const AxisAngle& a, const AxisAngle& b);

/// U = U_1 (x) ... (x) U_n, one AxisAngle per qubit.
class LocalUnitarySpec {
 public:
  explicit LocalUnitarySpec(std::vector<AxisAngle> factors);
  static LocalUnitarySpec identity(int qubits);

  int qubits() const noexcept { return static_cast<int>(factors_.size()); }
  std::span<const AxisAngle> factors() const noexcept { return factors_; }

  /// Factor on `qubit`, 1-based.
  const AxisAngle& factor(int qubit) const;

  std::vector<Matrix2c> matrices() const;
  LocalUnitarySpec inverse() const;

 private:
  std::vector<AxisAngle> factors_;
};

/// Per-qubit product, (a b)_j = a_j b_j.
LocalUnitarySpec compose(const LocalUnitarySpec& a, const LocalUnitarySpec& b);

/// R with U sigma_b U^dagger = sum_a R(a, b) sigma_a for a, b in {x, y, z}.
/// For U = exp(i w n.sigma) this is the rotation by -2w about n.
Eigen::Matrix3d so3_rotation(const AxisAngle& u);

/// exp(i xi r.sigma) = cos(w) 1 + i sin(w) rhat.sigma, w = xi |r|.
/// Throws kDegenerateAxis when |r| < 1e-12.
Matrix2c cyclic_unitary(const BlochVector& bloch, double xi);

/// [U, (1 + r.sigma)/2].
Matrix2c reduction_commutator(const Matrix2c& u, const BlochVector& bloch);

/// Real c with [s.sigma, r.sigma] = i sum_u c_u sigma_u, c = 2 (s x r).
Eigen::Vector3d generator_commutator(const Eigen::Vector3d& s, const Eigen::Vector3d& r);

/// Whether U commutes with the reduced state of `bloch`, with the largest
/// commutator entry compared against tol. Throws kNonUnitary when U is not
/// unitary within tol.
bool commutes_with_reduction(const Matrix2c& u, const BlochVector& bloch,
                             double tol = kCommutatorTol);

struct FullFactor {
  friend bool operator==(const FullFactor&, const FullFactor&) = default;
};

struct AxisFactor {
  Eigen::Vector3d axis;
  double bloch_norm = 0.0;
};

/// Full: the reduction is maximally mixed and any SU(2) element fixes it
/// (3 parameters). Axis: only rotations about the Bloch direction (1 parameter).
using QubitCentralizer = std::variant<FullFactor, AxisFactor>;

struct CentralizerDescriptor {
  std::vector<QubitCentralizer> qubits;
  int m = 0;    // number of Axis qubits
  int dim = 0;  // 3n - 2m
  double tol = kClassificationTol;

  int qubit_count() const noexcept { return static_cast<int>(qubits.size()); }
  int parameter_count(int qubit) const;
};

CentralizerDescriptor classify_centralizer(const DensityState& rho,
                                           double tol = kClassificationTol);

/// Builds a centralizer element. params[j] holds the parameters of qubit j+1:
/// {xi} for Axis qubits (angle xi * |r|), {phi, theta, omega} for Full.
/// Throws kArity on a count mismatch.
LocalUnitarySpec sample_centralizer(const CentralizerDescriptor& desc,
                                    std::span<const std::vector<double>> params);

/// Draws parameters for sample_centralizer: Axis angles uniform in [0, 2pi),
/// Full qubits get a uniform axis on the sphere and a uniform angle in
/// [0, 2pi).
std::vector<std::vector<double>> draw_centralizer_parameters(const CentralizerDescriptor& desc,
                                                             std::mt19937_64& rng);

/// U X U^dagger computed on Pauli coefficients.
PauliState conjugate(const PauliState& state, const LocalUnitarySpec& u);

DensityState adjoint_action(const DensityState& rho, const LocalUnitarySpec& u);

struct QubitCommutator {
  int qubit = 1;
  double max_entry = 0.0;
  bool commutes = true;
};

/// Commutator of every factor of u with the matching reduction of rho.
std::vector<QubitCommutator> centralizer_diagnostics(const DensityState& rho,
                                                     const LocalUnitarySpec& u,
                                                     double tol = kCommutatorTol);

bool is_in_centralizer(const DensityState& rho, const LocalUnitarySpec& u,
                       double tol = kCommutatorTol);

class CentralizerRejection : public Error {
 public:
  explicit CentralizerRejection(std::vector<QubitCommutator> diagnostics);
  const std::vector<QubitCommutator>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<QubitCommutator> diagnostics_;
};

/// 2^-n 1 + sum_i rhobar_i + U delta U^dagger. Only the correlation part is
/// conjugated. Throws CentralizerRejection when u is not in the centralizer.
DensityState family_member(const DensityState& rho, const LocalUnitarySpec& u,
                           double tol = kCommutatorTol);

/// Checked in declaration order. Once the reductions agree, the two purity
/// gaps are equal, so kExcludedByDeltaPurity is never produced in exact
/// arithmetic; it remains for tolerance-edge cases.
enum class FamilyVerdict {
  kExcludedByReductions,
  kExcludedByPurity,
  kExcludedByDeltaPurity,
  kInconclusive,
};

const char* to_string(FamilyVerdict v) noexcept;

struct FamilyComparison {
  std::vector<bool> lm_agreement;
  double purity_a = 0.0;
  double purity_b = 0.0;
  double delta_purity_a = 0.0;
  double delta_purity_b = 0.0;
  double tol = kEqualityTol;
  FamilyVerdict verdict = FamilyVerdict::kInconclusive;
};

/// Exclusion test for "b is in the family of a". Inconclusive means no
/// criterion excluded it, not that b is a member.
FamilyComparison compare_family(const DensityState& a, const DensityState& b,
                                double tol = kEqualityTol);

FamilyVerdict family_discriminator(const DensityState& a, const DensityState& b,
                                   double tol = kEqualityTol);

/// Checks pi_Q(U rho U^dagger) == U pi_Q(rho) U^dagger for `qubit`, and that
/// the kernel component stays in the kernel under conjugation.
bool verify_subspace_invariance(const DensityState& rho, const LocalUnitarySpec& u, int qubit,
                                double tol = kEqualityTol);

}  // namespace lucent
