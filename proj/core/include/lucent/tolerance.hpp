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

namespace lucent {

// All quantities handled here are O(1) after normalization, so absolute
// tolerances are used throughout.
inline constexpr double kEqualityTol = 1e-10;
inline constexpr double kHermiticityTol = 1e-9;
inline constexpr double kPositivityTol = 1e-9;
inline constexpr double kPurityTol = 1e-9;

// Bloch norms below this threshold are treated as a maximally mixed qubit.
inline constexpr double kClassificationTol = 1e-9;

// Commutator entries below this count as commuting.
inline constexpr double kCommutatorTol = 1e-9;

// Axis length below which a Bloch vector has no well-defined direction.
inline constexpr double kDegenerateAxisTol = 1e-12;

inline constexpr int kMaxQubits = 12;
inline constexpr int kMaxDenseQubits = 12;
inline constexpr int kMaxPositivityQubits = 8;

}  // namespace lucent
