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

#include <benchmark/benchmark.h>

#include <random>

#include "lucent/lucent.hpp"
#include "lucent/oracle.hpp"
#include "support/generators.hpp"

namespace {

using namespace lucent;

PauliState random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return dense_to_coeffs(DenseOperator(lucent::testing::random_density_matrix(n, rng)));
}

void BM_DenseToCoeffs(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  std::mt19937_64 rng(1);
  const DenseOperator op(lucent::testing::random_density_matrix(n, rng));
  for (auto _ : st) benchmark::DoNotOptimize(dense_to_coeffs(op));
}
BENCHMARK(BM_DenseToCoeffs)->DenseRange(2, 10, 2);

void BM_CoeffsToDense(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const PauliState s = random_state(n, 2);
  for (auto _ : st) benchmark::DoNotOptimize(coeffs_to_dense(s));
}
BENCHMARK(BM_CoeffsToDense)->DenseRange(2, 10, 2);

void BM_Conjugate(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  std::mt19937_64 rng(3);
  const PauliState s = random_state(n, 3);
  const LocalUnitarySpec u = lucent::testing::random_spec(n, rng);
  for (auto _ : st) benchmark::DoNotOptimize(conjugate(s, u));
}
BENCHMARK(BM_Conjugate)->DenseRange(2, 10, 2);

void BM_DenseConjugateOracle(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  std::mt19937_64 rng(4);
  const DenseOperator op(lucent::testing::random_density_matrix(n, rng));
  const auto u = lucent::testing::random_spec(n, rng).matrices();
  for (auto _ : st) benchmark::DoNotOptimize(oracle::dense_conjugate(op, u));
}
BENCHMARK(BM_DenseConjugateOracle)->DenseRange(2, 6, 2);

void BM_Decompose(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const PauliState s = random_state(n, 5);
  for (auto _ : st) benchmark::DoNotOptimize(decompose(s));
}
BENCHMARK(BM_Decompose)->DenseRange(2, 10, 2);

void BM_BlochVectors(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const DensityState rho = assume_valid(random_state(n, 6), false);
  for (auto _ : st) benchmark::DoNotOptimize(bloch_vectors(rho));
}
BENCHMARK(BM_BlochVectors)->DenseRange(2, 10, 2);

void BM_FamilyMember(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  std::mt19937_64 rng(7);
  const DensityState rho = assume_valid(random_state(n, 7), false);
  const CentralizerDescriptor desc = classify_centralizer(rho);
  const LocalUnitarySpec u = sample_centralizer(desc, draw_centralizer_parameters(desc, rng));
  for (auto _ : st) benchmark::DoNotOptimize(family_member(rho, u));
}
BENCHMARK(BM_FamilyMember)->DenseRange(2, 10, 2);

void BM_Validate(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const PauliState s = random_state(n, 8);
  for (auto _ : st) benchmark::DoNotOptimize(validate(s));
}
BENCHMARK(BM_Validate)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
