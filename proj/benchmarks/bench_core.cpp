// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "optheory/calibration.hpp"
#include "optheory/eig.hpp"
#include "optheory/gns.hpp"
#include "optheory/models.hpp"

using namespace optheory;

namespace {

Matrix random_symmetric(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.next_gaussian();
  return Matrix(0.5 * (a + a.transpose()));
}

void BM_JacobiEigh(benchmark::State& state) {
  const Matrix a = random_symmetric(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(eigh(a));
}
BENCHMARK(BM_JacobiEigh)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_GnsBuildQubit(benchmark::State& state) {
  const Theory qubit = build_qubit();
  const BipartiteForm bell = faithful_form(qubit);
  for (auto _ : state) benchmark::DoNotOptimize(GnsSpace(qubit, bell));
}
BENCHMARK(BM_GnsBuildQubit);

void BM_OperatorNorm(benchmark::State& state) {
  const Theory qubit = build_qubit();
  const GnsSpace space(qubit, faithful_form(qubit));
  SplitMix64 rng(9);
  const TransformationMatrix t = random_transformation(qubit, rng);
  for (auto _ : state) benchmark::DoNotOptimize(space.operator_norm(t));
}
BENCHMARK(BM_OperatorNorm);

void BM_Transpose(benchmark::State& state) {
  const Theory qubit = build_qubit();
  const BipartiteForm bell = faithful_form(qubit);
  SplitMix64 rng(9);
  const TransformationMatrix t = random_transformation(qubit, rng);
  for (auto _ : state) benchmark::DoNotOptimize(transposed(t, bell));
}
BENCHMARK(BM_Transpose);

void BM_SimulateOutcomes(benchmark::State& state) {
  const Theory qubit = build_qubit();
  const BipartiteForm bell = faithful_form(qubit);
  const FiducialSet fid = default_fiducials(qubit);
  const TransformationMatrix& t = qubit.transformation("rx90");
  const auto shots = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(simulate_outcomes(bell, t, fid, fid, shots, 42));
  state.SetItemsProcessed(state.iterations() * shots);
}
BENCHMARK(BM_SimulateOutcomes)->Arg(10000)->Arg(100000);

void BM_EstimateTransformation(benchmark::State& state) {
  const Theory qubit = build_qubit();
  const BipartiteForm bell = faithful_form(qubit);
  const FiducialSet fid = default_fiducials(qubit);
  const TransformationMatrix& t = qubit.transformation("ry90");
  const Matrix p = joint_probabilities(bell, t, fid, fid);
  for (auto _ : state)
    benchmark::DoNotOptimize(estimate_transformation(p, bell, fid, fid));
}
BENCHMARK(BM_EstimateTransformation);

void BM_BornProbability(benchmark::State& state) {
  const Theory qubit = build_qubit();
  const GnsSpace space(qubit, faithful_form(qubit));
  SplitMix64 rng(3);
  const StateVector omega = random_state(qubit, rng);
  const TransformationMatrix a = random_transformation(qubit, rng);
  const CVector rho = space.born_state(omega);
  for (auto _ : state) benchmark::DoNotOptimize(space.born_probability(a, rho));
}
BENCHMARK(BM_BornProbability);

}  // namespace

BENCHMARK_MAIN();
