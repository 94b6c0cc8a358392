#include "listagree/agreement_oracle.hpp"
#include "listagree/direct_sum.hpp"
#include "listagree/expansion.hpp"
#include "listagree/generators.hpp"
#include "listagree/list_agreement.hpp"
#include "listagree/representation.hpp"
#include "listagree/rng.hpp"

#include <benchmark/benchmark.h>

using namespace listagree;

namespace {

ComplexPtr complete(int n, int d) { return std::make_shared<const SimplicialComplex>(complete_complex(n, d)); }

void BM_RepresentationBuild(benchmark::State& state) {
  const auto X = complete(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(RepresentationComplex::build(X, 1));
}
BENCHMARK(BM_RepresentationBuild)->Arg(6)->Arg(8)->Arg(10);

void BM_ListAgreementExact(benchmark::State& state) {
  const auto X = complete(static_cast<int>(state.range(0)), 2);
  const auto R = RepresentationComplex::build(X, 1);
  Rng rng(1);
  const LAssignment F = random_agreeing_l_assignment(X, 1, 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(list_agreement_exact(F, *R));
}
BENCHMARK(BM_ListAgreementExact)->Arg(6)->Arg(8)->Arg(10);

void BM_ListAgreementShot(benchmark::State& state) {
  const auto X = complete(8, 2);
  const auto R = RepresentationComplex::build(X, 1);
  Rng rng(2);
  const LAssignment F = random_agreeing_l_assignment(X, 1, 2, rng);
  const LAssignmentSource src(F);
  const auto S2 = FiniteGroup::symmetric(2);
  for (auto _ : state) benchmark::DoNotOptimize(list_agreement_shot(src, *R, S2, rng));
}
BENCHMARK(BM_ListAgreementShot);

void BM_MonteCarlo(benchmark::State& state) {
  const auto X = complete(8, 2);
  const auto R = RepresentationComplex::build(X, 1);
  Rng rng(3);
  LAssignment F = random_agreeing_l_assignment(X, 1, 2, rng);
  F.set_entry(0, 0, F.entry(0, 0) ^ 1U);
  const LAssignmentSource src(F);
  const auto S2 = FiniteGroup::symmetric(2);
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(list_agreement_monte_carlo(src, *R, S2, 10000, 7, workers));
}
BENCHMARK(BM_MonteCarlo)->Arg(1)->Arg(4)->UseRealTime();

void BM_AgreementOracle(benchmark::State& state) {
  const auto X = complete(static_cast<int>(state.range(0)), 2);
  Rng rng(4);
  LAssignment F = random_agreeing_l_assignment(X, 1, 2, rng);
  F.set_entry(0, 1, F.entry(0, 1) ^ 2U);
  for (auto _ : state) benchmark::DoNotOptimize(dist_to_agreeing_oracle(F));
}
BENCHMARK(BM_AgreementOracle)->Arg(5)->Arg(6)->Arg(7);

void BM_NearestCoboundary(benchmark::State& state) {
  const auto R = RepresentationComplex::build(complete(static_cast<int>(state.range(0)), 3), 1);
  const auto S2 = std::make_shared<const FiniteGroup>(FiniteGroup::f2());
  Rng rng(5);
  const Cochain f = random_cochain(R->complex_ptr(), S2, 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(nearest_coboundary(f));
}
BENCHMARK(BM_NearestCoboundary)->Arg(4)->Arg(5);

void BM_DirectSumOracle(benchmark::State& state) {
  const auto X = complete(static_cast<int>(state.range(0)), 3);
  FaceFunction F = eval_direct_sum(X, 0b1011, 3);
  F.values[0] ^= 1U;
  for (auto _ : state) benchmark::DoNotOptimize(dist_to_direct_sums_oracle(F));
}
BENCHMARK(BM_DirectSumOracle)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
