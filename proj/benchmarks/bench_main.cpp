#include <benchmark/benchmark.h>

#include <vector>

#include "sheetcalc/borelideals.hpp"
#include "sheetcalc/gammamap.hpp"
#include "sheetcalc/identities.hpp"
#include "sheetcalc/invariants.hpp"
#include "sheetcalc/random.hpp"

using namespace sheetcalc;

namespace {

LieAlgebra algebra(const char* type) { return build_lie_algebra(build_root_system(CartanType::parse(type))); }

std::vector<Matrix> random_matrices(std::size_t count, std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Matrix> xs;
  for (std::size_t i = 0; i < count; ++i) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.small_rational();
    xs.push_back(m);
  }
  return xs;
}

void BM_StdIdentitySubsetDP(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto xs = random_matrices(k, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(std_identity(xs));
}
BENCHMARK(BM_StdIdentitySubsetDP)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_StdIdentityPermutationTree(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto xs = random_matrices(k, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(std_identity_tree(xs));
}
BENCHMARK(BM_StdIdentityPermutationTree)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_Matchings(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_matching(k, [&](const Matching&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Matchings)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_RkSpaceTopDegree(benchmark::State& state, const char* type) {
  const LieAlgebra g = algebra(type);
  for (auto _ : state) benchmark::DoNotOptimize(rk_space(g, g.num_positive()).dim());
}
BENCHMARK_CAPTURE(BM_RkSpaceTopDegree, A2, "A2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RkSpaceTopDegree, B2, "B2")->Unit(benchmark::kMillisecond);

void BM_MinorsSpace(benchmark::State& state, const char* type) {
  const LieAlgebra g = algebra(type);
  const QMatrix q = q_matrix(g, chevalley_generators(g));
  for (auto _ : state) benchmark::DoNotOptimize(minors_space(q).dim());
}
BENCHMARK_CAPTURE(BM_MinorsSpace, A2, "A2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MinorsSpace, B2, "B2")->Unit(benchmark::kMillisecond);

void BM_ChevalleyGenerators(benchmark::State& state, const char* type) {
  const LieAlgebra g = algebra(type);
  for (auto _ : state) benchmark::DoNotOptimize(chevalley_generators(g));
}
BENCHMARK_CAPTURE(BM_ChevalleyGenerators, A2, "A2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ChevalleyGenerators, B2, "B2")->Unit(benchmark::kMillisecond);

void BM_CasimirOnWedge(benchmark::State& state) {
  const LieAlgebra g = algebra("A2");
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(casimir_on_wedge(g, k).top_eigenspace_dim);
}
BENCHMARK(BM_CasimirOnWedge)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_StructureCheck(benchmark::State& state, const char* type) {
  const LieAlgebra g = algebra(type);
  for (auto _ : state) benchmark::DoNotOptimize(check_structure(g).passed());
}
BENCHMARK_CAPTURE(BM_StructureCheck, A3, "A3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_StructureCheck, B3, "B3")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
