#include <benchmark/benchmark.h>

#include "crystalfold/folding.hpp"
#include "crystalfold/roots.hpp"
#include "crystalfold/spin.hpp"

using namespace crystalfold;

namespace {

FoldedDatum fold_a(int m) {
  Quiver q = path_quiver(m);
  return fold(q, flip_automorphism(q));
}

void BM_FoldA(benchmark::State& state) {
  int m = int(state.range(0));
  Quiver q = path_quiver(m);
  Automorphism a = flip_automorphism(q);
  for (auto _ : state) benchmark::DoNotOptimize(fold(q, a));
}
BENCHMARK(BM_FoldA)->Arg(9)->Arg(21);

void BM_BInfinity(benchmark::State& state) {
  CartanDatum a3 = cartan_type('A', 3);
  long long depth = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(generate_binfinity(a3, depth));
}
BENCHMARK(BM_BInfinity)->Arg(6)->Arg(9);

void BM_BLambdaD4Adjoint(benchmark::State& state) {
  CartanDatum d4 = cartan_type('D', 4);
  Weight w = Weight::fundamental(4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(generate_blambda(d4, w));
}
BENCHMARK(BM_BLambdaD4Adjoint);

void BM_FoldedSpinCrystal(benchmark::State& state) {
  int n = int(state.range(0));
  Quiver q = path_quiver(2 * n - 1);
  FoldedDatum fd = fold_a(2 * n - 1);
  CrystalGraph src =
      generate_blambda(cartan_from_quiver(q), Weight::fundamental(2 * n - 1, n - 1));
  for (auto _ : state)
    benchmark::DoNotOptimize(folded_crystal(src, fd, FoldMode::highest_weight));
}
BENCHMARK(BM_FoldedSpinCrystal)->Arg(3)->Arg(5);

void BM_Freudenthal(benchmark::State& state) {
  CartanDatum d4 = cartan_type('D', 4);
  Weight w{{1, 1, 0, 0}, {0, 0, 0, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(freudenthal(d4, w));
}
BENCHMARK(BM_Freudenthal);

void BM_Kostant(benchmark::State& state) {
  CartanDatum b3 = cartan_type('B', 3);
  auto roots = positive_roots(b3);
  Coeffs beta{2, 3, 3};
  for (auto _ : state) benchmark::DoNotOptimize(kostant_count(b3, roots, beta));
}
BENCHMARK(BM_Kostant);

void BM_SpinCrystal(benchmark::State& state) {
  int n = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_spin_crystal(n));
}
BENCHMARK(BM_SpinCrystal)->Arg(5)->Arg(8);

void BM_ChevalleyVerify(benchmark::State& state) {
  int n = int(state.range(0));
  SpinMatrices sm = chevalley_matrices(n);
  CartanDatum bn = cartan_type('B', n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(sm, bn));
}
BENCHMARK(BM_ChevalleyVerify)->Arg(4)->Arg(5);

void BM_StabilityCheck(benchmark::State& state) {
  int n = int(state.range(0));
  std::vector<int> staircase(n);
  for (int i = 0; i < n; ++i) staircase[i] = n - i;
  NakajimaPoint p = rep_from_young(YoungDiagram::from_parts(n, staircase));
  for (auto _ : state) benchmark::DoNotOptimize(stability_check(p));
}
BENCHMARK(BM_StabilityCheck)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
