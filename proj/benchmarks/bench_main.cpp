#include <benchmark/benchmark.h>

#include "liepencil/contraction.hpp"
#include "liepencil/invariants.hpp"
#include "liepencil/poisson.hpp"
#include "liepencil/rng.hpp"

using namespace liepencil;

namespace {

void bm_cyclotomic_multiply(benchmark::State& state) {
  Cyc a = Cyc::zeta(12) + Cyc(Rational(3, 7));
  Cyc b = Cyc::zeta(12).pow(5) - Cyc(2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_cyclotomic_multiply);

void bm_tensor_rank_sl3(benchmark::State& state) {
  auto a = build_classical(Series::A, 2);
  Rng rng(42);
  auto xi = rng.point(a.dim, 10);
  for (auto _ : state) benchmark::DoNotOptimize(rank(tensor_at(a, xi)));
}
BENCHMARK(bm_tensor_rank_sl3);

void bm_index_estimate_sl3(benchmark::State& state) {
  auto a = build_classical(Series::A, 2);
  for (auto _ : state) benchmark::DoNotOptimize(index_estimate(a, 20, 42, 10));
}
BENCHMARK(bm_index_estimate_sl3);

void bm_classical_generators_sl3(benchmark::State& state) {
  auto a = build_classical(Series::A, 2);
  for (auto _ : state) benchmark::DoNotOptimize(classical_generators(a));
}
BENCHMARK(bm_classical_generators_sl3);

void bm_poisson_bracket_casimirs(benchmark::State& state) {
  auto a = build_classical(Series::A, 2);
  auto inv = classical_generators(a);
  const Poly& f = inv.generators[0].poly;
  const Poly& g = inv.generators[1].poly;
  for (auto _ : state) benchmark::DoNotOptimize(poisson_bracket(a, f, g));
}
BENCHMARK(bm_poisson_bracket_casimirs);

void bm_eigenspace_grading_principal_sl4(benchmark::State& state) {
  auto a = build_classical(Series::A, 3);
  auto g = grading_from_kac_inner({Series::A, 3, {1, 1, 1, 1}});
  // Rebuild the eigenspace decomposition from the raw automorphism matrix.
  auto theta = make_automorphism(a, grading_automorphism_matrix(g));
  for (auto _ : state) benchmark::DoNotOptimize(eigenspace_grading(a, theta));
}
BENCHMARK(bm_eigenspace_grading_principal_sl4);

void bm_contract_infty_sl4(benchmark::State& state) {
  auto g = grading_from_kac_inner({Series::A, 3, {1, 1, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(contract_infty(g));
}
BENCHMARK(bm_contract_infty_sl4);

}  // namespace

BENCHMARK_MAIN();
