#include <benchmark/benchmark.h>

#include "polycomp/oracle.hpp"

using namespace polycomp;

namespace {

PolyMatrix bench_matrix(const Field& f, int n, int deg) {
  return random_instance(f, n, n, deg, 0xb0b);
}

void BM_smith_form_gf5(benchmark::State& state) {
  PolyMatrix m = bench_matrix(Field::gf(5), static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(smith_form(m));
}
BENCHMARK(BM_smith_form_gf5)->Arg(2)->Arg(3)->Arg(4);

void BM_smith_form_rationals(benchmark::State& state) {
  PolyMatrix m = bench_matrix(Field::rationals(), static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(smith_form(m));
}
BENCHMARK(BM_smith_form_rationals)->Arg(2)->Arg(3)->Arg(4);

void BM_minimal_indices(benchmark::State& state) {
  PolyMatrix m = random_instance(Field::gf(5), static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(0)) + 1, 2, 0xfeed);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_indices(m, Side::right));
}
BENCHMARK(BM_minimal_indices)->Arg(2)->Arg(3)->Arg(4);

void BM_complete_extraction(benchmark::State& state) {
  PolyMatrix m = bench_matrix(Field::gf(5), static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(complete_structural_data(m));
}
BENCHMARK(BM_complete_extraction)->Arg(2)->Arg(3);

void BM_complete_predicate(benchmark::State& state) {
  Field f2 = Field::gf(2);
  PolyMatrix src = PolyMatrix::from_entries(
      f2, 1, 2, {Poly::from_ints(f2, {0, 1}), Poly::zero(f2)});
  StructuralData sd = complete_structural_data(src);
  PrescribedData t;
  t.mode = Mode::complete;
  t.z = 1;
  t.x = 1;
  t.numerators = {Poly::from_ints(f2, {0, 1}), Poly::from_ints(f2, {0, 1})};
  t.orders = {-1, -1};
  t.col_indices = std::vector<int>{};
  t.row_indices = std::vector<int>{};
  for (auto _ : state)
    benchmark::DoNotOptimize(complete_row_completion(sd, t, Ring::polynomial));
}
BENCHMARK(BM_complete_predicate);

void BM_oracle_enumeration(benchmark::State& state) {
  Field f2 = Field::gf(2);
  PolyMatrix src = PolyMatrix::from_entries(
      f2, 1, 2, {Poly::from_ints(f2, {0, 1}), Poly::zero(f2)});
  SearchSpace space{src, 1, static_cast<int>(state.range(0)), std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_completions(space));
}
BENCHMARK(BM_oracle_enumeration)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
