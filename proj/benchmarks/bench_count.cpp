#include <benchmark/benchmark.h>

#include <vector>

#include "denum/direct_count.hpp"
#include "denum/oracle.hpp"
#include "denum/residue_table.hpp"

namespace {

using denum::Count;
using denum::EquationSpec;
using denum::Int;

const denum::DirectOptions kUnlimited{.budget = std::nullopt};

EquationSpec spec_for(int which) {
  switch (which) {
    case 0:
      return EquationSpec::make({2, 3});
    case 1:
      return EquationSpec::make({3, 5, 7});
    default:
      return EquationSpec::make({7, 9, 10, 11});  // M = 6930
  }
}

void BM_DirectSmallB(benchmark::State& state) {
  const auto spec = spec_for(static_cast<int>(state.range(0)));
  const Int b = 300;
  for (auto _ : state) {
    Count result = denum::count_eq_direct(spec, b, kUnlimited);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_DirectSmallB)->Arg(0)->Arg(1)->Arg(2);

void BM_DirectHugeB(benchmark::State& state) {
  const auto spec = spec_for(static_cast<int>(state.range(0)));
  const Int b("1000000000000000000000000000000");
  for (auto _ : state) {
    Count result = denum::count_eq_direct(spec, b, kUnlimited);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_DirectHugeB)->Arg(0)->Arg(1)->Arg(2);

void BM_BuildTable(benchmark::State& state) {
  const auto spec = spec_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto table = denum::build_table(spec);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_BuildTable)->Arg(0)->Arg(1)->Arg(2);

void BM_QueryHugeB(benchmark::State& state) {
  const auto table =
      denum::build_table(spec_for(static_cast<int>(state.range(0))));
  const Int b("1000000000000000000000000000000");
  for (auto _ : state) {
    Count result = denum::query_table(table, b);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_QueryHugeB)->Arg(0)->Arg(1)->Arg(2);

void BM_OracleDp(benchmark::State& state) {
  const std::vector<Int> coefficients{3, 5, 7};
  const Int b = state.range(0);
  for (auto _ : state) {
    Count result = denum::count_dp(coefficients, b);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_OracleDp)->Arg(300)->Arg(10000)->Arg(1000000);

}  // namespace

BENCHMARK_MAIN();
