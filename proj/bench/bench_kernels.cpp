#include "rankone/spectra.hpp"
#include "rankone/verify.hpp"

#include <benchmark/benchmark.h>

using namespace rankone;

namespace {

const SphereModel model{Field::Quaternion, 4};

void enumerate_serial(benchmark::State &state)
{
  const Rational cutoff(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::enumerate_spectrum(model, make_rational(1, 3), cutoff));
}

void enumerate_parallel(benchmark::State &state)
{
  const Rational cutoff(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_spectrum(model, make_rational(1, 3), cutoff));
}

void grid_serial(benchmark::State &state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::evaluate_grid(model, state.range(0), state.range(0)));
}

void grid_parallel(benchmark::State &state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(evaluate_grid(model, state.range(0), state.range(0)));
}

void unified_vs_table_serial(benchmark::State &state)
{
  const auto grid = verify::degree_ordered_grid(state.range(0), state.range(0));
  const verify::CaseCheck check = [&](std::size_t i) -> std::optional<verify::Counterexample> {
    const auto [p, q] = grid[i];
    if (multiplicity(model, p, q) != table_formulas(model, p, q).multiplicity)
      return verify::Counterexample{};
    return std::nullopt;
  };
  for (auto _ : state)
    benchmark::DoNotOptimize(verify::serial::first_failure(grid.size(), check));
}

void unified_vs_table_parallel(benchmark::State &state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(verify::check_unified_vs_table(model, state.range(0), state.range(0)));
}

} // namespace

BENCHMARK(enumerate_serial)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(enumerate_parallel)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(grid_serial)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(grid_parallel)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(unified_vs_table_serial)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(unified_vs_table_parallel)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
