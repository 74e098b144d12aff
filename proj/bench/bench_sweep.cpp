//------------------------------------------------------------------------------
//
//   Copyright 2026 The symdiv Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "symdiv/verify.hpp"

#include <benchmark/benchmark.h>

#include <omp.h>

namespace {

symdiv::SweepConfig bench_config(std::size_t samples)
{
  symdiv::SweepConfig c;
  c.samples_per_dim = samples;
  return c;
}

void BM_SweepSerial(benchmark::State &state)
{
  auto const config = bench_config(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(symdiv::run_sweep_serial(config));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(config.dims.size()) * state.range(0));
}

void BM_SweepParallel(benchmark::State &state)
{
  auto const config = bench_config(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(symdiv::run_sweep(config));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(config.dims.size()) * state.range(0));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
