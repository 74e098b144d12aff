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

#include "symdiv/error.hpp"
#include "symdiv/verify.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <string>

namespace symdiv {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

SweepSummary run_shard(SweepConfig const &config, std::size_t shard)
{
  std::size_t const dim    = config.dims[shard / config.samples_per_dim];
  std::size_t const sample = shard % config.samples_per_dim;
  auto const [p, q]        = shard_pair(config.seed, shard, dim);
  PairOrigin const origin{dim, sample};

  SweepSummary out = check_chain(p, q, config.tol, origin).fragment;
  out.merge(check_parametric(p, q, config.s_grid, config.t_grid, config.tol, origin));
  out.merge(check_bounds_suite(p, q, config.s_grid, config.tol, origin));
  out.samples = 1;
  return out;
}

SweepSummary run(SweepConfig const &config, bool parallel)
{
  validate_config(config);
  auto const start = std::chrono::steady_clock::now();

  std::size_t const         shards = config.dims.size() * config.samples_per_dim;
  std::vector<SweepSummary> parts(shards);
  std::exception_ptr        failure;
  long const                n = static_cast<long>(shards);

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long k = 0; k < n; ++k)
  {
    try
    {
      parts[static_cast<std::size_t>(k)] = run_shard(config, static_cast<std::size_t>(k));
    }
    catch (...)
    {
#pragma omp critical(symdiv_sweep_failure)
      if (!failure)
      {
        failure = std::current_exception();
      }
    }
  }
  if (failure)
  {
    std::rethrow_exception(failure);
  }

  SweepSummary summary = SweepSummary::blank();
  for (auto const &part : parts)
  {
    summary.merge(part);
  }
  summary.config     = config;
  summary.seed       = config.seed;
  summary.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace

void validate_config(SweepConfig const &config)
{
  if (config.dims.empty())
  {
    throw Error(ErrorCode::kInvalidConfig, "dims must not be empty");
  }
  for (auto const d : config.dims)
  {
    if (d < 2)
    {
      throw Error(ErrorCode::kInvalidConfig, "every dimension must be >= 2, got " + std::to_string(d));
    }
  }
  if (config.samples_per_dim < 1)
  {
    throw Error(ErrorCode::kInvalidConfig, "samples_per_dim must be >= 1");
  }
  if (!std::isfinite(config.tol) || config.tol < 0.0)
  {
    throw Error(ErrorCode::kInvalidConfig, "tol must be finite and >= 0");
  }
  if (config.s_grid.empty() || config.t_grid.empty())
  {
    throw Error(ErrorCode::kEmptyGrid, "s and t grids must not be empty");
  }
  for (auto const *grid : {&config.s_grid, &config.t_grid})
  {
    for (double const x : *grid)
    {
      if (!std::isfinite(x))
      {
        throw Error(ErrorCode::kInvalidConfig, "grid values must be finite");
      }
    }
  }
}

std::pair<Distribution, Distribution> shard_pair(std::uint64_t seed, std::size_t shard, std::size_t dim)
{
  std::uint64_t const p_seed = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(shard)));
  return {sample_simplex(dim, p_seed), sample_simplex(dim, splitmix64(p_seed))};
}

SweepSummary run_sweep(SweepConfig const &config)
{
  return run(config, true);
}

SweepSummary run_sweep_serial(SweepConfig const &config)
{
  return run(config, false);
}

}  // namespace symdiv
