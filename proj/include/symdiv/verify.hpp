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
#pragma once

#include "symdiv/simplex.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symdiv {

inline constexpr double kDefaultSlack = 1e-10;

enum class Severity
{
  kAssert,
  kDiagnostic,  // reported, never fails a sweep
};

std::string_view to_string(Severity severity) noexcept;

/// One registered claim. parameter_domain is human-readable; the predicate lives in the checker.
struct InequalityCase
{
  std::string_view id;
  std::string_view description;
  std::string_view parameter_domain;
  Severity         severity;
};

/// All claims in a fixed order. Ids are unique.
std::span<InequalityCase const> inequality_registry() noexcept;

std::optional<std::size_t> registry_index(std::string_view id) noexcept;

/// Replayable location of the worst evaluation of a case.
struct Witness
{
  std::vector<double>   p;
  std::vector<double>   q;
  std::optional<double> s;
  std::optional<double> t;
  std::size_t           dim    = 0;
  std::size_t           sample = 0;
};

struct CaseResult
{
  std::string_view       id;
  Severity               severity    = Severity::kAssert;
  std::size_t            evaluations = 0;
  std::size_t            violations  = 0;
  std::size_t            skipped     = 0;  // evaluations outside the claim's parameter domain
  std::optional<double>  max_violation;    // max of (L - R)/max(1,|R|) over evaluations
  std::optional<Witness> witness;          // at max_violation

  bool pass() const noexcept
  {
    return violations == 0;
  }
};

struct SweepConfig
{
  std::vector<std::size_t> dims            = {2, 3, 5, 10};
  std::size_t              samples_per_dim = 250;
  std::uint64_t            seed            = 7;
  std::vector<double>      s_grid          = {-2, -1.5, -1, -0.5, 0, 0.5, 1, 1.5, 2, 3};
  std::vector<double>      t_grid          = {-2, -1.5, -1, -0.5, 0, 0.5, 1, 1.5, 2, 3};
  double                   tol             = kDefaultSlack;
};

/// Per-case tallies in registry order, plus run metadata once produced by run_sweep.
struct SweepSummary
{
  std::optional<SweepConfig> config;
  std::vector<CaseResult>    cases;
  std::size_t                samples = 0;
  std::uint64_t              seed    = 0;
  std::optional<double>      elapsed_ms;

  /// Empty tallies for every registered case.
  static SweepSummary blank();

  CaseResult const &at(std::string_view id) const;
  std::size_t       assert_failures() const noexcept;

  /// Ordered merge: counts add; the witness of the strictly larger violation wins,
  /// so merging shards in index order is deterministic.
  void merge(SweepSummary const &other);
};

/// Where the pair came from; copied into witnesses.
struct PairOrigin
{
  std::size_t dim    = 0;
  std::size_t sample = 0;
};

/// The seven-term chain Delta/4 <= I <= h <= 4d <= J/8 <= T <= Psi/16 and the fixed-measure claims.
struct ChainReport
{
  std::array<double, 7> values{};
  bool                  pass = true;
  SweepSummary          fragment;
};

ChainReport check_chain(Distribution const &p, Distribution const &q, double tol = kDefaultSlack,
                        PairOrigin origin = {});

/// Claims indexed by s or t. Throws EMPTY_GRID.
SweepSummary check_parametric(Distribution const &p, Distribution const &q, std::span<double const> s_grid,
                              std::span<double const> t_grid, double tol = kDefaultSlack,
                              PairOrigin origin = {});

/// Bound theorems for phi_s/psi_s, Vajda bounds and the (r, R) inequality. Skipped for P == Q.
SweepSummary check_bounds_suite(Distribution const &p, Distribution const &q, std::span<double const> s_grid,
                                double tol = kDefaultSlack, PairOrigin origin = {});

/// Throws INVALID_CONFIG or EMPTY_GRID.
void validate_config(SweepConfig const &config);

/// Pair used by shard k of a sweep; depends only on (seed, k, dim).
std::pair<Distribution, Distribution> shard_pair(std::uint64_t seed, std::size_t shard, std::size_t dim);

/// Deterministic sweep, shards evaluated in parallel with OpenMP.
SweepSummary run_sweep(SweepConfig const &config);

/// Reference implementation: same shards, one thread.
SweepSummary run_sweep_serial(SweepConfig const &config);

std::string to_json(SweepSummary const &summary, bool include_timing = false);

}  // namespace symdiv
