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

#include "support.hpp"

#include "symdiv/verify.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <fstream>
#include <set>
#include <string>

namespace symdiv {
namespace {

using testing::ref_p;
using testing::ref_q;

std::vector<double> const kGrid = {-2, -1, 0, 0.5, 1, 2};

TEST(Registry, MatchesManifest)
{
  std::ifstream            in(std::string{SYMDIV_TEST_DATA_DIR} + "/registry_manifest.txt");
  std::vector<std::string> manifest;
  for (std::string line; std::getline(in, line);)
  {
    if (!line.empty())
    {
      manifest.push_back(line);
    }
  }
  std::vector<std::string> ids;
  for (auto const &c : inequality_registry())
  {
    ids.emplace_back(c.id);
  }
  EXPECT_EQ(ids, manifest);
}

TEST(Registry, UniqueIdsAndSeverities)
{
  std::set<std::string_view> seen;
  for (auto const &c : inequality_registry())
  {
    EXPECT_TRUE(seen.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.description.empty());
    EXPECT_EQ(c.severity == Severity::kDiagnostic, c.id == "EQ53_LOWER") << c.id;
    EXPECT_EQ(registry_index(c.id).value(), seen.size() - 1);
  }
  EXPECT_FALSE(registry_index("EQ999"));
}

TEST(Chain, ReferencePair)
{
  auto const rep = check_chain(ref_p(), ref_q());
  EXPECT_TRUE(rep.pass);
  std::array<double, 7> const expected = {0.02,     0.0201355, 0.0202041, 0.0202554,
                                          0.0202733, 0.0204110, 0.0208333};
  for (std::size_t i = 0; i < 7; ++i)
  {
    EXPECT_NEAR(rep.values[i], expected[i], 1e-7) << i;
  }
  EXPECT_EQ(rep.fragment.assert_failures(), 0u);
  EXPECT_EQ(rep.fragment.at("EQ183").evaluations, 6u);
}

TEST(Chain, IdenticalPairIsAllZeros)
{
  auto const p   = testing::dist({0.2, 0.8});
  auto const rep = check_chain(p, p);
  EXPECT_TRUE(rep.pass);
  for (double v : rep.values)
  {
    EXPECT_NEAR(v, 0.0, 1e-14);  // d is 1 - sum(...), zero only to rounding
  }
}

TEST(Chain, RandomPairs)
{
  for (auto const &[p, q, n] : testing::sampled_pairs(50, {7}))
  {
    auto const rep = check_chain(p, q);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.fragment.assert_failures(), 0u);
    (void)n;
  }
}

TEST(Parametric, ReferencePair)
{
  auto const frag = check_parametric(ref_p(), ref_q(), kGrid, kGrid);
  EXPECT_EQ(frag.assert_failures(), 0u);
  EXPECT_EQ(frag.at("EQ170").evaluations, kGrid.size());
  // s = 1/2 is the only grid point in [1/2, 1] below 1, plus s = 1
  EXPECT_EQ(frag.at("EQ165_LOWER").evaluations, 2u);
  EXPECT_EQ(frag.at("EQ165_LOWER").skipped, kGrid.size() - 2);
  EXPECT_EQ(frag.at("EQ153").skipped, 0u);
}

TEST(Parametric, IdenticalPair)
{
  auto const p    = testing::dist({0.25, 0.25, 0.5});
  auto const frag = check_parametric(p, p, kGrid, kGrid);
  EXPECT_EQ(frag.assert_failures(), 0u);
}

TEST(Parametric, EmptyGrid)
{
  EXPECT_ERROR_CODE(check_parametric(ref_p(), ref_q(), {}, kGrid), ErrorCode::kEmptyGrid);
  EXPECT_ERROR_CODE(check_parametric(ref_p(), ref_q(), kGrid, {}), ErrorCode::kEmptyGrid);
  EXPECT_ERROR_CODE(check_bounds_suite(ref_p(), ref_q(), {}), ErrorCode::kEmptyGrid);
}

TEST(BoundsSuite, ReferencePair)
{
  std::vector<double> const grid = {-1, 0, 0.5, 1, 2};
  auto const                frag = check_bounds_suite(ref_p(), ref_q(), grid);
  EXPECT_EQ(frag.assert_failures(), 0u);
  EXPECT_EQ(frag.at("EQ80").evaluations, grid.size());
  // two-point pairs put the Vajda sum exactly on the first bound
  EXPECT_NEAR(*frag.at("EQ52").max_violation, 0.0, 1e-15);
  EXPECT_NEAR(*frag.at("EQ54").max_violation, 0.0, 1e-15);
}

TEST(BoundsSuite, IdenticalPairIsSkipped)
{
  auto const p    = testing::dist({0.5, 0.5});
  auto const frag = check_bounds_suite(p, p, kGrid);
  EXPECT_EQ(frag.at("EQ32").evaluations, 0u);
  EXPECT_EQ(frag.at("EQ32").skipped, 1u);
  EXPECT_EQ(frag.at("EQ78").skipped, kGrid.size());
  EXPECT_EQ(frag.assert_failures(), 0u);
}

SweepConfig small_config()
{
  SweepConfig c;
  c.dims            = {2, 3, 5};
  c.samples_per_dim = 20;
  c.seed            = 11;
  return c;
}

TEST(Sweep, DeterministicAndThreadIndependent)
{
  auto const config   = small_config();
  auto const parallel = to_json(run_sweep(config));
  EXPECT_EQ(parallel, to_json(run_sweep(config)));
  EXPECT_EQ(parallel, to_json(run_sweep_serial(config)));
  auto other = config;
  other.seed = 12;
  EXPECT_NE(parallel, to_json(run_sweep(other)));
}

TEST(Sweep, SummaryContents)
{
  auto const summary = run_sweep(small_config());
  EXPECT_EQ(summary.samples, 60u);
  EXPECT_EQ(summary.seed, 11u);
  EXPECT_EQ(summary.assert_failures(), 0u);
  // the diagnostic case is expected to fail without failing the sweep
  EXPECT_FALSE(summary.at("EQ53_LOWER").pass());
  EXPECT_GT(summary.at("EQ129_LOWER").skipped, 0u);

  auto const j = nlohmann::json::parse(to_json(summary));
  EXPECT_EQ(j["samples"], 60);
  EXPECT_EQ(j["assert_failures"], 0);
  EXPECT_FALSE(j.contains("elapsed_ms"));
  EXPECT_TRUE(nlohmann::json::parse(to_json(summary, true)).contains("elapsed_ms"));
  EXPECT_EQ(j["cases"].size(), inequality_registry().size());
  for (auto const &c : j["cases"])
  {
    EXPECT_TRUE(c.contains("id"));
    EXPECT_TRUE(c.contains("pass"));
    EXPECT_TRUE(c.contains("max_violation"));
    EXPECT_EQ(c.contains("witness"), !c["pass"].get<bool>());
  }
  auto const &diag = j["cases"][*registry_index("EQ53_LOWER")];
  EXPECT_EQ(diag["severity"], "DIAGNOSTIC");
  EXPECT_GT(diag["violation_rate"].get<double>(), 0.0);
  EXPECT_EQ(diag["witness"]["p"].size(), diag["witness"]["dim"].get<std::size_t>());
  EXPECT_EQ(j["config"]["samples_per_dim"], 20);
}

TEST(Sweep, WitnessReplays)
{
  auto const  summary = run_sweep(small_config());
  auto const &c       = summary.at("EQ53_LOWER");
  ASSERT_TRUE(c.witness);
  auto const p     = validate_distribution(c.witness->p);
  auto const q     = validate_distribution(c.witness->q);
  auto const again = check_bounds_suite(p, q, small_config().s_grid);
  EXPECT_NEAR(*again.at("EQ53_LOWER").max_violation, *c.max_violation, 1e-12);
}

TEST(Sweep, ConfigValidation)
{
  auto c            = small_config();
  c.samples_per_dim = 0;
  EXPECT_ERROR_CODE(run_sweep(c), ErrorCode::kInvalidConfig);
  c      = small_config();
  c.dims = {};
  EXPECT_ERROR_CODE(run_sweep(c), ErrorCode::kInvalidConfig);
  c.dims = {1};
  EXPECT_ERROR_CODE(run_sweep(c), ErrorCode::kInvalidConfig);
  c     = small_config();
  c.tol = -1;
  EXPECT_ERROR_CODE(run_sweep(c), ErrorCode::kInvalidConfig);
  c        = small_config();
  c.t_grid = {};
  EXPECT_ERROR_CODE(run_sweep(c), ErrorCode::kEmptyGrid);
}

TEST(Summary, MergeKeepsFirstOfEqualViolations)
{
  auto a = SweepSummary::blank();
  auto b = SweepSummary::blank();
  auto &ca         = a.cases[0];
  ca.evaluations   = 1;
  ca.max_violation = -0.5;
  ca.witness       = Witness{{0.5, 0.5}, {0.5, 0.5}, std::nullopt, std::nullopt, 2, 0};
  auto &cb         = b.cases[0];
  cb.evaluations   = 2;
  cb.violations    = 1;
  cb.max_violation = -0.5;
  cb.witness       = Witness{{0.5, 0.5}, {0.5, 0.5}, std::nullopt, std::nullopt, 2, 1};
  a.merge(b);
  EXPECT_EQ(a.cases[0].evaluations, 3u);
  EXPECT_EQ(a.cases[0].witness->sample, 0u);
  EXPECT_EQ(a.assert_failures(), 1u);
  cb.max_violation = 0.25;
  a.merge(b);
  EXPECT_EQ(a.cases[0].witness->sample, 1u);
}

}  // namespace
}  // namespace symdiv
