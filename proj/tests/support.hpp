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

#include <cmath>
#include <initializer_list>
#include <vector>

namespace symdiv::testing {

inline Distribution dist(std::initializer_list<double> w)
{
  return validate_distribution(std::vector<double>(w));
}

/// The two-point reference pair used throughout the oracle tables.
inline Distribution ref_p()
{
  return dist({0.6, 0.4});
}

inline Distribution ref_q()
{
  return dist({0.4, 0.6});
}

inline bool rel_close(double a, double b, double rel)
{
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

/// Seeded pairs cycling through the given dimensions.
struct SampledPair
{
  Distribution p;
  Distribution q;
  std::size_t  dim;
};

inline std::vector<SampledPair> sampled_pairs(std::size_t count, std::initializer_list<std::size_t> dims,
                                              std::uint64_t seed = 2024)
{
  std::vector<std::size_t> ds(dims);
  std::vector<SampledPair> out;
  for (std::size_t k = 0; k < count; ++k)
  {
    std::size_t const n = ds[k % ds.size()];
    out.push_back({sample_simplex(n, seed + 2 * k), sample_simplex(n, seed + 2 * k + 1), n});
  }
  return out;
}

}  // namespace symdiv::testing

#include "symdiv/error.hpp"

/// Asserts that stmt throws symdiv::Error carrying the given code.
#define EXPECT_ERROR_CODE(stmt, expected_code)                                 \
  do                                                                           \
  {                                                                            \
    try                                                                        \
    {                                                                          \
      stmt;                                                                    \
      ADD_FAILURE() << #stmt " did not throw";                                 \
    }                                                                          \
    catch (::symdiv::Error const &e_)                                          \
    {                                                                          \
      EXPECT_EQ(e_.code(), expected_code) << e_.what();                        \
    }                                                                          \
  } while (false)
