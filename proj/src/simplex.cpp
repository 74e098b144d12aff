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

#include "symdiv/simplex.hpp"

#include "symdiv/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace symdiv {

namespace {

double checked_sum(std::span<double const> w)
{
  return std::accumulate(w.begin(), w.end(), 0.0);
}

void scale_to_unit_sum(std::vector<double> &w)
{
  double const total = checked_sum(w);
  for (double &x : w)
  {
    x /= total;
  }
}

}  // namespace

Distribution validate_distribution(std::span<double const> raw, NormalizationPolicy const &policy)
{
  if (raw.size() < 2)
  {
    throw Error(ErrorCode::kDimensionTooSmall,
                "a distribution needs at least 2 weights, got " + std::to_string(raw.size()));
  }
  for (std::size_t i = 0; i < raw.size(); ++i)
  {
    if (!std::isfinite(raw[i]))
    {
      throw Error(ErrorCode::kNonFinite, "weight " + std::to_string(i) + " is not finite");
    }
  }

  std::vector<double> w(raw.begin(), raw.end());
  if (policy.mode == NormalizationPolicy::Mode::kRenormalize)
  {
    double const n = static_cast<double>(w.size());
    if (!(policy.epsilon >= 0.0) || !(policy.epsilon < 1.0 / n))
    {
      throw Error(ErrorCode::kParameterOutOfRange,
                  "smoothing epsilon must lie in [0, 1/n), got " + std::to_string(policy.epsilon));
    }
    for (double &x : w)
    {
      x += policy.epsilon;
    }
  }

  for (std::size_t i = 0; i < w.size(); ++i)
  {
    if (!(w[i] > 0.0))
    {
      throw Error(ErrorCode::kNonpositiveWeight,
                  "weight " + std::to_string(i) + " is not strictly positive");
    }
  }

  double const total = checked_sum(w);
  if (!std::isfinite(total))
  {
    throw Error(ErrorCode::kNonFinite, "weights overflow when summed");
  }
  if (policy.mode == NormalizationPolicy::Mode::kReject &&
      std::abs(total - 1.0) > kNormalizationTolerance)
  {
    throw Error(ErrorCode::kNotNormalized, "weights sum to " + std::to_string(total));
  }
  scale_to_unit_sum(w);
  return Distribution(std::move(w));
}

void require_same_dimension(Distribution const &p, Distribution const &q)
{
  if (p.size() != q.size())
  {
    throw Error(ErrorCode::kDimensionMismatch, "dimensions " + std::to_string(p.size()) +
                                                   " and " + std::to_string(q.size()) + " differ");
  }
}

RatioBounds ratio_bounds(Distribution const &p, Distribution const &q)
{
  require_same_dimension(p, q);
  RatioBounds rb{p[0] / q[0], p[0] / q[0]};
  for (std::size_t i = 1; i < p.size(); ++i)
  {
    double const x = p[i] / q[i];
    rb.r           = std::min(rb.r, x);
    rb.R           = std::max(rb.R, x);
  }
  // Ratios of two normalized vectors always straddle one; rounding can nudge an
  // identical pair to 1 +- ulp, which would otherwise break 0 < r <= 1 <= R.
  rb.r = std::min(rb.r, 1.0);
  rb.R = std::max(rb.R, 1.0);
  return rb;
}

Distribution mixture(Distribution const &p, Distribution const &q)
{
  require_same_dimension(p, q);
  std::vector<double> m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    m[i] = 0.5 * (p[i] + q[i]);
  }
  return Distribution(std::move(m));
}

Distribution sample_simplex(std::size_t n, std::uint64_t seed)
{
  if (n < 2)
  {
    throw Error(ErrorCode::kDimensionTooSmall, "sample_simplex needs n >= 2");
  }
  std::mt19937_64                     rng(seed);
  std::exponential_distribution<double> exponential(1.0);

  std::vector<double> w(n);
  for (double &x : w)
  {
    x = exponential(rng);
  }
  scale_to_unit_sum(w);
  for (double &x : w)
  {
    x = std::max(x, kSamplingFloor);
  }
  scale_to_unit_sum(w);
  return Distribution(std::move(w));
}

}  // namespace symdiv
