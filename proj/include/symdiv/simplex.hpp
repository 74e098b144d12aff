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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace symdiv {

inline constexpr double kNormalizationTolerance = 1e-9;
inline constexpr double kSamplingFloor          = 1e-6;

struct NormalizationPolicy
{
  enum class Mode
  {
    kReject,
    kRenormalize,
  };

  Mode   mode    = Mode::kReject;
  double epsilon = 0.0;  // additive smoothing, RENORMALIZE only; must satisfy 0 <= epsilon < 1/n
};

/**
 * A point of the open probability simplex: n >= 2 strictly positive, finite weights
 * summing to one.
 *
 * Instances can only be obtained through validate_distribution(), mixture() or
 * sample_simplex(), so holding a Distribution is proof of the invariants.
 */
class Distribution
{
public:
  std::size_t size() const noexcept
  {
    return weights_.size();
  }
  double operator[](std::size_t i) const noexcept
  {
    return weights_[i];
  }
  std::span<double const> weights() const noexcept
  {
    return weights_;
  }

  bool operator==(Distribution const &) const = default;

private:
  explicit Distribution(std::vector<double> weights)
    : weights_(std::move(weights))
  {}

  std::vector<double> weights_;

  friend Distribution validate_distribution(std::span<double const>, NormalizationPolicy const &);
  friend Distribution mixture(Distribution const &, Distribution const &);
  friend Distribution sample_simplex(std::size_t, std::uint64_t);
};

/// Extreme likelihood ratios r = min p_i/q_i and R = max p_i/q_i.
struct RatioBounds
{
  double r = 1.0;
  double R = 1.0;

  bool degenerate() const noexcept
  {
    return r == R;
  }
};

/**
 * Checks a raw weight vector against the open-simplex definition.
 *
 * REJECT: any weight <= 0 or a sum further than kNormalizationTolerance from one is an
 * error; accepted vectors are divided by their sum so they are normalized to rounding.
 * RENORMALIZE: epsilon is added to every entry, then the vector is scaled to unit sum.
 *
 * Throws Error with NONPOSITIVE_WEIGHT, NOT_NORMALIZED, NON_FINITE, DIMENSION_TOO_SMALL
 * or PARAMETER_OUT_OF_RANGE (bad epsilon).
 */
Distribution validate_distribution(std::span<double const> raw, NormalizationPolicy const &policy = {});

RatioBounds ratio_bounds(Distribution const &p, Distribution const &q);

/// Midpoint (P+Q)/2.
Distribution mixture(Distribution const &p, Distribution const &q);

/// Uniform draw from the simplex (normalized exponentials), floored at kSamplingFloor and
/// renormalized. Deterministic in seed.
Distribution sample_simplex(std::size_t n, std::uint64_t seed);

/// Throws DIMENSION_MISMATCH unless p and q have the same size.
void require_same_dimension(Distribution const &p, Distribution const &q);

}  // namespace symdiv
