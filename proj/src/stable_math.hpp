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

// Cancellation-free building blocks shared by the divergence and family kernels.
// Internal to the library.

#include <cmath>

namespace symdiv::detail {

/// expm1(y) - y, accurate near y = 0.
inline double expm1_excess(double y)
{
  if (std::abs(y) >= 0.5)
  {
    return std::expm1(y) - y;
  }
  double term = 0.5 * y * y;
  double acc  = term;
  for (int k = 3; k < 40; ++k)
  {
    term *= y / k;
    acc += term;
    if (std::abs(term) <= 1e-17 * std::abs(acc))
    {
      break;
    }
  }
  return acc;
}

/// atanh(z) - z, accurate near z = 0.
inline double atanh_excess(double z)
{
  if (std::abs(z) >= 0.5)
  {
    return std::atanh(z) - z;
  }
  double const z2  = z * z;
  double       pw  = z * z2;
  double       acc = pw / 3.0;
  for (int k = 5; k < 80; k += 2)
  {
    pw *= z2;
    double const term = pw / k;
    acc += term;
    if (std::abs(term) <= 1e-17 * std::abs(acc))
    {
      break;
    }
  }
  return acc;
}

/// z = (a - b)/(a + b); the likelihood ratio a/b is (1 + z)/(1 - z) and ln(a/b) = 2 atanh(z).
/// Working in z avoids rounding a/b when a and b are close. Near |z| = 1 the smaller
/// weight is lost in 1 - z, so callers switch to the direct forms past kNearRatio.
inline double half_difference_ratio(double a, double b)
{
  return (a - b) / (a + b);
}

inline constexpr double kNearRatio = 0.5;  // |z| < 1/2  <=>  1/3 < a/b < 3

inline bool near_ratio(double z)
{
  return std::abs(z) < kNearRatio;
}

/**
 * b [(a/b)^s - 1 - s (a/b - 1)], the Cressie-Read summand before the 1/(s(s-1)) factor.
 *
 * With L = ln(a/b) it splits as b (expm1(sL) - sL) + s b (L - (a/b - 1)), and the second
 * bracket equals 2 b (atanh z - z) - (a + b) z^2; all pieces are second order in z.
 */
inline double cressie_read_term(double s, double a, double b)
{
  double const z = half_difference_ratio(a, b);
  if (!near_ratio(z))
  {
    return b * std::expm1(s * std::log(a / b)) - s * (a - b);
  }
  double const L = 2.0 * std::atanh(z);
  return b * expm1_excess(s * L) + s * (2.0 * b * atanh_excess(z) - (a + b) * z * z);
}

}  // namespace symdiv::detail
