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

namespace symdiv {

inline constexpr double kMeanBranchTolerance = 1e-9;

/// p-logarithmic power mean query. raised = false asks for L_p(a, b), raised = true for
/// L_p^p(a, b) (which is 1 at p = 0 and (ln b - ln a)/(b - a) at p = -1).
struct MeanQuery
{
  double p      = 1.0;
  double a      = 1.0;
  double b      = 1.0;
  bool   raised = false;
};

/// Stolarsky log-power mean. a == b returns the limit (a, or a^p when raised).
/// Throws NONPOSITIVE_ARGUMENT unless a, b > 0.
double log_power_mean(MeanQuery const &q);

/// Shorthand for log_power_mean({p, a, b, true}), the form used by the bound closed forms.
double log_power_mean_raised(double p, double a, double b);

}  // namespace symdiv
