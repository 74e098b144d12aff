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

#include "symdiv/means.hpp"

#include "symdiv/error.hpp"

#include <cmath>

namespace symdiv {

namespace {

// L_p^p for a != b. With k = ln(b/a):
//   (b^{p+1} - a^{p+1}) / ((p+1)(b-a)) = a^p expm1((p+1)k) / ((p+1) expm1(k))
double raised_generic(double p, double a, double b)
{
  double const k = std::log(b / a);
  return std::exp(p * std::log(a)) * std::expm1((p + 1.0) * k) / ((p + 1.0) * std::expm1(k));
}

}  // namespace

double log_power_mean(MeanQuery const &q)
{
  if (!(q.a > 0.0) || !(q.b > 0.0))
  {
    throw Error(ErrorCode::kNonpositiveArgument, "log-power mean needs a, b > 0");
  }
  double const p = q.p;
  if (q.a == q.b)
  {
    return q.raised ? std::exp(p * std::log(q.a)) : q.a;
  }

  if (std::abs(p + 1.0) <= kMeanBranchTolerance)
  {
    double const raised = (std::log(q.b) - std::log(q.a)) / (q.b - q.a);
    return q.raised ? raised : 1.0 / raised;
  }
  if (std::abs(p) <= kMeanBranchTolerance)
  {
    if (q.raised)
    {
      return 1.0;
    }
    // identric mean e^{-1} (b^b / a^a)^{1/(b-a)}
    return std::exp((q.b * std::log(q.b) - q.a * std::log(q.a)) / (q.b - q.a) - 1.0);
  }

  double const raised = raised_generic(p, q.a, q.b);
  return q.raised ? raised : std::exp(std::log(raised) / p);
}

double log_power_mean_raised(double p, double a, double b)
{
  return log_power_mean({p, a, b, true});
}

}  // namespace symdiv
