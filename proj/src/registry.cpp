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

#include <algorithm>
#include <array>

namespace symdiv {

namespace {

constexpr auto A = Severity::kAssert;

constexpr std::array kRegistry = {
    InequalityCase{"EQ32", "(R-1)(1-r) <= (R-r)^2/4", "all pairs with r < R", A},
    InequalityCase{"EQ52", "|chi|^m <= bound1 <= bound2", "m in {1,2,3}", A},
    InequalityCase{"EQ53_LOWER", "(1-r^m)/(1-r) V <= |chi|^m", "m in {1,2,3}", Severity::kDiagnostic},
    InequalityCase{"EQ53_UPPER", "|chi|^m <= (R^m-1)/(R-1) V", "m in {1,2,3}", A},
    InequalityCase{"EQ54", "chi^2 <= (R-1)(1-r) <= (R-r)^2/4", "all pairs with r < R", A},
    InequalityCase{"EQ55", "|chi|^3 <= (R-1)(1-r)[(1-r)^2+(R-1)^2]/(R-r) <= (R-r)^3/8",
                   "all pairs with r < R", A},
    InequalityCase{"EQ56", "V <= 2(R-1)(1-r)/(R-r) <= (R-r)/2", "all pairs with r < R", A},
    InequalityCase{"EQ77", "h <= J/8 <= Psi/16", "all pairs", A},
    InequalityCase{"EQ78", "V_s <= E <= A for phi_s", "all s, r < R", A},
    InequalityCase{"EQ79", "V_s <= B <= A for phi_s", "all s, r < R", A},
    InequalityCase{"EQ80", "|V_s - E/2| <= min{delta chi^2/8, |phi'''| |chi|^3/12, var V}", "-1 <= s <= 2, r < R",
                   A},
    InequalityCase{"EQ81", "|V_s - E*| <= min{delta chi^2/8, |phi'''| |chi|^3/24, var V/2}",
                   "-1 <= s <= 2, r < R", A},
    InequalityCase{"EQ104", "Delta/4 <= I <= 4d <= T <= Psi/16", "all pairs", A},
    InequalityCase{"EQ105", "0 <= W_s <= E <= A for psi_s", "all s, r < R", A},
    InequalityCase{"EQ106", "0 <= W_s <= B <= A for psi_s", "all s, r < R", A},
    InequalityCase{"EQ107", "|W_s - E/2| <= min{delta chi^2/8, |psi'''| |chi|^3/12, var V}", "-1 <= s <= 2, r < R",
                   A},
    InequalityCase{"EQ108", "|W_s - E*| <= min{delta chi^2/8, |psi'''| |chi|^3/24, var V/2}",
                   "-1 <= s <= 2, r < R", A},
    InequalityCase{"EQ129_UPPER", "W_s <= J/8", "-2 <= s <= 0", A},
    InequalityCase{"EQ129_LOWER", "W_s >= J/8", "s >= 1", A},
    InequalityCase{"EQ130", "I <= J/8 <= T", "all pairs", A},
    InequalityCase{"EQ136_UPPER", "W_s <= h", "-2 <= s <= 0", A},
    InequalityCase{"EQ136_LOWER", "W_s >= h", "s >= 1/2", A},
    InequalityCase{"EQ137", "I <= h <= T", "all pairs", A},
    InequalityCase{"EQ138", "Delta/4 <= I <= h <= J/8 <= T <= Psi/16", "all pairs", A},
    InequalityCase{"EQ139", "Delta/4 <= I <= h <= J/8 <= T <= J/4", "all pairs", A},
    InequalityCase{"EQ140", "Delta/4 <= h <= Delta/2", "all pairs", A},
    InequalityCase{"EQ141", "Delta/4 <= I <= h <= Delta/2", "all pairs", A},
    InequalityCase{"EQ142_UPPER", "W_s <= Psi/16", "-1 <= s <= 2", A},
    InequalityCase{"EQ142_LOWER", "W_s >= Psi/16", "s >= 2", A},
    InequalityCase{"EQ143_UPPER", "V_t <= Psi/2", "1/2 <= t <= 2", A},
    InequalityCase{"EQ143_LOWER", "V_t >= Psi/2", "t >= 2 or t <= -1", A},
    InequalityCase{"EQ148", "Delta <= V_t/2", "t >= 0 or t <= -1", A},
    InequalityCase{"EQ153", "I <= V_t/8", "all t", A},
    InequalityCase{"EQ159_UPPER", "T <= V_t/8", "t >= 2 or t <= -1", A},
    InequalityCase{"EQ159_LOWER", "T >= V_t/8", "0 <= t <= 1", A},
    InequalityCase{"EQ165_UPPER", "W_s <= V_s/8", "s >= 2 or s <= -1", A},
    InequalityCase{"EQ165_LOWER", "W_s >= V_s/8", "1/2 <= s <= 1", A},
    InequalityCase{"EQ170", "4 W_s <= V_s", "all s", A},
    InequalityCase{"EQ171", "V_s/8 <= W_s <= V_s/4", "1/2 <= s <= 1", A},
    InequalityCase{"EQ172", "h/4 <= d <= h/2", "all pairs", A},
    InequalityCase{"EQ182", "4d <= J/8", "all pairs", A},
    InequalityCase{"EQ183", "Delta/4 <= I <= h <= 4d <= J/8 <= T <= Psi/16", "all pairs", A},
    InequalityCase{"PROP42_MONO", "V_s non-increasing on s <= 1/2, non-decreasing on s >= 1/2",
                   "adjacent grid points on the same side of 1/2", A},
    InequalityCase{"PROP44_MONO", "W_s non-decreasing on s >= -1", "adjacent grid points >= -1", A},
};

}  // namespace

std::string_view to_string(Severity severity) noexcept
{
  return severity == Severity::kAssert ? "ASSERT" : "DIAGNOSTIC";
}

std::span<InequalityCase const> inequality_registry() noexcept
{
  return kRegistry;
}

std::optional<std::size_t> registry_index(std::string_view id) noexcept
{
  auto const it = std::find_if(kRegistry.begin(), kRegistry.end(), [id](auto const &c) { return c.id == id; });
  if (it == kRegistry.end())
  {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - kRegistry.begin());
}

}  // namespace symdiv
