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

#include <string_view>

namespace symdiv {

inline constexpr double kLimitTolerance = 1e-7;

/// Family order s. Within limit_tolerance of 0 or 1 the closed-form limit branch is used.
struct FamilyParam
{
  double s               = 0.5;
  double limit_tolerance = kLimitTolerance;

  bool at_zero() const noexcept;
  bool at_one() const noexcept;
};

enum class GeneratorFamilyKind
{
  kPhi,  // generator of the J-divergence of type s
  kPsi,  // generator of the unified AG/JS divergence of type s
};

std::string_view to_string(GeneratorFamilyKind kind) noexcept;

/// Cressie-Read relative information of type s:
///   [s(s-1)]^{-1} [sum p^s q^{1-s} - 1],  K(Q||P) at s = 0,  K(P||Q) at s = 1.
double relative_information_type_s(FamilyParam s, Distribution const &p, Distribution const &q);

/// J-divergence of type s, Phi_s(P||Q) + Phi_s(Q||P); equals J at s in {0, 1}.
double j_divergence_type_s(FamilyParam s, Distribution const &p, Distribution const &q);

/// Unified AG/JS divergence of type s, 1/2 [Phi_s(M||P) + Phi_s(M||Q)] with M = (P+Q)/2.
/// Equals the Jensen-Shannon divergence at s = 0 and the AG divergence at s = 1.
double ag_js_divergence_type_s(FamilyParam s, Distribution const &p, Distribution const &q);

/// Order-th derivative (0..3) of phi_s or psi_s at x > 0.
/// Throws NONPOSITIVE_ARGUMENT or UNSUPPORTED_ORDER.
double generator_eval(GeneratorFamilyKind family, FamilyParam s, double x, int order);

/// x^a for x > 0, computed as exp(a ln x).
inline double pow_pos(double x, double a);

}  // namespace symdiv

#include <cmath>

inline double symdiv::pow_pos(double x, double a)
{
  return std::exp(a * std::log(x));
}
