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
#include <optional>
#include <string_view>

namespace symdiv {

/// The classical measures. All logarithms are natural.
enum class MeasureKind
{
  kHellinger,       // h = 1/2 sum (sqrt p - sqrt q)^2
  kBhattacharyya,   // B = sum sqrt(p q)
  kTriangular,      // Delta = sum (p-q)^2/(p+q)
  kHarmonic,        // W = sum 2pq/(p+q)
  kSymChi2,         // Psi = sum (p-q)^2 (p+q)/(pq)
  kChi2,            // chi^2(P||Q) = sum (p-q)^2/q, directional
  kKl,              // K(P||Q) = sum p ln(p/q), directional
  kJ,               // J = sum (p-q) ln(p/q)
  kJs,              // I, Jensen-Shannon
  kAg,              // T, arithmetic-geometric
  kDNew,            // d = 1 - sum (sqrt p + sqrt q)/2 sqrt((p+q)/2)
  kTotalVariation,  // V = sum |p-q|
};

inline constexpr std::array<MeasureKind, 12> kAllMeasureKinds = {
    MeasureKind::kHellinger, MeasureKind::kBhattacharyya, MeasureKind::kTriangular,
    MeasureKind::kHarmonic,  MeasureKind::kSymChi2,       MeasureKind::kChi2,
    MeasureKind::kKl,        MeasureKind::kJ,             MeasureKind::kJs,
    MeasureKind::kAg,        MeasureKind::kDNew,          MeasureKind::kTotalVariation};

std::string_view                 to_string(MeasureKind kind) noexcept;
std::optional<MeasureKind>       parse_measure_kind(std::string_view name) noexcept;
bool                             is_symmetric(MeasureKind kind) noexcept;

double classic_divergence(MeasureKind kind, Distribution const &p, Distribution const &q);

/// Vajda's |chi|^m = sum |p-q|^m / q^(m-1), m >= 1.
double vajda_abs_chi(double m, Distribution const &p, Distribution const &q);

struct VajdaUpperBounds
{
  double bound1;  // ((1-r)(R-1)/(R-r)) [(1-r)^(m-1) + (R-1)^(m-1)]
  double bound2;  // ((R-r)/2)^m
};

VajdaUpperBounds vajda_upper_bounds(double m, RatioBounds const &rb);

/// Lower and upper bounds on |chi|^m in terms of the total variation V.
/// The lower bound does not hold in general and is only used diagnostically.
struct VajdaVariationBounds
{
  double lower;  // (1 - r^m)/(1 - r) * V
  double upper;  // (R^m - 1)/(R - 1) * V
};

VajdaVariationBounds vajda_variation_bounds(double m, RatioBounds const &rb, double total_variation);

/// |x|^m with the x = 0 case short-circuited.
double abs_pow(double x, double m);

}  // namespace symdiv
