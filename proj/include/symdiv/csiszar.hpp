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

#include "symdiv/families.hpp"
#include "symdiv/simplex.hpp"

#include <functional>
#include <optional>
#include <string>

namespace symdiv {

/// Sign of k(f): whether f'' decreases or increases across the ratio interval.
enum class Monotonicity
{
  kDecreasing,
  kIncreasing,
  kUnknown,
};

/**
 * A convex, normalized generator f with derivatives through order 2 (order 3 optional).
 *
 * third_sup_at_endpoint marks generators for which |f'''| is known to be monotone on
 * (0, inf); the sup norm over [r, R] is then read off the endpoints. Otherwise it is
 * estimated on a dense geometric grid.
 */
struct Generator
{
  using Fn = std::function<double(double)>;

  std::string  name;
  Fn           f;
  Fn           df;
  Fn           d2f;
  Fn           d3f;
  Monotonicity curvature_monotonicity = Monotonicity::kUnknown;
  bool         third_sup_at_endpoint  = false;

  bool has_order(int order) const noexcept;

  /// Throws MISSING_DERIVATIVE, UNSUPPORTED_ORDER or GENERATOR_DOMAIN.
  double eval(int order, double x) const;
};

/// phi_s. Curvature is decreasing and |phi'''| endpoint-attained for -1 <= s <= 2.
Generator make_phi_generator(FamilyParam s);

/// psi_s. Same structural flags as phi_s on -1 <= s <= 2.
Generator make_psi_generator(FamilyParam s);

Generator make_generator(GeneratorFamilyKind kind, FamilyParam s);

double csiszar_divergence(Generator const &gen, Distribution const &p, Distribution const &q);

struct LinearizedFunctionals
{
  double E;       // sum (p - q) f'(p/q)
  double E_star;  // sum (p - q) f'((p+q)/(2q))
};

LinearizedFunctionals linearized_functionals(Generator const &gen, Distribution const &p,
                                             Distribution const &q);

struct EndpointBounds
{
  double A;  // 1/4 (R - r)(f'(R) - f'(r))
  double B;  // ((R - 1) f(r) + (1 - r) f(R)) / (R - r)
};

EndpointBounds endpoint_bounds(Generator const &gen, RatioBounds const &rb);

struct SmoothnessBounds
{
  double                delta;  // beta - alpha, the spread of f'' over [r, R]
  std::optional<double> f3_sup;
  double                variation;  // f'(R) - f'(r), total variation of f' for convex f
};

SmoothnessBounds smoothness_bounds(Generator const &gen, RatioBounds const &rb);

/// All bound quantities for one pair. Optional fields are absent when r == R.
struct BoundReport
{
  double                value          = 0.0;
  double                linearized     = 0.0;
  double                linearized_mid = 0.0;
  std::optional<double> endpoint_A;
  std::optional<double> endpoint_B;
  std::optional<double> delta;
  std::optional<double> f3_sup;
  std::optional<double> variation;
  double                chi2            = 0.0;
  double                abs_chi3        = 0.0;
  double                total_variation = 0.0;
  std::optional<double> half_E_bound;
  std::optional<double> E_star_bound;
  RatioBounds           ratio_bounds;
};

BoundReport bound_report(Generator const &gen, Distribution const &p, Distribution const &q);

/// Flat JSON object, absent optionals omitted, ratio_bounds as [r, R].
std::string to_json(BoundReport const &report);

struct ComparisonBounds
{
  double m_ratio;
  double M_ratio;
  double x_min;  // where m_ratio is attained
  double x_max;  // where M_ratio is attained
};

inline constexpr int    kExtremumGridPoints = 1024;
inline constexpr double kExtremumTolerance  = 1e-10;

/// Extrema of f1''/f2'' on [r, R]: geometric grid, then golden-section refinement.
/// Throws DEGENERATE_BOUNDS or NONCONVEX_REFERENCE (f2'' <= 0 somewhere on the grid).
ComparisonBounds compare_generators(Generator const &gen1, Generator const &gen2, RatioBounds const &rb);

/// psi_s''(x) / phi_t''(x).
double curvature_ratio(FamilyParam s, FamilyParam t, double x);

}  // namespace symdiv
