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

#include "symdiv/csiszar.hpp"

#include "symdiv/divergences.hpp"
#include "symdiv/error.hpp"
#include "symdiv/format.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace symdiv {

namespace {

// Proven range of the closed-form curvature and third-derivative statements.
constexpr double kSmoothLower = -1.0;
constexpr double kSmoothUpper = 2.0;

bool in_smooth_range(double s)
{
  return s >= kSmoothLower && s <= kSmoothUpper;
}

std::string family_name(GeneratorFamilyKind kind, double s)
{
  return std::string{to_string(kind)} + "(s=" + format_number(s) + ")";
}

void require_nondegenerate(RatioBounds const &rb)
{
  if (rb.degenerate())
  {
    throw Error(ErrorCode::kDegenerateBounds, "ratio bounds require r < R");
  }
}

std::vector<double> geometric_grid(double lo, double hi, int points)
{
  std::vector<double> xs(static_cast<std::size_t>(points));
  double const        step = std::log(hi / lo) / (points - 1);
  for (int k = 0; k < points; ++k)
  {
    xs[static_cast<std::size_t>(k)] = lo * std::exp(step * k);
  }
  xs.front() = lo;
  xs.back()  = hi;
  return xs;
}

// Maximizes g on [a, b] to an interval width of tol; returns (x, g(x)).
template <typename G>
std::pair<double, double> golden_max(G const &g, double a, double b, double tol)
{
  double const invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double       c      = b - invphi * (b - a);
  double       d      = a + invphi * (b - a);
  double       gc     = g(c);
  double       gd     = g(d);
  while (b - a > tol)
  {
    if (gc >= gd)
    {
      b  = d;
      d  = c;
      gd = gc;
      c  = b - invphi * (b - a);
      gc = g(c);
    }
    else
    {
      a  = c;
      c  = d;
      gc = gd;
      d  = a + invphi * (b - a);
      gd = g(d);
    }
  }
  double const x = 0.5 * (a + b);
  return {x, g(x)};
}

// Grid extremum followed by golden-section refinement in the neighbouring cells.
// sign = +1 maximizes, -1 minimizes. Returns (x, value).
template <typename G>
std::pair<double, double> extremize(G const &g, std::vector<double> const &xs, std::vector<double> const &vals,
                                    double sign)
{
  std::size_t best = 0;
  for (std::size_t k = 1; k < xs.size(); ++k)
  {
    if (sign * vals[k] > sign * vals[best])
    {
      best = k;
    }
  }
  double const a = xs[best == 0 ? 0 : best - 1];
  double const b = xs[std::min(best + 1, xs.size() - 1)];

  auto const   signed_g = [&](double x) { return sign * g(x); };
  auto const   refined  = golden_max(signed_g, a, b, kExtremumTolerance);
  double const refined_value = sign * refined.second;
  if (sign * refined_value > sign * vals[best])
  {
    return {refined.first, refined_value};
  }
  return {xs[best], vals[best]};
}

Generator family_generator(GeneratorFamilyKind kind, FamilyParam s)
{
  Generator gen;
  gen.name = family_name(kind, s.s);
  gen.f    = [kind, s](double x) { return generator_eval(kind, s, x, 0); };
  gen.df   = [kind, s](double x) { return generator_eval(kind, s, x, 1); };
  gen.d2f  = [kind, s](double x) { return generator_eval(kind, s, x, 2); };
  gen.d3f  = [kind, s](double x) { return generator_eval(kind, s, x, 3); };
  if (in_smooth_range(s.s))
  {
    gen.curvature_monotonicity = Monotonicity::kDecreasing;
    gen.third_sup_at_endpoint  = true;
  }
  return gen;
}

}  // namespace

bool Generator::has_order(int order) const noexcept
{
  switch (order)
  {
  case 0:
    return static_cast<bool>(f);
  case 1:
    return static_cast<bool>(df);
  case 2:
    return static_cast<bool>(d2f);
  case 3:
    return static_cast<bool>(d3f);
  default:
    return false;
  }
}

double Generator::eval(int order, double x) const
{
  if (order < 0 || order > 3)
  {
    throw Error(ErrorCode::kUnsupportedOrder, "generator order must be 0..3");
  }
  if (!has_order(order))
  {
    throw Error(ErrorCode::kMissingDerivative,
                name + " has no order-" + std::to_string(order) + " evaluation");
  }
  Fn const &fn = order == 0 ? f : order == 1 ? df : order == 2 ? d2f : d3f;
  double    y  = 0.0;
  try
  {
    y = fn(x);
  }
  catch (Error const &e)
  {
    throw Error(ErrorCode::kGeneratorDomain, name + ": " + e.what());
  }
  if (!std::isfinite(y))
  {
    throw Error(ErrorCode::kGeneratorDomain, name + " is not finite at x=" + format_number(x));
  }
  return y;
}

Generator make_phi_generator(FamilyParam s)
{
  return family_generator(GeneratorFamilyKind::kPhi, s);
}

Generator make_psi_generator(FamilyParam s)
{
  return family_generator(GeneratorFamilyKind::kPsi, s);
}

Generator make_generator(GeneratorFamilyKind kind, FamilyParam s)
{
  return family_generator(kind, s);
}

double csiszar_divergence(Generator const &gen, Distribution const &p, Distribution const &q)
{
  require_same_dimension(p, q);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    acc += q[i] * gen.eval(0, p[i] / q[i]);
  }
  return acc;
}

LinearizedFunctionals linearized_functionals(Generator const &gen, Distribution const &p,
                                             Distribution const &q)
{
  require_same_dimension(p, q);
  LinearizedFunctionals out{0.0, 0.0};
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    double const diff = p[i] - q[i];
    out.E += diff * gen.eval(1, p[i] / q[i]);
    out.E_star += diff * gen.eval(1, (p[i] + q[i]) / (2.0 * q[i]));
  }
  return out;
}

EndpointBounds endpoint_bounds(Generator const &gen, RatioBounds const &rb)
{
  require_nondegenerate(rb);
  double const width = rb.R - rb.r;
  return {0.25 * width * (gen.eval(1, rb.R) - gen.eval(1, rb.r)),
          ((rb.R - 1.0) * gen.eval(0, rb.r) + (1.0 - rb.r) * gen.eval(0, rb.R)) / width};
}

SmoothnessBounds smoothness_bounds(Generator const &gen, RatioBounds const &rb)
{
  require_nondegenerate(rb);
  SmoothnessBounds out{};
  out.variation = gen.eval(1, rb.R) - gen.eval(1, rb.r);

  double const f2_r = gen.eval(2, rb.r);
  double const f2_R = gen.eval(2, rb.R);
  switch (gen.curvature_monotonicity)
  {
  case Monotonicity::kDecreasing:
    out.delta = f2_r - f2_R;
    break;
  case Monotonicity::kIncreasing:
    out.delta = f2_R - f2_r;
    break;
  case Monotonicity::kUnknown:
  {
    // spread of f'' over the grid plus refinement at both extremes
    auto const          g  = [&](double x) { return gen.eval(2, x); };
    std::vector<double> xs = geometric_grid(rb.r, rb.R, kExtremumGridPoints);
    std::vector<double> vals(xs.size());
    std::transform(xs.begin(), xs.end(), vals.begin(), g);
    out.delta = extremize(g, xs, vals, 1.0).second - extremize(g, xs, vals, -1.0).second;
    break;
  }
  }
  out.delta = std::max(out.delta, 0.0);

  if (gen.has_order(3))
  {
    if (gen.third_sup_at_endpoint)
    {
      out.f3_sup = std::max(std::abs(gen.eval(3, rb.r)), std::abs(gen.eval(3, rb.R)));
    }
    else
    {
      auto const          g  = [&](double x) { return std::abs(gen.eval(3, x)); };
      std::vector<double> xs = geometric_grid(rb.r, rb.R, kExtremumGridPoints);
      std::vector<double> vals(xs.size());
      std::transform(xs.begin(), xs.end(), vals.begin(), g);
      out.f3_sup = extremize(g, xs, vals, 1.0).second;
    }
  }
  return out;
}

BoundReport bound_report(Generator const &gen, Distribution const &p, Distribution const &q)
{
  require_same_dimension(p, q);
  BoundReport rep;
  rep.ratio_bounds = ratio_bounds(p, q);
  rep.value        = csiszar_divergence(gen, p, q);
  auto const lin   = linearized_functionals(gen, p, q);
  rep.linearized     = lin.E;
  rep.linearized_mid = lin.E_star;
  rep.chi2            = classic_divergence(MeasureKind::kChi2, p, q);
  rep.abs_chi3        = vajda_abs_chi(3.0, p, q);
  rep.total_variation = classic_divergence(MeasureKind::kTotalVariation, p, q);
  if (rep.ratio_bounds.degenerate())
  {
    return rep;
  }

  auto const ends   = endpoint_bounds(gen, rep.ratio_bounds);
  auto const smooth = smoothness_bounds(gen, rep.ratio_bounds);
  rep.endpoint_A    = ends.A;
  rep.endpoint_B    = ends.B;
  rep.delta         = smooth.delta;
  rep.f3_sup        = smooth.f3_sup;
  rep.variation     = smooth.variation;

  double half_e = std::min(smooth.delta * rep.chi2 / 8.0, smooth.variation * rep.total_variation);
  double e_star = std::min(smooth.delta * rep.chi2 / 8.0, 0.5 * smooth.variation * rep.total_variation);
  if (smooth.f3_sup)
  {
    half_e = std::min(half_e, *smooth.f3_sup * rep.abs_chi3 / 12.0);
    e_star = std::min(e_star, *smooth.f3_sup * rep.abs_chi3 / 24.0);
  }
  rep.half_E_bound = half_e;
  rep.E_star_bound = e_star;
  return rep;
}

std::string to_json(BoundReport const &report)
{
  nlohmann::ordered_json j;
  auto const put = [&j](char const *key, std::optional<double> const &v) {
    if (v)
    {
      j[key] = round_output(*v);
    }
  };
  put("value", report.value);
  put("linearized", report.linearized);
  put("linearized_mid", report.linearized_mid);
  put("endpoint_A", report.endpoint_A);
  put("endpoint_B", report.endpoint_B);
  put("delta", report.delta);
  put("f3_sup", report.f3_sup);
  put("variation", report.variation);
  put("chi2", report.chi2);
  put("abs_chi3", report.abs_chi3);
  put("total_variation", report.total_variation);
  put("half_E_bound", report.half_E_bound);
  put("E_star_bound", report.E_star_bound);
  j["ratio_bounds"] = {round_output(report.ratio_bounds.r), round_output(report.ratio_bounds.R)};
  return j.dump();
}

ComparisonBounds compare_generators(Generator const &gen1, Generator const &gen2, RatioBounds const &rb)
{
  require_nondegenerate(rb);
  std::vector<double> const xs = geometric_grid(rb.r, rb.R, kExtremumGridPoints);
  std::vector<double>       vals(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k)
  {
    double const denom = gen2.eval(2, xs[k]);
    if (!(denom > 0.0))
    {
      throw Error(ErrorCode::kNonconvexReference,
                  gen2.name + " has f'' <= 0 at x=" + format_number(xs[k]));
    }
    vals[k] = gen1.eval(2, xs[k]) / denom;
  }
  auto const ratio = [&](double x) { return gen1.eval(2, x) / gen2.eval(2, x); };
  auto const lo    = extremize(ratio, xs, vals, -1.0);
  auto const hi    = extremize(ratio, xs, vals, 1.0);
  return {lo.second, hi.second, lo.first, hi.first};
}

double curvature_ratio(FamilyParam s, FamilyParam t, double x)
{
  return generator_eval(GeneratorFamilyKind::kPsi, s, x, 2) / generator_eval(GeneratorFamilyKind::kPhi, t, x, 2);
}

}  // namespace symdiv
