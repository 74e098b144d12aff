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

#include "symdiv/divergences.hpp"

#include "symdiv/error.hpp"
#include "stable_math.hpp"

#include <cmath>
#include <string>

namespace symdiv {

namespace {

struct NamedKind
{
  MeasureKind      kind;
  std::string_view name;
};

constexpr std::array<NamedKind, 12> kNames = {{
    {MeasureKind::kHellinger, "HELLINGER"},
    {MeasureKind::kBhattacharyya, "BHATTACHARYYA"},
    {MeasureKind::kTriangular, "TRIANGULAR"},
    {MeasureKind::kHarmonic, "HARMONIC"},
    {MeasureKind::kSymChi2, "SYM_CHI2"},
    {MeasureKind::kChi2, "CHI2"},
    {MeasureKind::kKl, "KL"},
    {MeasureKind::kJ, "J"},
    {MeasureKind::kJs, "JS"},
    {MeasureKind::kAg, "AG"},
    {MeasureKind::kDNew, "D_NEW"},
    {MeasureKind::kTotalVariation, "TOTAL_VARIATION"},
}};

// Each kind is a sum of per-coordinate terms.
template <typename Term>
double sum_terms(Distribution const &p, Distribution const &q, Term term)
{
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    acc += term(p[i], q[i]);
  }
  return acc;
}

void require_nondegenerate(RatioBounds const &rb)
{
  if (rb.degenerate())
  {
    throw Error(ErrorCode::kDegenerateBounds, "bounds need r != R (P and Q are identical)");
  }
}

void require_vajda_order(double m)
{
  if (!(m >= 1.0) || !std::isfinite(m))
  {
    throw Error(ErrorCode::kParameterOutOfRange, "Vajda order m must be >= 1");
  }
}

}  // namespace

std::string_view to_string(MeasureKind kind) noexcept
{
  for (auto const &n : kNames)
  {
    if (n.kind == kind)
    {
      return n.name;
    }
  }
  return "UNKNOWN";
}

std::optional<MeasureKind> parse_measure_kind(std::string_view name) noexcept
{
  for (auto const &n : kNames)
  {
    if (n.name == name)
    {
      return n.kind;
    }
  }
  return std::nullopt;
}

bool is_symmetric(MeasureKind kind) noexcept
{
  return kind != MeasureKind::kChi2 && kind != MeasureKind::kKl;
}

double abs_pow(double x, double m)
{
  double const a = std::abs(x);
  if (a == 0.0)
  {
    return 0.0;
  }
  if (m == std::floor(m) && std::abs(m) <= 64.0)
  {
    return std::pow(a, m);
  }
  return std::exp(m * std::log(a));
}

double classic_divergence(MeasureKind kind, Distribution const &p, Distribution const &q)
{
  require_same_dimension(p, q);
  switch (kind)
  {
  case MeasureKind::kHellinger:
    return 0.5 * sum_terms(p, q, [](double a, double b) {
             double const d = std::sqrt(a) - std::sqrt(b);
             return d * d;
           });
  case MeasureKind::kBhattacharyya:
    return sum_terms(p, q, [](double a, double b) { return std::sqrt(a * b); });
  case MeasureKind::kTriangular:
    return sum_terms(p, q, [](double a, double b) { return (a - b) * (a - b) / (a + b); });
  case MeasureKind::kHarmonic:
    return sum_terms(p, q, [](double a, double b) { return 2.0 * a * b / (a + b); });
  case MeasureKind::kSymChi2:
    return sum_terms(p, q,
                     [](double a, double b) { return (a - b) * (a - b) * (a + b) / (a * b); });
  case MeasureKind::kChi2:
    return sum_terms(p, q, [](double a, double b) { return (a - b) * (a - b) / b; });
  case MeasureKind::kKl:
    // a ln(a/b) - a + b = (a + b)[(atanh z - z) + z atanh z], nonnegative termwise.
    return sum_terms(p, q, [](double a, double b) {
      double const z = detail::half_difference_ratio(a, b);
      if (!detail::near_ratio(z))
      {
        return a * std::log(a / b) - a + b;
      }
      return (a + b) * (detail::atanh_excess(z) + z * std::atanh(z));
    });
  case MeasureKind::kJ:
    return sum_terms(p, q, [](double a, double b) {
      double const z = detail::half_difference_ratio(a, b);
      return (a - b) * (detail::near_ratio(z) ? 2.0 * std::atanh(z) : std::log(a / b));
    });
  case MeasureKind::kJs:
    // a ln(2a/(a+b)) + b ln(2b/(a+b)) = (a + b)/2 [2 z atanh z + ln(1 - z^2)]
    return 0.25 * sum_terms(p, q, [](double a, double b) {
             double const z = detail::half_difference_ratio(a, b);
             if (!detail::near_ratio(z))
             {
               double const s = a + b;
               return 2.0 * (a * std::log(2.0 * a / s) + b * std::log(2.0 * b / s));
             }
             return (a + b) * (2.0 * z * std::atanh(z) + std::log1p(-z * z));
           });
  case MeasureKind::kAg:
    // m ln(m/sqrt(ab)) = -m/2 ln(1 - z^2)
    return sum_terms(p, q, [](double a, double b) {
      double const z = detail::half_difference_ratio(a, b);
      if (!detail::near_ratio(z))
      {
        double const m = 0.5 * (a + b);
        return m * std::log(m / std::sqrt(a * b));
      }
      return -0.25 * (a + b) * std::log1p(-z * z);
    });
  case MeasureKind::kDNew:
    return 1.0 - sum_terms(p, q, [](double a, double b) {
             return 0.5 * (std::sqrt(a) + std::sqrt(b)) * std::sqrt(0.5 * (a + b));
           });
  case MeasureKind::kTotalVariation:
    return sum_terms(p, q, [](double a, double b) { return std::abs(a - b); });
  }
  throw Error(ErrorCode::kParameterOutOfRange, "unknown measure kind");
}

double vajda_abs_chi(double m, Distribution const &p, Distribution const &q)
{
  require_vajda_order(m);
  require_same_dimension(p, q);
  return sum_terms(p, q, [m](double a, double b) { return abs_pow(a - b, m) / abs_pow(b, m - 1.0); });
}

VajdaUpperBounds vajda_upper_bounds(double m, RatioBounds const &rb)
{
  require_vajda_order(m);
  require_nondegenerate(rb);
  double const lo = 1.0 - rb.r;
  double const hi = rb.R - 1.0;
  double const w  = rb.R - rb.r;
  return {lo * hi / w * (abs_pow(lo, m - 1.0) + abs_pow(hi, m - 1.0)), abs_pow(0.5 * w, m)};
}

VajdaVariationBounds vajda_variation_bounds(double m, RatioBounds const &rb, double total_variation)
{
  require_vajda_order(m);
  require_nondegenerate(rb);
  // (1 - x^m)/(1 - x) written through expm1 so x close to one stays accurate.
  auto const quotient = [m](double x) {
    double const lx = std::log(x);
    if (lx == 0.0)
    {
      return m;
    }
    return std::expm1(m * lx) / std::expm1(lx);
  };
  return {quotient(rb.r) * total_variation, quotient(rb.R) * total_variation};
}

}  // namespace symdiv
