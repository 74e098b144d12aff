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

#include "symdiv/families.hpp"

#include "symdiv/divergences.hpp"
#include "symdiv/error.hpp"
#include "stable_math.hpp"

#include <cmath>
#include <string>

namespace symdiv {

namespace {

// b (a/b)^s - b - s (a - b) = a^s b^{1-s} - b - s(a - b).
// Divided by s(s-1) every term is nonnegative, so sums of it do not cancel.
using detail::cressie_read_term;

double reverse_kl(Distribution const &p, Distribution const &q)
{
  return classic_divergence(MeasureKind::kKl, q, p);
}

}  // namespace

bool FamilyParam::at_zero() const noexcept
{
  return std::abs(s) <= limit_tolerance;
}

bool FamilyParam::at_one() const noexcept
{
  return std::abs(s - 1.0) <= limit_tolerance;
}

std::string_view to_string(GeneratorFamilyKind kind) noexcept
{
  return kind == GeneratorFamilyKind::kPhi ? "PHI" : "PSI";
}

double relative_information_type_s(FamilyParam s, Distribution const &p, Distribution const &q)
{
  require_same_dimension(p, q);
  if (s.at_zero())
  {
    return reverse_kl(p, q);
  }
  if (s.at_one())
  {
    return classic_divergence(MeasureKind::kKl, p, q);
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    acc += cressie_read_term(s.s, p[i], q[i]);
  }
  return acc / (s.s * (s.s - 1.0));
}

double j_divergence_type_s(FamilyParam s, Distribution const &p, Distribution const &q)
{
  require_same_dimension(p, q);
  if (s.at_zero() || s.at_one())
  {
    return classic_divergence(MeasureKind::kJ, p, q);
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    acc += cressie_read_term(s.s, p[i], q[i]) + cressie_read_term(s.s, q[i], p[i]);
  }
  return acc / (s.s * (s.s - 1.0));
}

double ag_js_divergence_type_s(FamilyParam s, Distribution const &p, Distribution const &q)
{
  require_same_dimension(p, q);
  if (s.at_zero())
  {
    return classic_divergence(MeasureKind::kJs, p, q);
  }
  if (s.at_one())
  {
    return classic_divergence(MeasureKind::kAg, p, q);
  }
  // Summand ((p^{1-s} + q^{1-s})/2) m^s - m, with m = (p+q)/2, rewritten as
  // 1/2 [p ((m/p)^s - 1) + q ((m/q)^s - 1)]; the linear corrections of the two
  // Cressie-Read terms cancel exactly since p + q = 2m.
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    double const m = 0.5 * (p[i] + q[i]);
    acc += cressie_read_term(s.s, m, p[i]) + cressie_read_term(s.s, m, q[i]);
  }
  return 0.5 * acc / (s.s * (s.s - 1.0));
}

namespace {

double phi_eval(FamilyParam const &fp, double x, int order)
{
  double const s  = fp.s;
  double const lx = std::log(x);
  bool const   limit = fp.at_zero() || fp.at_one();
  switch (order)
  {
  case 0:
    if (limit)
    {
      return (x - 1.0) * lx;
    }
    // [x^s + x^{1-s} - (1 + x)] split into two terms that each vanish to second order at x = 1
    return (cressie_read_term(s, x, 1.0) + cressie_read_term(1.0 - s, x, 1.0)) / (s * (s - 1.0));
  case 1:
    if (limit)
    {
      return 1.0 - 1.0 / x + lx;
    }
    return (s * std::expm1((s - 1.0) * lx) + (1.0 - s) * std::expm1(-s * lx)) / (s * (s - 1.0));
  case 2:
    return std::exp((s - 2.0) * lx) + std::exp((-s - 1.0) * lx);
  case 3:
    return -((2.0 - s) * std::exp((s - 3.0) * lx) + (s + 1.0) * std::exp((-s - 2.0) * lx));
  default:
    break;
  }
  throw Error(ErrorCode::kUnsupportedOrder, "generator order must be 0..3, got " + std::to_string(order));
}

double psi_eval(FamilyParam const &fp, double x, int order)
{
  double const s  = fp.s;
  double const lx = std::log(x);
  double const m  = 0.5 * (x + 1.0);
  double const lm = std::log(m);
  double const lu = lm - lx;  // ln((x+1)/(2x))
  switch (order)
  {
  case 0:
    if (fp.at_zero())
    {
      return 0.5 * x * lx - m * lm;
    }
    if (fp.at_one())
    {
      return m * (lm - 0.5 * lx);
    }
    return 0.5 * (cressie_read_term(s, m, x) + cressie_read_term(s, m, 1.0)) / (s * (s - 1.0));
  case 1:
    if (fp.at_zero())
    {
      return -0.5 * lu;
    }
    if (fp.at_one())
    {
      return 0.25 * (1.0 - 1.0 / x - lx + 2.0 * lm);
    }
    return (0.5 * (1.0 - s) * std::expm1(s * lu) +
            0.25 * s * (std::expm1((s - 1.0) * lu) + std::expm1((s - 1.0) * lm))) /
           (s * (s - 1.0));
  case 2:
    return (std::exp((-s - 1.0) * lx) + 1.0) / 8.0 * std::exp((s - 2.0) * lm);
  case 3:
    return -std::exp(s * lm) / (2.0 * (x + 1.0) * (x + 1.0) * (x + 1.0)) *
           (3.0 * std::exp((-s - 1.0) * lx) + (s + 1.0) * std::exp((-s - 2.0) * lx) + (2.0 - s));
  default:
    break;
  }
  throw Error(ErrorCode::kUnsupportedOrder, "generator order must be 0..3, got " + std::to_string(order));
}

}  // namespace

double generator_eval(GeneratorFamilyKind family, FamilyParam s, double x, int order)
{
  if (!(x > 0.0))
  {
    throw Error(ErrorCode::kNonpositiveArgument, "generator argument must be > 0");
  }
  return family == GeneratorFamilyKind::kPhi ? phi_eval(s, x, order) : psi_eval(s, x, order);
}

}  // namespace symdiv
