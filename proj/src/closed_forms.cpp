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

#include "symdiv/closed_forms.hpp"

#include "symdiv/error.hpp"
#include "symdiv/means.hpp"

#include <cmath>
#include <functional>

namespace symdiv::closed_form {

namespace {

using Term = std::function<double(double p, double q)>;

double sum_terms(Distribution const &p, Distribution const &q, Term const &term)
{
  require_same_dimension(p, q);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    acc += term(p[i], q[i]);
  }
  return acc;
}

// J-type summand (a - b) ln(a/b)
double j_term(double a, double b)
{
  return (a - b) * std::log(a / b);
}

double lpm(double order, double a, double b)
{
  return log_power_mean_raised(order, a, b);
}

void require_nondegenerate(RatioBounds const &rb)
{
  if (rb.degenerate())
  {
    throw Error(ErrorCode::kDegenerateBounds, "ratio bounds require r < R");
  }
}

double psi1(double x)
{
  return generator_eval(GeneratorFamilyKind::kPsi, FamilyParam{1.0}, x, 0);
}

}  // namespace

double phi_E(FamilyParam s, Distribution const &p, Distribution const &q)
{
  if (s.at_zero() || s.at_one())
  {
    // J(P||Q) + chi^2(Q||P)
    return sum_terms(p, q, [](double a, double b) { return j_term(a, b) + (a - b) * (a - b) / a; });
  }
  double const t = s.s;
  return sum_terms(p, q, [t](double a, double b) {
    double const x = a / b;
    return (a - b) * (pow_pos(x, t - 1.0) / (t - 1.0) - pow_pos(x, -t) / t);
  });
}

double phi_E_star(FamilyParam s, Distribution const &p, Distribution const &q)
{
  if (s.at_zero() || s.at_one())
  {
    // Delta + 2 J((P+Q)/2 || Q)
    return sum_terms(p, q, [](double a, double b) {
      double const m = 0.5 * (a + b);
      return (a - b) * (a - b) / (a + b) + 2.0 * j_term(m, b);
    });
  }
  double const t = s.s;
  return sum_terms(p, q, [t](double a, double b) {
    double const x = (a + b) / (2.0 * b);
    return (a - b) * (pow_pos(x, t - 1.0) / (t - 1.0) - pow_pos(x, -t) / t);
  });
}

double phi_A(FamilyParam s, RatioBounds const &rb)
{
  require_nondegenerate(rb);
  double const w = rb.R - rb.r;
  return 0.25 * w * w * (lpm(s.s - 2.0, rb.r, rb.R) + lpm(-s.s - 1.0, rb.r, rb.R));
}

double phi_B(FamilyParam s, RatioBounds const &rb)
{
  require_nondegenerate(rb);
  double const r = rb.r;
  double const R = rb.R;
  if (s.at_zero() || s.at_one())
  {
    return (1.0 - r) * (R - 1.0) * lpm(-1.0, r, R);
  }
  double const t   = s.s;
  double const sec = ((1.0 - r) * (pow_pos(R, t) + pow_pos(R, 1.0 - t)) +
                      (R - 1.0) * (pow_pos(r, t) + pow_pos(r, 1.0 - t))) /
                     (R - r);
  return (sec - 2.0) / (t * (t - 1.0));
}

double phi_delta(FamilyParam s, RatioBounds const &rb)
{
  require_nondegenerate(rb);
  double const t = s.s;
  return (rb.R - rb.r) * ((2.0 - t) * lpm(t - 3.0, rb.r, rb.R) + (1.0 + t) * lpm(-t - 2.0, rb.r, rb.R));
}

double phi_f3_sup(FamilyParam s, RatioBounds const &rb)
{
  double const t = s.s;
  return (2.0 - t) * pow_pos(rb.r, t - 3.0) + (t + 1.0) * pow_pos(rb.r, -t - 2.0);
}

double psi_E(FamilyParam s, Distribution const &p, Distribution const &q)
{
  if (s.at_zero())
  {
    // J((P+Q)/2 || P)
    return sum_terms(p, q, [](double a, double b) { return j_term(0.5 * (a + b), a); });
  }
  if (s.at_one())
  {
    // 1/4 [chi^2(Q||P) - J(P||Q)] + J((P+Q)/2 || Q)
    return sum_terms(p, q, [](double a, double b) {
      return 0.25 * ((a - b) * (a - b) / a - j_term(a, b)) + j_term(0.5 * (a + b), b);
    });
  }
  double const t = s.s;
  return 0.5 * sum_terms(p, q, [t](double a, double b) {
           double const m = 0.5 * (a + b);
           return (a - b) * (0.5 * (pow_pos(a, 1.0 - t) + pow_pos(b, 1.0 - t)) * pow_pos(m, t - 1.0) / (t - 1.0) -
                             pow_pos(m / a, t) / t);
         });
}

double psi_E_star(FamilyParam s, Distribution const &p, Distribution const &q)
{
  if (s.at_zero())
  {
    // 2 J((P+Q)/2 || (P+3Q)/4)
    return sum_terms(p, q, [](double a, double b) { return 2.0 * j_term(0.5 * (a + b), 0.25 * (a + 3.0 * b)); });
  }
  if (s.at_one())
  {
    // Delta/4 - 1/2 J((P+Q)/2 || Q) + 2 J((P+3Q)/4 || Q)
    return sum_terms(p, q, [](double a, double b) {
      return 0.25 * (a - b) * (a - b) / (a + b) - 0.5 * j_term(0.5 * (a + b), b) +
             2.0 * j_term(0.25 * (a + 3.0 * b), b);
    });
  }
  double const t = s.s;
  return pow_pos(0.5, t + 1.0) * sum_terms(p, q, [t](double a, double b) {
           double const u = (a + 3.0 * b) / (a + b);
           double const v = (a + 3.0 * b) / (2.0 * b);
           return (a - b) * ((pow_pos(u, t - 1.0) + pow_pos(v, t - 1.0)) / (t - 1.0) - pow_pos(u, t) / t);
         });
}

double psi_A(FamilyParam s, RatioBounds const &rb)
{
  require_nondegenerate(rb);
  double const r   = rb.r;
  double const R   = rb.R;
  double const t   = s.s;
  double const u_r = (r + 1.0) / (2.0 * r);
  double const u_R = (R + 1.0) / (2.0 * R);
  double const w   = R - r;
  return w * w / 16.0 *
         (lpm(t - 1.0, u_R, u_r) / (r * R) - lpm(t - 2.0, u_R, u_r) / (2.0 * r * R) +
          0.5 * lpm(t - 2.0, 0.5 * (r + 1.0), 0.5 * (R + 1.0)));
}

double psi_B(FamilyParam s, RatioBounds const &rb)
{
  require_nondegenerate(rb);
  double const r = rb.r;
  double const R = rb.R;
  if (s.at_zero())
  {
    return ((1.0 - r) * (R * std::log(R) - (1.0 + R) * std::log(0.5 * (R + 1.0))) +
            (R - 1.0) * (r * std::log(r) - (1.0 + r) * std::log(0.5 * (r + 1.0)))) /
           (2.0 * (R - r));
  }
  if (s.at_one())
  {
    return ((R - 1.0) * psi1(r) + (1.0 - r) * psi1(R)) / (R - r);
  }
  double const t   = s.s;
  double const sec = ((1.0 - r) * 0.5 * (pow_pos(R, 1.0 - t) + 1.0) * pow_pos(0.5 * (R + 1.0), t) +
                      (R - 1.0) * 0.5 * (pow_pos(r, 1.0 - t) + 1.0) * pow_pos(0.5 * (r + 1.0), t)) /
                     (R - r);
  return (sec - 1.0) / (t * (t - 1.0));
}

double psi_delta(FamilyParam s, RatioBounds const &rb)
{
  require_nondegenerate(rb);
  double const t     = s.s;
  auto const   curve = [t](double x) { return (pow_pos(x, -t - 1.0) + 1.0) / 8.0 * pow_pos(0.5 * (x + 1.0), t - 2.0); };
  return curve(rb.r) - curve(rb.R);
}

double psi_f3_sup(FamilyParam s, RatioBounds const &rb)
{
  double const t  = s.s;
  double const r  = rb.r;
  double const r1 = r + 1.0;
  return pow_pos(0.5 * r1, t) / (2.0 * r1 * r1 * r1) *
         (3.0 * pow_pos(r, -t - 1.0) + (t + 1.0) * pow_pos(r, -t - 2.0) + (2.0 - t));
}

}  // namespace symdiv::closed_form
