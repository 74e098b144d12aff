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

#include "symdiv/csiszar.hpp"
#include "symdiv/divergences.hpp"
#include "symdiv/error.hpp"
#include "symdiv/families.hpp"
#include "symdiv/format.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace symdiv {

namespace {

std::size_t case_id(std::string_view id)
{
  auto const idx = registry_index(id);
  if (!idx)
  {
    throw std::logic_error("unregistered case " + std::string{id});
  }
  return *idx;
}

// Writes evaluations of L <= R (with slack) into a summary fragment.
class Recorder
{
public:
  Recorder(SweepSummary &out, Distribution const &p, Distribution const &q, double tol, PairOrigin origin)
    : out_(out)
    , p_(p)
    , q_(q)
    , tol_(tol)
    , origin_(origin)
  {}

  bool le(std::string_view id, double lhs, double rhs, std::optional<double> s = {},
          std::optional<double> t = {})
  {
    CaseResult  &c         = out_.cases[case_id(id)];
    double const violation = (lhs - rhs) / std::max(1.0, std::abs(rhs));
    bool const   ok        = lhs <= rhs + tol_ * std::max(1.0, std::abs(rhs));
    ++c.evaluations;
    if (!ok)
    {
      ++c.violations;
    }
    if (!c.max_violation || violation > *c.max_violation)
    {
      c.max_violation = violation;
      c.witness       = Witness{{p_.weights().begin(), p_.weights().end()},
                          {q_.weights().begin(), q_.weights().end()},
                          s,
                          t,
                          origin_.dim,
                          origin_.sample};
    }
    return ok;
  }

  /// Checks v[0] <= v[1] <= ... as one evaluation per link.
  bool chain(std::string_view id, std::initializer_list<double> v, std::optional<double> s = {})
  {
    bool        ok   = true;
    auto        prev = v.begin();
    for (auto it = std::next(prev); it != v.end(); ++it, ++prev)
    {
      ok = le(id, *prev, *it, s) && ok;
    }
    return ok;
  }

  void skip(std::string_view id, std::size_t n = 1)
  {
    out_.cases[case_id(id)].skipped += n;
  }

private:
  SweepSummary       &out_;
  Distribution const &p_;
  Distribution const &q_;
  double              tol_;
  PairOrigin          origin_;
};

void require_grid(std::span<double const> grid, char const *name)
{
  if (grid.empty())
  {
    throw Error(ErrorCode::kEmptyGrid, std::string{name} + " must not be empty");
  }
}

nlohmann::ordered_json witness_json(Witness const &w)
{
  nlohmann::ordered_json j;
  j["p"] = w.p;
  j["q"] = w.q;
  if (w.s)
  {
    j["s"] = *w.s;
  }
  if (w.t)
  {
    j["t"] = *w.t;
  }
  j["dim"]    = w.dim;
  j["sample"] = w.sample;
  return j;
}

std::vector<double> rounded(std::vector<double> const &xs)
{
  std::vector<double> out(xs.size());
  std::transform(xs.begin(), xs.end(), out.begin(), round_output);
  return out;
}

}  // namespace

SweepSummary SweepSummary::blank()
{
  SweepSummary out;
  for (auto const &c : inequality_registry())
  {
    CaseResult r;
    r.id       = c.id;
    r.severity = c.severity;
    out.cases.push_back(std::move(r));
  }
  return out;
}

CaseResult const &SweepSummary::at(std::string_view id) const
{
  return cases.at(case_id(id));
}

std::size_t SweepSummary::assert_failures() const noexcept
{
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](CaseResult const &c) {
    return c.severity == Severity::kAssert && !c.pass();
  }));
}

void SweepSummary::merge(SweepSummary const &other)
{
  if (cases.empty())
  {
    cases = blank().cases;
  }
  for (std::size_t i = 0; i < other.cases.size(); ++i)
  {
    CaseResult       &mine   = cases[i];
    CaseResult const &theirs = other.cases[i];
    mine.evaluations += theirs.evaluations;
    mine.violations += theirs.violations;
    mine.skipped += theirs.skipped;
    if (theirs.max_violation && (!mine.max_violation || *theirs.max_violation > *mine.max_violation))
    {
      mine.max_violation = theirs.max_violation;
      mine.witness       = theirs.witness;
    }
  }
  samples += other.samples;
}

ChainReport check_chain(Distribution const &p, Distribution const &q, double tol, PairOrigin origin)
{
  require_same_dimension(p, q);
  ChainReport rep;
  rep.fragment = SweepSummary::blank();
  Recorder rec(rep.fragment, p, q, tol, origin);

  double const delta = classic_divergence(MeasureKind::kTriangular, p, q);
  double const i     = classic_divergence(MeasureKind::kJs, p, q);
  double const h     = classic_divergence(MeasureKind::kHellinger, p, q);
  double const d     = classic_divergence(MeasureKind::kDNew, p, q);
  double const j     = classic_divergence(MeasureKind::kJ, p, q);
  double const t     = classic_divergence(MeasureKind::kAg, p, q);
  double const psi   = classic_divergence(MeasureKind::kSymChi2, p, q);

  rep.values = {delta / 4, i, h, 4 * d, j / 8, t, psi / 16};
  auto const &v = rep.values;

  rep.pass = rec.chain("EQ183", {v[0], v[1], v[2], v[3], v[4], v[5], v[6]});
  rec.chain("EQ77", {h, j / 8, psi / 16});
  rec.chain("EQ104", {delta / 4, i, 4 * d, t, psi / 16});
  rec.chain("EQ130", {i, j / 8, t});
  rec.chain("EQ137", {i, h, t});
  rec.chain("EQ138", {delta / 4, i, h, j / 8, t, psi / 16});
  rec.chain("EQ139", {delta / 4, i, h, j / 8, t, j / 4});
  rec.chain("EQ140", {delta / 4, h, delta / 2});
  rec.chain("EQ141", {delta / 4, i, h, delta / 2});
  rec.chain("EQ172", {h / 4, d, h / 2});
  rec.le("EQ182", 4 * d, j / 8);
  return rep;
}

SweepSummary check_parametric(Distribution const &p, Distribution const &q, std::span<double const> s_grid,
                              std::span<double const> t_grid, double tol, PairOrigin origin)
{
  require_same_dimension(p, q);
  require_grid(s_grid, "s grid");
  require_grid(t_grid, "t grid");
  SweepSummary out = SweepSummary::blank();
  Recorder     rec(out, p, q, tol, origin);

  double const j     = classic_divergence(MeasureKind::kJ, p, q);
  double const h     = classic_divergence(MeasureKind::kHellinger, p, q);
  double const psi   = classic_divergence(MeasureKind::kSymChi2, p, q);
  double const delta = classic_divergence(MeasureKind::kTriangular, p, q);
  double const i     = classic_divergence(MeasureKind::kJs, p, q);
  double const t_ag  = classic_divergence(MeasureKind::kAg, p, q);

  // Claims in s: W_s and V_s at the same order.
  for (double const s : s_grid)
  {
    double const w = ag_js_divergence_type_s(FamilyParam{s}, p, q);
    double const v = j_divergence_type_s(FamilyParam{s}, p, q);

    auto when = [&](std::string_view id, bool in_domain, auto &&check) {
      if (in_domain)
      {
        check();
      }
      else
      {
        rec.skip(id);
      }
    };
    when("EQ129_UPPER", s >= -2 && s <= 0, [&] { rec.le("EQ129_UPPER", w, j / 8, s); });
    when("EQ129_LOWER", s >= 1, [&] { rec.le("EQ129_LOWER", j / 8, w, s); });
    when("EQ136_UPPER", s >= -2 && s <= 0, [&] { rec.le("EQ136_UPPER", w, h, s); });
    when("EQ136_LOWER", s >= 0.5, [&] { rec.le("EQ136_LOWER", h, w, s); });
    when("EQ142_UPPER", s >= -1 && s <= 2, [&] { rec.le("EQ142_UPPER", w, psi / 16, s); });
    when("EQ142_LOWER", s >= 2, [&] { rec.le("EQ142_LOWER", psi / 16, w, s); });
    when("EQ165_UPPER", s >= 2 || s <= -1, [&] { rec.le("EQ165_UPPER", w, v / 8, s); });
    when("EQ165_LOWER", s >= 0.5 && s <= 1, [&] { rec.le("EQ165_LOWER", v / 8, w, s); });
    rec.le("EQ170", 4 * w, v, s);
    when("EQ171", s >= 0.5 && s <= 1, [&] { rec.chain("EQ171", {v / 8, w, v / 4}, s); });
  }

  // Claims in t: V_t against fixed measures.
  for (double const t : t_grid)
  {
    double const v = j_divergence_type_s(FamilyParam{t}, p, q);
    auto         le_t = [&](std::string_view id, bool in_domain, double lhs, double rhs) {
      if (in_domain)
      {
        rec.le(id, lhs, rhs, std::nullopt, t);
      }
      else
      {
        rec.skip(id);
      }
    };
    le_t("EQ143_UPPER", t >= 0.5 && t <= 2, v, psi / 2);
    le_t("EQ143_LOWER", t >= 2 || t <= -1, psi / 2, v);
    le_t("EQ148", t >= 0 || t <= -1, delta, v / 2);
    le_t("EQ153", true, i, v / 8);
    le_t("EQ159_UPPER", t >= 2 || t <= -1, t_ag, v / 8);
    le_t("EQ159_LOWER", t >= 0 && t <= 1, v / 8, t_ag);
  }

  // Monotonicity in s over adjacent points of the sorted grid.
  std::vector<double> sorted(s_grid.begin(), s_grid.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<double> vs(sorted.size());
  std::vector<double> ws(sorted.size());
  for (std::size_t k = 0; k < sorted.size(); ++k)
  {
    vs[k] = j_divergence_type_s(FamilyParam{sorted[k]}, p, q);
    ws[k] = ag_js_divergence_type_s(FamilyParam{sorted[k]}, p, q);
  }
  for (std::size_t k = 0; k + 1 < sorted.size(); ++k)
  {
    double const a = sorted[k];
    double const b = sorted[k + 1];
    if (a >= 0.5)
    {
      rec.le("PROP42_MONO", vs[k], vs[k + 1], a, b);
    }
    else if (b <= 0.5)
    {
      rec.le("PROP42_MONO", vs[k + 1], vs[k], a, b);
    }
    else
    {
      rec.skip("PROP42_MONO");
    }
    if (a >= -1)
    {
      rec.le("PROP44_MONO", ws[k], ws[k + 1], a, b);
    }
    else
    {
      rec.skip("PROP44_MONO");
    }
  }
  return out;
}

SweepSummary check_bounds_suite(Distribution const &p, Distribution const &q, std::span<double const> s_grid,
                                double tol, PairOrigin origin)
{
  require_same_dimension(p, q);
  require_grid(s_grid, "s grid");
  SweepSummary out = SweepSummary::blank();
  Recorder     rec(out, p, q, tol, origin);

  RatioBounds const rb = ratio_bounds(p, q);
  if (rb.degenerate())
  {
    for (auto id : {"EQ32", "EQ52", "EQ53_LOWER", "EQ53_UPPER", "EQ54", "EQ55", "EQ56"})
    {
      rec.skip(id);
    }
    for (auto id : {"EQ78", "EQ79", "EQ80", "EQ81", "EQ105", "EQ106", "EQ107", "EQ108"})
    {
      rec.skip(id, s_grid.size());
    }
    return out;
  }

  double const r      = rb.r;
  double const R      = rb.R;
  double const w      = R - r;
  double const prod   = (R - 1) * (1 - r);
  double const chi2   = classic_divergence(MeasureKind::kChi2, p, q);
  double const chi3   = vajda_abs_chi(3.0, p, q);
  double const var_pq = classic_divergence(MeasureKind::kTotalVariation, p, q);

  rec.le("EQ32", prod, w * w / 4);
  for (double const m : {1.0, 2.0, 3.0})
  {
    double const chi_m = vajda_abs_chi(m, p, q);
    auto const   ub    = vajda_upper_bounds(m, rb);
    rec.chain("EQ52", {chi_m, ub.bound1, ub.bound2});
    auto const vb = vajda_variation_bounds(m, rb, var_pq);
    rec.le("EQ53_LOWER", vb.lower, chi_m);
    rec.le("EQ53_UPPER", chi_m, vb.upper);
  }
  rec.chain("EQ54", {chi2, prod, w * w / 4});
  // m = 3 specialization of the Vajda chain above
  rec.chain("EQ55", {chi3, prod / w * ((1 - r) * (1 - r) + (R - 1) * (R - 1)), w * w * w / 8});
  rec.chain("EQ56", {var_pq, 2 * prod / w, w / 2});

  for (double const s : s_grid)
  {
    bool const smooth = s >= -1 && s <= 2;

    BoundReport const phi   = bound_report(make_phi_generator(FamilyParam{s}), p, q);
    double const      v     = j_divergence_type_s(FamilyParam{s}, p, q);
    rec.chain("EQ78", {v, phi.linearized, *phi.endpoint_A}, s);
    rec.chain("EQ79", {v, *phi.endpoint_B, *phi.endpoint_A}, s);
    if (smooth)
    {
      rec.le("EQ80", std::abs(v - 0.5 * phi.linearized), *phi.half_E_bound, s);
      rec.le("EQ81", std::abs(v - phi.linearized_mid), *phi.E_star_bound, s);
    }
    else
    {
      rec.skip("EQ80");
      rec.skip("EQ81");
    }

    BoundReport const psi = bound_report(make_psi_generator(FamilyParam{s}), p, q);
    double const      wv  = ag_js_divergence_type_s(FamilyParam{s}, p, q);
    rec.chain("EQ105", {0.0, wv, psi.linearized, *psi.endpoint_A}, s);
    rec.chain("EQ106", {0.0, wv, *psi.endpoint_B, *psi.endpoint_A}, s);
    if (smooth)
    {
      rec.le("EQ107", std::abs(wv - 0.5 * psi.linearized), *psi.half_E_bound, s);
      rec.le("EQ108", std::abs(wv - psi.linearized_mid), *psi.E_star_bound, s);
    }
    else
    {
      rec.skip("EQ107");
      rec.skip("EQ108");
    }
  }
  return out;
}

std::string to_json(SweepSummary const &summary, bool include_timing)
{
  nlohmann::ordered_json j;
  if (summary.config)
  {
    auto const &c     = *summary.config;
    j["config"]       = {{"dims", c.dims},
                   {"samples_per_dim", c.samples_per_dim},
                   {"seed", c.seed},
                   {"s_grid", rounded(c.s_grid)},
                   {"t_grid", rounded(c.t_grid)},
                   {"tol", c.tol}};
  }
  auto cases = nlohmann::ordered_json::array();
  auto skips = nlohmann::ordered_json::object();
  for (auto const &c : summary.cases)
  {
    nlohmann::ordered_json e;
    e["id"]       = c.id;
    e["severity"] = to_string(c.severity);
    e["pass"]     = c.pass();
    if (c.max_violation)
    {
      e["max_violation"] = round_output(*c.max_violation);
    }
    else
    {
      e["max_violation"] = nullptr;
    }
    e["evaluations"] = c.evaluations;
    e["violations"]  = c.violations;
    if (c.severity == Severity::kDiagnostic && c.evaluations > 0)
    {
      e["violation_rate"] =
          round_output(static_cast<double>(c.violations) / static_cast<double>(c.evaluations));
    }
    if (!c.pass() && c.witness)
    {
      e["witness"] = witness_json(*c.witness);
    }
    cases.push_back(std::move(e));
    skips[std::string{c.id}] = c.skipped;
  }
  j["cases"]           = std::move(cases);
  j["skipped_counts"]  = std::move(skips);
  j["samples"]         = summary.samples;
  j["seed"]            = summary.seed;
  if (include_timing && summary.elapsed_ms)
  {
    j["elapsed_ms"] = round_output(*summary.elapsed_ms);
  }
  j["assert_failures"] = summary.assert_failures();
  return j.dump(2);
}

}  // namespace symdiv
