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

#include "symdiv/cli.hpp"

#include "symdiv/csiszar.hpp"
#include "symdiv/divergences.hpp"
#include "symdiv/error.hpp"
#include "symdiv/families.hpp"
#include "symdiv/format.hpp"
#include "symdiv/histogram_io.hpp"
#include "symdiv/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <string_view>

namespace symdiv {

namespace {

std::vector<std::string_view> split_commas(std::string_view text)
{
  std::vector<std::string_view> out;
  while (true)
  {
    auto const comma = text.find(',');
    out.push_back(text.substr(0, comma));
    if (comma == std::string_view::npos)
    {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
  {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
  {
    s.remove_suffix(1);
  }
  return s;
}

template <typename T>
std::vector<T> parse_list(std::string const &text, char const *what)
{
  std::vector<T> out;
  for (auto token : split_commas(text))
  {
    token = trim(token);
    if (!token.empty() && token.front() == '+')
    {
      token.remove_prefix(1);
    }
    T    value{};
    auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || res.ec != std::errc{} || res.ptr != token.data() + token.size())
    {
      throw Error(ErrorCode::kParse, std::string{"bad "} + what + " entry '" + std::string{token} + "'");
    }
    out.push_back(value);
  }
  return out;
}

// One requested quantity for `compute`.
struct MeasureRequest
{
  std::string                                                    label;
  std::function<double(Distribution const &, Distribution const &)> eval;
};

std::vector<MeasureRequest> parse_measures(std::string const &spec, std::optional<double> s)
{
  std::vector<MeasureRequest> out;
  for (auto token : split_commas(spec))
  {
    std::string name{trim(token)};
    for (auto &c : name)
    {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    if (auto kind = parse_measure_kind(name))
    {
      out.push_back({name, [k = *kind](auto const &p, auto const &q) { return classic_divergence(k, p, q); }});
      continue;
    }
    using Family = double (*)(FamilyParam, Distribution const &, Distribution const &);
    Family family = nullptr;
    if (name == "PHI")
    {
      family = relative_information_type_s;
    }
    else if (name == "V")
    {
      family = j_divergence_type_s;
    }
    else if (name == "W")
    {
      family = ag_js_divergence_type_s;
    }
    if (family == nullptr)
    {
      throw Error(ErrorCode::kParse, "unknown measure '" + name + "'");
    }
    if (!s)
    {
      throw Error(ErrorCode::kParameterOutOfRange, "measure " + name + " needs --s");
    }
    FamilyParam const param{*s};
    out.push_back({name + "(s=" + format_number(*s) + ")",
                   [family, param](auto const &p, auto const &q) { return family(param, p, q); }});
  }
  return out;
}

struct Inputs
{
  std::string input_p;
  std::string input_q;
  bool        normalize = false;
  double      epsilon   = 0.0;
};

void add_input_options(CLI::App *cmd, Inputs &in)
{
  cmd->add_option("--input-p", in.input_p, "histogram file for P (CSV or JSON)")->required();
  cmd->add_option("--input-q", in.input_q, "histogram file for Q (CSV or JSON)")->required();
  cmd->add_flag("--normalize", in.normalize, "smooth by --epsilon and rescale instead of rejecting");
  cmd->add_option("--epsilon", in.epsilon, "additive smoothing used with --normalize");
}

std::pair<Distribution, Distribution> load_pair(Inputs const &in)
{
  NormalizationPolicy policy;
  if (in.normalize)
  {
    policy.mode    = NormalizationPolicy::Mode::kRenormalize;
    policy.epsilon = in.epsilon;
  }
  auto p = validate_distribution(read_histogram_file(in.input_p), policy);
  auto q = validate_distribution(read_histogram_file(in.input_q), policy);
  require_same_dimension(p, q);
  return {std::move(p), std::move(q)};
}

void print_table(std::ostream &out, std::vector<std::pair<std::string, std::string>> const &rows)
{
  std::size_t width = 0;
  for (auto const &r : rows)
  {
    width = std::max(width, r.first.size());
  }
  for (auto const &r : rows)
  {
    out << r.first << std::string(width - r.first.size() + 2, ' ') << r.second << '\n';
  }
}

void print_csv(std::ostream &out, std::vector<std::string> const &header,
               std::vector<std::vector<double>> const &rows)
{
  for (std::size_t i = 0; i < header.size(); ++i)
  {
    out << (i ? "," : "") << header[i];
  }
  out << '\n';
  for (auto const &row : rows)
  {
    for (std::size_t i = 0; i < row.size(); ++i)
    {
      out << (i ? "," : "") << format_number(row[i]);
    }
    out << '\n';
  }
}

int cmd_compute(Inputs const &in, std::string const &measures, std::optional<double> s,
                std::string const &format, std::ostream &out)
{
  auto const requests = parse_measures(measures, s);
  auto const [p, q]   = load_pair(in);
  std::vector<double> values;
  for (auto const &r : requests)
  {
    values.push_back(r.eval(p, q));
  }
  if (format == "json")
  {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < requests.size(); ++i)
    {
      j[requests[i].label] = round_output(values[i]);
    }
    out << j.dump() << '\n';
  }
  else if (format == "csv")
  {
    std::vector<std::string> header;
    for (auto const &r : requests)
    {
      header.push_back(r.label);
    }
    print_csv(out, header, {values});
  }
  else
  {
    std::vector<std::pair<std::string, std::string>> rows;
    for (std::size_t i = 0; i < requests.size(); ++i)
    {
      rows.emplace_back(requests[i].label, format_number(values[i]));
    }
    print_table(out, rows);
  }
  return kExitOk;
}

int cmd_bounds(Inputs const &in, std::string const &generator, double s, std::string const &format,
               std::ostream &out)
{
  GeneratorFamilyKind kind{};
  if (generator == "PHI")
  {
    kind = GeneratorFamilyKind::kPhi;
  }
  else if (generator == "PSI")
  {
    kind = GeneratorFamilyKind::kPsi;
  }
  else
  {
    throw Error(ErrorCode::kParse, "generator must be PHI or PSI, got '" + generator + "'");
  }
  auto const [p, q]  = load_pair(in);
  auto const report  = bound_report(make_generator(kind, FamilyParam{s}), p, q);
  std::string const j = to_json(report);
  if (format == "json")
  {
    out << j << '\n';
    return kExitOk;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  for (auto const &[key, value] : nlohmann::ordered_json::parse(j).items())
  {
    if (value.is_array())
    {
      rows.emplace_back(key, format_number(value[0].get<double>()) + " " + format_number(value[1].get<double>()));
    }
    else
    {
      rows.emplace_back(key, format_number(value.get<double>()));
    }
  }
  print_table(out, rows);
  return kExitOk;
}

int cmd_verify(SweepConfig const &config, std::string const &format, bool timing, std::ostream &out)
{
  SweepSummary const summary = run_sweep(config);
  if (format == "json")
  {
    out << to_json(summary, timing) << '\n';
  }
  else
  {
    for (auto const &c : summary.cases)
    {
      char line[160];
      std::snprintf(line, sizeof line, "%-12s %-10s %s  max_violation=%s  evaluations=%zu  violations=%zu\n",
                    std::string{c.id}.c_str(), std::string{to_string(c.severity)}.c_str(),
                    c.pass() ? "PASS" : "FAIL",
                    c.max_violation ? format_number(*c.max_violation).c_str() : "n/a", c.evaluations,
                    c.violations);
      out << line;
    }
    out << "samples=" << summary.samples << " seed=" << summary.seed
        << " assert_failures=" << summary.assert_failures() << '\n';
    if (timing && summary.elapsed_ms)
    {
      out << "elapsed_ms=" << format_number(*summary.elapsed_ms) << '\n';
    }
  }
  return verify_exit_code(summary);
}

int cmd_sweep_s(Inputs const &in, std::vector<double> const &grid, std::string const &format, std::ostream &out)
{
  auto const [p, q] = load_pair(in);
  std::vector<std::vector<double>> rows;
  for (double const s : grid)
  {
    FamilyParam const fp{s};
    rows.push_back({s, relative_information_type_s(fp, p, q), j_divergence_type_s(fp, p, q),
                    ag_js_divergence_type_s(fp, p, q)});
  }
  std::vector<std::string> const header = {"s", "Phi", "V", "W"};
  if (format == "csv")
  {
    print_csv(out, header, rows);
  }
  else if (format == "json")
  {
    auto arr = nlohmann::ordered_json::array();
    for (auto const &row : rows)
    {
      nlohmann::ordered_json j;
      for (std::size_t i = 0; i < header.size(); ++i)
      {
        j[header[i]] = round_output(row[i]);
      }
      arr.push_back(std::move(j));
    }
    out << arr.dump() << '\n';
  }
  else
  {
    char line[128];
    std::snprintf(line, sizeof line, "%-10s %-20s %-20s %s\n", "s", "Phi", "V", "W");
    out << line;
    for (auto const &row : rows)
    {
      std::snprintf(line, sizeof line, "%-10s %-20s %-20s %s\n", format_number(row[0]).c_str(),
                    format_number(row[1]).c_str(), format_number(row[2]).c_str(), format_number(row[3]).c_str());
      out << line;
    }
  }
  return kExitOk;
}

}  // namespace

int verify_exit_code(SweepSummary const &summary) noexcept
{
  return summary.assert_failures() > 0 ? kExitAssertFailure : kExitOk;
}

int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Symmetric divergence measures of type s: values, bounds and verification sweeps", "symdiv"};
  app.require_subcommand(1);

  std::string const default_grid = "-2,-1.5,-1,-0.5,0,0.5,1,1.5,2,3";

  // compute
  Inputs                compute_in;
  std::string           measures;
  std::optional<double> compute_s;
  std::string           compute_format = "json";
  auto *compute = app.add_subcommand("compute", "evaluate divergence measures for a pair of histograms");
  add_input_options(compute, compute_in);
  compute->add_option("--measure", measures, "comma list of measure names, or PHI/V/W with --s")->required();
  compute->add_option("--s", compute_s, "order s for PHI, V and W");
  compute->add_option("--format", compute_format)->check(CLI::IsMember({"json", "csv", "table"}));

  // bounds
  Inputs      bounds_in;
  std::string generator     = "PHI";
  double      bounds_s      = 0.0;
  std::string bounds_format = "json";
  auto *bounds = app.add_subcommand("bounds", "bound certificate for the phi_s or psi_s f-divergence");
  add_input_options(bounds, bounds_in);
  bounds->add_option("--generator", generator)->check(CLI::IsMember({"PHI", "PSI"}));
  bounds->add_option("--s", bounds_s, "generator order")->required();
  bounds->add_option("--format", bounds_format)->check(CLI::IsMember({"json", "table"}));

  // verify
  std::string dims_text = "2,3,5,10";
  std::string s_text    = default_grid;
  std::string t_text    = default_grid;
  SweepConfig config;
  std::string verify_format = "json";
  bool        timing        = false;
  auto *verify = app.add_subcommand("verify", "run the seeded inequality sweep");
  verify->add_option("--dims", dims_text, "comma list of dimensions");
  verify->add_option("--samples", config.samples_per_dim, "pairs per dimension");
  verify->add_option("--seed", config.seed);
  verify->add_option("--s-grid", s_text);
  verify->add_option("--t-grid", t_text);
  verify->add_option("--tol", config.tol, "relative slack");
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"json", "table"}));
  verify->add_flag("--timing", timing, "include elapsed_ms in the summary");

  // sweep-s
  Inputs      sweep_in;
  std::string sweep_grid   = default_grid;
  std::string sweep_format = "csv";
  auto *sweep = app.add_subcommand("sweep-s", "Phi_s, V_s and W_s over an s grid");
  add_input_options(sweep, sweep_in);
  sweep->add_option("--s-grid", sweep_grid);
  sweep->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "json", "table"}));

  std::vector<char const *> argv;
  for (auto const &a : args)
  {
    argv.push_back(a.c_str());
  }
  try
  {
    app.parse(static_cast<int>(argv.size()), argv.data());
  }
  catch (CLI::ParseError const &e)
  {
    int const code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try
  {
    if (*compute)
    {
      return cmd_compute(compute_in, measures, compute_s, compute_format, out);
    }
    if (*bounds)
    {
      return cmd_bounds(bounds_in, generator, bounds_s, bounds_format, out);
    }
    if (*verify)
    {
      config.dims   = parse_list<std::size_t>(dims_text, "--dims");
      config.s_grid = parse_list<double>(s_text, "--s-grid");
      config.t_grid = parse_list<double>(t_text, "--t-grid");
      return cmd_verify(config, verify_format, timing, out);
    }
    return cmd_sweep_s(sweep_in, parse_list<double>(sweep_grid, "--s-grid"), sweep_format, out);
  }
  catch (std::exception const &e)
  {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace symdiv
