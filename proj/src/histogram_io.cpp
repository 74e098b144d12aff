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

#include "symdiv/histogram_io.hpp"

#include "symdiv/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace symdiv {

namespace {

std::string_view trim(std::string_view s)
{
  auto const first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
  {
    return {};
  }
  auto const last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view token, std::size_t line)
{
  if (!token.empty() && token.front() == '+')
  {
    token.remove_prefix(1);
  }
  double value{};
  auto const [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
  {
    throw Error(ErrorCode::kParse,
                "line " + std::to_string(line) + ": '" + std::string(token) + "' is not a number");
  }
  return value;
}

std::vector<double> parse_json(std::string_view text)
{
  nlohmann::json doc;
  try
  {
    doc = nlohmann::json::parse(text);
  }
  catch (nlohmann::json::parse_error const &e)
  {
    throw Error(ErrorCode::kParse, e.what());
  }
  if (!doc.is_object() || !doc.contains("weights") || !doc["weights"].is_array())
  {
    throw Error(ErrorCode::kParse, "expected an object with a \"weights\" array");
  }
  std::vector<double> out;
  for (auto const &v : doc["weights"])
  {
    if (!v.is_number())
    {
      throw Error(ErrorCode::kParse, "\"weights\" must contain only numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<double> parse_csv(std::string_view text)
{
  std::vector<double> out;
  std::size_t         line_no = 0;
  while (!text.empty())
  {
    auto const      eol  = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    line = trim(line);
    if (line.empty())
    {
      continue;
    }
    out.push_back(parse_number(line, line_no));
  }
  return out;
}

}  // namespace

std::vector<double> parse_histogram(std::string_view text)
{
  auto const body = trim(text);
  if (body.empty())
  {
    throw Error(ErrorCode::kParse, "empty histogram input");
  }
  return body.front() == '{' ? parse_json(body) : parse_csv(body);
}

std::vector<double> read_histogram_file(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw Error(ErrorCode::kParse, "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_histogram(buf.str());
}

}  // namespace symdiv
