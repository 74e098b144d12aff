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

#include "symdiv/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace symdiv {

std::string format_number(double x)
{
  if (x == 0.0)
  {
    return "0";  // no "-0"
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*g", kOutputDigits, x);
  return buf;
}

double round_output(double x)
{
  if (!std::isfinite(x))
  {
    return x;
  }
  return std::strtod(format_number(x).c_str(), nullptr);
}

}  // namespace symdiv
