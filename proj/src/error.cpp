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

#include "symdiv/error.hpp"

namespace symdiv {

std::string_view to_string(ErrorCode code) noexcept
{
  switch (code)
  {
  case ErrorCode::kNonpositiveWeight:
    return "NONPOSITIVE_WEIGHT";
  case ErrorCode::kNotNormalized:
    return "NOT_NORMALIZED";
  case ErrorCode::kNonFinite:
    return "NON_FINITE";
  case ErrorCode::kDimensionTooSmall:
    return "DIMENSION_TOO_SMALL";
  case ErrorCode::kDimensionMismatch:
    return "DIMENSION_MISMATCH";
  case ErrorCode::kParameterOutOfRange:
    return "PARAMETER_OUT_OF_RANGE";
  case ErrorCode::kDegenerateBounds:
    return "DEGENERATE_BOUNDS";
  case ErrorCode::kNonpositiveArgument:
    return "NONPOSITIVE_ARGUMENT";
  case ErrorCode::kUnsupportedOrder:
    return "UNSUPPORTED_ORDER";
  case ErrorCode::kGeneratorDomain:
    return "GENERATOR_DOMAIN";
  case ErrorCode::kMissingDerivative:
    return "MISSING_DERIVATIVE";
  case ErrorCode::kNonconvexReference:
    return "NONCONVEX_REFERENCE";
  case ErrorCode::kEmptyGrid:
    return "EMPTY_GRID";
  case ErrorCode::kInvalidConfig:
    return "INVALID_CONFIG";
  case ErrorCode::kParse:
    return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, std::string const &message)
  : std::runtime_error(std::string(to_string(code)) + ": " + message)
  , code_(code)
{}

}  // namespace symdiv
