// Copyright 2026 The isochain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isochain/error.hpp"

namespace isochain {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOutOfRange:
      return "OutOfRange";
    case ErrorCode::kNotFunctional:
      return "NotFunctional";
    case ErrorCode::kNotInjective:
      return "NotInjective";
    case ErrorCode::kChainMismatch:
      return "ChainMismatch";
    case ErrorCode::kCeilingExceeded:
      return "CeilingExceeded";
    case ErrorCode::kUnsupportedFamily:
      return "UnsupportedFamily";
    case ErrorCode::kIndexOutOfRange:
      return "IndexOutOfRange";
    case ErrorCode::kClosureViolation:
      return "ClosureViolation";
    case ErrorCode::kParseError:
      return "ParseError";
  }
  return "Unknown";
}

}  // namespace isochain
