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

// The isochain command line, callable in-process for tests.

#ifndef ISOCHAIN_TOOLS_CLI_HPP_
#define ISOCHAIN_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "isochain/counting.hpp"
#include "isochain/partial_injection.hpp"

namespace isochain::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Structured element form: {"n":3,"pairs":[[2,2],[3,1]]}.
std::string element_to_json(const PartialInjection& a);
PartialInjection element_from_json(std::string_view text);

// One record per triangle row.
std::string triangle_to_json_lines(const CountTriangle& t);

// One CSV row per element under the header "n,height,fix,pairs".
std::string elements_to_csv(const std::vector<PartialInjection>& elements, int n);

}  // namespace isochain::cli

#endif  // ISOCHAIN_TOOLS_CLI_HPP_
