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

// Named invariant suites over exhaustive enumerations. Each suite clamps
// the requested chain size to its own documented maximum.

#ifndef ISOCHAIN_VERIFY_HPP_
#define ISOCHAIN_VERIFY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isochain/family.hpp"

namespace isochain {

enum class Suite { kLemmas, kFormulas, kGreens, kStructure, kAll };

std::optional<Suite> parse_suite(std::string_view name) noexcept;
std::string_view to_string(Suite suite) noexcept;

// Largest n a suite ever enumerates, whatever the caller asks for.
int suite_cap(Suite suite) noexcept;

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;  // counterexample or summary
};

std::vector<CheckResult> run_suite(Suite suite, int max_n,
                                   int ceiling = kDefaultCeiling);

}  // namespace isochain

#endif  // ISOCHAIN_VERIFY_HPP_
