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

// Height and fix distributions, their closed forms, and count triangles.
//
// Brute-force counts come from `enumerate_oracle`; closed forms never touch
// the enumerator so the two can be checked against each other.

#ifndef ISOCHAIN_COUNTING_HPP_
#define ISOCHAIN_COUNTING_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "isochain/family.hpp"

namespace isochain {

using Count = std::uint64_t;

enum class Statistic { kHeight, kFix };

// F(n;p), p = 0..n.
std::vector<Count> count_by_height(FamilyId family, int n,
                                   int ceiling = kDefaultCeiling);
// F(n;m), m = 0..n.
std::vector<Count> count_by_fix(FamilyId family, int n,
                                int ceiling = kDefaultCeiling);
Count order(FamilyId family, int n, int ceiling = kDefaultCeiling);

// Exact Pascal-table binomial; 0 when k is outside 0..n. n <= 62.
Count binomial(int n, int k);

// ODDP: F(n;0) = 1 and F(n;p) = C(n+1, p+1) for p >= 1.
Count closed_height_oddp(int n, int p);
// |ODDP_n| = 2^(n+1) - (n+1).
Count closed_order_oddp(int n);
// |DDP_n| via a_n = 3a_{n-1} - 2a_{n-2} - 2^floor(n/2) + n + 1, a_0 = 1,
// a_1 = 2.
Count closed_order_ddp(int n);
// Fix distribution for DDP and ODDP:
//   m = 0         the order of the family on a chain one shorter (1 at n = 0)
//   m = 1 (DDP)   2^(a+1) - 2 for n = 2a, 3*2^(a-1) - 2 for n = 2a-1
//   otherwise     C(n, m)
Count closed_fix(FamilyId family, int n, int m);

struct CountTriangle {
  FamilyId family;
  Statistic stat;
  std::vector<std::vector<Count>> rows;  // rows[n] has n+1 entries
  std::vector<Count> row_sums;
};

CountTriangle triangle(FamilyId family, Statistic stat, int max_n,
                       int ceiling = kDefaultCeiling);

// CSV with header "n\p,0,..,max_n,sum" (or n\m); cells right of the
// diagonal are left blank. LF line endings, no quoting.
std::string to_csv(const CountTriangle& t);
// Right-aligned columns separated by two spaces.
std::string to_text(const CountTriangle& t);

}  // namespace isochain

#endif  // ISOCHAIN_COUNTING_HPP_
