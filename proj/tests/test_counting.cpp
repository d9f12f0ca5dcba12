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

#include <doctest.h>

#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "isochain/counting.hpp"
#include "isochain/error.hpp"
#include "support/naive_oracle.hpp"

using namespace isochain;

namespace {

constexpr FamilyId kDDP = FamilyId::kDecreasingIsometry;
constexpr FamilyId kODDP = FamilyId::kOrderPreservingDecreasingIsometry;

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(ISOCHAIN_FIXTURE_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected isochain::Error");
  return ErrorCode::kParseError;
}

}  // namespace

TEST_CASE("height histograms") {
  CHECK(count_by_height(kODDP, 4) == std::vector<Count>{1, 10, 10, 5, 1});
  CHECK(count_by_height(kODDP, 7) == std::vector<Count>{1, 28, 56, 70, 56, 28, 8, 1});

  // No closed form exists for DDP heights; the reference model supplies it.
  std::vector<Count> naive_heights(4, 0);
  for (const auto& m : naive::ddp(3)) ++naive_heights[m.size()];
  CHECK(naive_heights == std::vector<Count>{1, 6, 5, 1});
  CHECK(count_by_height(kDDP, 3) == naive_heights);
}

TEST_CASE("fix histograms") {
  CHECK(count_by_fix(kODDP, 5) == std::vector<Count>{27, 5, 10, 10, 5, 1});
  CHECK(count_by_fix(kDDP, 7) == std::vector<Count>{137, 22, 21, 35, 35, 21, 7, 1});
  CHECK(count_by_fix(kDDP, 0) == std::vector<Count>{1});
}

TEST_CASE("orders") {
  CHECK(order(kODDP, 6) == 121);
  CHECK(order(kDDP, 5) == 66);
  for (FamilyId f : kAllFamilies) CHECK(order(f, 0) == 1);
  CHECK(code_of([] { order(kDDP, 9); }) == ErrorCode::kCeilingExceeded);
}

TEST_CASE("binomials by Pascal recursion") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(62, 31) == 465428353255261088ULL);
  CHECK_THROWS_AS(binomial(63, 1), Error);
}

TEST_CASE("closed height formula for ODDP") {
  CHECK(closed_height_oddp(4, 2) == 10);
  for (int n = 1; n <= 20; ++n) {
    CHECK(closed_height_oddp(n, n) == 1);
    CHECK(closed_height_oddp(n, 1) == binomial(n + 1, 2));
    CHECK(closed_height_oddp(n, 0) == 1);
  }
  CHECK(code_of([] { closed_height_oddp(3, 4); }) == ErrorCode::kIndexOutOfRange);
  CHECK(code_of([] { closed_height_oddp(3, -1); }) == ErrorCode::kIndexOutOfRange);
}

TEST_CASE("closed orders") {
  CHECK(closed_order_oddp(0) == 1);
  CHECK(closed_order_oddp(3) == 12);
  CHECK(closed_order_oddp(7) == 248);
  CHECK(closed_order_ddp(2) == 5);
  CHECK(closed_order_ddp(4) == 30);
  CHECK(closed_order_ddp(7) == 279);
  const std::vector<Count> ddp = {1, 2, 5, 13, 30, 66, 137, 279};
  for (int n = 0; n < 8; ++n) CHECK(closed_order_ddp(n) == ddp[static_cast<std::size_t>(n)]);
  // The row sums of the closed fix distribution reproduce the recurrence well
  // past the brute-force range.
  for (int n = 1; n <= 40; ++n) {
    Count sum = 0;
    for (int m = 0; m <= n; ++m) sum += closed_fix(kDDP, n, m);
    CHECK(sum == closed_order_ddp(n));
  }
  CHECK_THROWS_AS(closed_order_ddp(-1), Error);
}

TEST_CASE("closed fix formulas") {
  CHECK(closed_fix(kDDP, 6, 1) == 14);
  CHECK(closed_fix(kDDP, 7, 1) == 22);
  CHECK(closed_fix(kODDP, 4, 0) == 12);
  CHECK(closed_fix(kODDP, 0, 0) == 1);
  CHECK(closed_fix(kDDP, 0, 0) == 1);
  CHECK(closed_fix(kODDP, 5, 1) == 5);
  CHECK(closed_fix(kDDP, 5, 3) == 10);
  CHECK(code_of([] { closed_fix(FamilyId::kIsometry, 3, 1); }) ==
        ErrorCode::kUnsupportedFamily);
  CHECK(code_of([] { closed_fix(kDDP, 3, 4); }) == ErrorCode::kIndexOutOfRange);
}

TEST_CASE("closed forms agree with brute force up to n = 7") {
  for (int n = 0; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(order(kODDP, n) == closed_order_oddp(n));
    CHECK(order(kDDP, n) == closed_order_ddp(n));
    const auto h = count_by_height(kODDP, n);
    for (int p = 0; p <= n; ++p) CHECK(h[static_cast<std::size_t>(p)] == closed_height_oddp(n, p));
    for (FamilyId f : {kDDP, kODDP}) {
      const auto fx = count_by_fix(f, n);
      for (int m = 0; m <= n; ++m) CHECK(fx[static_cast<std::size_t>(m)] == closed_fix(f, n, m));
    }
  }
}

TEST_CASE("triangle layout and fixtures") {
  const auto t = triangle(kODDP, Statistic::kHeight, 7);
  REQUIRE(t.rows.size() == 8);
  for (std::size_t n = 0; n < t.rows.size(); ++n) {
    CHECK(t.rows[n].size() == n + 1);
    CHECK(t.row_sums[n] == std::accumulate(t.rows[n].begin(), t.rows[n].end(), Count{0}));
  }
  CHECK(to_csv(t) == slurp("oddp_height.csv"));
  CHECK(to_csv(triangle(kODDP, Statistic::kFix, 7)) == slurp("oddp_fix.csv"));
  CHECK(to_csv(triangle(kDDP, Statistic::kFix, 7)) == slurp("ddp_fix.csv"));

  const auto small = triangle(kDDP, Statistic::kHeight, 2);
  CHECK(to_csv(small) == "n\\p,0,1,2,sum\n0,1,,,1\n1,1,1,,2\n2,1,3,1,5\n");
  CHECK(to_text(small) ==
        "n\\p  0  1  2  sum\n"
        "  0  1          1\n"
        "  1  1  1       2\n"
        "  2  1  3  1    5\n");
  CHECK(code_of([] { triangle(kDDP, Statistic::kFix, 9); }) == ErrorCode::kCeilingExceeded);
}
