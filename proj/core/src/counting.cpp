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

#include "isochain/counting.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "isochain/error.hpp"

namespace isochain {

namespace {

constexpr int kMaxBinomialRow = 62;
// a_n stays below 2^62 comfortably up to here.
constexpr int kMaxRecurrenceIndex = 56;

void check_index(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kIndexOutOfRange, what);
}

struct Histograms {
  std::vector<Count> height;
  std::vector<Count> fix;
};

Histograms histograms(FamilyId family, int n, int ceiling) {
  Histograms h;
  h.height.assign(static_cast<std::size_t>(n + 1), 0);
  h.fix.assign(static_cast<std::size_t>(n + 1), 0);
  for (const PartialInjection& a : enumerate_oracle(family, n, ceiling)) {
    ++h.height[static_cast<std::size_t>(a.height())];
    ++h.fix[static_cast<std::size_t>(fix_count(a))];
  }
  return h;
}

}  // namespace

std::vector<Count> count_by_height(FamilyId family, int n, int ceiling) {
  return histograms(family, n, ceiling).height;
}

std::vector<Count> count_by_fix(FamilyId family, int n, int ceiling) {
  return histograms(family, n, ceiling).fix;
}

Count order(FamilyId family, int n, int ceiling) {
  return enumerate_oracle(family, n, ceiling).size();
}

Count binomial(int n, int k) {
  check_index(n >= 0 && n <= kMaxBinomialRow,
              "binomial row " + std::to_string(n) + " unsupported");
  if (k < 0 || k > n) return 0;
  static const auto table = [] {
    std::array<std::array<Count, kMaxBinomialRow + 1>, kMaxBinomialRow + 1> t{};
    for (int r = 0; r <= kMaxBinomialRow; ++r) {
      t[r][0] = 1;
      for (int c = 1; c <= r; ++c) t[r][c] = t[r - 1][c - 1] + t[r - 1][c];
    }
    return t;
  }();
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Count closed_height_oddp(int n, int p) {
  check_index(n >= 0 && p >= 0 && p <= n,
              "F(n;p) needs 0 <= p <= n, got n=" + std::to_string(n) +
                  " p=" + std::to_string(p));
  if (p == 0) return 1;
  check_index(n + 1 <= kMaxBinomialRow, "n too large");
  return binomial(n + 1, p + 1);
}

Count closed_order_oddp(int n) {
  check_index(n >= 0 && n < kMaxBinomialRow, "n out of range for |ODDP_n|");
  return (Count{1} << (n + 1)) - static_cast<Count>(n + 1);
}

Count closed_order_ddp(int n) {
  check_index(n >= 0 && n <= kMaxRecurrenceIndex,
              "n out of range for |DDP_n|");
  std::vector<std::int64_t> a = {1, 2};
  for (int k = 2; k <= n; ++k) {
    const std::int64_t next = 3 * a[static_cast<std::size_t>(k - 1)] -
                              2 * a[static_cast<std::size_t>(k - 2)] -
                              (std::int64_t{1} << (k / 2)) + (k + 1);
    a.push_back(next);
  }
  return static_cast<Count>(a[static_cast<std::size_t>(n)]);
}

Count closed_fix(FamilyId family, int n, int m) {
  const bool ddp = family == FamilyId::kDecreasingIsometry;
  if (!ddp && family != FamilyId::kOrderPreservingDecreasingIsometry) {
    throw Error(ErrorCode::kUnsupportedFamily,
                "no fix closed form for " + std::string(display_name(family)));
  }
  check_index(n >= 0 && m >= 0 && m <= n,
              "F(n;m) needs 0 <= m <= n, got n=" + std::to_string(n) +
                  " m=" + std::to_string(m));
  if (m == 0) {
    if (n == 0) return 1;
    return ddp ? closed_order_ddp(n - 1) : closed_order_oddp(n - 1);
  }
  if (ddp && m == 1) {
    check_index(n <= kMaxBinomialRow, "n too large");
    if (n % 2 == 0) {
      const int a = n / 2;
      return (Count{1} << (a + 1)) - 2;
    }
    const int a = (n + 1) / 2;
    return 3 * (Count{1} << (a - 1)) - 2;
  }
  return binomial(n, m);
}

CountTriangle triangle(FamilyId family, Statistic stat, int max_n, int ceiling) {
  check_ceiling(max_n, ceiling);
  CountTriangle t{family, stat, {}, {}};
  for (int n = 0; n <= max_n; ++n) {
    Histograms h = histograms(family, n, ceiling);
    auto& row = stat == Statistic::kHeight ? h.height : h.fix;
    t.row_sums.push_back(std::accumulate(row.begin(), row.end(), Count{0}));
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

std::vector<std::vector<std::string>> cells(const CountTriangle& t) {
  const std::size_t width = t.rows.size();
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> header = {t.stat == Statistic::kHeight ? "n\\p" : "n\\m"};
  for (std::size_t c = 0; c < width; ++c) header.push_back(std::to_string(c));
  header.push_back("sum");
  out.push_back(std::move(header));
  for (std::size_t n = 0; n < width; ++n) {
    std::vector<std::string> line = {std::to_string(n)};
    for (std::size_t c = 0; c < width; ++c) {
      line.push_back(c < t.rows[n].size() ? std::to_string(t.rows[n][c]) : "");
    }
    line.push_back(std::to_string(t.row_sums[n]));
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace

std::string to_csv(const CountTriangle& t) {
  std::string out;
  for (const auto& line : cells(t)) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i != 0) out += ',';
      out += line[i];
    }
    out += '\n';
  }
  return out;
}

std::string to_text(const CountTriangle& t) {
  const auto grid = cells(t);
  std::vector<std::size_t> widths(grid.front().size(), 0);
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      widths[i] = std::max(widths[i], line[i].size());
    }
  }
  std::string out;
  for (const auto& line : grid) {
    std::string row;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i != 0) row += "  ";
      row += std::string(widths[i] - line[i].size(), ' ') + line[i];
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row + '\n';
  }
  return out;
}

}  // namespace isochain
