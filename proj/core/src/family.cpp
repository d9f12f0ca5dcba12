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

#include "isochain/family.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "isochain/error.hpp"

namespace isochain {

std::string_view cli_id(FamilyId family) noexcept {
  switch (family) {
    case FamilyId::kFullSymmetricInverse:
      return "i";
    case FamilyId::kDecreasingInjective:
      return "iminus";
    case FamilyId::kIsometry:
      return "dp";
    case FamilyId::kOrderPreservingIsometry:
      return "odp";
    case FamilyId::kDecreasingIsometry:
      return "ddp";
    case FamilyId::kOrderPreservingDecreasingIsometry:
      return "oddp";
  }
  return "?";
}

std::string_view display_name(FamilyId family) noexcept {
  switch (family) {
    case FamilyId::kFullSymmetricInverse:
      return "I";
    case FamilyId::kDecreasingInjective:
      return "I^-";
    case FamilyId::kIsometry:
      return "DP";
    case FamilyId::kOrderPreservingIsometry:
      return "ODP";
    case FamilyId::kDecreasingIsometry:
      return "DDP";
    case FamilyId::kOrderPreservingDecreasingIsometry:
      return "ODDP";
  }
  return "?";
}

std::optional<FamilyId> parse_family(std::string_view id) noexcept {
  for (FamilyId f : kAllFamilies) {
    if (cli_id(f) == id) return f;
  }
  return std::nullopt;
}

bool member(FamilyId family, const PartialInjection& a) noexcept {
  switch (family) {
    case FamilyId::kFullSymmetricInverse:
      return true;
    case FamilyId::kDecreasingInjective:
      return is_order_decreasing(a);
    case FamilyId::kIsometry:
      return is_isometry(a);
    case FamilyId::kOrderPreservingIsometry:
      return is_isometry(a) && is_order_preserving(a);
    case FamilyId::kDecreasingIsometry:
      return is_isometry(a) && is_order_decreasing(a);
    case FamilyId::kOrderPreservingDecreasingIsometry:
      return is_isometry(a) && is_order_decreasing(a) && is_order_preserving(a);
  }
  return false;
}

void check_ceiling(int n, int ceiling) {
  if (n < 0) {
    throw Error(ErrorCode::kOutOfRange, "negative chain size " + std::to_string(n));
  }
  if (n > ceiling || n > kMaxChainSize) {
    throw Error(ErrorCode::kCeilingExceeded,
                "n=" + std::to_string(n) + " exceeds enumeration ceiling " +
                    std::to_string(std::min(ceiling, kMaxChainSize)));
  }
}

namespace {

std::vector<int> points_of(std::uint32_t mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

std::vector<PartialInjection> enumerate_oracle(FamilyId family, int n,
                                               int ceiling) {
  check_ceiling(n, ceiling);
  std::vector<PartialInjection> out;
  std::vector<MapsTo> pairs;
  for (int k = 0; k <= n; ++k) {
    for_each_subset_of_size(n, k, [&](std::uint32_t dom_mask) {
      const std::vector<int> dom = points_of(dom_mask);
      for_each_subset_of_size(n, k, [&](std::uint32_t img_mask) {
        std::vector<int> img = points_of(img_mask);
        do {
          pairs.clear();
          for (std::size_t i = 0; i < dom.size(); ++i) {
            pairs.push_back({dom[i], img[i]});
          }
          PartialInjection a = make(n, pairs);
          if (member(family, a)) out.push_back(a);
        } while (std::next_permutation(img.begin(), img.end()));
      });
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartialInjection> enumerate_fast(FamilyId family, int n) {
  if (family != FamilyId::kDecreasingIsometry &&
      family != FamilyId::kOrderPreservingDecreasingIsometry) {
    throw Error(ErrorCode::kUnsupportedFamily,
                "no structural generator for " + std::string(display_name(family)));
  }
  check_ceiling(n, kMaxChainSize);

  std::vector<PartialInjection> out;
  out.emplace_back(n);
  std::vector<MapsTo> pairs;

  // Down-translations x -> x - shift, domain a non-empty subset of {shift+1..n}.
  for (int shift = 0; shift < n; ++shift) {
    const int width = n - shift;
    for (std::uint32_t sub = 1; sub < (std::uint32_t{1} << width); ++sub) {
      pairs.clear();
      for (int x : points_of(sub << shift)) pairs.push_back({x, x - shift});
      out.push_back(make(n, pairs));
    }
  }

  if (family == FamilyId::kDecreasingIsometry) {
    // Reflections x -> c - x. Decreasing needs x >= c/2, landing in the chain
    // needs x <= c-1; singletons are already counted as translations.
    for (int c = 2; c <= 2 * n; ++c) {
      const int lo = std::max((c + 1) / 2, 1);
      const int hi = std::min(c - 1, n);
      const int width = hi - lo + 1;
      if (width < 2) continue;
      for (std::uint32_t sub = 1; sub < (std::uint32_t{1} << width); ++sub) {
        if (std::popcount(sub) < 2) continue;
        pairs.clear();
        for (int x : points_of(sub << (lo - 1))) pairs.push_back({x, c - x});
        out.push_back(make(n, pairs));
      }
    }
  }

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace isochain
