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

// The six transformation families and their enumerators.
//
//   I       full symmetric inverse monoid
//   I^-     order-decreasing partial injections
//   DP      partial isometries
//   ODP     order-preserving partial isometries
//   DDP     order-decreasing partial isometries      (DP and I^-)
//   ODDP    order-preserving DDP                     (ODP and I^-)

#ifndef ISOCHAIN_FAMILY_HPP_
#define ISOCHAIN_FAMILY_HPP_

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "isochain/partial_injection.hpp"

namespace isochain {

enum class FamilyId {
  kFullSymmetricInverse,
  kDecreasingInjective,
  kIsometry,
  kOrderPreservingIsometry,
  kDecreasingIsometry,
  kOrderPreservingDecreasingIsometry,
};

inline constexpr std::array<FamilyId, 6> kAllFamilies = {
    FamilyId::kFullSymmetricInverse,
    FamilyId::kDecreasingInjective,
    FamilyId::kIsometry,
    FamilyId::kOrderPreservingIsometry,
    FamilyId::kDecreasingIsometry,
    FamilyId::kOrderPreservingDecreasingIsometry,
};

// Default largest n the brute-force enumerator accepts; |I_8| = 1,441,729.
inline constexpr int kDefaultCeiling = 8;

// Stable lowercase ids used on the command line: i, iminus, dp, odp, ddp, oddp.
std::string_view cli_id(FamilyId family) noexcept;
std::optional<FamilyId> parse_family(std::string_view id) noexcept;
// Display name, e.g. "ODDP".
std::string_view display_name(FamilyId family) noexcept;

bool member(FamilyId family, const PartialInjection& a) noexcept;

// Throws kCeilingExceeded when n > ceiling.
void check_ceiling(int n, int ceiling);

// Every partial injection on 1..n, filtered by `member` and sorted
// canonically. Generation walks domain subsets (by size, then lex), image
// subsets likewise, and bijections in lexicographic order.
std::vector<PartialInjection> enumerate_oracle(FamilyId family, int n,
                                               int ceiling = kDefaultCeiling);

// Structural generator for DDP and ODDP: down-translations x -> x-k on any
// domain inside {k+1..n}, plus (DDP only) reflections x -> c-x with at least
// two domain points. Throws kUnsupportedFamily for the other families.
std::vector<PartialInjection> enumerate_fast(FamilyId family, int n);

// Calls fn(mask) for every k-subset of {1..n} in lexicographic order of the
// ascending point sequences.
template <typename Fn>
void for_each_subset_of_size(int n, int k, Fn&& fn);

}  // namespace isochain

#include "isochain/detail/subsets.hpp"

#endif  // ISOCHAIN_FAMILY_HPP_
