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

// Finite semigroups given by a Cayley table, and the structural decision
// procedures run on them: Green's relations, their starred analogues,
// regularity, abundance, adequacy, ampleness, 0-E-unitarity and
// categoricity at zero.
//
// Witness sweeps visit elements in the table's sweep order. For semigroups
// of partial injections that order is largest first: height descending,
// then canonical domain/image order. A 0-E-unitary violation (e, s) is the
// first found with e in the outer loop; a categorical violation (a, b, c) is
// the first found with a outermost, then c, then the connecting b.

#ifndef ISOCHAIN_SEMIGROUP_HPP_
#define ISOCHAIN_SEMIGROUP_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "isochain/family.hpp"
#include "isochain/partial_injection.hpp"

namespace isochain {

using Index = std::uint32_t;

// Largest carrier we are willing to tabulate (16M products).
inline constexpr std::size_t kMaxTableSize = 4096;

class CayleyTable {
 public:
  CayleyTable() = default;
  // products[a * size + b] = ab. An empty sweep order means 0..size-1.
  CayleyTable(std::size_t size, std::vector<Index> products,
              std::optional<Index> zero, std::optional<Index> identity,
              std::vector<Index> sweep_order = {});

  std::size_t size() const noexcept { return size_; }
  Index product(Index a, Index b) const noexcept {
    return products_[static_cast<std::size_t>(a) * size_ + b];
  }
  std::optional<Index> zero() const noexcept { return zero_; }
  std::optional<Index> identity() const noexcept { return identity_; }
  std::span<const Index> sweep_order() const noexcept { return sweep_; }

  bool is_idempotent(Index a) const noexcept { return product(a, a) == a; }
  bool is_zero(Index a) const noexcept { return zero_ && *zero_ == a; }
  std::vector<Index> idempotents() const;

 private:
  std::size_t size_ = 0;
  std::vector<Index> products_;
  std::optional<Index> zero_;
  std::optional<Index> identity_;
  std::vector<Index> sweep_;
};

template <typename T, std::size_t K>
struct Verdict {
  bool holds = true;
  std::optional<std::array<T, K>> witness;

  explicit operator bool() const noexcept { return holds; }
};

enum class GreenRelation { kL, kR, kH, kD, kJ };
enum class StarRelation { kLStar, kRStar, kHStar, kDStar };

// Classes ordered by their smallest member; members ascending.
using Partition = std::vector<std::vector<Index>>;

bool is_associative(const CayleyTable& t);

Partition greens_partition(const CayleyTable& t, GreenRelation rel);
bool is_j_trivial(const CayleyTable& t);
// Witness: an element a with no x such that axa = a.
Verdict<Index, 1> check_regular(const CayleyTable& t);

// a L* b iff ax = ay <=> bx = by for all x, y in S^1 (dually for R*). S^1
// adds an external identity only when the table has none.
bool lstar_related(const CayleyTable& t, Index a, Index b);
bool rstar_related(const CayleyTable& t, Index a, Index b);
// D* is the join of L* and R*, closed by breadth-first search.
Partition starred_partition(const CayleyTable& t, StarRelation rel);

// Witness: an element whose L*- or R*-class holds no idempotent.
Verdict<Index, 1> check_abundant(const CayleyTable& t);
// Abundant and idempotents commute; witness is a non-commuting pair when
// abundance holds.
Verdict<Index, 2> check_adequate(const CayleyTable& t);
// Adequate and ea = a(ea)*, ae = (ae)^+ a; witness (a, e).
Verdict<Index, 2> check_ample(const CayleyTable& t);
// Witness (e, s): e a nonzero idempotent, es a nonzero idempotent, s not.
Verdict<Index, 2> check_zero_e_unitary(const CayleyTable& t);
// Witness (a, b, c): abc = 0 while ab != 0 and bc != 0.
Verdict<Index, 3> check_categorical(const CayleyTable& t);

// ---------------------------------------------------------------------------
// Semigroups of partial injections

struct FiniteSemigroup {
  int n = 0;
  std::optional<FamilyId> family;
  std::vector<PartialInjection> elements;  // canonical order
  CayleyTable table;

  std::optional<Index> index_of(const PartialInjection& a) const;
  const PartialInjection& at(Index i) const { return elements.at(i); }
  std::size_t size() const noexcept { return elements.size(); }
};

// Tabulates a composition-closed set. Throws kClosureViolation when a
// product leaves the set and kCeilingExceeded above kMaxTableSize.
FiniteSemigroup semigroup_from_elements(int n,
                                        std::vector<PartialInjection> elements,
                                        std::optional<FamilyId> family = {});
FiniteSemigroup build_semigroup(FamilyId family, int n,
                                int ceiling = kDefaultCeiling);

// Per-operation ceilings on n (or |S| for categoricity).
inline constexpr int kGreensCeiling = 6;
inline constexpr int kAmpleCeiling = 5;
inline constexpr std::size_t kCategoricalMaxSize = 300;

std::vector<std::vector<PartialInjection>> greens_classes(
    const FiniteSemigroup& s, GreenRelation rel);
std::vector<std::vector<PartialInjection>> starred_classes(
    const FiniteSemigroup& s, StarRelation rel);

bool is_j_trivial(const FiniteSemigroup& s);
Verdict<PartialInjection, 1> is_regular(const FiniteSemigroup& s);
bool is_abundant(const FiniteSemigroup& s);
bool is_adequate(const FiniteSemigroup& s);
Verdict<PartialInjection, 2> is_ample(const FiniteSemigroup& s);
Verdict<PartialInjection, 2> is_zero_e_unitary(const FiniteSemigroup& s);
Verdict<PartialInjection, 3> is_categorical(const FiniteSemigroup& s);

bool lstar_related_equational(const FiniteSemigroup& s,
                              const PartialInjection& a,
                              const PartialInjection& b);
bool rstar_related_equational(const FiniteSemigroup& s,
                              const PartialInjection& a,
                              const PartialInjection& b);

// Dom/Im containment preorders. Throw kChainMismatch across chains.
bool leq_rstar(const PartialInjection& a, const PartialInjection& b);
bool leq_lstar(const PartialInjection& a, const PartialInjection& b);
bool leq_hstar(const PartialInjection& a, const PartialInjection& b);

// a^+ = identity on Dom a; a^* = identity on Im a.
PartialInjection plus_idem(const PartialInjection& a);
PartialInjection star_idem(const PartialInjection& a);

// True when B is a translate of A, i.e. some order-preserving isometry maps
// A onto B. Points need not be sorted.
bool exists_op_isometry(std::span<const int> a, std::span<const int> b);
bool leq_dstar(const PartialInjection& a, const PartialInjection& b);

}  // namespace isochain

#endif  // ISOCHAIN_SEMIGROUP_HPP_
