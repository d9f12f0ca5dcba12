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

#include <algorithm>
#include <vector>

#include "isochain/error.hpp"
#include "isochain/semigroup.hpp"

using namespace isochain;

namespace {

constexpr FamilyId kDDP = FamilyId::kDecreasingIsometry;
constexpr FamilyId kODDP = FamilyId::kOrderPreservingDecreasingIsometry;

PartialInjection pi(int n, std::initializer_list<MapsTo> p) { return make(n, p); }

}  // namespace

TEST_CASE("building small semigroups") {
  const auto s0 = build_semigroup(kODDP, 0);
  CHECK(s0.size() == 1);
  CHECK(s0.table.zero() == Index{0});
  CHECK(s0.table.identity() == Index{0});

  const auto s = build_semigroup(kDDP, 2);
  REQUIRE(s.size() == 5);
  CHECK(is_associative(s.table));
  CHECK(std::is_sorted(s.elements.begin(), s.elements.end()));
  for (Index i = 0; i < s.size(); ++i) CHECK(s.index_of(s.at(i)) == i);
  CHECK_FALSE(s.index_of(pi(2, {{1, 2}})).has_value());
  const auto i = s.index_of(pi(2, {{1, 1}})).value();
  const auto j = s.index_of(pi(2, {{2, 1}})).value();
  CHECK(s.at(s.table.product(j, i)) == pi(2, {{2, 1}}));
  CHECK(s.at(s.table.product(i, j)).empty());
}

TEST_CASE("closure and ceiling errors") {
  std::vector<PartialInjection> not_closed = {PartialInjection(2), pi(2, {{1, 2}, {2, 1}}),
                                              pi(2, {{1, 1}})};
  try {
    semigroup_from_elements(2, not_closed);
    FAIL("expected closure violation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kClosureViolation);
  }
  try {
    build_semigroup(kDDP, 9);
    FAIL("expected ceiling");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCeilingExceeded);
  }
  const auto s7 = build_semigroup(kDDP, 7);
  try {
    greens_classes(s7, GreenRelation::kL);
    FAIL("expected ceiling");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCeilingExceeded);
  }
}

TEST_CASE("Green's relations are trivial on the decreasing families") {
  for (FamilyId f : {kDDP, kODDP}) {
    for (int n = 0; n <= 5; ++n) {
      CAPTURE(n);
      const auto s = build_semigroup(f, n);
      CHECK(is_j_trivial(s));
      for (auto rel : {GreenRelation::kL, GreenRelation::kR, GreenRelation::kH,
                       GreenRelation::kD, GreenRelation::kJ}) {
        const auto classes = greens_classes(s, rel);
        CHECK(classes.size() == s.size());
      }
    }
  }
  // The full symmetric inverse monoid is the obvious counterexample.
  CHECK_FALSE(is_j_trivial(build_semigroup(FamilyId::kFullSymmetricInverse, 2)));
}

TEST_CASE("regularity fails from n = 2 onwards") {
  CHECK(is_regular(build_semigroup(kODDP, 1)).holds);
  CHECK(is_regular(build_semigroup(kDDP, 1)).holds);
  const auto v2 = is_regular(build_semigroup(kDDP, 2));
  REQUIRE_FALSE(v2.holds);
  CHECK((*v2.witness)[0] == pi(2, {{2, 1}}));
  const auto v3 = is_regular(build_semigroup(kDDP, 3));
  REQUIRE_FALSE(v3.holds);
  CHECK((*v3.witness)[0] == pi(3, {{2, 1}, {3, 2}}));
  CHECK_FALSE(is_regular(build_semigroup(kODDP, 4)).holds);
}

TEST_CASE("containment preorders and canonical idempotents") {
  const auto a = pi(3, {{2, 2}, {3, 1}});
  CHECK(plus_idem(a) == partial_identity(3, {2, 3}));
  CHECK(star_idem(a) == partial_identity(3, {1, 2}));
  CHECK(leq_rstar(pi(3, {{2, 1}}), a));
  CHECK_FALSE(leq_rstar(a, pi(3, {{2, 1}})));
  CHECK(leq_lstar(pi(3, {{3, 1}}), a));
  CHECK(leq_hstar(pi(3, {{2, 2}}), a));
  CHECK(leq_hstar(pi(3, {{3, 1}}), a));
  CHECK_FALSE(leq_hstar(pi(3, {{1, 1}}), a));
  CHECK_THROWS_AS(leq_rstar(pi(2, {{1, 1}}), a), Error);
}

TEST_CASE("equational starred relations match images and domains") {
  const auto s3 = build_semigroup(kDDP, 3);
  CHECK_FALSE(lstar_related_equational(s3, pi(3, {{2, 1}}), pi(3, {{3, 2}})));
  CHECK(rstar_related_equational(s3, pi(3, {{2, 1}}), pi(3, {{2, 2}})));

  for (FamilyId f : {kDDP, kODDP}) {
    for (int n = 0; n <= 4; ++n) {
      const auto s = build_semigroup(f, n);
      for (const auto& a : s.elements) {
        for (const auto& b : s.elements) {
          CHECK(lstar_related_equational(s, a, b) == (a.image_mask() == b.image_mask()));
          CHECK(rstar_related_equational(s, a, b) == (a.domain_mask() == b.domain_mask()));
        }
      }
    }
  }
}

TEST_CASE("translates decide the starred D relation") {
  const std::vector<int> a = {2, 3}, b = {1, 2}, c = {1, 3};
  CHECK(exists_op_isometry(a, b));
  CHECK_FALSE(exists_op_isometry(c, b));
  CHECK(exists_op_isometry(std::vector<int>{3, 1}, std::vector<int>{4, 2}));
  CHECK(exists_op_isometry(std::vector<int>{}, std::vector<int>{}));

  for (FamilyId f : {kDDP, kODDP}) {
    for (int n = 0; n <= 4; ++n) {
      CAPTURE(n);
      const auto s = build_semigroup(f, n);
      const auto classes = starred_classes(s, StarRelation::kDStar);
      for (const auto& cls : classes) {
        for (const auto& x : cls) {
          for (const auto& y : cls) CHECK(leq_dstar(x, y));
        }
      }
      // Distinct classes must be unrelated in one direction at least.
      for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
          const auto& x = classes[i].front();
          const auto& y = classes[j].front();
          CHECK_FALSE((leq_dstar(x, y) && leq_dstar(y, x)));
        }
      }
    }
  }
}

TEST_CASE("abundant, adequate and ample") {
  for (FamilyId f : {kDDP, kODDP}) {
    for (int n = 0; n <= 5; ++n) {
      CAPTURE(n);
      const auto s = build_semigroup(f, n);
      CHECK(is_abundant(s));
      CHECK(is_adequate(s));
      CHECK(is_ample(s).holds);
    }
  }
  // The defining identities on one concrete pair.
  const auto e = partial_identity(3, {1, 2});
  const auto a = pi(3, {{2, 2}, {3, 1}});
  CHECK(compose(e, a) == compose(a, star_idem(compose(e, a))));
  CHECK(compose(a, e) == compose(plus_idem(compose(a, e)), a));
}

TEST_CASE("0-E-unitary and categorical witnesses") {
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(is_zero_e_unitary(build_semigroup(kODDP, n)).holds);
  }
  const auto ddp3 = build_semigroup(kDDP, 3);
  const auto z = is_zero_e_unitary(ddp3);
  REQUIRE_FALSE(z.holds);
  CHECK((*z.witness)[0] == partial_identity(3, {1, 2}));
  CHECK((*z.witness)[1] == pi(3, {{2, 2}, {3, 1}}));

  CHECK(is_categorical(build_semigroup(kODDP, 1)).holds);
  // Already fails at n = 2: id{1} . id{1,2} . (2->1) = 0.
  const auto c2 = is_categorical(build_semigroup(kODDP, 2));
  REQUIRE_FALSE(c2.holds);
  CHECK((*c2.witness)[0] == partial_identity(2, {1}));
  CHECK((*c2.witness)[2] == pi(2, {{2, 1}}));
  const auto c = is_categorical(build_semigroup(kODDP, 3));
  REQUIRE_FALSE(c.holds);
  const auto& [x, y, w] = *c.witness;
  CHECK(x == partial_identity(3, {1, 2}));
  CHECK(y == partial_identity(3, {2, 3}));
  CHECK(w == partial_identity(3, {1, 3}));
  CHECK_FALSE(compose(x, y).empty());
  CHECK_FALSE(compose(y, w).empty());
  CHECK(compose(compose(x, y), w).empty());
}

TEST_CASE("table-level checks on a hand-built semigroup") {
  // Two-element left-zero band: ab = a.
  CayleyTable lz(2, {0, 0, 1, 1}, std::nullopt, std::nullopt);
  CHECK(is_associative(lz));
  CHECK(check_regular(lz).holds);
  CHECK_FALSE(is_j_trivial(lz));
  CHECK(greens_partition(lz, GreenRelation::kL).size() == 1);
  CHECK(greens_partition(lz, GreenRelation::kR).size() == 2);
  CayleyTable bad(2, {1, 0, 0, 0}, std::nullopt, std::nullopt);
  CHECK_FALSE(is_associative(bad));
}
