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

#include "isochain/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "isochain/counting.hpp"
#include "isochain/rees_quotient.hpp"
#include "isochain/semigroup.hpp"

namespace isochain {

namespace {

constexpr FamilyId kDDP = FamilyId::kDecreasingIsometry;
constexpr FamilyId kODDP = FamilyId::kOrderPreservingDecreasingIsometry;
constexpr FamilyId kDP = FamilyId::kIsometry;
constexpr FamilyId kODP = FamilyId::kOrderPreservingIsometry;
constexpr FamilyId kIMinus = FamilyId::kDecreasingInjective;

using Failure = std::optional<std::string>;

class Runner {
 public:
  Runner(std::string suite, std::vector<CheckResult>& out)
      : suite_(std::move(suite)), out_(out) {}

  void check(std::string name, const std::function<Failure()>& body,
             std::string summary = {}) {
    Failure f = body();
    out_.push_back({suite_, std::move(name), !f.has_value(), f ? *f : summary});
  }

 private:
  std::string suite_;
  std::vector<CheckResult>& out_;
};

std::string at_n(int n) { return "n=" + std::to_string(n); }

// First element of `family` on chains 0..max_n violating `law`.
Failure for_all(FamilyId family, int max_n, int ceiling,
                const std::function<bool(const PartialInjection&)>& law) {
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& a : enumerate_oracle(family, n, ceiling)) {
      if (!law(a)) return "counterexample " + to_string(a);
    }
  }
  return std::nullopt;
}

std::string join_counts(const std::vector<Count>& v) {
  std::string s;
  for (Count c : v) s += (s.empty() ? "" : ",") + std::to_string(c);
  return s;
}

// ---------------------------------------------------------------------------

void lemmas(int max_n, int ceiling, std::vector<CheckResult>& out) {
  Runner r("lemmas", out);
  const int small = std::min(max_n, 4);

  r.check("canonical_form_roundtrip", [&] {
    return for_all(FamilyId::kFullSymmetricInverse, std::min(max_n, 6), ceiling,
                   [](const PartialInjection& a) {
                     return make(a.chain_size(), a.pairs()) == a &&
                            parse_element(to_string(a)) == a;
                   });
  });

  r.check("composition_associative", [&]() -> Failure {
    for (FamilyId f : {kDDP, kODDP, kIMinus}) {
      for (int n = 0; n <= small; ++n) {
        const auto el = enumerate_oracle(f, n, ceiling);
        for (const auto& a : el) {
          for (const auto& b : el) {
            const auto ab = compose(a, b);
            for (const auto& c : el) {
              if (compose(ab, c) != compose(a, compose(b, c))) {
                return "(" + to_string(a) + ")(" + to_string(b) + ")(" +
                       to_string(c) + ")";
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  });

  r.check("fix_is_zero_one_or_height", [&] {
    return for_all(kDP, max_n, ceiling, [](const PartialInjection& a) {
      const int f = fix_count(a);
      return f == 0 || f == 1 || f == a.height();
    });
  });

  r.check("points_below_a_fixed_point_are_fixed", [&] {
    return for_all(kDDP, max_n, ceiling, [](const PartialInjection& a) {
      const std::uint32_t fixed = fixed_points_mask(a);
      if (fixed == 0) return true;
      const int highest_fixed = 32 - std::countl_zero(fixed);
      for (const auto& p : a.pairs()) {
        if (p.x < highest_fixed && p.y != p.x) return false;
      }
      return true;
    });
  });

  r.check("single_fixed_point_bounds_domain_below", [&] {
    return for_all(kDDP, max_n, ceiling, [](const PartialInjection& a) {
      const std::uint32_t fixed = fixed_points_mask(a);
      if (std::popcount(fixed) != 1) return true;
      const int i = std::countr_zero(fixed) + 1;
      return a.domain().front() >= i;
    });
  });

  r.check("end_fixed_point_forces_partial_identity", [&] {
    return for_all(kDP, max_n, ceiling, [](const PartialInjection& a) {
      const int n = a.chain_size();
      if (a.apply(1) == 1 || (n >= 1 && a.apply(n) == n)) {
        return is_partial_identity(a);
      }
      return true;
    });
  });

  r.check("order_preserving_top_point_fixed", [&] {
    return for_all(kODP, max_n, ceiling, [](const PartialInjection& a) {
      const int n = a.chain_size();
      if (n >= 1 && a.in_domain(n) && a.in_image(n)) return a.apply(n) == n;
      return true;
    });
  });

  r.check("order_preserving_with_fixed_point_is_idempotent", [&] {
    return for_all(kODP, max_n, ceiling, [](const PartialInjection& a) {
      return fix_count(a) == 0 || is_idempotent(a);
    });
  });

  r.check("order_preserving_decreasing_has_constant_shift", [&] {
    return for_all(kODDP, max_n, ceiling, [](const PartialInjection& a) {
      const auto ps = a.pairs();
      return std::all_of(ps.begin(), ps.end(), [&](const MapsTo& p) {
        return p.x - p.y == ps.front().x - ps.front().y;
      });
    });
  });

  r.check("single_interior_fixed_point_reflects", [&] {
    return for_all(kDDP, max_n, ceiling, [](const PartialInjection& a) {
      const std::uint32_t fixed = fixed_points_mask(a);
      if (std::popcount(fixed) != 1) return true;
      const int i = std::countr_zero(fixed) + 1;
      if (i <= 1 || i >= a.chain_size()) return true;
      const auto ps = a.pairs();
      return std::all_of(ps.begin(), ps.end(),
                         [&](const MapsTo& p) { return p.x + p.y == 2 * i; });
    });
  });

  r.check("isometry_is_monotone", [&] {
    return for_all(kDP, max_n, ceiling, [](const PartialInjection& a) {
      return is_order_preserving(a) || is_order_reversing(a);
    });
  });

  r.check("decreasing_isometry_is_translation_or_reflection", [&] {
    return for_all(kDDP, max_n, ceiling, [](const PartialInjection& a) {
      const auto ps = a.pairs();
      if (is_order_preserving(a)) {
        return std::all_of(ps.begin(), ps.end(), [&](const MapsTo& p) {
          return p.x - p.y == ps.front().x - ps.front().y;
        });
      }
      const int c = ps.front().x + ps.front().y;
      const int lo = std::max((c + 1) / 2, 1);
      const int hi = std::min(c - 1, a.chain_size());
      return std::all_of(ps.begin(), ps.end(), [&](const MapsTo& p) {
        return p.x + p.y == c && p.x >= lo && p.x <= hi;
      });
    });
  });

  r.check("family_containments", [&]() -> Failure {
    for (int n = 0; n <= std::min(max_n, 6); ++n) {
      for (const auto& a : enumerate_oracle(FamilyId::kFullSymmetricInverse, n, ceiling)) {
        const bool ddp = member(kDDP, a);
        const bool oddp = member(kODDP, a);
        const bool dp = member(kDP, a);
        const bool odp = member(kODP, a);
        const bool dec = member(kIMinus, a);
        if ((oddp && !ddp) || (ddp && !dp) || (oddp && !odp) ||
            ddp != (dp && dec) || oddp != (odp && dec)) {
          return "counterexample " + to_string(a);
        }
      }
    }
    return std::nullopt;
  });

  r.check("closed_under_composition", [&]() -> Failure {
    for (FamilyId f : {kDDP, kODDP, kIMinus}) {
      for (int n = 0; n <= std::min(max_n, 5); ++n) {
        const auto el = enumerate_oracle(f, n, ceiling);
        for (const auto& a : el) {
          for (const auto& b : el) {
            if (!member(f, compose(a, b))) {
              return std::string(display_name(f)) + ": " + to_string(a) +
                     " * " + to_string(b);
            }
          }
        }
      }
    }
    return std::nullopt;
  });

  r.check("fast_generator_matches_oracle", [&]() -> Failure {
    for (FamilyId f : {kDDP, kODDP}) {
      for (int n = 0; n <= max_n; ++n) {
        if (enumerate_fast(f, n) != enumerate_oracle(f, n, ceiling)) {
          return std::string(display_name(f)) + " " + at_n(n);
        }
      }
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------

void formulas(int max_n, int ceiling, std::vector<CheckResult>& out) {
  Runner r("formulas", out);

  r.check("oddp_order_closed_form", [&]() -> Failure {
    for (int n = 0; n <= max_n; ++n) {
      if (order(kODDP, n, ceiling) != closed_order_oddp(n)) return at_n(n);
    }
    return std::nullopt;
  });

  r.check("ddp_order_recurrence", [&]() -> Failure {
    for (int n = 0; n <= max_n; ++n) {
      if (order(kDDP, n, ceiling) != closed_order_ddp(n)) return at_n(n);
    }
    return std::nullopt;
  });

  r.check("oddp_height_binomial", [&]() -> Failure {
    for (int n = 0; n <= max_n; ++n) {
      const auto h = count_by_height(kODDP, n, ceiling);
      for (int p = 0; p <= n; ++p) {
        if (h[static_cast<std::size_t>(p)] != closed_height_oddp(n, p)) {
          return at_n(n) + " p=" + std::to_string(p);
        }
      }
    }
    return std::nullopt;
  });

  r.check("oddp_height_pascal_recurrence", [&]() -> Failure {
    for (int n = 2; n <= max_n; ++n) {
      const auto cur = count_by_height(kODDP, n, ceiling);
      const auto prev = count_by_height(kODDP, n - 1, ceiling);
      for (int p = 2; p <= n; ++p) {
        const auto up = static_cast<std::size_t>(p);
        const Count rhs = prev[up - 1] + (up < prev.size() ? prev[up] : 0);
        if (cur[up] != rhs) return at_n(n) + " p=" + std::to_string(p);
      }
    }
    return std::nullopt;
  });

  r.check("fix_distribution_closed_forms", [&]() -> Failure {
    for (FamilyId f : {kDDP, kODDP}) {
      for (int n = 0; n <= max_n; ++n) {
        const auto h = count_by_fix(f, n, ceiling);
        for (int m = 0; m <= n; ++m) {
          if (h[static_cast<std::size_t>(m)] != closed_fix(f, n, m)) {
            return std::string(display_name(f)) + " " + at_n(n) +
                   " m=" + std::to_string(m);
          }
        }
      }
    }
    return std::nullopt;
  });

  r.check("fix_free_column_is_previous_order", [&]() -> Failure {
    for (FamilyId f : {kDDP, kODDP, kIMinus}) {
      for (int n = 1; n <= max_n; ++n) {
        if (count_by_fix(f, n, ceiling)[0] != order(f, n - 1, ceiling)) {
          return std::string(display_name(f)) + " " + at_n(n);
        }
      }
    }
    return std::nullopt;
  });

  r.check("row_sums_agree", [&]() -> Failure {
    for (FamilyId f : {kDDP, kODDP, kIMinus}) {
      for (int n = 0; n <= max_n; ++n) {
        const auto h = count_by_height(f, n, ceiling);
        const auto x = count_by_fix(f, n, ceiling);
        const Count o = order(f, n, ceiling);
        if (std::accumulate(h.begin(), h.end(), Count{0}) != o ||
            std::accumulate(x.begin(), x.end(), Count{0}) != o) {
          return std::string(display_name(f)) + " " + at_n(n) + " heights " +
                 join_counts(h) + " fixes " + join_counts(x);
        }
      }
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------

bool all_singletons(const Partition& p) {
  return std::all_of(p.begin(), p.end(),
                     [](const auto& cls) { return cls.size() == 1; });
}

void greens(int max_n, int ceiling, std::vector<CheckResult>& out) {
  Runner r("greens", out);
  const int starred_n = std::min(max_n, 4);

  r.check("greens_relations_trivial", [&]() -> Failure {
    for (FamilyId f : {kDDP, kODDP}) {
      for (int n = 0; n <= max_n; ++n) {
        const auto s = build_semigroup(f, n, ceiling);
        for (GreenRelation rel : {GreenRelation::kL, GreenRelation::kR, GreenRelation::kH,
                                  GreenRelation::kD, GreenRelation::kJ}) {
          if (!all_singletons(greens_partition(s.table, rel))) {
            return std::string(display_name(f)) + " " + at_n(n);
          }
        }
      }
    }
    return std::nullopt;
  });

  r.check("idempotents_are_partial_identities", [&]() -> Failure {
    for (FamilyId f : {kDDP, kODDP}) {
      for (int n = 0; n <= max_n; ++n) {
        const auto s = build_semigroup(f, n, ceiling);
        const auto idem = s.table.idempotents();
        if (idem.size() != (std::size_t{1} << n)) {
          return std::string(display_name(f)) + " " + at_n(n) + " has " +
                 std::to_string(idem.size()) + " idempotents";
        }
        for (Index e : idem) {
          if (!is_partial_identity(s.at(e))) return to_string(s.at(e));
        }
      }
    }
    return std::nullopt;
  });

  r.check("starred_relations_match_domain_and_image", [&]() -> Failure {
    for (FamilyId f : {kDDP, kODDP}) {
      for (int n = 0; n <= starred_n; ++n) {
        const auto s = build_semigroup(f, n, ceiling);
        for (Index a = 0; a < s.size(); ++a) {
          for (Index b = 0; b < s.size(); ++b) {
            const auto& x = s.at(a);
            const auto& y = s.at(b);
            const bool l = lstar_related(s.table, a, b);
            const bool rr = rstar_related(s.table, a, b);
            if (l != (leq_lstar(x, y) && leq_lstar(y, x)) ||
                rr != (leq_rstar(x, y) && leq_rstar(y, x))) {
              return std::string(display_name(f)) + " " + to_string(x) + " vs " +
                     to_string(y);
            }
          }
        }
      }
    }
    return std::nullopt;
  });

  r.check("plus_and_star_idempotents", [&]() -> Failure {
    for (FamilyId f : {kDDP, kODDP}) {
      for (int n = 0; n <= starred_n; ++n) {
        const auto s = build_semigroup(f, n, ceiling);
        for (const auto& a : s.elements) {
          const auto plus = plus_idem(a);
          const auto star = star_idem(a);
          if (!s.index_of(plus) || !s.index_of(star) ||
              !rstar_related_equational(s, a, plus) ||
              !lstar_related_equational(s, a, star)) {
            return to_string(a);
          }
        }
      }
    }
    return std::nullopt;
  });

  r.check("dstar_join_matches_translates", [&]() -> Failure {
    for (int n = 0; n <= max_n; ++n) {
      const auto s = build_semigroup(kODDP, n, ceiling);
      const auto join = starred_partition(s.table, StarRelation::kDStar);
      std::vector<std::size_t> cls(s.size());
      for (std::size_t c = 0; c < join.size(); ++c) {
        for (Index i : join[c]) cls[i] = c;
      }
      for (Index a = 0; a < s.size(); ++a) {
        for (Index b = 0; b < s.size(); ++b) {
          const bool sym = leq_dstar(s.at(a), s.at(b)) && leq_dstar(s.at(b), s.at(a));
          if (sym != (cls[a] == cls[b])) {
            return to_string(s.at(a)) + " vs " + to_string(s.at(b));
          }
        }
      }
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------

void structure(int max_n, int ceiling, std::vector<CheckResult>& out) {
  Runner r("structure", out);
  const int j_n = std::min(max_n, 5);
  const int small = std::min(max_n, 4);

  r.check("j_trivial", [&]() -> Failure {
    for (FamilyId f : {kDDP, kODDP}) {
      for (int n = 0; n <= j_n; ++n) {
        if (!is_j_trivial(build_semigroup(f, n, ceiling))) {
          return std::string(display_name(f)) + " " + at_n(n);
        }
      }
    }
    return std::nullopt;
  });

  r.check("non_regular", [&]() -> Failure {
    for (FamilyId f : {kDDP, kODDP}) {
      for (int n = 0; n <= small; ++n) {
        const bool regular = is_regular(build_semigroup(f, n, ceiling)).holds;
        if (regular != (n <= 1)) return std::string(display_name(f)) + " " + at_n(n);
      }
    }
    return std::nullopt;
  });

  r.check("ample", [&]() -> Failure {
    for (FamilyId f : {kDDP, kODDP}) {
      for (int n = 0; n <= small; ++n) {
        const auto v = is_ample(build_semigroup(f, n, ceiling));
        if (!v.holds) return std::string(display_name(f)) + " " + at_n(n);
      }
    }
    return std::nullopt;
  });

  r.check("oddp_zero_e_unitary", [&]() -> Failure {
    for (int n = 0; n <= max_n; ++n) {
      const auto v = is_zero_e_unitary(build_semigroup(kODDP, n, ceiling));
      if (!v.holds) {
        return at_n(n) + " witness " + to_string((*v.witness)[0]) + " / " +
               to_string((*v.witness)[1]);
      }
    }
    return std::nullopt;
  });

  r.check("ddp_not_zero_e_unitary", [&]() -> Failure {
    for (int n = 0; n <= small; ++n) {
      const auto v = is_zero_e_unitary(build_semigroup(kDDP, n, ceiling));
      if (v.holds != (n < 3)) return at_n(n);
      if (n == 3) {
        const auto e = partial_identity(3, {1, 2});
        const auto s = make(3, {{2, 2}, {3, 1}});
        if ((*v.witness)[0] != e || (*v.witness)[1] != s) {
          return "witness " + to_string((*v.witness)[0]) + " / " +
                 to_string((*v.witness)[1]);
        }
      }
    }
    return std::nullopt;
  });

  r.check("oddp_not_categorical", [&]() -> Failure {
    for (int n = 3; n <= small; ++n) {
      const auto v = is_categorical(build_semigroup(kODDP, n, ceiling));
      if (v.holds) return at_n(n);
      if (n == 3) {
        const auto& w = *v.witness;
        if (w[0] != partial_identity(3, {1, 2}) || w[1] != partial_identity(3, {2, 3}) ||
            w[2] != partial_identity(3, {1, 3})) {
          return "witness " + to_string(w[0]) + " / " + to_string(w[1]) + " / " +
                 to_string(w[2]);
        }
      }
    }
    return std::nullopt;
  });

  r.check("quotients_zero_e_unitary_and_categorical", [&]() -> Failure {
    for (int n = 1; n <= max_n; ++n) {
      for (int p = 1; p <= n; ++p) {
        const auto q = rees_quotient(n, p);
        if (q.nonzero_elements().size() != closed_height_oddp(n, p) ||
            !is_associative(q.table()) || !is_zero_e_unitary(q).holds ||
            !is_categorical(q).holds) {
          return "Q(" + std::to_string(n) + "," + std::to_string(p) + ")";
        }
      }
    }
    return std::nullopt;
  });
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) noexcept {
  for (Suite s : {Suite::kLemmas, Suite::kFormulas, Suite::kGreens,
                  Suite::kStructure, Suite::kAll}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(Suite suite) noexcept {
  switch (suite) {
    case Suite::kLemmas:
      return "lemmas";
    case Suite::kFormulas:
      return "formulas";
    case Suite::kGreens:
      return "greens";
    case Suite::kStructure:
      return "structure";
    case Suite::kAll:
      return "all";
  }
  return "?";
}

int suite_cap(Suite suite) noexcept {
  switch (suite) {
    case Suite::kLemmas:
    case Suite::kFormulas:
      return 7;
    case Suite::kGreens:
      return 5;
    case Suite::kStructure:
      return 6;
    case Suite::kAll:
      return 7;
  }
  return 0;
}

std::vector<CheckResult> run_suite(Suite suite, int max_n, int ceiling) {
  std::vector<CheckResult> out;
  auto clamp = [&](Suite s) { return std::clamp(max_n, 0, std::min(suite_cap(s), ceiling)); };
  if (suite == Suite::kLemmas || suite == Suite::kAll) {
    lemmas(clamp(Suite::kLemmas), ceiling, out);
  }
  if (suite == Suite::kFormulas || suite == Suite::kAll) {
    formulas(clamp(Suite::kFormulas), ceiling, out);
  }
  if (suite == Suite::kGreens || suite == Suite::kAll) {
    greens(clamp(Suite::kGreens), ceiling, out);
  }
  if (suite == Suite::kStructure || suite == Suite::kAll) {
    structure(clamp(Suite::kStructure), ceiling, out);
  }
  return out;
}

}  // namespace isochain
