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

// Acceptance runner. Prints one PASS or FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "isochain/counting.hpp"
#include "isochain/family.hpp"
#include "isochain/rees_quotient.hpp"
#include "isochain/semigroup.hpp"

using namespace isochain;

namespace {

constexpr FamilyId kDDP = FamilyId::kDecreasingIsometry;
constexpr FamilyId kODDP = FamilyId::kOrderPreservingDecreasingIsometry;
constexpr FamilyId kIMinus = FamilyId::kDecreasingInjective;

// Collects the first failure message of a criterion.
class Probe {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // 0 = untimed
  std::function<void(Probe&)> body;
};

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(ISOCHAIN_FIXTURE_DIR) + "/" + name, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string tag(const char* what, int n) { return std::string(what) + " n=" + std::to_string(n); }

void order_oddp(Probe& p) {
  const std::vector<Count> expected = {1, 2, 5, 12, 27, 58, 121, 248};
  for (int n = 0; n <= 7; ++n) {
    const Count brute = order(kODDP, n);
    p.expect(brute == expected[static_cast<std::size_t>(n)], tag("table value", n));
    p.expect(brute == (Count{1} << (n + 1)) - static_cast<Count>(n + 1), tag("2^(n+1)-(n+1)", n));
    p.expect(brute == closed_order_oddp(n), tag("closed_order_oddp", n));
  }
}

void order_ddp(Probe& p) {
  const std::vector<Count> expected = {1, 2, 5, 13, 30, 66, 137, 279};
  for (int n = 0; n <= 7; ++n) {
    const Count brute = order(kDDP, n);
    p.expect(brute == expected[static_cast<std::size_t>(n)], tag("table value", n));
    p.expect(brute == closed_order_ddp(n), tag("recurrence", n));
  }
}

void triangles(Probe& p) {
  struct Case {
    const char* family;
    const char* stat;
    const char* fixture;
  };
  for (const Case& c : {Case{"oddp", "height", "oddp_height.csv"},
                        Case{"oddp", "fix", "oddp_fix.csv"}, Case{"ddp", "fix", "ddp_fix.csv"}}) {
    std::ostringstream out, err;
    const int code = cli::run({"table", "--family", c.family, "--stat", c.stat, "--max-n", "7"},
                              out, err);
    const std::string want = slurp(c.fixture);
    p.expect(code == 0 && !want.empty() && out.str() == want, c.fixture);
  }
}

void closed_forms(Probe& p) {
  for (int n = 1; n <= 7; ++n) {
    const auto h = count_by_height(kODDP, n);
    for (int k = 1; k <= n; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      p.expect(h[uk] == binomial(n + 1, k + 1), tag("height binomial", n));
      p.expect(closed_height_oddp(n, k) == h[uk], tag("closed_height_oddp", n));
      if (k >= 2) {
        const auto prev = count_by_height(kODDP, n - 1);
        const Count rhs = prev[uk - 1] + (uk < prev.size() ? prev[uk] : 0);
        p.expect(h[uk] == rhs, tag("Pascal recurrence", n));
      }
    }
    const auto fo = count_by_fix(kODDP, n);
    const auto fd = count_by_fix(kDDP, n);
    for (int m = 1; m <= n; ++m) {
      const auto um = static_cast<std::size_t>(m);
      p.expect(fo[um] == binomial(n, m), tag("ODDP fix binomial", n));
      if (m >= 2) p.expect(fd[um] == binomial(n, m), tag("DDP fix binomial", n));
    }
    // Single-fixed-point column of DDP, split by parity.
    const int half = (n + 1) / 2;
    const Count f1 = n % 2 == 0 ? (Count{1} << (half + 1)) - 2 : 3 * (Count{1} << (half - 1)) - 2;
    p.expect(fd[1] == f1, tag("DDP single fixed point", n));
    for (int m = 0; m <= n; ++m) {
      const auto um = static_cast<std::size_t>(m);
      p.expect(closed_fix(kODDP, n, m) == fo[um], tag("closed_fix ODDP", n));
      p.expect(closed_fix(kDDP, n, m) == fd[um], tag("closed_fix DDP", n));
    }
  }
}

void fix_free_column(Probe& p) {
  for (FamilyId f : {kDDP, kODDP, kIMinus}) {
    for (int n = 1; n <= 7; ++n) {
      p.expect(count_by_fix(f, n)[0] == order(f, n - 1),
               tag(std::string(cli_id(f)).c_str(), n));
    }
  }
}

void lemma_suite(Probe& p) {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& a : enumerate_oracle(kDDP, n)) {
      const int fx = fix_count(a);
      p.expect(fx == 0 || fx == 1 || fx == a.height(), "fix in {0,1,height}: " + to_string(a));
      if (fx == 1) {
        int i = 0;
        for (int x = 1; x <= n; ++x) {
          if (a.in_domain(x) && a.apply(x) == x) i = x;
        }
        for (const auto& [x, y] : a.pairs()) {
          p.expect(x + y == 2 * i, "reflection law: " + to_string(a));
        }
      }
      if (fx >= 1 && (a.in_domain(1) && a.apply(1) == 1)) {
        // A fixed point at the bottom of the chain forces the identity.
        p.expect(is_partial_identity(a), "boundary fix: " + to_string(a));
      }
    }
    for (const auto& a : enumerate_oracle(kODDP, n)) {
      const auto pairs = a.pairs();
      for (const auto& [x, y] : pairs) {
        p.expect(x - y == pairs.front().x - pairs.front().y, "constant shift: " + to_string(a));
      }
      if (a.in_domain(n) && a.apply(n) == n) {
        p.expect(is_partial_identity(a), "top boundary fix: " + to_string(a));
      }
    }
  }
  for (int n = 0; n <= 5; ++n) {
    for (const auto& a : enumerate_oracle(FamilyId::kIsometry, n)) {
      p.expect(is_order_preserving(a) || is_order_reversing(a), "monotone isometry: " + to_string(a));
    }
  }
}

void structure_suite(Probe& p) {
  for (FamilyId f : {kDDP, kODDP}) {
    for (int n = 0; n <= 5; ++n) {
      const auto s = build_semigroup(f, n);
      p.expect(is_j_trivial(s), tag("J-trivial", n));
      if (n > 4) continue;
      p.expect(is_regular(s).holds == (n < 2), tag("regularity", n));
      p.expect(is_ample(s).holds, tag("ample", n));
      if (f == kODDP) p.expect(is_zero_e_unitary(s).holds, tag("ODDP 0-E-unitary", n));
    }
  }
  const auto z = is_zero_e_unitary(build_semigroup(kDDP, 3));
  p.expect(!z.holds && z.witness && (*z.witness)[0] == partial_identity(3, {1, 2}) &&
               (*z.witness)[1] == make(3, {{2, 2}, {3, 1}}),
           "DDP_3 0-E-unitary witness");
  const auto c = is_categorical(build_semigroup(kODDP, 3));
  p.expect(!c.holds && c.witness && (*c.witness)[0] == partial_identity(3, {1, 2}) &&
               (*c.witness)[1] == partial_identity(3, {2, 3}) &&
               (*c.witness)[2] == partial_identity(3, {1, 3}),
           "ODDP_3 categorical witness");
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto q = rees_quotient(n, k);
      p.expect(is_categorical(q).holds && is_zero_e_unitary(q).holds,
               "Q(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
  }
}

void oracle_equivalence(Probe& p) {
  for (FamilyId f : {kDDP, kODDP}) {
    for (int n = 0; n <= 7; ++n) {
      p.expect(enumerate_fast(f, n) == enumerate_oracle(f, n), tag("fast generator", n));
    }
    for (int n = 0; n <= 4; ++n) {
      const auto s = build_semigroup(f, n);
      for (const auto& a : s.elements) {
        for (const auto& b : s.elements) {
          p.expect(lstar_related_equational(s, a, b) == (a.image_mask() == b.image_mask()),
                   tag("L* vs image", n));
          p.expect(rstar_related_equational(s, a, b) == (a.domain_mask() == b.domain_mask()),
                   tag("R* vs domain", n));
        }
      }
    }
  }
  for (int n = 0; n <= 5; ++n) {
    const auto s = build_semigroup(kODDP, n);
    const auto classes = starred_classes(s, StarRelation::kDStar);
    std::vector<std::size_t> class_of(s.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (const auto& a : classes[c]) class_of[*s.index_of(a)] = c;
    }
    for (Index i = 0; i < s.size(); ++i) {
      for (Index j = 0; j < s.size(); ++j) {
        const bool sym = leq_dstar(s.at(i), s.at(j)) && leq_dstar(s.at(j), s.at(i));
        p.expect(sym == (class_of[i] == class_of[j]), tag("D* join", n));
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "order of ODDP_n, n <= 7", 5.0, order_oddp},
      {2, "order of DDP_n, n <= 7", 5.0, order_ddp},
      {3, "count triangles match reference tables", 0.0, triangles},
      {4, "closed forms match brute force", 0.0, closed_forms},
      {5, "fix-free column equals previous order", 0.0, fix_free_column},
      {6, "element-level laws, n <= 7", 0.0, lemma_suite},
      {7, "structural properties and witnesses", 60.0, structure_suite},
      {8, "fast generator and starred relations agree with oracles", 0.0, oracle_equivalence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Probe probe;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(probe);
    } catch (const std::exception& e) {
      probe.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      probe.expect(false, "took " + std::to_string(secs) + " s");
    }
    std::ostringstream line;
    line << (probe.ok() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ("
         << static_cast<int>(secs * 1000) << " ms)";
    if (!probe.ok()) line << " -- " << probe.failure();
    std::cout << line.str() << '\n';
    if (!probe.ok()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
