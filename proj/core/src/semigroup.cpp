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

#include "isochain/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "isochain/error.hpp"

namespace isochain {

CayleyTable::CayleyTable(std::size_t size, std::vector<Index> products,
                         std::optional<Index> zero,
                         std::optional<Index> identity,
                         std::vector<Index> sweep_order)
    : size_(size),
      products_(std::move(products)),
      zero_(zero),
      identity_(identity),
      sweep_(std::move(sweep_order)) {
  if (products_.size() != size_ * size_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "Cayley table needs " + std::to_string(size_ * size_) +
                    " products, got " + std::to_string(products_.size()));
  }
  if (sweep_.empty()) {
    sweep_.resize(size_);
    std::iota(sweep_.begin(), sweep_.end(), Index{0});
  }
}

std::vector<Index> CayleyTable::idempotents() const {
  std::vector<Index> out;
  for (Index a = 0; a < size_; ++a) {
    if (is_idempotent(a)) out.push_back(a);
  }
  return out;
}

namespace {

using Labels = std::vector<std::size_t>;

// Relabels so class ids appear in order of their smallest member.
Partition partition_from_labels(const Labels& labels) {
  std::map<std::size_t, std::size_t> renumber;
  Partition out;
  for (Index a = 0; a < labels.size(); ++a) {
    auto [it, fresh] = renumber.try_emplace(labels[a], out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(a);
  }
  return out;
}

template <typename Key>
Labels labels_by_key(const std::vector<Key>& keys) {
  std::map<Key, std::size_t> ids;
  Labels out;
  out.reserve(keys.size());
  for (const Key& k : keys) {
    out.push_back(ids.try_emplace(k, ids.size()).first->second);
  }
  return out;
}

using Bits = std::vector<std::uint64_t>;

struct BitSet {
  explicit BitSet(std::size_t n) : words((n + 63) / 64, 0) {}
  void set(Index i) { words[i / 64] |= std::uint64_t{1} << (i % 64); }
  Bits words;
};

Labels right_ideal_labels(const CayleyTable& t) {
  std::vector<Bits> keys;
  for (Index a = 0; a < t.size(); ++a) {
    BitSet s(t.size());
    s.set(a);
    for (Index x = 0; x < t.size(); ++x) s.set(t.product(a, x));
    keys.push_back(std::move(s.words));
  }
  return labels_by_key(keys);
}

Labels left_ideal_labels(const CayleyTable& t) {
  std::vector<Bits> keys;
  for (Index a = 0; a < t.size(); ++a) {
    BitSet s(t.size());
    s.set(a);
    for (Index x = 0; x < t.size(); ++x) s.set(t.product(x, a));
    keys.push_back(std::move(s.words));
  }
  return labels_by_key(keys);
}

Labels two_sided_ideal_labels(const CayleyTable& t) {
  std::vector<Bits> keys;
  for (Index a = 0; a < t.size(); ++a) {
    BitSet s(t.size());
    s.set(a);
    for (Index x = 0; x < t.size(); ++x) {
      const Index xa = t.product(x, a);
      s.set(xa);
      s.set(t.product(a, x));
      for (Index y = 0; y < t.size(); ++y) s.set(t.product(xa, y));
    }
    keys.push_back(std::move(s.words));
  }
  return labels_by_key(keys);
}

Labels meet(const Labels& a, const Labels& b) {
  std::vector<std::pair<std::size_t, std::size_t>> keys;
  for (std::size_t i = 0; i < a.size(); ++i) keys.emplace_back(a[i], b[i]);
  return labels_by_key(keys);
}

// Smallest equivalence containing both: breadth-first over the union of the
// two class structures.
Labels join(const Labels& a, const Labels& b) {
  const std::size_t n = a.size();
  const Partition pa = partition_from_labels(a);
  const Partition pb = partition_from_labels(b);
  const Labels ca = labels_by_key(a);
  const Labels cb = labels_by_key(b);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  Labels out(n, kUnset);
  std::size_t next = 0;
  for (Index start = 0; start < n; ++start) {
    if (out[start] != kUnset) continue;
    std::deque<Index> queue = {start};
    out[start] = next;
    while (!queue.empty()) {
      const Index x = queue.front();
      queue.pop_front();
      for (const auto* cls : {&pa[ca[x]], &pb[cb[x]]}) {
        for (Index y : *cls) {
          if (out[y] == kUnset) {
            out[y] = next;
            queue.push_back(y);
          }
        }
      }
    }
    ++next;
  }
  return out;
}

// Kernel of x -> ax (left = true) or x -> xa over S^1, written as
// first-occurrence labels so equal kernels give equal vectors.
std::vector<Index> kernel_signature(const CayleyTable& t, Index a, bool left) {
  std::vector<Index> values;
  values.reserve(t.size() + 1);
  for (Index x = 0; x < t.size(); ++x) {
    values.push_back(left ? t.product(a, x) : t.product(x, a));
  }
  if (!t.identity()) values.push_back(a);
  std::map<Index, Index> first;
  std::vector<Index> sig;
  sig.reserve(values.size());
  for (Index v : values) {
    sig.push_back(first.try_emplace(v, static_cast<Index>(first.size())).first->second);
  }
  return sig;
}

Labels lstar_labels(const CayleyTable& t) {
  std::vector<std::vector<Index>> keys;
  for (Index a = 0; a < t.size(); ++a) keys.push_back(kernel_signature(t, a, true));
  return labels_by_key(keys);
}

Labels rstar_labels(const CayleyTable& t) {
  std::vector<std::vector<Index>> keys;
  for (Index a = 0; a < t.size(); ++a) keys.push_back(kernel_signature(t, a, false));
  return labels_by_key(keys);
}

constexpr Index kNone = static_cast<Index>(-1);

// For each element, the idempotent of its class (first one by index), or
// kNone.
std::vector<Index> class_idempotent(const CayleyTable& t, const Labels& labels) {
  std::map<std::size_t, Index> idem;
  for (Index e = 0; e < t.size(); ++e) {
    if (t.is_idempotent(e)) idem.try_emplace(labels[e], e);
  }
  std::vector<Index> out(t.size(), kNone);
  for (Index a = 0; a < t.size(); ++a) {
    if (auto it = idem.find(labels[a]); it != idem.end()) out[a] = it->second;
  }
  return out;
}

}  // namespace

bool is_associative(const CayleyTable& t) {
  for (Index a = 0; a < t.size(); ++a) {
    for (Index b = 0; b < t.size(); ++b) {
      const Index ab = t.product(a, b);
      for (Index c = 0; c < t.size(); ++c) {
        if (t.product(ab, c) != t.product(a, t.product(b, c))) return false;
      }
    }
  }
  return true;
}

Partition greens_partition(const CayleyTable& t, GreenRelation rel) {
  switch (rel) {
    case GreenRelation::kL:
      return partition_from_labels(left_ideal_labels(t));
    case GreenRelation::kR:
      return partition_from_labels(right_ideal_labels(t));
    case GreenRelation::kH:
      return partition_from_labels(meet(left_ideal_labels(t), right_ideal_labels(t)));
    case GreenRelation::kD:
      return partition_from_labels(join(left_ideal_labels(t), right_ideal_labels(t)));
    case GreenRelation::kJ:
      return partition_from_labels(two_sided_ideal_labels(t));
  }
  return {};
}

bool is_j_trivial(const CayleyTable& t) {
  return greens_partition(t, GreenRelation::kJ).size() == t.size();
}

Verdict<Index, 1> check_regular(const CayleyTable& t) {
  for (Index a : t.sweep_order()) {
    bool found = false;
    for (Index x = 0; x < t.size() && !found; ++x) {
      found = t.product(t.product(a, x), a) == a;
    }
    if (!found) return {false, std::array<Index, 1>{a}};
  }
  return {};
}

bool lstar_related(const CayleyTable& t, Index a, Index b) {
  return kernel_signature(t, a, true) == kernel_signature(t, b, true);
}

bool rstar_related(const CayleyTable& t, Index a, Index b) {
  return kernel_signature(t, a, false) == kernel_signature(t, b, false);
}

Partition starred_partition(const CayleyTable& t, StarRelation rel) {
  switch (rel) {
    case StarRelation::kLStar:
      return partition_from_labels(lstar_labels(t));
    case StarRelation::kRStar:
      return partition_from_labels(rstar_labels(t));
    case StarRelation::kHStar:
      return partition_from_labels(meet(lstar_labels(t), rstar_labels(t)));
    case StarRelation::kDStar:
      return partition_from_labels(join(lstar_labels(t), rstar_labels(t)));
  }
  return {};
}

Verdict<Index, 1> check_abundant(const CayleyTable& t) {
  const auto lidem = class_idempotent(t, lstar_labels(t));
  const auto ridem = class_idempotent(t, rstar_labels(t));
  for (Index a : t.sweep_order()) {
    if (lidem[a] == kNone || ridem[a] == kNone) {
      return {false, std::array<Index, 1>{a}};
    }
  }
  return {};
}

Verdict<Index, 2> check_adequate(const CayleyTable& t) {
  if (!check_abundant(t)) return {false, std::nullopt};
  std::vector<Index> idem;
  for (Index e : t.sweep_order()) {
    if (t.is_idempotent(e)) idem.push_back(e);
  }
  for (Index e : idem) {
    for (Index f : idem) {
      if (t.product(e, f) != t.product(f, e)) {
        return {false, std::array<Index, 2>{e, f}};
      }
    }
  }
  return {};
}

Verdict<Index, 2> check_ample(const CayleyTable& t) {
  if (!check_adequate(t)) return {false, std::nullopt};
  // Adequate: each L*/R*-class holds exactly one idempotent.
  const auto star = class_idempotent(t, lstar_labels(t));
  const auto plus = class_idempotent(t, rstar_labels(t));
  for (Index e : t.sweep_order()) {
    if (!t.is_idempotent(e)) continue;
    for (Index a : t.sweep_order()) {
      const Index ea = t.product(e, a);
      const Index ae = t.product(a, e);
      if (ea != t.product(a, star[ea]) || ae != t.product(plus[ae], a)) {
        return {false, std::array<Index, 2>{a, e}};
      }
    }
  }
  return {};
}

Verdict<Index, 2> check_zero_e_unitary(const CayleyTable& t) {
  auto nonzero_idempotent = [&](Index x) {
    return t.is_idempotent(x) && !t.is_zero(x);
  };
  for (Index e : t.sweep_order()) {
    if (!nonzero_idempotent(e)) continue;
    for (Index s : t.sweep_order()) {
      if (!nonzero_idempotent(s) && nonzero_idempotent(t.product(e, s))) {
        return {false, std::array<Index, 2>{e, s}};
      }
    }
  }
  return {};
}

Verdict<Index, 3> check_categorical(const CayleyTable& t) {
  if (!t.zero()) return {};
  for (Index a : t.sweep_order()) {
    if (t.is_zero(a)) continue;
    for (Index c : t.sweep_order()) {
      if (t.is_zero(c)) continue;
      for (Index b : t.sweep_order()) {
        const Index ab = t.product(a, b);
        const Index bc = t.product(b, c);
        if (!t.is_zero(ab) && !t.is_zero(bc) && t.is_zero(t.product(ab, c))) {
          return {false, std::array<Index, 3>{a, b, c}};
        }
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

std::optional<Index> FiniteSemigroup::index_of(const PartialInjection& a) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), a);
  if (it == elements.end() || *it != a) return std::nullopt;
  return static_cast<Index>(it - elements.begin());
}

FiniteSemigroup semigroup_from_elements(int n,
                                        std::vector<PartialInjection> elements,
                                        std::optional<FamilyId> family) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.size() > kMaxTableSize) {
    throw Error(ErrorCode::kCeilingExceeded,
                std::to_string(elements.size()) + " elements exceed the table limit " +
                    std::to_string(kMaxTableSize));
  }
  for (const auto& a : elements) {
    if (a.chain_size() != n) {
      throw Error(ErrorCode::kChainMismatch,
                  to_string(a) + " does not live on a chain of size " + std::to_string(n));
    }
  }

  FiniteSemigroup s;
  s.n = n;
  s.family = family;
  s.elements = std::move(elements);

  const std::size_t size = s.elements.size();
  std::vector<Index> products;
  products.reserve(size * size);
  for (const auto& a : s.elements) {
    for (const auto& b : s.elements) {
      const PartialInjection ab = compose(a, b);
      const auto idx = s.index_of(ab);
      if (!idx) {
        throw Error(ErrorCode::kClosureViolation,
                    to_string(a) + " * " + to_string(b) + " = " + to_string(ab) +
                        " leaves the element set");
      }
      products.push_back(*idx);
    }
  }

  std::vector<Index> sweep(size);
  std::iota(sweep.begin(), sweep.end(), Index{0});
  std::stable_sort(sweep.begin(), sweep.end(), [&](Index x, Index y) {
    return s.elements[x].height() > s.elements[y].height();
  });

  s.table = CayleyTable(size, std::move(products), s.index_of(PartialInjection(n)),
                        s.index_of(full_identity(n)), std::move(sweep));
  return s;
}

FiniteSemigroup build_semigroup(FamilyId family, int n, int ceiling) {
  return semigroup_from_elements(n, enumerate_oracle(family, n, ceiling), family);
}

namespace {

void require_n_at_most(const FiniteSemigroup& s, int limit, const char* what) {
  if (s.n > limit) {
    throw Error(ErrorCode::kCeilingExceeded,
                std::string(what) + " limited to n <= " + std::to_string(limit) +
                    ", got n=" + std::to_string(s.n));
  }
}

std::vector<std::vector<PartialInjection>> to_elements(const FiniteSemigroup& s,
                                                       const Partition& p) {
  std::vector<std::vector<PartialInjection>> out;
  out.reserve(p.size());
  for (const auto& cls : p) {
    auto& dst = out.emplace_back();
    for (Index i : cls) dst.push_back(s.elements[i]);
  }
  return out;
}

template <std::size_t K>
Verdict<PartialInjection, K> to_elements(const FiniteSemigroup& s,
                                         const Verdict<Index, K>& v) {
  Verdict<PartialInjection, K> out;
  out.holds = v.holds;
  if (v.witness) {
    std::array<PartialInjection, K> w;
    for (std::size_t i = 0; i < K; ++i) w[i] = s.elements[(*v.witness)[i]];
    out.witness = w;
  }
  return out;
}

Index require_index(const FiniteSemigroup& s, const PartialInjection& a) {
  if (auto i = s.index_of(a)) return *i;
  throw Error(ErrorCode::kIndexOutOfRange, to_string(a) + " is not an element");
}

void require_same_chain(const PartialInjection& a, const PartialInjection& b) {
  if (a.chain_size() != b.chain_size()) {
    throw Error(ErrorCode::kChainMismatch,
                to_string(a) + " vs " + to_string(b));
  }
}

constexpr bool subset(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }

}  // namespace

std::vector<std::vector<PartialInjection>> greens_classes(const FiniteSemigroup& s,
                                                          GreenRelation rel) {
  require_n_at_most(s, kGreensCeiling, "Green's relations");
  return to_elements(s, greens_partition(s.table, rel));
}

std::vector<std::vector<PartialInjection>> starred_classes(const FiniteSemigroup& s,
                                                           StarRelation rel) {
  require_n_at_most(s, kGreensCeiling, "starred relations");
  return to_elements(s, starred_partition(s.table, rel));
}

bool is_j_trivial(const FiniteSemigroup& s) {
  require_n_at_most(s, kGreensCeiling, "J-triviality");
  return is_j_trivial(s.table);
}

Verdict<PartialInjection, 1> is_regular(const FiniteSemigroup& s) {
  return to_elements(s, check_regular(s.table));
}

bool is_abundant(const FiniteSemigroup& s) {
  require_n_at_most(s, kAmpleCeiling, "abundance");
  return check_abundant(s.table).holds;
}

bool is_adequate(const FiniteSemigroup& s) {
  require_n_at_most(s, kAmpleCeiling, "adequacy");
  return check_adequate(s.table).holds;
}

Verdict<PartialInjection, 2> is_ample(const FiniteSemigroup& s) {
  require_n_at_most(s, kAmpleCeiling, "ampleness");
  return to_elements(s, check_ample(s.table));
}

Verdict<PartialInjection, 2> is_zero_e_unitary(const FiniteSemigroup& s) {
  return to_elements(s, check_zero_e_unitary(s.table));
}

Verdict<PartialInjection, 3> is_categorical(const FiniteSemigroup& s) {
  if (s.size() > kCategoricalMaxSize) {
    throw Error(ErrorCode::kCeilingExceeded,
                "categoricity sweep limited to " + std::to_string(kCategoricalMaxSize) +
                    " elements, got " + std::to_string(s.size()));
  }
  return to_elements(s, check_categorical(s.table));
}

bool lstar_related_equational(const FiniteSemigroup& s, const PartialInjection& a,
                              const PartialInjection& b) {
  return lstar_related(s.table, require_index(s, a), require_index(s, b));
}

bool rstar_related_equational(const FiniteSemigroup& s, const PartialInjection& a,
                              const PartialInjection& b) {
  return rstar_related(s.table, require_index(s, a), require_index(s, b));
}

bool leq_rstar(const PartialInjection& a, const PartialInjection& b) {
  require_same_chain(a, b);
  return subset(a.domain_mask(), b.domain_mask());
}

bool leq_lstar(const PartialInjection& a, const PartialInjection& b) {
  require_same_chain(a, b);
  return subset(a.image_mask(), b.image_mask());
}

bool leq_hstar(const PartialInjection& a, const PartialInjection& b) {
  return leq_rstar(a, b) && leq_lstar(a, b);
}

PartialInjection plus_idem(const PartialInjection& a) {
  return partial_identity_on_mask(a.chain_size(), a.domain_mask());
}

PartialInjection star_idem(const PartialInjection& a) {
  return partial_identity_on_mask(a.chain_size(), a.image_mask());
}

bool exists_op_isometry(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) return false;
  std::vector<int> sa(a.begin(), a.end());
  std::vector<int> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  for (std::size_t i = 1; i < sa.size(); ++i) {
    if (sb[i] - sa[i] != sb[0] - sa[0]) return false;
  }
  return true;
}

bool leq_dstar(const PartialInjection& a, const PartialInjection& b) {
  require_same_chain(a, b);
  const auto dom = a.domain();
  const auto img = b.image();
  return exists_op_isometry(dom, img);
}

}  // namespace isochain
