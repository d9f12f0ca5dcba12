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

#include "isochain/rees_quotient.hpp"

#include <algorithm>

#include "isochain/error.hpp"
#include "isochain/family.hpp"

namespace isochain {

std::string to_string(const QuotientElement& q) {
  return q.is_zero() ? std::string("zero") : to_string(q.value());
}

QuotientElement ReesQuotient::element(Index i) const {
  if (i == zero_index()) return QuotientElement::zero();
  return QuotientElement(nonzero_.at(i));
}

std::optional<Index> ReesQuotient::index_of(const QuotientElement& q) const {
  if (q.is_zero()) return zero_index();
  auto it = std::lower_bound(nonzero_.begin(), nonzero_.end(), q.value());
  if (it == nonzero_.end() || *it != q.value()) return std::nullopt;
  return static_cast<Index>(it - nonzero_.begin());
}

ReesQuotient rees_quotient(int n, int p) {
  if (p < 1 || p > n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "Q(n,p) needs 1 <= p <= n, got n=" + std::to_string(n) +
                    " p=" + std::to_string(p));
  }
  ReesQuotient q;
  q.n_ = n;
  q.p_ = p;
  for (auto& a : enumerate_fast(FamilyId::kOrderPreservingDecreasingIsometry, n)) {
    if (a.height() == p) q.nonzero_.push_back(std::move(a));
  }
  const std::size_t k = q.nonzero_.size();
  if (k + 1 > kMaxTableSize) {
    throw Error(ErrorCode::kCeilingExceeded,
                "Q(" + std::to_string(n) + "," + std::to_string(p) + ") has " +
                    std::to_string(k) + " nonzero elements");
  }

  const std::size_t size = k + 1;
  const Index zero = static_cast<Index>(k);
  std::vector<Index> products(size * size, zero);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const PartialInjection ab = compose(q.nonzero_[i], q.nonzero_[j]);
      if (ab.height() == p) products[i * size + j] = *q.index_of(QuotientElement(ab));
    }
  }
  q.table_ = CayleyTable(size, std::move(products), zero, std::nullopt);
  return q;
}

QuotientElement quotient_compose(const ReesQuotient& q, const QuotientElement& a,
                                 const QuotientElement& b) {
  const auto ia = q.index_of(a);
  const auto ib = q.index_of(b);
  if (!ia || !ib) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "operand not in Q(" + std::to_string(q.chain_size()) + "," +
                    std::to_string(q.height()) + ")");
  }
  return q.element(q.table().product(*ia, *ib));
}

namespace {

template <std::size_t K>
Verdict<QuotientElement, K> to_elements(const ReesQuotient& q,
                                        const Verdict<Index, K>& v) {
  Verdict<QuotientElement, K> out;
  out.holds = v.holds;
  if (v.witness) {
    std::array<QuotientElement, K> w;
    for (std::size_t i = 0; i < K; ++i) w[i] = q.element((*v.witness)[i]);
    out.witness = w;
  }
  return out;
}

}  // namespace

Verdict<QuotientElement, 2> is_zero_e_unitary(const ReesQuotient& q) {
  return to_elements(q, check_zero_e_unitary(q.table()));
}

Verdict<QuotientElement, 3> is_categorical(const ReesQuotient& q) {
  return to_elements(q, check_categorical(q.table()));
}

}  // namespace isochain
