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

// Rees quotients Q(n,p) = L(n,p) / L(n,p-1) of ODDP_n, where L(n,p) is the
// ideal of elements of height at most p. The nonzero elements are the
// height-p elements of ODDP_n; any product that drops below height p
// collapses to an adjoined zero, which is not the empty map.

#ifndef ISOCHAIN_REES_QUOTIENT_HPP_
#define ISOCHAIN_REES_QUOTIENT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "isochain/partial_injection.hpp"
#include "isochain/semigroup.hpp"

namespace isochain {

// Either a height-p element or the adjoined zero.
class QuotientElement {
 public:
  QuotientElement() = default;  // the adjoined zero
  explicit QuotientElement(PartialInjection a) : value_(std::move(a)) {}

  static QuotientElement zero() { return QuotientElement(); }
  bool is_zero() const noexcept { return !value_.has_value(); }
  const PartialInjection& value() const { return value_.value(); }

  friend bool operator==(const QuotientElement&, const QuotientElement&) = default;

 private:
  std::optional<PartialInjection> value_;
};

// "[n=3] 2->2 3->3", or "zero" for the adjoined zero.
std::string to_string(const QuotientElement& q);

class ReesQuotient {
 public:
  int chain_size() const noexcept { return n_; }
  int height() const noexcept { return p_; }
  const std::vector<PartialInjection>& nonzero_elements() const noexcept {
    return nonzero_;
  }
  // Indices 0..k-1 are the nonzero elements in canonical order; index k is
  // the adjoined zero.
  const CayleyTable& table() const noexcept { return table_; }
  Index zero_index() const noexcept { return static_cast<Index>(nonzero_.size()); }

  QuotientElement element(Index i) const;
  std::optional<Index> index_of(const QuotientElement& q) const;

 private:
  friend ReesQuotient rees_quotient(int n, int p);

  int n_ = 0;
  int p_ = 0;
  std::vector<PartialInjection> nonzero_;
  CayleyTable table_;
};

// Throws kIndexOutOfRange unless 1 <= p <= n.
ReesQuotient rees_quotient(int n, int p);

// Product in Q(n,p). Throws kIndexOutOfRange for an operand outside Q.
QuotientElement quotient_compose(const ReesQuotient& q, const QuotientElement& a,
                                 const QuotientElement& b);

Verdict<QuotientElement, 2> is_zero_e_unitary(const ReesQuotient& q);
Verdict<QuotientElement, 3> is_categorical(const ReesQuotient& q);

}  // namespace isochain

#endif  // ISOCHAIN_REES_QUOTIENT_HPP_
