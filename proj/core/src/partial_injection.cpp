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

#include "isochain/partial_injection.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "isochain/error.hpp"

namespace isochain {

namespace {

void check_chain_size(int n) {
  if (n < 0 || n > kMaxChainSize) {
    throw Error(ErrorCode::kOutOfRange,
                "chain size " + std::to_string(n) + " outside 0.." +
                    std::to_string(kMaxChainSize));
  }
}

std::string describe(const MapsTo& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

constexpr std::uint32_t bit(int x) noexcept { return std::uint32_t{1} << (x - 1); }

}  // namespace

PartialInjection::PartialInjection(int n) {
  check_chain_size(n);
  n_ = static_cast<std::uint8_t>(n);
}

void PartialInjection::set(int x, int y) noexcept {
  image_of_[x - 1] = static_cast<std::uint8_t>(y);
  domain_mask_ |= bit(x);
  image_mask_ |= bit(y);
}

int PartialInjection::height() const noexcept {
  return std::popcount(domain_mask_);
}

std::optional<int> PartialInjection::apply(int x) const noexcept {
  if (!in_domain(x)) return std::nullopt;
  return image_of_[x - 1];
}

bool PartialInjection::in_domain(int x) const noexcept {
  return x >= 1 && x <= n_ && (domain_mask_ & bit(x)) != 0;
}

bool PartialInjection::in_image(int y) const noexcept {
  return y >= 1 && y <= n_ && (image_mask_ & bit(y)) != 0;
}

std::vector<MapsTo> PartialInjection::pairs() const {
  std::vector<MapsTo> out;
  out.reserve(static_cast<std::size_t>(height()));
  for (int x = 1; x <= n_; ++x) {
    if (domain_mask_ & bit(x)) out.push_back({x, image_of_[x - 1]});
  }
  return out;
}

std::vector<int> PartialInjection::domain() const {
  std::vector<int> out;
  for (int x = 1; x <= n_; ++x) {
    if (domain_mask_ & bit(x)) out.push_back(x);
  }
  return out;
}

std::vector<int> PartialInjection::image() const {
  std::vector<int> out;
  for (int x = 1; x <= n_; ++x) {
    if (domain_mask_ & bit(x)) out.push_back(image_of_[x - 1]);
  }
  return out;
}

std::strong_ordering operator<=>(const PartialInjection& a,
                                 const PartialInjection& b) noexcept {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.height() <=> b.height(); c != 0) return c;
  // Equal heights: walk both domains in step.
  std::uint32_t da = a.domain_mask_;
  std::uint32_t db = b.domain_mask_;
  while (da != 0) {
    int xa = std::countr_zero(da);
    int xb = std::countr_zero(db);
    if (xa != xb) return xa <=> xb;
    da &= da - 1;
    db &= db - 1;
  }
  for (int x = 0; x < a.n_; ++x) {
    if ((a.domain_mask_ >> x) & 1U) {
      if (auto c = a.image_of_[x] <=> b.image_of_[x]; c != 0) return c;
    }
  }
  return std::strong_ordering::equal;
}

PartialInjection make(int n, std::span<const MapsTo> pairs) {
  PartialInjection out(n);
  for (const MapsTo& p : pairs) {
    if (p.x < 1 || p.x > n || p.y < 1 || p.y > n) {
      throw Error(ErrorCode::kOutOfRange,
                  "pair " + describe(p) + " outside 1.." + std::to_string(n));
    }
    if (out.domain_mask_ & bit(p.x)) {
      throw Error(ErrorCode::kNotFunctional,
                  "pair " + describe(p) + " repeats domain point " +
                      std::to_string(p.x));
    }
    if (out.image_mask_ & bit(p.y)) {
      throw Error(ErrorCode::kNotInjective,
                  "pair " + describe(p) + " repeats image point " +
                      std::to_string(p.y));
    }
    out.set(p.x, p.y);
  }
  return out;
}

PartialInjection make(int n, std::initializer_list<MapsTo> pairs) {
  return make(n, std::span<const MapsTo>(pairs.begin(), pairs.size()));
}

PartialInjection compose(const PartialInjection& a, const PartialInjection& b) {
  if (a.n_ != b.n_) {
    throw Error(ErrorCode::kChainMismatch,
                "cannot compose elements on chains of size " +
                    std::to_string(a.n_) + " and " + std::to_string(b.n_));
  }
  PartialInjection out(a.n_);
  std::uint32_t dom = a.domain_mask_;
  while (dom != 0) {
    int x = std::countr_zero(dom) + 1;
    dom &= dom - 1;
    int y = a.image_of_[x - 1];
    if (b.domain_mask_ & bit(y)) out.set(x, b.image_of_[y - 1]);
  }
  return out;
}

PartialInjection inverse(const PartialInjection& a) {
  PartialInjection out(a.n_);
  std::uint32_t dom = a.domain_mask_;
  while (dom != 0) {
    int x = std::countr_zero(dom) + 1;
    dom &= dom - 1;
    out.set(a.image_of_[x - 1], x);
  }
  return out;
}

PartialInjection partial_identity(int n, std::span<const int> points) {
  std::vector<MapsTo> pairs;
  pairs.reserve(points.size());
  for (int x : points) pairs.push_back({x, x});
  return make(n, pairs);
}

PartialInjection partial_identity(int n, std::initializer_list<int> points) {
  return partial_identity(n, std::span<const int>(points.begin(), points.size()));
}

PartialInjection full_identity(int n) {
  check_chain_size(n);
  return partial_identity_on_mask(n, n == 0 ? 0U : (bit(n) << 1) - 1U);
}

PartialInjection partial_identity_on_mask(int n, std::uint32_t mask) {
  check_chain_size(n);
  std::vector<MapsTo> pairs;
  for (int x = 1; x <= kMaxChainSize; ++x) {
    if (mask & bit(x)) pairs.push_back({x, x});
  }
  return make(n, pairs);
}

std::uint32_t fixed_points_mask(const PartialInjection& a) noexcept {
  std::uint32_t out = 0;
  for (const MapsTo& p : a.pairs()) {
    if (p.x == p.y) out |= bit(p.x);
  }
  return out;
}

int fix_count(const PartialInjection& a) noexcept {
  return std::popcount(fixed_points_mask(a));
}

ElementStats stats(const PartialInjection& a) {
  ElementStats s;
  s.height = a.height();
  s.fix = fix_count(a);
  if (!a.empty()) {
    const std::uint32_t dom = a.domain_mask();
    const std::uint32_t img = a.image_mask();
    s.left_waist = std::countr_zero(img) + 1;
    s.right_waist = 32 - std::countl_zero(img);
    s.left_shoulder = std::countr_zero(dom) + 1;
    s.right_shoulder = 32 - std::countl_zero(dom);
  }
  return s;
}

bool is_isometry(const PartialInjection& a) noexcept {
  const auto ps = a.pairs();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (std::abs(ps[i].x - ps[j].x) != std::abs(ps[i].y - ps[j].y)) {
        return false;
      }
    }
  }
  return true;
}

// pairs() is sorted by x, so monotonicity only needs adjacent pairs.
bool is_order_preserving(const PartialInjection& a) noexcept {
  const auto ps = a.pairs();
  return std::adjacent_find(ps.begin(), ps.end(),
                            [](const MapsTo& p, const MapsTo& q) {
                              return p.y > q.y;
                            }) == ps.end();
}

bool is_order_reversing(const PartialInjection& a) noexcept {
  const auto ps = a.pairs();
  return std::adjacent_find(ps.begin(), ps.end(),
                            [](const MapsTo& p, const MapsTo& q) {
                              return p.y < q.y;
                            }) == ps.end();
}

bool is_order_decreasing(const PartialInjection& a) noexcept {
  const auto ps = a.pairs();
  return std::all_of(ps.begin(), ps.end(),
                     [](const MapsTo& p) { return p.y <= p.x; });
}

bool is_idempotent(const PartialInjection& a) noexcept {
  return compose(a, a) == a;
}

bool is_partial_identity(const PartialInjection& a) noexcept {
  return fixed_points_mask(a) == a.domain_mask();
}

bool is_nilpotent(const PartialInjection& a) noexcept {
  // Heights never increase along powers; once a power keeps its height it
  // permutes its domain forever, so n+1 steps settle the question.
  PartialInjection power = a;
  for (int k = 0; k <= a.chain_size(); ++k) {
    if (power.empty()) return true;
    power = compose(power, a);
  }
  return power.empty();
}

std::string pairs_to_string(const PartialInjection& a) {
  if (a.empty()) return "0";
  std::string out;
  for (const MapsTo& p : a.pairs()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p.x);
    out += "->";
    out += std::to_string(p.y);
  }
  return out;
}

std::string to_string(const PartialInjection& a) {
  return "[n=" + std::to_string(a.chain_size()) + "] " + pairs_to_string(a);
}

namespace {

int parse_int(std::string_view token, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParseError,
                "bad integer '" + std::string(token) + "' in '" +
                    std::string(whole) + "'");
  }
  return value;
}

}  // namespace

PartialInjection parse_element(std::string_view text) {
  const std::string whole(text);
  std::istringstream in(whole);
  std::string head;
  in >> head;
  if (head.size() < 5 || head.rfind("[n=", 0) != 0 || head.back() != ']') {
    throw Error(ErrorCode::kParseError, "expected '[n=<k>]' in '" + whole + "'");
  }
  const int n = parse_int(std::string_view(head).substr(3, head.size() - 4), whole);
  check_chain_size(n);

  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.size() == 1 && tokens[0] == "0") return PartialInjection(n);
  if (tokens.empty()) {
    throw Error(ErrorCode::kParseError, "missing pairs (use 0 for the empty map) in '" + whole + "'");
  }
  std::vector<MapsTo> pairs;
  for (const std::string& tok : tokens) {
    const auto arrow = tok.find("->");
    if (arrow == std::string::npos) {
      throw Error(ErrorCode::kParseError, "expected x->y, got '" + tok + "'");
    }
    const std::string_view sv(tok);
    pairs.push_back({parse_int(sv.substr(0, arrow), whole),
                     parse_int(sv.substr(arrow + 2), whole)});
  }
  if (!std::is_sorted(pairs.begin(), pairs.end())) {
    throw Error(ErrorCode::kParseError,
                "pairs must be listed by ascending domain point in '" + whole + "'");
  }
  return make(n, pairs);
}

}  // namespace isochain

std::size_t std::hash<isochain::PartialInjection>::operator()(
    const isochain::PartialInjection& a) const noexcept {
  std::size_t h = static_cast<std::size_t>(a.chain_size());
  for (const auto& p : a.pairs()) {
    h = h * 131 + static_cast<std::size_t>(p.x * 17 + p.y);
  }
  return h;
}
