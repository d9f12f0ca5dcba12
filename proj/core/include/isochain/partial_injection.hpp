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

// Partial injective transformations of the chain {1, ..., n}.
//
// Elements compose left to right: x(ab) = (xa)b, i.e. `compose(a, b)` applies
// `a` first. Every element remembers its chain size and composing elements
// of different chains is an error rather than a silent re-embedding.

#ifndef ISOCHAIN_PARTIAL_INJECTION_HPP_
#define ISOCHAIN_PARTIAL_INJECTION_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace isochain {

// Largest chain an element can live on. Enumeration ceilings are far lower;
// this only bounds the fixed-size storage.
inline constexpr int kMaxChainSize = 16;

// One arrow x -> y of a partial map.
struct MapsTo {
  int x;
  int y;

  friend constexpr auto operator<=>(const MapsTo&, const MapsTo&) = default;
};

class PartialInjection;

PartialInjection make(int n, std::span<const MapsTo> pairs);
PartialInjection make(int n, std::initializer_list<MapsTo> pairs);

// Value type; immutable once built. Use `make` to construct a non-empty
// element, the constructor only yields the empty map (the zero).
class PartialInjection {
 public:
  PartialInjection() = default;
  explicit PartialInjection(int n);

  int chain_size() const noexcept { return n_; }
  int height() const noexcept;
  bool empty() const noexcept { return domain_mask_ == 0; }

  // xa, or nullopt when x is outside the domain (or outside the chain).
  std::optional<int> apply(int x) const noexcept;
  bool in_domain(int x) const noexcept;
  bool in_image(int y) const noexcept;

  // Bit x-1 is set when x belongs to the set.
  std::uint32_t domain_mask() const noexcept { return domain_mask_; }
  std::uint32_t image_mask() const noexcept { return image_mask_; }

  std::vector<MapsTo> pairs() const;
  std::vector<int> domain() const;
  // Images listed in ascending-domain order, so image()[i] = domain()[i]a.
  std::vector<int> image() const;

  friend bool operator==(const PartialInjection&,
                         const PartialInjection&) = default;

  // Canonical order: chain size, then height, then the ascending domain
  // sequence, then the image sequence (both lexicographic).
  friend std::strong_ordering operator<=>(const PartialInjection& a,
                                          const PartialInjection& b) noexcept;

 private:
  friend PartialInjection make(int n, std::span<const MapsTo> pairs);
  friend PartialInjection compose(const PartialInjection& a,
                                  const PartialInjection& b);
  friend PartialInjection inverse(const PartialInjection& a);

  void set(int x, int y) noexcept;

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxChainSize> image_of_{};  // 0 = undefined
  std::uint32_t domain_mask_ = 0;
  std::uint32_t image_mask_ = 0;
};

// Apply a, then b. Throws kChainMismatch when the chain sizes differ.
PartialInjection compose(const PartialInjection& a, const PartialInjection& b);
PartialInjection inverse(const PartialInjection& a);

// Identity restricted to `points`; throws kOutOfRange for points outside 1..n.
PartialInjection partial_identity(int n, std::span<const int> points);
PartialInjection partial_identity(int n, std::initializer_list<int> points);
PartialInjection full_identity(int n);
PartialInjection partial_identity_on_mask(int n, std::uint32_t mask);

struct ElementStats {
  int height = 0;
  int fix = 0;
  std::optional<int> left_waist;      // min Im
  std::optional<int> right_waist;     // max Im
  std::optional<int> left_shoulder;   // min Dom
  std::optional<int> right_shoulder;  // max Dom

  friend bool operator==(const ElementStats&, const ElementStats&) = default;
};

ElementStats stats(const PartialInjection& a);
int fix_count(const PartialInjection& a) noexcept;
std::uint32_t fixed_points_mask(const PartialInjection& a) noexcept;

// The empty element satisfies the first four vacuously; elements of height
// at most one are both order-preserving and order-reversing.
bool is_isometry(const PartialInjection& a) noexcept;
bool is_order_preserving(const PartialInjection& a) noexcept;
bool is_order_reversing(const PartialInjection& a) noexcept;
bool is_order_decreasing(const PartialInjection& a) noexcept;
bool is_idempotent(const PartialInjection& a) noexcept;
bool is_partial_identity(const PartialInjection& a) noexcept;
// Some power of `a` is the empty map.
bool is_nilpotent(const PartialInjection& a) noexcept;

// Text form: "[n=3] 2->2 3->1"; the empty element is "[n=3] 0".
std::string to_string(const PartialInjection& a);
PartialInjection parse_element(std::string_view text);

// Pairs only, without the chain prefix: "2->2 3->1" or "0".
std::string pairs_to_string(const PartialInjection& a);

}  // namespace isochain

template <>
struct std::hash<isochain::PartialInjection> {
  std::size_t operator()(const isochain::PartialInjection& a) const noexcept;
};

#endif  // ISOCHAIN_PARTIAL_INJECTION_HPP_
