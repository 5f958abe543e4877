// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROID_FORGE_ELEMENT_SET_H_
#define MATROID_FORGE_ELEMENT_SET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace matroid_forge {

using Element = int;

// Element identifiers live in [0, kMaxElements).
inline constexpr int kMaxElements = 64;

// A finite set of element identifiers encoded as a fixed-width bitmask.
// Iteration is always ascending; ascending order is the tie-breaking order
// used by every algorithm in the library.
class ElementSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr Iterator() = default;
    constexpr explicit Iterator(uint64_t rest) : rest_(rest) {}
    constexpr Element operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator tmp = *this;
      ++*this;
      return tmp;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr ElementSet(std::initializer_list<Element> elements) {
    for (Element e : elements) Insert(e);
  }

  static constexpr ElementSet FromMask(uint64_t mask) {
    ElementSet s;
    s.bits_ = mask;
    return s;
  }
  // {0, 1, ..., n-1}.
  static constexpr ElementSet Range(int n) {
    return FromMask(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }
  // Throws std::out_of_range for identifiers outside [0, kMaxElements).
  static ElementSet FromVector(std::span<const Element> elements);

  constexpr uint64_t mask() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool Contains(Element e) const { return (bits_ >> e) & 1; }
  constexpr void Insert(Element e) { bits_ |= uint64_t{1} << e; }
  constexpr void Erase(Element e) { bits_ &= ~(uint64_t{1} << e); }
  constexpr ElementSet With(Element e) const {
    return FromMask(bits_ | (uint64_t{1} << e));
  }
  constexpr ElementSet Without(Element e) const {
    return FromMask(bits_ & ~(uint64_t{1} << e));
  }
  constexpr bool IsSubsetOf(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool Intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  // Smallest element; the set must be nonempty.
  constexpr Element Min() const { return std::countr_zero(bits_); }
  // Largest element; the set must be nonempty.
  constexpr Element Max() const { return 63 - std::countl_zero(bits_); }

  // The first `k` elements in ascending order.
  ElementSet Smallest(int k) const;

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<Element> ToVector() const;
  // "{0, 3, 5}".
  std::string ToString() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return FromMask(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return FromMask(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return FromMask(a.bits_ & ~b.bits_);
  }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) {
    return FromMask(a.bits_ ^ b.bits_);
  }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const ElementSet&) const = default;

 private:
  uint64_t bits_ = 0;
};

// Canonical order on sets: lexicographic comparison of the ascending element
// sequences, with a proper prefix ordered first. {0,3} < {1,2} and {0} < {0,1}.
constexpr bool CanonicalLess(ElementSet a, ElementSet b) {
  const uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  const int p = std::countr_zero(diff);
  // Exactly one of a, b contains p; call it `with`.
  const bool a_has = a.Contains(p);
  const uint64_t other = a_has ? b.mask() : a.mask();
  const bool other_continues = (p == 63) ? false : (other >> (p + 1)) != 0;
  // `with` is smaller iff the other set still has elements above p.
  return a_has == other_continues;
}

struct CanonicalOrder {
  constexpr bool operator()(ElementSet a, ElementSet b) const {
    return CanonicalLess(a, b);
  }
};

// Calls `fn(sub)` for every subset of `set`, in increasing mask order.
template <typename Fn>
void ForEachSubset(ElementSet set, Fn&& fn) {
  const uint64_t full = set.mask();
  uint64_t sub = 0;
  while (true) {
    fn(ElementSet::FromMask(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

// Sorts and deduplicates a family in canonical order.
void Canonicalize(std::vector<ElementSet>& family);

}  // namespace matroid_forge

#endif  // MATROID_FORGE_ELEMENT_SET_H_
