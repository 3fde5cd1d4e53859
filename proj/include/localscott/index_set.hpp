/*
 * Copyright 2026 The localscott Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LOCALSCOTT_INDEX_SET_HPP
#define LOCALSCOTT_INDEX_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace localscott {

/// Largest index a set can hold (exclusive). Points and group elements are
/// both bounded by this.
inline constexpr std::size_t kMaxIndex = 64;

/**
 * A subset of {0, ..., kMaxIndex-1} stored as a single machine word.
 *
 * The tag parameter keeps point sets and group-element sets apart at the
 * type level; the two never mix without an explicit conversion.
 */
template <class Tag>
class IndexSet {
 public:
  using Word = std::uint64_t;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(Word bits) : bits_(bits) {}
  IndexSet(std::initializer_list<std::size_t> items) {
    for (auto i : items) insert(i);
  }

  static IndexSet from_indices(const std::vector<std::size_t>& items) {
    IndexSet s;
    for (auto i : items) s.insert(i);
    return s;
  }

  /// {0, ..., n-1}
  static constexpr IndexSet prefix(std::size_t n) {
    return IndexSet(n >= 64 ? ~Word{0} : ((Word{1} << n) - 1));
  }

  static constexpr IndexSet singleton(std::size_t i) { return IndexSet(Word{1} << i); }

  constexpr Word bits() const { return bits_; }

  constexpr bool contains(std::size_t i) const { return i < kMaxIndex && ((bits_ >> i) & 1U); }
  void insert(std::size_t i) {
    if (i >= kMaxIndex) throw std::out_of_range("index " + std::to_string(i) + " exceeds set capacity");
    bits_ |= Word{1} << i;
  }
  void erase(std::size_t i) {
    if (i < kMaxIndex) bits_ &= ~(Word{1} << i);
  }

  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  /// Smallest member; undefined on the empty set.
  constexpr std::size_t front() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(IndexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr IndexSet operator-(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }
  IndexSet& operator|=(IndexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  IndexSet& operator&=(IndexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  IndexSet& operator-=(IndexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const IndexSet&) const = default;

  /// Cardinality first, then lexicographic on the sorted member list.
  friend std::strong_ordering canonical_order(IndexSet a, IndexSet b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    Word x = a.bits_, y = b.bits_;
    while (x != 0 && y != 0) {
      auto i = std::countr_zero(x), j = std::countr_zero(y);
      if (i != j) return i <=> j;
      x &= x - 1;
      y &= y - 1;
    }
    return std::strong_ordering::equal;
  }

  /// Forward iteration over members in increasing order.
  class iterator {
   public:
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(Word w) : w_(w) {}
    constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(w_)); }
    iterator& operator++() {
      w_ &= w_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Word w_ = 0;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<std::size_t> to_vector() const { return {begin(), end()}; }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (auto i : *this) {
      if (!first) out += ',';
      out += std::to_string(i);
      first = false;
    }
    return out + "}";
  }

 private:
  Word bits_ = 0;
};

struct PointTag {};
struct ElemTag {};

/// Subset of the points of a G-space.
using PointSet = IndexSet<PointTag>;
/// Subset of the elements of a finite group.
using ElemSet = IndexSet<ElemTag>;

using Point = std::size_t;
using Elem = std::size_t;

template <class Tag>
bool canonical_less(IndexSet<Tag> a, IndexSet<Tag> b) {
  return canonical_order(a, b) < 0;
}

}  // namespace localscott

#endif  // LOCALSCOTT_INDEX_SET_HPP
