#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <string>

namespace hyperforge {

// Carrier elements are canonically 0..n-1.
using Element = int;

inline constexpr int kMaxCarrier = 16;

// Subset of a carrier of at most kMaxCarrier elements, one bit per element.
class ElementSet {
 public:
  using Bits = std::uint32_t;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr iterator() = default;
    constexpr explicit iterator(Bits rest) : rest_(rest) {}
    constexpr Element operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Bits rest_ = 0;
  };

  constexpr ElementSet() = default;

  static constexpr ElementSet from_bits(Bits bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr ElementSet singleton(Element e) {
    return from_bits(Bits{1} << e);
  }
  // The whole carrier {0, ..., n-1}.
  static constexpr ElementSet full(int n) {
    return from_bits(n >= 32 ? ~Bits{0} : (Bits{1} << n) - 1);
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Element e) const { return (bits_ >> e) & 1U; }
  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  // Least member; undefined on the empty set.
  constexpr Element first() const { return std::countr_zero(bits_); }

  constexpr void insert(Element e) { bits_ |= Bits{1} << e; }
  constexpr void erase(Element e) { bits_ &= ~(Bits{1} << e); }

  constexpr ElementSet operator|(ElementSet o) const {
    return from_bits(bits_ | o.bits_);
  }
  constexpr ElementSet operator&(ElementSet o) const {
    return from_bits(bits_ & o.bits_);
  }
  // Set difference.
  constexpr ElementSet operator-(ElementSet o) const {
    return from_bits(bits_ & ~o.bits_);
  }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  // Ordered by bit pattern, which is the canonical enumeration order.
  constexpr auto operator<=>(const ElementSet&) const = default;

  // "{0,2}" style rendering with canonical element indices.
  std::string to_string() const;

 private:
  Bits bits_ = 0;
};

}  // namespace hyperforge
