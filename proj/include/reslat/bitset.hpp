#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace reslat {

/// Fixed-capacity set of small indices (0..63) packed into one machine word.
///
/// The tag parameter keeps element sets and point sets from mixing.
template <class Tag>
class BitSet64 {
 public:
  static constexpr std::size_t kCapacity = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr std::size_t operator*() const {
      return static_cast<std::size_t>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr BitSet64() = default;

  static constexpr BitSet64 from_bits(std::uint64_t bits) {
    BitSet64 s;
    s.bits_ = bits;
    return s;
  }
  static constexpr BitSet64 singleton(std::size_t i) {
    assert(i < kCapacity);
    return from_bits(std::uint64_t{1} << i);
  }
  /// {0, ..., n-1}
  static constexpr BitSet64 full(std::size_t n) {
    assert(n <= kCapacity);
    return from_bits(n == kCapacity ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const {
    return i < kCapacity && ((bits_ >> i) & 1U) != 0;
  }
  constexpr void insert(std::size_t i) {
    assert(i < kCapacity);
    bits_ |= std::uint64_t{1} << i;
  }
  constexpr void erase(std::size_t i) {
    assert(i < kCapacity);
    bits_ &= ~(std::uint64_t{1} << i);
  }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(BitSet64 other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(BitSet64 other) const {
    return (bits_ & other.bits_) != 0;
  }
  /// Smallest member; the set must be non-empty.
  constexpr std::size_t front() const {
    assert(!empty());
    return static_cast<std::size_t>(std::countr_zero(bits_));
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  constexpr BitSet64 operator|(BitSet64 o) const { return from_bits(bits_ | o.bits_); }
  constexpr BitSet64 operator&(BitSet64 o) const { return from_bits(bits_ & o.bits_); }
  constexpr BitSet64 operator-(BitSet64 o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr BitSet64& operator|=(BitSet64 o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr BitSet64& operator&=(BitSet64 o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr bool operator==(const BitSet64&) const = default;

  /// Canonical order: by cardinality, then by bitmask.
  constexpr std::strong_ordering operator<=>(const BitSet64& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    return bits_ <=> o.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

struct ElementTag {};
struct PointTag {};

/// Subset of an algebra's carrier, indexed by element id.
using ElementSet = BitSet64<ElementTag>;
/// Subset of the points of a finite space.
using PointSet = BitSet64<PointTag>;

}  // namespace reslat
