#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace amoeba {

/// Subset of the ground set {0,...,ground_size-1} as a 64-bit mask.
/// Cardinality, union, intersection and friends are single word ops.
struct SubsetMask {
  std::uint64_t bits = 0;
  int ground_size = 0;

  static constexpr int kMaxGround = 64;

  SubsetMask() = default;
  SubsetMask(std::uint64_t b, int n) : bits(b), ground_size(n) {
    assert(n >= 0 && n <= kMaxGround);
    assert(n == kMaxGround || (b >> n) == 0);
  }

  static std::uint64_t full_bits(int n) {
    return n == kMaxGround ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  }
  static SubsetMask empty(int n) { return {0, n}; }
  static SubsetMask full(int n) { return {full_bits(n), n}; }
  static SubsetMask single(int e, int n) {
    assert(e >= 0 && e < n);
    return {std::uint64_t{1} << e, n};
  }
  static SubsetMask of(std::initializer_list<int> elems, int n) {
    std::uint64_t b = 0;
    for (int e : elems) {
      assert(e >= 0 && e < n);
      b |= std::uint64_t{1} << e;
    }
    return {b, n};
  }

  int count() const { return std::popcount(bits); }
  bool is_empty() const { return bits == 0; }
  bool contains(int e) const { return e >= 0 && e < ground_size && ((bits >> e) & 1u); }
  bool subset_of(const SubsetMask& o) const {
    assert(ground_size == o.ground_size);
    return (bits & ~o.bits) == 0;
  }
  bool intersects(const SubsetMask& o) const {
    assert(ground_size == o.ground_size);
    return (bits & o.bits) != 0;
  }
  int lowest() const {
    assert(bits != 0);
    return std::countr_zero(bits);
  }

  SubsetMask with(int e) const {
    assert(e >= 0 && e < ground_size);
    return {bits | (std::uint64_t{1} << e), ground_size};
  }
  SubsetMask without(int e) const {
    assert(e >= 0 && e < ground_size);
    return {bits & ~(std::uint64_t{1} << e), ground_size};
  }

  friend SubsetMask operator|(const SubsetMask& a, const SubsetMask& b) {
    assert(a.ground_size == b.ground_size);
    return {a.bits | b.bits, a.ground_size};
  }
  friend SubsetMask operator&(const SubsetMask& a, const SubsetMask& b) {
    assert(a.ground_size == b.ground_size);
    return {a.bits & b.bits, a.ground_size};
  }
  friend SubsetMask operator-(const SubsetMask& a, const SubsetMask& b) {
    assert(a.ground_size == b.ground_size);
    return {a.bits & ~b.bits, a.ground_size};
  }
  SubsetMask complement() const { return {full_bits(ground_size) & ~bits, ground_size}; }

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
    return a.bits == b.bits && a.ground_size == b.ground_size;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits; b; b &= b - 1) fn(std::countr_zero(b));
  }

  /// Human-readable, 1-based: "{1,2,5}".
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (std::uint64_t b = bits; b; b &= b - 1) {
      if (!first) s += ',';
      s += std::to_string(std::countr_zero(b) + 1);
      first = false;
    }
    return s + "}";
  }
};

}  // namespace amoeba
