#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mgw {

/// Largest supported ground set; a subset is a single machine word.
inline constexpr int kMaxGroundSize = 64;

/// Subset of the ground set {1, ..., n}. Label `x` lives in bit `x - 1`.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

  /// {1, ..., n}
  static constexpr SubsetMask full(int n) {
    return SubsetMask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr SubsetMask singleton(int label) {
    return SubsetMask(std::uint64_t{1} << (label - 1));
  }
  /// Throws InputError on labels outside 1..n or repeated labels.
  static SubsetMask from_labels(std::span<const int> labels, int n);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int label) const { return (bits_ >> (label - 1)) & 1U; }
  constexpr bool is_subset_of(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool is_proper_subset_of(SubsetMask other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool fits(int n) const { return is_subset_of(full(n)); }

  constexpr SubsetMask with(int label) const {
    return SubsetMask(bits_ | (std::uint64_t{1} << (label - 1)));
  }
  constexpr SubsetMask without(int label) const {
    return SubsetMask(bits_ & ~(std::uint64_t{1} << (label - 1)));
  }

  /// Ascending 1-based labels.
  std::vector<int> labels() const;
  /// "{1,2,5}"
  std::string to_string() const;

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ | b.bits_);
  }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Sort key used everywhere a family of subsets is listed: cardinality, then mask.
constexpr bool by_size_then_mask(SubsetMask a, SubsetMask b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

/// Calls `fn(SubsetMask)` for every k-subset of {1..n}, in increasing mask order.
template <class Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(SubsetMask{});
    return;
  }
  std::uint64_t x = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  const std::uint64_t last = x << (n - k);
  while (true) {
    fn(SubsetMask(x));
    if (x == last) return;
    // Gosper's hack: next word with the same popcount.
    const std::uint64_t low = x & (~x + 1);
    const std::uint64_t ripple = x + low;
    x = (((ripple ^ x) >> 2) / low) | ripple;
  }
}

/// Calls `fn(SubsetMask)` for every subset of `set` (including empty and `set`).
template <class Fn>
void for_each_subset_of(SubsetMask set, Fn&& fn) {
  std::uint64_t sub = 0;
  const std::uint64_t s = set.bits();
  while (true) {
    fn(SubsetMask(sub));
    if (sub == s) return;
    sub = (sub - s) & s;
  }
}

}  // namespace mgw
