#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posat/poset.hpp"

namespace posat {

inline constexpr int kMaxGroundSize = 63;

/// Subset of [n]: element i is bit i-1. The ground size lives with the
/// owning family; masks compare by raw bit value.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

  /// From 1-based elements.
  static SubsetMask of(std::initializer_list<int> elements);
  static SubsetMask of(std::span<const int> elements);
  static constexpr SubsetMask full(int n) {
    return SubsetMask(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  /// {lo, ..., hi}; empty when hi < lo.
  static constexpr SubsetMask range(int lo, int hi) {
    return hi < lo ? SubsetMask{} : SubsetMask(full(hi).bits_ & ~full(lo - 1).bits_);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool has(int element) const { return (bits_ >> (element - 1)) & 1U; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  /// Largest element, 0 for the empty set.
  constexpr int max_element() const noexcept { return 64 - std::countl_zero(bits_); }
  constexpr bool fits(int n) const noexcept { return (bits_ & ~full(n).bits_) == 0; }

  constexpr bool subset_of(SubsetMask o) const noexcept { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(SubsetMask o) const noexcept {
    return bits_ != o.bits_ && subset_of(o);
  }
  constexpr bool comparable(SubsetMask o) const noexcept { return subset_of(o) || o.subset_of(*this); }

  constexpr SubsetMask with(int element) const { return SubsetMask(bits_ | (std::uint64_t{1} << (element - 1))); }
  constexpr SubsetMask without(int element) const {
    return SubsetMask(bits_ & ~(std::uint64_t{1} << (element - 1)));
  }
  constexpr SubsetMask complement(int n) const { return SubsetMask(full(n).bits_ & ~bits_); }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ | b.bits_); }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & b.bits_); }
  friend constexpr SubsetMask operator^(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ ^ b.bits_); }
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & ~b.bits_); }

  std::vector<int> elements() const;

  constexpr auto operator<=>(const SubsetMask&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// "{1,3}" style; "{}" for the empty set.
std::string to_string(SubsetMask s);

/// Colex order: A < B iff max(A xor B) lies in B.
std::strong_ordering colex_compare(SubsetMask a, SubsetMask b);

/// The i-th subset of [n-1] in colex order (1-based) and its complement.
struct ColexPair {
  SubsetMask low;   ///< F_i, never contains n
  SubsetMask high;  ///< G_i = [n] \ F_i, always contains n
};
ColexPair colex_unrank(std::uint64_t index, int n);

/// Duplicate-free family of subsets of [n], kept sorted by bit value.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(int n);
  /// Sorts `members`; throws `Error` on duplicates or sets outside [n].
  SetFamily(int n, std::vector<SubsetMask> members);

  int ground_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::span<const SubsetMask> members() const noexcept { return members_; }
  SubsetMask operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool contains(SubsetMask s) const;
  std::optional<std::size_t> index_of(SubsetMask s) const;
  /// False when already present.
  bool insert(SubsetMask s);

  bool operator==(const SetFamily&) const = default;

 private:
  int n_ = 0;
  std::vector<SubsetMask> members_;
};

SetFamily power_set(int n);
SetFamily with_member(const SetFamily& f, SubsetMask s);

/// Classes of ground elements with identical membership profiles.
struct AtomPartition {
  std::vector<SubsetMask> blocks;  ///< ordered by smallest element
  bool has_non_singleton() const;
};
AtomPartition atom_partition(const SetFamily& f);

struct SeparationResult {
  bool separating = true;
  /// Smallest unseparated pair (x, y), x < y, when not separating.
  std::optional<std::pair<int, int>> witness;
};
SeparationResult is_separating(const SetFamily& f);

std::uint64_t binomial(int n, int k);

/// Upper bound on members any generator in this library will materialize.
inline constexpr std::uint64_t kMaterializeCap = 10'000'000;

/// Levels a..a+k-1 of B_l.
SetFamily levels_family(int l, int a, int k);
/// Index of the lowest of the (lower) middle k levels of B_l.
int middle_levels_bottom(int l, int k);
/// The lower middle k levels of B_l.
SetFamily middle_levels(int l, int k);
std::uint64_t middle_levels_size(int l, int k);

}  // namespace posat
