#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "posat/family.hpp"
#include "posat/poset.hpp"
#include "posat/search.hpp"

namespace posat {

/// image[p] is the index (into the family's sorted members) of the set
/// assigned to poset element p.
struct Embedding {
  std::vector<std::size_t> image;

  bool operator==(const Embedding&) const = default;
};

/// Checks injectivity and the containment conditions of `mode`. Throws
/// `Error` when the assignment has the wrong length or an index is out of
/// range.
bool verify_embedding(const SetFamily& fam, const Poset& p, CopyMode mode, const Embedding& e);

/// Some copy of `p` in `fam`, or nullopt. Unions of chains use the chain
/// search; results are deterministic.
std::optional<Embedding> find_copy(const SetFamily& fam, const Poset& p, CopyMode mode);

/// A copy whose image contains `forced`. Throws `Error` when `forced` is
/// not a member.
std::optional<Embedding> find_copy_containing(const SetFamily& fam, const Poset& p, CopyMode mode,
                                              SubsetMask forced);

/// Copy of C_{l1} + C_{l2} + ..., with elements numbered as in
/// `chains_poset(lengths)`. Throws `Error` on an empty length list.
std::optional<Embedding> find_copy_chains(const SetFamily& fam, std::span<const int> lengths, CopyMode mode);

/// Element-by-element search only, never the chain path.
std::optional<Embedding> find_copy_general(const SetFamily& fam, const Poset& p, CopyMode mode);

/// Whether levels a..a+k-1 of B_l contain a copy of `p`.
///
/// Above l = 3|P| the search runs in the sub-cube B_{3|P|} (the extra
/// elements fixed inside or outside each set), with the window shifted
/// as close to the middle as the fixed elements allow. A copy found there
/// is a copy in B_l; a miss in the sub-cube is reported as false.
bool levels_contain(int l, int a, int k, const Poset& p, CopyMode mode);

struct EstarEstimate {
  /// Present when some (conjectured + 1)-level window was seen to contain P,
  /// which proves e*(P) <= conjectured.
  std::optional<int> certified_upper;
  /// Largest k for which no examined k-level window contained P.
  int conjectured = 0;
  /// Largest l all of whose conjectured-level windows were examined.
  int cap_used = 0;
};

/// Windows of k = 1, 2, ... consecutive levels of B_l for l <= min(cap, 3|P|),
/// smaller l first; the first k with a containing window gives
/// conjectured = certified = k - 1. Throws `Error` for an empty poset or
/// cap < |P|.
EstarEstimate estar_estimate(const Poset& p, CopyMode mode, int cap);

}  // namespace posat
