#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "posat/family.hpp"
#include "posat/poset.hpp"
#include "posat/search.hpp"

namespace posat {

/// Largest ground size the exhaustive search accepts.
inline constexpr int kMaxOracleGround = 6;

struct OracleOptions {
  /// Largest family size tried; 0 means 2^n.
  int max_size = 0;
  /// Cap on stored witnesses at the minimum size; 0 keeps all.
  std::size_t witness_cap = 0;
  int threads = 0;
};

struct OracleResult {
  int n = 0;
  Poset poset;
  CopyMode mode = CopyMode::Induced;
  /// Exact minimum, or nullopt when no saturating family of size <= max_size exists.
  std::optional<int> minimum;
  int max_size = 0;
  int start_size = 0;
  std::vector<SetFamily> witnesses;  ///< sorted, all of size `minimum`
  bool witnesses_truncated = false;
  std::vector<SubsetMask> forced;    ///< members every saturating family must hold
  std::uint64_t nodes_explored = 0;
};

/// Members forced into every induced-saturating family: [n] when P has no
/// largest element, {} when it has no smallest. None in non-induced mode.
std::vector<SubsetMask> forced_members(int n, const Poset& p, CopyMode mode);

/// Iterative deepening over the family size from
/// max(|forced|, min(|P|-1, 2^n)): families grow by sets in increasing bit
/// order, every node is kept P-free and saturation is tested at the target
/// size. Throws `Error` for n outside [1, kMaxOracleGround].
OracleResult min_saturating(int n, const Poset& p, CopyMode mode, const OracleOptions& options = {});

/// All saturating families of exactly `size` members.
std::vector<SetFamily> enumerate_saturating(int n, const Poset& p, CopyMode mode, int size, int threads = 0,
                                            std::uint64_t* nodes = nullptr);

}  // namespace posat
