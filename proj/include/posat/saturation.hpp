#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posat/embedding.hpp"
#include "posat/family.hpp"
#include "posat/poset.hpp"

namespace posat {

enum class Verdict { Free, NotFree, Saturating, NotSaturating };
std::string_view to_string(Verdict v);

struct SaturationOptions {
  int threads = 0;  ///< 0: default_threads()
  /// Members must be constant on {m..n}; candidates are then taken up to
  /// permutations of that tail.
  std::optional<int> symmetric_tail;
  /// Also run the unreduced, general-path check and compare verdicts.
  bool cross_check = false;
  bool allow_chain_path = true;
};

struct SaturationReport {
  Poset poset;
  CopyMode mode = CopyMode::Induced;
  int n = 0;
  std::size_t family_size = 0;
  Verdict verdict = Verdict::Free;
  std::optional<Embedding> embedding;  ///< NotFree
  std::optional<SubsetMask> missing;   ///< NotSaturating: adding it creates no copy
  std::uint64_t candidates_tested = 0;
  std::uint64_t copies_found = 0;
  std::uint64_t search_nodes = 0;
  std::optional<int> tail_used;
  bool chain_path = false;
  std::optional<bool> cross_check_agrees;

  bool affirmative() const { return verdict == Verdict::Free || verdict == Verdict::Saturating; }
};

SaturationReport is_p_free(const SetFamily& fam, const Poset& p, CopyMode mode, const SaturationOptions& options = {});

/// NotFree when `fam` already contains a copy; otherwise tests every
/// non-member (or every tail class representative). The witness is the
/// smallest failing candidate by bit value; counts cover all candidates.
/// Throws `Error` when the tail precondition fails.
SaturationReport is_saturating(const SetFamily& fam, const Poset& p, CopyMode mode,
                               const SaturationOptions& options = {});

/// Decisions of the greedy colex process, indexed from 0 for i = 1.
struct GreedyTrace {
  int n = 0;
  std::vector<bool> f_added;
  std::vector<bool> g_added;
  SetFamily family;
  /// Last 1-based index i at which F_i or G_i was added.
  std::uint64_t stabilization = 0;
  std::uint64_t search_nodes = 0;
};

/// Largest ground size accepted by `greedy_colex` (2^(n-1) steps).
inline constexpr int kMaxGreedyGround = 30;

GreedyTrace greedy_colex(int n, const Poset& p, CopyMode mode);

/// Rebuilds the family from the decisions alone.
SetFamily replay(const GreedyTrace& trace);

struct ConstantBound {
  std::size_t bound = 0;
  SetFamily family;  ///< greedy output over [m]
  int m = 0;
  /// Largest element lying in a non-singleton atom.
  int inflate_from = 0;
};

/// Greedy run on [m]; a certificate when its output is not separating.
std::optional<ConstantBound> certify_constant_bound(const Poset& p, CopyMode mode, int m);

struct BoundSweep {
  std::optional<ConstantBound> certificate;
  /// (m, greedy size) for every m tried.
  std::vector<std::pair<int, std::size_t>> greedy_sizes;
};

/// certify_constant_bound for m = m_from..m_to, stopping at the first success.
BoundSweep sweep_constant_bound(const Poset& p, CopyMode mode, int m_from, int m_to);

/// Every member's membership of m+1..n copied from element x. Throws
/// `Error` when x lies in a singleton block or n < m.
SetFamily inflate_family(const SetFamily& fam, int x, int n);

enum class Boundedness { UnboundedCertified, BoundedCertified, Unknown };
std::string_view to_string(Boundedness b);

struct Classification {
  Boundedness kind = Boundedness::Unknown;
  std::string reason;
  std::optional<TopChainDecomposition> decomposition;  ///< as found, before normalization
  std::optional<TopChainDecomposition> normalized;
  bool via_dual = false;
  std::optional<ConstantBound> bound;
  /// Bounded by the chain + shallow construction; no constant computed.
  bool bound_exists_not_computed = false;
  std::optional<int> chain_component_length;
  std::optional<EstarEstimate> estar;  ///< of the poset left after removing that chain
  /// Evidence: greedy sizes per m, e* estimates of candidate remainders.
  std::vector<std::pair<int, std::size_t>> greedy_sizes;
  std::vector<std::pair<int, EstarEstimate>> estar_evidence;
};

/// Boundedness of the induced saturation number of `p`. Non-induced mode is
/// always bounded (by 2^(|P|-2)).
Classification classify(const Poset& p, CopyMode mode = CopyMode::Induced, int estar_cap = 12, int greedy_cap = 9);

}  // namespace posat
