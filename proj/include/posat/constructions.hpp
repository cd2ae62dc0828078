#pragma once

#include <cstdint>
#include <string>

#include "posat/family.hpp"
#include "posat/poset.hpp"
#include "posat/search.hpp"

namespace posat {

/// A generated family together with the poset it is meant to saturate.
struct TaggedFamily {
  std::string name;
  SetFamily family;
  Poset target;
  std::string target_expr;  ///< expression for `target` when one exists
  CopyMode mode = CopyMode::NonInduced;
  std::uint64_t claimed_size = 0;
  int validity = 0;  ///< smallest n the construction is claimed for
  bool hypotheses_met = true;
};

/// Image of 2^[k-2] under F -> F, or F u ([n] \ [k-2]) when k-2 is in F.
TaggedFamily chain_family(int k, int n);

/// Size |P|-1 family: with p the first low-degree element and i the
/// lexicographically first embedding of P - p into the smallest cube B_m,
/// p- -> {}, p+ -> [n] and every other p' -> i(p') u {m+1}.
TaggedFamily max1_family(const Poset& p, int n);

/// {}, {1}, ..., {s+t-3} and their complements.
TaggedFamily kst_family(int s, int t, int n);

/// Minimum degree at least 2: {}, {1}..{v-1}, [n] \ [v-1], [n],
/// [n] \ {i} for i <= delta-2 and [n] \ {v-1+j} for j <= e-delta.
/// Minimum degree <= 1 falls back to `max1_family`. Throws `Error` for
/// multigraphs with parallel edges.
TaggedFamily graph_family(const Multigraph& g, int n);

enum class SingletonTarget { TwoC2, DiamondPrime };

/// The chain {}, [1], ..., [n] plus the singletons {2}..{n}.
TaggedFamily chain_plus_singletons(int n, SingletonTarget target = SingletonTarget::TwoC2);

/// The chain plus all singletons and all co-singletons, target 2C3.
TaggedFamily chain_singletons_cosingletons(int n);

/// Circular intervals of [k] (and their complements) with k replaced by
/// the block {k..n}; target (floor(2k/3)+1) C2.
TaggedFamily interval_hat(int k, int n);

/// Union over j < n of T_j and the complements of T_j.
TaggedFamily butterfly_H(int n);

/// Size |M_{l,k-1}| + 2 without materializing.
std::uint64_t chain_plus_shallow_size(int k, int l);

/// Membership in {}, [n] and the two halves of the middle k-1 levels of B_l.
bool chain_plus_shallow_contains(int k, int l, int n, SubsetMask s);

/// Whether l >= 10k and M_{l-2,k-1} is seen to contain an induced copy of p0.
bool chain_plus_shallow_hypotheses(const Poset& p0, int k, int l);

/// The chain + shallow family, target C_k + p0 induced. Throws `Error`
/// above the materialization cap.
TaggedFamily chain_plus_shallow(const Poset& p0, int k, int l, int n);

/// Whether the family holds a maximal chain {} < S_1 < ... < [n].
bool maximal_chain_check(const SetFamily& fam);

}  // namespace posat
