#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace posat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bit i set <=> poset element i.
using ElementMask = std::uint64_t;

inline constexpr int kMaxPosetSize = 64;

/// Finite strict partial order on the elements 0..size-1.
///
/// The relation is stored as two bit rows per element (strictly above /
/// strictly below). Construction always closes the relation transitively
/// and rejects cycles, so a live `Poset` is irreflexive, transitive and
/// antisymmetric.
class Poset {
 public:
  Poset() = default;

  /// Antichain on `size` elements.
  explicit Poset(int size);

  /// Transitive closure of the given `a < b` pairs. Throws `Error` when the
  /// pairs contain a cycle (including `a < a`) or an element is out of range.
  static Poset from_relations(int size, std::span<const std::pair<int, int>> less_pairs);

  int size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool less(int a, int b) const { return (up_[a] >> b) & 1U; }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

  ElementMask above(int a) const { return up_[a]; }
  ElementMask below(int a) const { return down_[a]; }
  ElementMask comparable_to(int a) const { return up_[a] | down_[a]; }
  ElementMask all() const noexcept;

  /// All `(a, b)` with a < b, sorted.
  std::vector<std::pair<int, int>> relations() const;
  std::size_t relation_count() const;

  bool operator==(const Poset&) const = default;

 private:
  int size_ = 0;
  std::vector<ElementMask> up_;
  std::vector<ElementMask> down_;
};

/// Loopless multigraph; parallel edges allowed.
struct Multigraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  bool is_simple() const;
  int min_degree() const;
};

Poset chain(int k);
Poset antichain(int k);
Poset complete_bipartite(int s, int t);
/// One element below `k` pairwise incomparable elements.
Poset fork(int k);

/// P+Q: elements of `q` are renumbered after those of `p`.
Poset disjoint_union(const Poset& p, const Poset& q);
/// `copies` disjoint copies of `p`.
Poset repeat(int copies, const Poset& p);
/// Adds a new element (numbered last) above every element.
Poset add_top(const Poset& p);
Poset dual(const Poset& p);
/// Subposet on `elements`, renumbered in the given order.
Poset induced_subposet(const Poset& p, std::span<const int> elements);

std::vector<std::pair<int, int>> cover_pairs(const Poset& p);
bool has_largest(const Poset& p);
bool has_smallest(const Poset& p);

/// Every cover x < y has a z comparable to exactly one of x and y.
bool has_uctp(const Poset& p);

/// Split of a poset into a UCTP base and a chain lying above all of it.
struct TopChainDecomposition {
  std::vector<int> base;   ///< elements of the UCTP part, ascending
  std::vector<int> chain;  ///< top chain, bottom to top (may be empty)
  Poset base_poset;
  /// The base has no largest element while the chain is non-empty, so the
  /// lowest chain element can be folded into the base.
  bool needs_normalization = false;
};

/// Decomposition with the longest valid top chain (|base| >= 2, base has
/// UCTP), or nullopt.
std::optional<TopChainDecomposition> uctp_top_chain_decomposition(const Poset& p);

/// Moves the lowest chain element into the base when `needs_normalization`.
TopChainDecomposition normalize(const TopChainDecomposition& d, const Poset& p);

/// Connected components of the comparability graph, each sorted ascending,
/// ordered by smallest element.
std::vector<std::vector<int>> connected_components(const Poset& p);

/// Chain lengths (descending) when every component is a chain.
std::optional<std::vector<int>> is_union_of_chains(const Poset& p);

/// Components as chains listed bottom to top, longest first (ties by
/// smallest element); nullopt unless `p` is a disjoint union of chains.
std::optional<std::vector<std::vector<int>>> chain_components(const Poset& p);

/// C_{l1} + C_{l2} + ... numbered chain after chain, each bottom to top.
Poset chains_poset(std::span<const int> lengths);

/// Smallest p with at most one element below and at most one above.
std::optional<int> low_degree_element(const Poset& p);

/// Vertices first (0..v-1), then edges; v < e iff v is an endpoint of e.
Poset graph_poset(const Multigraph& g);

/// Some linear extension; ties broken by element index.
std::vector<int> linear_extension(const Poset& p);

/// Brute-force isomorphism, mapping element i of `p` to result[i] of `q`.
/// Only defined for posets of at most 8 elements; larger inputs throw.
std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q);
bool are_isomorphic(const Poset& p, const Poset& q);

inline constexpr int kMaxIsomorphismSize = 8;

}  // namespace posat
