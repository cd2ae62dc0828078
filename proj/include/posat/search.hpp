#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "posat/family.hpp"
#include "posat/poset.hpp"

namespace posat {

enum class CopyMode { NonInduced, Induced };

std::string_view to_string(CopyMode mode);
/// Accepts "induced" and "non-induced" (also "noninduced", "weak", "strong").
CopyMode parse_copy_mode(std::string_view text);

/// Pairwise strict containment between the sets of a growing list, kept as
/// bit rows: bit j of `supersets(i)` is set iff set i is a proper subset of
/// set j. Sets must be distinct. Appending or removing the last set costs
/// O(size) subset tests.
class ContainmentIndex {
 public:
  ContainmentIndex() = default;
  explicit ContainmentIndex(std::span<const SubsetMask> sets);

  std::size_t size() const noexcept { return sets_.size(); }
  std::size_t words() const noexcept { return words_; }
  SubsetMask set(std::size_t i) const { return sets_[i]; }
  std::span<const SubsetMask> sets() const noexcept { return sets_; }

  const std::uint64_t* supersets(std::size_t i) const { return sup_.data() + i * words_; }
  const std::uint64_t* subsets(std::size_t i) const { return sub_.data() + i * words_; }

  std::size_t push(SubsetMask s);
  void pop();

 private:
  void widen();

  std::vector<SubsetMask> sets_;
  std::size_t words_ = 1;
  std::vector<std::uint64_t> sup_;
  std::vector<std::uint64_t> sub_;
};

/// Cover relation (transitive reduction) of a ContainmentIndex.
class HasseDiagram {
 public:
  HasseDiagram() = default;
  static HasseDiagram build(const ContainmentIndex& index);

  /// Diagram of `index`, given `base` = diagram of `index` without its last
  /// set. Only rows touching the new set are recomputed.
  void assign_extended(const HasseDiagram& base, const ContainmentIndex& index);

  std::size_t size() const noexcept { return size_; }
  std::size_t words() const noexcept { return words_; }
  const std::uint64_t* up(std::size_t i) const { return up_.data() + i * words_; }
  const std::uint64_t* down(std::size_t i) const { return down_.data() + i * words_; }

 private:
  std::size_t size_ = 0;
  std::size_t words_ = 1;
  std::vector<std::uint64_t> up_;
  std::vector<std::uint64_t> down_;
};

struct SearchStats {
  std::uint64_t nodes = 0;
};

/// Backtracking search for copies of a fixed poset, prepared once and reused
/// across families. `find` is const and safe to call concurrently.
///
/// Disjoint unions of chains take the chain path: chains grow one containment
/// step at a time, along Hasse covers in induced mode. Everything else goes
/// through the general path, which places poset elements one by one and
/// intersects containment rows of the already placed images. Both paths
/// order interchangeable isomorphic components by the index of a
/// representative image.
class CopyFinder {
 public:
  CopyFinder(const Poset& p, CopyMode mode, bool allow_chain_path = true);

  const Poset& poset() const noexcept { return poset_; }
  CopyMode mode() const noexcept { return mode_; }
  bool uses_chain_path() const noexcept { return chains_.has_value(); }
  bool needs_hasse() const noexcept { return uses_chain_path() && mode_ == CopyMode::Induced; }

  /// Image index per poset element, or nullopt. With `anchor`, only copies
  /// using that set are reported. `hasse` may be null; it is built on demand
  /// when the chain path needs it.
  std::optional<std::vector<std::size_t>> find(const ContainmentIndex& index,
                                               const HasseDiagram* hasse,
                                               std::optional<std::size_t> anchor,
                                               SearchStats* stats = nullptr) const;

 private:
  std::optional<std::vector<std::size_t>> find_general(const ContainmentIndex& index,
                                                       std::optional<std::size_t> anchor,
                                                       SearchStats& stats) const;
  std::optional<std::vector<std::size_t>> find_chains(const ContainmentIndex& index,
                                                      const HasseDiagram* hasse,
                                                      std::optional<std::size_t> anchor,
                                                      SearchStats& stats) const;

  Poset poset_;
  CopyMode mode_;
  std::optional<std::vector<std::vector<int>>> chains_;

  // General path: components of the comparability graph grouped into
  // isomorphism classes; `class_reps[c]` lists, per class member component,
  // the element corresponding to the first component's smallest element.
  std::vector<std::vector<int>> components_;
  std::vector<int> component_of_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_component_;
  std::vector<int> rep_of_component_;
};

}  // namespace posat
