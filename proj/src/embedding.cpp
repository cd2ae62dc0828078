#include "posat/embedding.hpp"

#include <algorithm>

namespace posat {

namespace {

// Largest window materialized during e* estimation; the containment index
// is quadratic in the window size.
constexpr std::uint64_t kEstarWindowCap = 12'000;

std::optional<Embedding> run(const SetFamily& fam, const CopyFinder& finder, std::optional<SubsetMask> forced) {
  ContainmentIndex index(fam.members());
  std::optional<std::size_t> anchor;
  if (forced) {
    anchor = fam.index_of(*forced);
    if (!anchor) throw Error("forced set " + to_string(*forced) + " is not a member of the family");
  }
  auto image = finder.find(index, nullptr, anchor);
  if (!image) return std::nullopt;
  return Embedding{std::move(*image)};
}

std::uint64_t window_size(int l, int a, int k) {
  std::uint64_t total = 0;
  for (int s = std::max(a, 0); s <= std::min(l, a + k - 1); ++s) total += binomial(l, s);
  return total;
}

bool window_contains(int l, int a, int k, const CopyFinder& finder) {
  const SetFamily window = levels_family(l, a, k);
  if (window.size() < static_cast<std::size_t>(finder.poset().size())) return false;
  ContainmentIndex index(window.members());
  return finder.find(index, nullptr, std::nullopt).has_value();
}

/// Window bottoms of B_l for k levels, middle first, then alternating outward.
std::vector<int> windows_middle_first(int l, int k) {
  std::vector<int> out;
  const int last = l - k + 1;
  if (last < 0) return out;
  const int mid = middle_levels_bottom(l, k);
  out.push_back(mid);
  for (int d = 1; static_cast<int>(out.size()) < last + 1; ++d) {
    if (mid - d >= 0) out.push_back(mid - d);
    if (mid + d <= last) out.push_back(mid + d);
  }
  return out;
}

}  // namespace

bool verify_embedding(const SetFamily& fam, const Poset& p, CopyMode mode, const Embedding& e) {
  if (e.image.size() != static_cast<std::size_t>(p.size())) {
    throw Error("embedding assigns " + std::to_string(e.image.size()) + " elements, poset has " +
                std::to_string(p.size()));
  }
  for (std::size_t idx : e.image) {
    if (idx >= fam.size()) throw Error("embedding index " + std::to_string(idx) + " out of range");
  }
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      if (a == b) continue;
      if (e.image[a] == e.image[b]) return false;
      const bool contained = fam[e.image[a]].subset_of(fam[e.image[b]]);
      if (p.less(a, b) && !contained) return false;
      if (mode == CopyMode::Induced && !p.less(a, b) && contained) return false;
    }
  }
  return true;
}

std::optional<Embedding> find_copy(const SetFamily& fam, const Poset& p, CopyMode mode) {
  return run(fam, CopyFinder(p, mode), std::nullopt);
}

std::optional<Embedding> find_copy_containing(const SetFamily& fam, const Poset& p, CopyMode mode,
                                              SubsetMask forced) {
  return run(fam, CopyFinder(p, mode), forced);
}

std::optional<Embedding> find_copy_chains(const SetFamily& fam, std::span<const int> lengths, CopyMode mode) {
  if (lengths.empty()) throw Error("chain search needs at least one chain length");
  const Poset p = chains_poset(lengths);
  CopyFinder finder(p, mode);
  if (!finder.uses_chain_path()) throw Error("chain lengths must be positive");
  return run(fam, finder, std::nullopt);
}

std::optional<Embedding> find_copy_general(const SetFamily& fam, const Poset& p, CopyMode mode) {
  return run(fam, CopyFinder(p, mode, false), std::nullopt);
}

bool levels_contain(int l, int a, int k, const Poset& p, CopyMode mode) {
  if (l < 0 || l > kMaxGroundSize) throw Error("ground size outside [0, 63]");
  if (k < 0 || a < 0 || a + k - 1 > l) throw Error("level window outside B_" + std::to_string(l));
  if (p.empty()) return true;
  if (k == 0) return false;
  const int reduced = 3 * p.size();
  if (l > reduced) {
    // Fix j of the extra l - reduced elements inside every set.
    const int extra = l - reduced;
    const int j = std::clamp(a - middle_levels_bottom(reduced, k), 0, extra);
    a -= j;
    l = reduced;
  }
  return window_contains(l, a, k, CopyFinder(p, mode));
}

EstarEstimate estar_estimate(const Poset& p, CopyMode mode, int cap) {
  if (p.empty()) throw Error("e* is undefined for the empty poset");
  if (cap < p.size()) throw Error("e* cap must be at least |P|");
  const CopyFinder finder(p, mode);
  const int top = std::min({cap, 3 * p.size(), kMaxGroundSize});
  EstarEstimate est;
  int previous_examined = top;
  for (int k = 1; k <= top + 1; ++k) {
    int examined = -1;
    for (int l = k - 1; l <= top; ++l) {
      bool complete = true;
      for (int a : windows_middle_first(l, k)) {
        if (window_size(l, a, k) > kEstarWindowCap) {
          complete = false;
          continue;
        }
        if (window_contains(l, a, k, finder)) {
          est.conjectured = k - 1;
          est.certified_upper = k - 1;
          est.cap_used = previous_examined;
          return est;
        }
      }
      if (complete) examined = l;
    }
    previous_examined = examined;
  }
  // Unreachable in practice: B_|P| always contains P.
  est.conjectured = top + 1;
  est.cap_used = previous_examined;
  return est;
}

}  // namespace posat
