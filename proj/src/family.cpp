#include "posat/family.hpp"

#include <algorithm>

namespace posat {

SubsetMask SubsetMask::of(std::initializer_list<int> elements) {
  return of(std::span<const int>(elements.begin(), elements.size()));
}

SubsetMask SubsetMask::of(std::span<const int> elements) {
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGroundSize) throw Error("element " + std::to_string(e) + " outside [1, 63]");
    bits |= std::uint64_t{1} << (e - 1);
  }
  return SubsetMask(bits);
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  for (std::uint64_t m = bits_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string to_string(SubsetMask s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::strong_ordering colex_compare(SubsetMask a, SubsetMask b) {
  const SubsetMask diff = a ^ b;
  if (diff.empty()) return std::strong_ordering::equal;
  return b.has(diff.max_element()) ? std::strong_ordering::less : std::strong_ordering::greater;
}

ColexPair colex_unrank(std::uint64_t index, int n) {
  if (n < 1 || n > kMaxGroundSize) throw Error("ground size outside [1, 63]");
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  if (index < 1 || index > count) {
    throw Error("colex index " + std::to_string(index) + " outside [1, " + std::to_string(count) + "]");
  }
  const SubsetMask low(index - 1);
  return {low, low.complement(n)};
}

SetFamily::SetFamily(int n) : n_(n) {
  if (n < 0 || n > kMaxGroundSize) throw Error("ground size " + std::to_string(n) + " outside [0, 63]");
}

SetFamily::SetFamily(int n, std::vector<SubsetMask> members) : SetFamily(n) {
  std::sort(members.begin(), members.end());
  if (auto dup = std::adjacent_find(members.begin(), members.end()); dup != members.end()) {
    throw Error("duplicate set " + to_string(*dup) + " in family");
  }
  for (auto s : members) {
    if (!s.fits(n)) throw Error("set " + to_string(s) + " does not fit [" + std::to_string(n) + "]");
  }
  members_ = std::move(members);
}

bool SetFamily::contains(SubsetMask s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

std::optional<std::size_t> SetFamily::index_of(SubsetMask s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

bool SetFamily::insert(SubsetMask s) {
  if (!s.fits(n_)) throw Error("set " + to_string(s) + " does not fit [" + std::to_string(n_) + "]");
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it != members_.end() && *it == s) return false;
  members_.insert(it, s);
  return true;
}

SetFamily power_set(int n) {
  if (n > 26) throw Error("power set of [" + std::to_string(n) + "] is too large to materialize");
  std::vector<SubsetMask> all;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) all.emplace_back(b);
  return SetFamily(n, std::move(all));
}

SetFamily with_member(const SetFamily& f, SubsetMask s) {
  SetFamily out = f;
  out.insert(s);
  return out;
}

bool AtomPartition::has_non_singleton() const {
  return std::any_of(blocks.begin(), blocks.end(), [](SubsetMask b) { return b.size() > 1; });
}

AtomPartition atom_partition(const SetFamily& f) {
  AtomPartition out;
  if (f.ground_size() == 0) return out;
  std::vector<SubsetMask> blocks{SubsetMask::full(f.ground_size())};
  for (SubsetMask s : f) {
    std::vector<SubsetMask> refined;
    refined.reserve(blocks.size() * 2);
    for (SubsetMask b : blocks) {
      if (SubsetMask in = b & s; !in.empty()) refined.push_back(in);
      if (SubsetMask out_part = b - s; !out_part.empty()) refined.push_back(out_part);
    }
    blocks = std::move(refined);
  }
  std::sort(blocks.begin(), blocks.end(), [](SubsetMask a, SubsetMask b) {
    return std::countr_zero(a.bits()) < std::countr_zero(b.bits());
  });
  out.blocks = std::move(blocks);
  return out;
}

SeparationResult is_separating(const SetFamily& f) {
  SeparationResult res;
  const auto atoms = atom_partition(f);
  for (SubsetMask b : atoms.blocks) {
    if (b.size() < 2) continue;
    const auto elems = b.elements();
    if (!res.witness || elems[0] < res.witness->first) res.witness = std::pair{elems[0], elems[1]};
  }
  res.separating = !res.witness.has_value();
  return res;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(r);
}

SetFamily levels_family(int l, int a, int k) {
  if (l < 0 || l > kMaxGroundSize) throw Error("ground size outside [0, 63]");
  std::uint64_t total = 0;
  for (int s = std::max(a, 0); s <= std::min(l, a + k - 1); ++s) total += binomial(l, s);
  if (total > kMaterializeCap) {
    throw Error("level window of B_" + std::to_string(l) + " has " + std::to_string(total) +
                " sets, above the materialization cap");
  }
  std::vector<SubsetMask> sets;
  sets.reserve(total);
  for (int s = std::max(a, 0); s <= std::min(l, a + k - 1); ++s) {
    if (s == 0) {
      sets.emplace_back(0);
      continue;
    }
    // Gosper's hack over s-subsets of [l].
    std::uint64_t v = (std::uint64_t{1} << s) - 1;
    const std::uint64_t limit = SubsetMask::full(l).bits();
    while (v <= limit) {
      sets.emplace_back(v);
      const std::uint64_t t = v | (v - 1);
      if (t == ~std::uint64_t{0}) break;
      v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
      if (v == 0) break;
    }
  }
  return SetFamily(l, std::move(sets));
}

int middle_levels_bottom(int l, int k) { return (l - k + 1) / 2; }

SetFamily middle_levels(int l, int k) {
  if (k < 0 || k > l + 1) throw Error("middle levels need 0 <= k <= l+1");
  return levels_family(l, middle_levels_bottom(l, k), k);
}

std::uint64_t middle_levels_size(int l, int k) {
  if (k < 0 || k > l + 1) throw Error("middle levels need 0 <= k <= l+1");
  const int bottom = middle_levels_bottom(l, k);
  std::uint64_t total = 0;
  for (int s = bottom; s < bottom + k; ++s) total += binomial(l, s);
  return total;
}

}  // namespace posat
