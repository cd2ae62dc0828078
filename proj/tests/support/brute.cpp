#include "support/brute.hpp"

#include <algorithm>
#include <numeric>

namespace brute {

namespace {

bool sub(SubsetMask a, SubsetMask b) { return (a.bits() & ~b.bits()) == 0 && a.bits() != b.bits(); }

// Conditions between element j (already placed) and element i.
bool pair_ok(const Poset& p, CopyMode mode, int i, int j, SubsetMask si, SubsetMask sj) {
  const bool ij = p.less(i, j);
  const bool ji = p.less(j, i);
  if (ij && !sub(si, sj)) return false;
  if (ji && !sub(sj, si)) return false;
  if (mode == CopyMode::Induced) {
    if (!ij && sub(si, sj)) return false;
    if (!ji && sub(sj, si)) return false;
  }
  return true;
}

bool place(const SetFamily& fam, const Poset& p, CopyMode mode, std::vector<std::size_t>& img,
           std::vector<bool>& used, std::optional<std::pair<int, std::size_t>> fixed = std::nullopt) {
  const int i = static_cast<int>(img.size());
  if (i == p.size()) return true;
  for (std::size_t c = 0; c < fam.size(); ++c) {
    if (used[c]) continue;
    if (fixed && (fixed->first == i) != (fixed->second == c)) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) ok = pair_ok(p, mode, i, j, fam[c], fam[img[j]]);
    if (!ok) continue;
    used[c] = true;
    img.push_back(c);
    if (place(fam, p, mode, img, used, fixed)) return true;
    img.pop_back();
    used[c] = false;
  }
  return false;
}

}  // namespace

std::vector<std::vector<bool>> relation_matrix(const Poset& p) {
  std::vector<std::vector<bool>> rel(p.size(), std::vector<bool>(p.size(), false));
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) rel[a][b] = p.less(a, b);
  }
  return rel;
}

bool is_strict_order(const std::vector<std::vector<bool>>& rel) {
  const std::size_t n = rel.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (rel[a][a]) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (rel[a][b] && rel[b][a]) return false;
      for (std::size_t c = 0; c < n; ++c) {
        if (rel[a][b] && rel[b][c] && !rel[a][c]) return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> find_copy(const SetFamily& fam, const Poset& p, CopyMode mode) {
  std::vector<std::size_t> img;
  std::vector<bool> used(fam.size(), false);
  if (place(fam, p, mode, img, used)) return img;
  return std::nullopt;
}

bool contains_copy(const SetFamily& fam, const Poset& p, CopyMode mode) {
  return find_copy(fam, p, mode).has_value();
}

bool contains_copy_using(const SetFamily& fam, const Poset& p, CopyMode mode, std::size_t member) {
  for (int e = 0; e < p.size(); ++e) {
    std::vector<std::size_t> img;
    std::vector<bool> used(fam.size(), false);
    if (place(fam, p, mode, img, used, std::pair{e, member})) return true;
  }
  return false;
}

bool is_copy(const std::vector<SubsetMask>& image, const Poset& p, CopyMode mode) {
  if (static_cast<int>(image.size()) != p.size()) return false;
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < i; ++j) {
      if (image[i] == image[j]) return false;
      if (!pair_ok(p, mode, i, j, image[i], image[j])) return false;
    }
  }
  return true;
}

bool is_saturating(const SetFamily& fam, const Poset& p, CopyMode mode) {
  if (contains_copy(fam, p, mode)) return false;
  const int n = fam.ground_size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (fam.contains(SubsetMask(s))) continue;
    std::vector<SubsetMask> m(fam.begin(), fam.end());
    m.emplace_back(s);
    if (!contains_copy(SetFamily(n, m), p, mode)) return false;
  }
  return true;
}

bool forced_members_present(const SetFamily& fam, const Poset& p, CopyMode mode) {
  if (mode != CopyMode::Induced || p.size() == 0) return true;
  bool largest = false;
  bool smallest = false;
  for (int a = 0; a < p.size(); ++a) {
    int above = 0;
    int below = 0;
    for (int b = 0; b < p.size(); ++b) {
      above += p.less(a, b);
      below += p.less(b, a);
    }
    largest = largest || below == p.size() - 1;
    smallest = smallest || above == p.size() - 1;
  }
  const int n = fam.ground_size();
  if (!largest && !fam.contains(SubsetMask::full(n))) return false;
  if (!smallest && !fam.contains(SubsetMask{})) return false;
  return true;
}

int longest_chain(const SetFamily& fam) {
  // Members are sorted by bit value, so every strict subset comes earlier.
  std::vector<int> best(fam.size(), 1);
  int out = 0;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (sub(fam[j], fam[i])) best[i] = std::max(best[i], best[j] + 1);
    }
    out = std::max(out, best[i]);
  }
  return out;
}

std::vector<SubsetMask> colex_sorted(int n) {
  std::vector<SubsetMask> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << (n - 1)); ++s) out.emplace_back(s);
  std::sort(out.begin(), out.end(), [](SubsetMask a, SubsetMask b) {
    const std::uint64_t d = a.bits() ^ b.bits();
    if (d == 0) return false;
    const int top = 63 - __builtin_clzll(d);
    return ((b.bits() >> top) & 1U) != 0;
  });
  return out;
}

bool isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return false;
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < p.size() && ok; ++a) {
      for (int b = 0; b < p.size() && ok; ++b) ok = p.less(a, b) == q.less(perm[a], perm[b]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::optional<int> min_saturating(int n, const Poset& p, CopyMode mode) {
  const std::uint64_t cube = std::uint64_t{1} << n;
  std::optional<int> best;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << cube); ++pick) {
    const int size = __builtin_popcountll(pick);
    if (best && size >= *best) continue;
    std::vector<SubsetMask> m;
    for (std::uint64_t s = 0; s < cube; ++s) {
      if ((pick >> s) & 1U) m.emplace_back(s);
    }
    if (is_saturating(SetFamily(n, m), p, mode)) best = size;
  }
  return best;
}

bool separating(const SetFamily& fam) {
  const int n = fam.ground_size();
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      bool split = false;
      for (SubsetMask s : fam) split = split || (s.has(x) != s.has(y));
      if (!split) return false;
    }
  }
  return true;
}

Poset random_poset(std::mt19937_64& rng, int size, double density) {
  std::vector<int> label(size);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < size; ++a) {
    for (int b = a + 1; b < size; ++b) {
      if (edge(rng)) rel.emplace_back(label[a], label[b]);
    }
  }
  return Poset::from_relations(size, rel);
}

SetFamily random_family(std::mt19937_64& rng, int n, int size) {
  std::vector<std::uint64_t> all(std::uint64_t{1} << n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<SubsetMask> m;
  for (int i = 0; i < size && i < static_cast<int>(all.size()); ++i) m.emplace_back(all[i]);
  return SetFamily(n, m);
}

}  // namespace brute
