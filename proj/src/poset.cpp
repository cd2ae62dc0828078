#include "posat/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace posat {

namespace {

ElementMask low_bits(int count) {
  return count >= 64 ? ~ElementMask{0} : ((ElementMask{1} << count) - 1);
}

void check_size(int size) {
  if (size < 0 || size > kMaxPosetSize) {
    throw Error("poset size " + std::to_string(size) + " outside [0, 64]");
  }
}

}  // namespace

Poset::Poset(int size) : size_(size) {
  check_size(size);
  up_.assign(static_cast<std::size_t>(size), 0);
  down_.assign(static_cast<std::size_t>(size), 0);
}

Poset Poset::from_relations(int size, std::span<const std::pair<int, int>> less_pairs) {
  Poset p(size);
  for (auto [a, b] : less_pairs) {
    if (a < 0 || b < 0 || a >= size || b >= size) {
      throw Error("relation " + std::to_string(a) + " < " + std::to_string(b) +
                  " references an element outside 0.." + std::to_string(size - 1));
    }
    p.up_[a] |= ElementMask{1} << b;
  }
  // Warshall closure on bit rows.
  for (int mid = 0; mid < size; ++mid) {
    for (int i = 0; i < size; ++i) {
      if ((p.up_[i] >> mid) & 1U) p.up_[i] |= p.up_[mid];
    }
  }
  for (int i = 0; i < size; ++i) {
    if ((p.up_[i] >> i) & 1U) {
      throw Error("relations contain a cycle through element " + std::to_string(i));
    }
    for (ElementMask m = p.up_[i]; m; m &= m - 1) {
      p.down_[std::countr_zero(m)] |= ElementMask{1} << i;
    }
  }
  return p;
}

ElementMask Poset::all() const noexcept { return low_bits(size_); }

std::vector<std::pair<int, int>> Poset::relations() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size_; ++a) {
    for (ElementMask m = up_[a]; m; m &= m - 1) out.emplace_back(a, std::countr_zero(m));
  }
  return out;
}

std::size_t Poset::relation_count() const {
  std::size_t count = 0;
  for (auto row : up_) count += static_cast<std::size_t>(std::popcount(row));
  return count;
}

bool Multigraph::is_simple() const {
  std::vector<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    seen.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

int Multigraph::min_degree() const {
  std::vector<int> degree(static_cast<std::size_t>(vertices), 0);
  for (auto [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  return degree.empty() ? 0 : *std::min_element(degree.begin(), degree.end());
}

Poset chain(int k) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < k; ++i) rel.emplace_back(i, i + 1);
  return Poset::from_relations(k, rel);
}

Poset antichain(int k) { return Poset(k); }

Poset complete_bipartite(int s, int t) {
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < t; ++b) rel.emplace_back(a, s + b);
  }
  return Poset::from_relations(s + t, rel);
}

Poset fork(int k) { return complete_bipartite(1, k); }

Poset disjoint_union(const Poset& p, const Poset& q) {
  auto rel = p.relations();
  for (auto [a, b] : q.relations()) rel.emplace_back(a + p.size(), b + p.size());
  return Poset::from_relations(p.size() + q.size(), rel);
}

Poset repeat(int copies, const Poset& p) {
  Poset out;
  for (int i = 0; i < copies; ++i) out = disjoint_union(out, p);
  return out;
}

Poset add_top(const Poset& p) {
  auto rel = p.relations();
  for (int a = 0; a < p.size(); ++a) rel.emplace_back(a, p.size());
  return Poset::from_relations(p.size() + 1, rel);
}

Poset dual(const Poset& p) {
  auto rel = p.relations();
  for (auto& [a, b] : rel) std::swap(a, b);
  return Poset::from_relations(p.size(), rel);
}

Poset induced_subposet(const Poset& p, std::span<const int> elements) {
  std::vector<std::pair<int, int>> rel;
  const int k = static_cast<int>(elements.size());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (p.less(elements[i], elements[j])) rel.emplace_back(i, j);
    }
  }
  return Poset::from_relations(k, rel);
}

std::vector<std::pair<int, int>> cover_pairs(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : p.relations()) {
    if ((p.above(a) & p.below(b)) == 0) out.emplace_back(a, b);
  }
  return out;
}

bool has_largest(const Poset& p) {
  for (int a = 0; a < p.size(); ++a) {
    if (std::popcount(p.below(a)) == p.size() - 1) return true;
  }
  return false;
}

bool has_smallest(const Poset& p) {
  for (int a = 0; a < p.size(); ++a) {
    if (std::popcount(p.above(a)) == p.size() - 1) return true;
  }
  return false;
}

bool has_uctp(const Poset& p) {
  for (auto [x, y] : cover_pairs(p)) {
    ElementMask twins = (p.comparable_to(x) ^ p.comparable_to(y));
    twins &= ~((ElementMask{1} << x) | (ElementMask{1} << y));
    if (twins == 0) return false;
  }
  return true;
}

std::optional<TopChainDecomposition> uctp_top_chain_decomposition(const Poset& p) {
  std::optional<TopChainDecomposition> best;
  auto consider = [&](ElementMask chain_mask) {
    const ElementMask base_mask = p.all() & ~chain_mask;
    if (std::popcount(base_mask) < 2) return;
    std::vector<int> base;
    std::vector<int> top;
    for (int a = 0; a < p.size(); ++a) ((base_mask >> a) & 1U ? base : top).push_back(a);
    std::sort(top.begin(), top.end(), [&](int a, int b) { return p.less(a, b); });
    Poset base_poset = induced_subposet(p, base);
    if (!has_uctp(base_poset)) return;
    if (best && best->chain.size() >= top.size()) return;
    TopChainDecomposition d;
    d.base = std::move(base);
    d.chain = std::move(top);
    d.needs_normalization = !d.chain.empty() && !has_largest(base_poset);
    d.base_poset = std::move(base_poset);
    best = std::move(d);
  };
  consider(0);
  for (int t = 0; t < p.size(); ++t) {
    // {x >= t} must be a chain and everything else must lie below t.
    const ElementMask up = p.above(t) | (ElementMask{1} << t);
    if ((p.below(t) | up) != p.all()) continue;
    bool is_chain = true;
    for (ElementMask m = up; m; m &= m - 1) {
      const int a = std::countr_zero(m);
      if (((p.comparable_to(a) | (ElementMask{1} << a)) & up) != up) is_chain = false;
    }
    if (is_chain) consider(up);
  }
  return best;
}

TopChainDecomposition normalize(const TopChainDecomposition& d, const Poset& p) {
  if (!d.needs_normalization) return d;
  TopChainDecomposition out;
  out.base = d.base;
  out.base.push_back(d.chain.front());
  std::sort(out.base.begin(), out.base.end());
  out.chain.assign(d.chain.begin() + 1, d.chain.end());
  out.base_poset = induced_subposet(p, out.base);
  return out;
}

std::vector<std::vector<int>> connected_components(const Poset& p) {
  std::vector<std::vector<int>> out;
  ElementMask seen = 0;
  for (int start = 0; start < p.size(); ++start) {
    if ((seen >> start) & 1U) continue;
    ElementMask comp = ElementMask{1} << start;
    ElementMask frontier = comp;
    while (frontier) {
      ElementMask next = 0;
      for (ElementMask m = frontier; m; m &= m - 1) next |= p.comparable_to(std::countr_zero(m));
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    std::vector<int> members;
    for (ElementMask m = comp; m; m &= m - 1) members.push_back(std::countr_zero(m));
    out.push_back(std::move(members));
  }
  return out;
}

std::optional<std::vector<std::vector<int>>> chain_components(const Poset& p) {
  auto comps = connected_components(p);
  for (auto& comp : comps) {
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t j = i + 1; j < comp.size(); ++j) {
        if (!p.comparable(comp[i], comp[j])) return std::nullopt;
      }
    }
    std::sort(comp.begin(), comp.end(), [&](int a, int b) { return p.less(a, b); });
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return comps;
}

std::optional<std::vector<int>> is_union_of_chains(const Poset& p) {
  auto comps = chain_components(p);
  if (!comps) return std::nullopt;
  std::vector<int> lengths;
  for (const auto& c : *comps) lengths.push_back(static_cast<int>(c.size()));
  return lengths;
}

Poset chains_poset(std::span<const int> lengths) {
  Poset out;
  for (int len : lengths) out = disjoint_union(out, chain(len));
  return out;
}

std::optional<int> low_degree_element(const Poset& p) {
  for (int a = 0; a < p.size(); ++a) {
    if (std::popcount(p.below(a)) <= 1 && std::popcount(p.above(a)) <= 1) return a;
  }
  return std::nullopt;
}

Poset graph_poset(const Multigraph& g) {
  std::vector<std::pair<int, int>> rel;
  const int e = static_cast<int>(g.edges.size());
  for (int i = 0; i < e; ++i) {
    auto [u, v] = g.edges[i];
    if (u == v) throw Error("multigraph edge " + std::to_string(i) + " is a loop");
    if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices) {
      throw Error("multigraph edge " + std::to_string(i) + " has an endpoint out of range");
    }
    rel.emplace_back(u, g.vertices + i);
    rel.emplace_back(v, g.vertices + i);
  }
  return Poset::from_relations(g.vertices + e, rel);
}

std::vector<int> linear_extension(const Poset& p) {
  std::vector<int> order;
  ElementMask placed = 0;
  while (static_cast<int>(order.size()) < p.size()) {
    for (int a = 0; a < p.size(); ++a) {
      if (((placed >> a) & 1U) == 0 && (p.below(a) & ~placed) == 0) {
        order.push_back(a);
        placed |= ElementMask{1} << a;
        break;
      }
    }
  }
  return order;
}

std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q) {
  if (p.size() > kMaxIsomorphismSize || q.size() > kMaxIsomorphismSize) {
    throw Error("isomorphism search is limited to posets of at most 8 elements");
  }
  if (p.size() != q.size() || p.relation_count() != q.relation_count()) return std::nullopt;
  const int k = p.size();
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) {
      for (int b = 0; b < k && ok; ++b) ok = p.less(a, b) == q.less(perm[a], perm[b]);
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool are_isomorphic(const Poset& p, const Poset& q) { return find_isomorphism(p, q).has_value(); }

}  // namespace posat
