#include "posat/constructions.hpp"

#include <algorithm>
#include <functional>

#include "posat/embedding.hpp"
#include "posat/poset_expr.hpp"

namespace posat {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(message);
}

void require_ground(int n) {
  require(n >= 1 && n <= kMaxGroundSize, "ground size " + std::to_string(n) + " outside [1, 63]");
}

SubsetMask singleton(int i) { return SubsetMask::of({i}); }

/// Lexicographically first non-induced embedding of `q` into B_m, as bit
/// values in element order.
std::optional<std::vector<std::uint64_t>> first_cube_embedding(const Poset& q, int m) {
  const std::uint64_t cube = std::uint64_t{1} << m;
  if (static_cast<std::uint64_t>(q.size()) > cube) return std::nullopt;
  std::vector<std::uint64_t> img(static_cast<std::size_t>(q.size()));
  std::function<bool(int)> place = [&](int e) {
    if (e == q.size()) return true;
    for (std::uint64_t s = 0; s < cube; ++s) {
      bool ok = true;
      for (int f = 0; f < e && ok; ++f) {
        if (img[f] == s) ok = false;
        if (q.less(f, e) && (img[f] & ~s) != 0) ok = false;
        if (q.less(e, f) && (s & ~img[f]) != 0) ok = false;
      }
      if (!ok) continue;
      img[e] = s;
      if (place(e + 1)) return true;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return img;
}

}  // namespace

TaggedFamily chain_family(int k, int n) {
  require(k >= 2 && n >= k, "chain family needs n >= k >= 2");
  require_ground(n);
  TaggedFamily t;
  t.name = "chain";
  t.target = chain(k);
  t.target_expr = "C" + std::to_string(k);
  t.mode = CopyMode::NonInduced;
  t.claimed_size = std::uint64_t{1} << (k - 2);
  t.validity = k;
  const SubsetMask tail = SubsetMask::range(k - 1, n);
  std::vector<SubsetMask> sets;
  for (std::uint64_t b = 0; b < t.claimed_size; ++b) {
    const SubsetMask f(b);
    sets.push_back(k >= 3 && f.has(k - 2) ? (f | tail) : f);
  }
  t.family = SetFamily(n, std::move(sets));
  return t;
}

TaggedFamily max1_family(const Poset& p, int n) {
  const auto low = low_degree_element(p);
  require(low.has_value(), "poset has no element with at most one element above and below");
  require(n >= p.size(), "max1 family needs n >= |P|");
  require_ground(n);
  const int lp = *low;
  std::vector<int> rest;
  for (int e = 0; e < p.size(); ++e) {
    if (e != lp) rest.push_back(e);
  }
  const Poset q = induced_subposet(p, rest);
  int m = 0;
  std::optional<std::vector<std::uint64_t>> emb;
  while (!(emb = first_cube_embedding(q, m))) ++m;

  const ElementMask below = p.below(lp);
  const ElementMask above = p.above(lp);
  const SubsetMask marker = singleton(m + 1);
  std::vector<SubsetMask> sets;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    const int e = rest[i];
    if ((below >> e) & 1U) {
      sets.emplace_back(0);
    } else if ((above >> e) & 1U) {
      sets.push_back(SubsetMask::full(n));
    } else {
      sets.push_back(SubsetMask((*emb)[i]) | marker);
    }
  }
  TaggedFamily t;
  t.name = "max1";
  t.target = p;
  t.mode = CopyMode::NonInduced;
  t.claimed_size = static_cast<std::uint64_t>(p.size() - 1);
  t.validity = p.size();
  t.family = SetFamily(n, std::move(sets));
  return t;
}

TaggedFamily kst_family(int s, int t, int n) {
  require(s >= 2 && t >= 2, "K(s,t) family needs s, t >= 2");
  require(n >= s + t - 2, "K(s,t) family needs n >= s+t-2");
  require_ground(n);
  TaggedFamily out;
  out.name = "kst";
  out.target = complete_bipartite(s, t);
  out.target_expr = "K(" + std::to_string(s) + "," + std::to_string(t) + ")";
  out.mode = CopyMode::NonInduced;
  out.claimed_size = static_cast<std::uint64_t>(2 * (s + t) - 4);
  out.validity = s + t - 2;
  std::vector<SubsetMask> sets{SubsetMask{}, SubsetMask::full(n)};
  for (int i = 1; i <= s + t - 3; ++i) {
    sets.push_back(singleton(i));
    sets.push_back(singleton(i).complement(n));
  }
  out.family = SetFamily(n, std::move(sets));
  return out;
}

TaggedFamily graph_family(const Multigraph& g, int n) {
  require(g.is_simple(), "graph family is only defined for simple graphs");
  const Poset target = graph_poset(g);
  const int v = g.vertices;
  const int e = static_cast<int>(g.edges.size());
  const int delta = g.min_degree();
  if (delta <= 1) {
    TaggedFamily t = max1_family(target, n);
    t.name = "graph";
    t.validity = std::max(t.validity, e + v);
    return t;
  }
  require(n >= e + v, "graph family needs n >= e+v");
  require_ground(n);
  std::vector<SubsetMask> sets{SubsetMask{}, SubsetMask::full(n), SubsetMask::range(v, n)};
  for (int i = 1; i <= v - 1; ++i) sets.push_back(singleton(i));
  for (int i = 1; i <= delta - 2; ++i) sets.push_back(singleton(i).complement(n));
  for (int j = 1; j <= e - delta; ++j) sets.push_back(singleton(v - 1 + j).complement(n));
  TaggedFamily t;
  t.name = "graph";
  t.target = target;
  t.mode = CopyMode::NonInduced;
  t.claimed_size = static_cast<std::uint64_t>(e + v);
  t.validity = e + v;
  t.family = SetFamily(n, std::move(sets));
  return t;
}

TaggedFamily chain_plus_singletons(int n, SingletonTarget target) {
  require(n >= 3, "chain plus singletons needs n >= 3");
  require_ground(n);
  TaggedFamily t;
  t.name = target == SingletonTarget::TwoC2 ? "chain-singletons" : "chain-singletons-dprime";
  t.target = target == SingletonTarget::TwoC2 ? repeat(2, chain(2)) : named_poset("D'");
  t.target_expr = target == SingletonTarget::TwoC2 ? "2*C2" : "D'";
  t.mode = CopyMode::Induced;
  t.claimed_size = static_cast<std::uint64_t>(2 * n);
  t.validity = 3;
  std::vector<SubsetMask> sets;
  for (int j = 0; j <= n; ++j) sets.push_back(SubsetMask::full(j));
  for (int j = 2; j <= n; ++j) sets.push_back(singleton(j));
  t.family = SetFamily(n, std::move(sets));
  return t;
}

TaggedFamily chain_singletons_cosingletons(int n) {
  require(n >= 3, "chain, singletons and co-singletons need n >= 3");
  require_ground(n);
  SetFamily fam(n);
  for (int j = 0; j <= n; ++j) fam.insert(SubsetMask::full(j));
  for (int j = 1; j <= n; ++j) {
    fam.insert(singleton(j));
    fam.insert(singleton(j).complement(n));
  }
  TaggedFamily t;
  t.name = "chain-singletons-cosingletons";
  t.target = repeat(2, chain(3));
  t.target_expr = "2*C3";
  t.mode = CopyMode::Induced;
  t.claimed_size = static_cast<std::uint64_t>(3 * n - 1);
  t.validity = 3;
  t.family = std::move(fam);
  return t;
}

TaggedFamily interval_hat(int k, int n) {
  require(k >= 2 && n >= k, "interval family needs n >= k >= 2");
  require_ground(n);
  const SubsetMask block = SubsetMask::range(k, n);
  SetFamily fam(n);
  auto add = [&](SubsetMask s) { fam.insert(s.has(k) ? (s.without(k) | block) : s); };
  for (int i = 1; i <= k; ++i) {
    for (int j = i; j <= k; ++j) {
      const SubsetMask interval = SubsetMask::range(i, j);
      add(interval);
      add(interval.complement(k));
    }
  }
  const int copies = 2 * k / 3 + 1;
  TaggedFamily t;
  t.name = "interval-hat";
  t.target = repeat(copies, chain(2));
  t.target_expr = std::to_string(copies) + "*C2";
  t.mode = CopyMode::Induced;
  // Nonempty intervals, their complements, less the prefixes and suffixes
  // counted twice.
  t.claimed_size = static_cast<std::uint64_t>(k * (k + 1) - 2 * (k - 1));
  t.validity = k;
  t.family = std::move(fam);
  return t;
}

TaggedFamily butterfly_H(int n) {
  require(n >= 3, "butterfly family needs n >= 3");
  require_ground(n);
  SetFamily fam(n);
  auto add_with_complement = [&](SubsetMask s) {
    fam.insert(s);
    fam.insert(s.complement(n));
  };
  for (int j = 1; j <= n - 1; ++j) {
    std::vector<SubsetMask> tj;
    if (j == 1) {
      tj = {SubsetMask{}};
    } else if (j == 2) {
      tj = {singleton(1), singleton(2), SubsetMask::of({1, 2})};
    } else if (j == 3) {
      tj = {singleton(3), SubsetMask::of({1, 3}), SubsetMask::of({2, 3})};
    } else {
      // Common part: the even numbers 4..j, or the odd numbers 3..j.
      SubsetMask common;
      for (int x = (j % 2 == 0 ? 4 : 3); x <= j; x += 2) common = common.with(x);
      if (j % 2 == 0) {
        tj = {common.with(1), common.with(2), common.with(1).with(2)};
      } else {
        tj = {common, common.with(1), common.with(2)};
      }
    }
    for (SubsetMask s : tj) add_with_complement(s);
  }
  TaggedFamily t;
  t.name = "butterfly";
  t.target = complete_bipartite(2, 2);
  t.target_expr = "B";
  t.mode = CopyMode::Induced;
  t.claimed_size = static_cast<std::uint64_t>(6 * n - 10);
  t.validity = 3;
  t.family = std::move(fam);
  return t;
}

std::uint64_t chain_plus_shallow_size(int k, int l) {
  require(k >= 2 && l >= k, "chain + shallow family needs l >= k >= 2");
  return middle_levels_size(l, k - 1) + 2;
}

bool chain_plus_shallow_contains(int k, int l, int n, SubsetMask s) {
  require(k >= 2 && l >= k && n >= l, "chain + shallow family needs n >= l >= k >= 2");
  require_ground(n);
  if (!s.fits(n)) return false;
  if (s.empty() || s == SubsetMask::full(n)) return true;
  const SubsetMask head = s & SubsetMask::full(l);
  const SubsetMask tail = s - head;
  const int bottom = middle_levels_bottom(l, k - 1);
  if (head.size() < bottom || head.size() > bottom + k - 2) return false;
  return head.has(1) ? tail == SubsetMask::range(l + 1, n) : tail.empty();
}

bool chain_plus_shallow_hypotheses(const Poset& p0, int k, int l) {
  if (l < 10 * k) return false;
  return levels_contain(l - 2, middle_levels_bottom(l - 2, k - 1), k - 1, p0, CopyMode::Induced);
}

TaggedFamily chain_plus_shallow(const Poset& p0, int k, int l, int n) {
  require(k >= 2 && l >= k && n >= l, "chain + shallow family needs n >= l >= k >= 2");
  require_ground(n);
  TaggedFamily t;
  t.name = "chain-plus-shallow";
  t.target = disjoint_union(chain(k), p0);
  t.mode = CopyMode::Induced;
  t.claimed_size = chain_plus_shallow_size(k, l);
  t.validity = l;
  t.hypotheses_met = chain_plus_shallow_hypotheses(p0, k, l);
  if (t.claimed_size > kMaterializeCap) {
    throw Error("chain + shallow family has " + std::to_string(t.claimed_size) +
                " members, above the materialization cap");
  }
  const SetFamily middle = middle_levels(l, k - 1);
  const SubsetMask tail = SubsetMask::range(l + 1, n);
  std::vector<SubsetMask> sets{SubsetMask{}, SubsetMask::full(n)};
  sets.reserve(middle.size() + 2);
  for (SubsetMask f : middle) sets.push_back(f.has(1) ? (f | tail) : f);
  t.family = SetFamily(n, std::move(sets));
  return t;
}

bool maximal_chain_check(const SetFamily& fam) {
  const int n = fam.ground_size();
  if (!fam.contains(SubsetMask{})) return false;
  std::vector<SubsetMask> reached{SubsetMask{}};
  for (int level = 1; level <= n; ++level) {
    std::vector<SubsetMask> next;
    for (SubsetMask s : fam) {
      if (s.size() != level) continue;
      if (std::any_of(reached.begin(), reached.end(), [s](SubsetMask r) { return r.subset_of(s); })) {
        next.push_back(s);
      }
    }
    if (next.empty()) return false;
    reached = std::move(next);
  }
  return true;
}

}  // namespace posat
