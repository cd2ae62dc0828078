#include <doctest.h>

#include <random>

#include "posat/embedding.hpp"
#include "posat/poset_expr.hpp"
#include "posat/search.hpp"
#include "support/brute.hpp"

using namespace posat;

namespace {

bool bit(const std::uint64_t* row, std::size_t j) { return (row[j / 64] >> (j % 64)) & 1U; }

std::vector<SubsetMask> images(const SetFamily& f, const Embedding& e) {
  std::vector<SubsetMask> out;
  for (std::size_t i : e.image) out.push_back(f[i]);
  return out;
}

SetFamily chain_heavy_family(std::mt19937_64& rng, int n, int size) {
  // Random sets, biased towards long containment runs.
  size = std::min(size, 1 << n);
  std::vector<SubsetMask> m;
  std::uniform_int_distribution<int> el(1, n);
  while (static_cast<int>(m.size()) < size) {
    SubsetMask s(rng() & SubsetMask::full(n).bits());
    for (int step = 0; step < 3 && static_cast<int>(m.size()) < size; ++step) {
      if (std::find(m.begin(), m.end(), s) == m.end()) m.push_back(s);
      s = s.with(el(rng));
    }
  }
  return SetFamily(n, m);
}

}  // namespace

TEST_CASE("copy modes parse") {
  CHECK(parse_copy_mode("induced") == CopyMode::Induced);
  CHECK(parse_copy_mode("strong") == CopyMode::Induced);
  CHECK(parse_copy_mode("non-induced") == CopyMode::NonInduced);
  CHECK(parse_copy_mode("weak") == CopyMode::NonInduced);
  CHECK_THROWS_AS(parse_copy_mode("both"), Error);
  CHECK(to_string(CopyMode::NonInduced) == "non-induced");
}

TEST_CASE("containment index rows, including growth past 64 sets") {
  std::mt19937_64 rng(7);
  const SetFamily f = brute::random_family(rng, 8, 150);
  ContainmentIndex idx(std::span<const SubsetMask>(f.members().data(), 40));
  for (std::size_t i = 40; i < f.size(); ++i) idx.push(f[i]);
  REQUIRE(idx.size() == f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      CHECK(bit(idx.supersets(i), j) == f[i].proper_subset_of(f[j]));
      CHECK(bit(idx.subsets(i), j) == f[j].proper_subset_of(f[i]));
    }
  }
  for (int k = 0; k < 100; ++k) idx.pop();
  CHECK(idx.size() == 50);
  for (std::size_t i = 0; i < 50; ++i) {
    for (std::size_t j = 50; j < 64 * idx.words(); ++j) {
      CHECK_FALSE(bit(idx.supersets(i), j));
      CHECK_FALSE(bit(idx.subsets(i), j));
    }
  }
}

TEST_CASE("Hasse diagram equals the brute transitive reduction") {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 30; ++round) {
    const SetFamily f = brute::random_family(rng, 6, 20 + static_cast<int>(rng() % 50));
    ContainmentIndex idx;
    HasseDiagram h;
    for (SubsetMask s : f) {
      idx.push(s);
      HasseDiagram next;
      next.assign_extended(h, idx);
      h = next;
    }
    const HasseDiagram full = HasseDiagram::build(idx);
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        bool cover = f[i].proper_subset_of(f[j]);
        for (std::size_t z = 0; z < f.size() && cover; ++z) {
          cover = !(f[i].proper_subset_of(f[z]) && f[z].proper_subset_of(f[j]));
        }
        CHECK(bit(h.up(i), j) == cover);
        CHECK(bit(h.down(j), i) == cover);
        CHECK(bit(full.up(i), j) == cover);
      }
    }
  }
}

TEST_CASE("find_copy agrees with the injective-map oracle on 1000 random cases") {
  std::mt19937_64 rng(2024);
  int found = 0;
  for (int round = 0; round < 1000; ++round) {
    const int psize = 1 + static_cast<int>(rng() % 4);
    const Poset p = brute::random_poset(rng, psize, 0.5);
    const int n = 2 + static_cast<int>(rng() % 4);
    const int fsize = 1 + static_cast<int>(rng() % std::min<std::uint64_t>(8, std::uint64_t{1} << n));
    const SetFamily f = brute::random_family(rng, n, fsize);
    for (CopyMode mode : {CopyMode::NonInduced, CopyMode::Induced}) {
      const bool expected = brute::contains_copy(f, p, mode);
      const auto e = find_copy(f, p, mode);
      REQUIRE_MESSAGE(e.has_value() == expected, "round ", round, " mode ", to_string(mode));
      if (e) {
        ++found;
        CHECK(verify_embedding(f, p, mode, *e));
        CHECK(brute::is_copy(images(f, *e), p, mode));
      }
      const auto g = find_copy_general(f, p, mode);
      CHECK(g.has_value() == expected);
      const std::size_t member = rng() % f.size();
      const auto c = find_copy_containing(f, p, mode, f[member]);
      CHECK(c.has_value() == brute::contains_copy_using(f, p, mode, member));
      if (c) {
        CHECK(brute::is_copy(images(f, *c), p, mode));
        CHECK(std::find(c->image.begin(), c->image.end(), member) != c->image.end());
      }
    }
  }
  // Both outcomes must be exercised.
  CHECK(found > 200);
  CHECK(found < 1800);
}

TEST_CASE("induced copies are non-induced copies") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 300; ++round) {
    const Poset p = brute::random_poset(rng, 2 + static_cast<int>(rng() % 4), 0.4);
    const SetFamily f = brute::random_family(rng, 5, 4 + static_cast<int>(rng() % 14));
    const auto strong = find_copy(f, p, CopyMode::Induced);
    if (strong) {
      CHECK(verify_embedding(f, p, CopyMode::NonInduced, *strong));
      CHECK(find_copy(f, p, CopyMode::NonInduced).has_value());
    }
  }
}

TEST_CASE("chain search agrees with the general search on 200 random cases") {
  std::mt19937_64 rng(4242);
  int found = 0;
  for (int round = 0; round < 200; ++round) {
    const int parts = 1 + static_cast<int>(rng() % 3);
    std::vector<int> lengths;
    for (int i = 0; i < parts; ++i) lengths.push_back(1 + static_cast<int>(rng() % 3));
    const Poset p = chains_poset(lengths);
    const int n = 4 + static_cast<int>(rng() % 3);
    const SetFamily f = chain_heavy_family(rng, n, 6 + static_cast<int>(rng() % 20));
    for (CopyMode mode : {CopyMode::NonInduced, CopyMode::Induced}) {
      const CopyFinder chains(p, mode, true);
      const CopyFinder general(p, mode, false);
      REQUIRE(chains.uses_chain_path());
      REQUIRE_FALSE(general.uses_chain_path());
      const ContainmentIndex idx(f.members());
      const HasseDiagram h = HasseDiagram::build(idx);
      const auto a = chains.find(idx, &h, std::nullopt);
      const auto b = general.find(idx, nullptr, std::nullopt);
      REQUIRE_MESSAGE(a.has_value() == b.has_value(), "round ", round);
      if (a) {
        ++found;
        CHECK(brute::is_copy(images(f, Embedding{*a}), p, mode));
      }
      const std::size_t anchor = rng() % f.size();
      const auto aa = chains.find(idx, &h, anchor);
      const auto ba = general.find(idx, nullptr, anchor);
      CHECK(aa.has_value() == ba.has_value());
      if (aa) CHECK(std::find(aa->begin(), aa->end(), anchor) != aa->end());
      const auto ex = find_copy_chains(f, lengths, mode);
      CHECK(ex.has_value() == a.has_value());
    }
  }
  CHECK(found > 20);
  CHECK(found < 390);
}

TEST_CASE("copy search examples") {
  const SetFamily b3 = power_set(3);
  CHECK(find_copy(b3, chain(4), CopyMode::Induced));
  CHECK_FALSE(find_copy(b3, chain(5), CopyMode::NonInduced));
  CHECK(find_copy(b3, antichain(3), CopyMode::Induced));
  CHECK_FALSE(find_copy(b3, antichain(4), CopyMode::Induced));
  // Two incomparable sets lie below at most one set of B_3 other than [3].
  CHECK_FALSE(find_copy(b3, parse_poset_expr("B"), CopyMode::Induced));
  CHECK(find_copy(power_set(4), parse_poset_expr("B"), CopyMode::Induced));
  // A chain holds every poset of its size non-induced, nothing induced.
  const SetFamily c(3, {SubsetMask{}, SubsetMask::of({1}), SubsetMask::of({1, 2}), SubsetMask::full(3)});
  CHECK(find_copy(c, parse_poset_expr("B"), CopyMode::NonInduced));
  CHECK_FALSE(find_copy(c, parse_poset_expr("B"), CopyMode::Induced));
  CHECK(find_copy(c, Poset(0), CopyMode::Induced) == Embedding{});
  CHECK_THROWS_AS(find_copy_containing(c, chain(2), CopyMode::Induced, SubsetMask::of({2})), Error);
  CHECK_THROWS_AS(verify_embedding(c, chain(2), CopyMode::Induced, Embedding{{0}}), Error);
  CHECK_THROWS_AS(verify_embedding(c, chain(2), CopyMode::Induced, Embedding{{0, 9}}), Error);
  CHECK_FALSE(verify_embedding(c, chain(2), CopyMode::Induced, Embedding{{1, 1}}));
  CHECK_FALSE(verify_embedding(c, chain(2), CopyMode::Induced, Embedding{{1, 0}}));
  CHECK(verify_embedding(c, chain(2), CopyMode::Induced, Embedding{{0, 3}}));
  CHECK_FALSE(verify_embedding(c, antichain(2), CopyMode::Induced, Embedding{{0, 3}}));
  CHECK(verify_embedding(c, antichain(2), CopyMode::NonInduced, Embedding{{0, 3}}));
}

TEST_CASE("consecutive levels") {
  // k levels hold C_k but k-1 levels do not.
  CHECK(levels_contain(6, 1, 3, chain(3), CopyMode::Induced));
  CHECK_FALSE(levels_contain(6, 1, 2, chain(3), CopyMode::NonInduced));
  CHECK(levels_contain(4, 2, 1, antichain(4), CopyMode::Induced));
  CHECK_FALSE(levels_contain(3, 1, 1, antichain(4), CopyMode::Induced));
  // Two j-sets have a single (j+1)-level union, three levels are needed for B.
  CHECK_FALSE(levels_contain(6, 2, 2, parse_poset_expr("B"), CopyMode::Induced));
  CHECK(levels_contain(4, 1, 3, parse_poset_expr("B"), CopyMode::Induced));
  CHECK_FALSE(levels_contain(2, 1, 1, parse_poset_expr("V2"), CopyMode::NonInduced));
  // Reduction to a sub-cube above 3|P|.
  CHECK(levels_contain(20, 9, 2, parse_poset_expr("V2"), CopyMode::Induced));
  CHECK(levels_contain(20, 0, 3, chain(3), CopyMode::Induced));
  CHECK_FALSE(levels_contain(20, 9, 2, chain(3), CopyMode::NonInduced));
  CHECK_THROWS_AS(levels_contain(4, 4, 2, chain(1), CopyMode::Induced), Error);

  std::mt19937_64 rng(55);
  for (int round = 0; round < 40; ++round) {
    const Poset p = brute::random_poset(rng, 1 + static_cast<int>(rng() % 3), 0.5);
    const int l = 2 + static_cast<int>(rng() % 3);
    const int k = 1 + static_cast<int>(rng() % 2);
    const int a = static_cast<int>(rng() % (l - k + 2));
    std::vector<SubsetMask> m;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << l); ++s) {
      const int sz = std::popcount(s);
      if (sz >= a && sz < a + k) m.emplace_back(s);
    }
    const SetFamily f(l, m);
    for (CopyMode mode : {CopyMode::NonInduced, CopyMode::Induced}) {
      CHECK(levels_contain(l, a, k, p, mode) == brute::contains_copy(f, p, mode));
    }
  }
}

TEST_CASE("e* estimates") {
  const EstarEstimate c3 = estar_estimate(chain(3), CopyMode::Induced, 12);
  CHECK(c3.conjectured == 2);
  CHECK(c3.certified_upper == 2);
  CHECK(estar_estimate(chain(1), CopyMode::Induced, 12).certified_upper == 0);
  CHECK(estar_estimate(antichain(2), CopyMode::Induced, 12).certified_upper == 0);
  CHECK(estar_estimate(parse_poset_expr("V2"), CopyMode::Induced, 12).certified_upper == 1);
  CHECK(estar_estimate(chain(4), CopyMode::NonInduced, 12).certified_upper == 3);
  CHECK(estar_estimate(parse_poset_expr("B"), CopyMode::Induced, 12).certified_upper == 2);
  CHECK_THROWS_AS(estar_estimate(Poset(0), CopyMode::Induced, 12), Error);
  CHECK_THROWS_AS(estar_estimate(chain(5), CopyMode::Induced, 3), Error);
}
