#include <doctest.h>

#include <random>

#include "posat/constructions.hpp"
#include "posat/poset_expr.hpp"
#include "posat/saturation.hpp"
#include "support/brute.hpp"

using namespace posat;

namespace {

SetFamily fam(int n, std::initializer_list<SubsetMask> m) { return SetFamily(n, std::vector<SubsetMask>(m)); }

}  // namespace

TEST_CASE("verdict strings") {
  CHECK(to_string(Verdict::NotSaturating) == "not-saturating");
  CHECK(to_string(Boundedness::BoundedCertified) == "bounded-certified");
}

TEST_CASE("trivial saturation facts") {
  const SetFamily empty_only = fam(3, {SubsetMask{}});
  const SaturationReport r = is_saturating(empty_only, chain(2), CopyMode::Induced);
  CHECK(r.verdict == Verdict::Saturating);
  CHECK(r.candidates_tested == 7);
  CHECK(r.copies_found == 7);
  CHECK(r.affirmative());

  const SaturationReport nf = is_saturating(power_set(2), chain(2), CopyMode::Induced);
  CHECK(nf.verdict == Verdict::NotFree);
  REQUIRE(nf.embedding);
  CHECK(verify_embedding(power_set(2), chain(2), CopyMode::Induced, *nf.embedding));

  const SaturationReport ns = is_saturating(fam(3, {SubsetMask::of({1})}), chain(2), CopyMode::Induced);
  CHECK(ns.verdict == Verdict::NotSaturating);
  // {2} is the smallest non-member incomparable to {1}.
  CHECK(ns.missing == SubsetMask::of({2}));

  CHECK(is_p_free(power_set(3), chain(5), CopyMode::NonInduced).verdict == Verdict::Free);
  CHECK(is_p_free(power_set(3), chain(4), CopyMode::NonInduced).verdict == Verdict::NotFree);
}

TEST_CASE("saturation agrees with brute force on random families") {
  std::mt19937_64 rng(808);
  int saturating = 0;
  for (int round = 0; round < 400; ++round) {
    const Poset p = brute::random_poset(rng, 1 + static_cast<int>(rng() % 4), 0.5);
    const int n = 2 + static_cast<int>(rng() % 2);
    const SetFamily f = brute::random_family(rng, n, 1 + static_cast<int>(rng() % 5));
    for (CopyMode mode : {CopyMode::NonInduced, CopyMode::Induced}) {
      const SaturationReport r = is_saturating(f, p, mode);
      const bool expected = brute::is_saturating(f, p, mode);
      REQUIRE((r.verdict == Verdict::Saturating) == expected);
      if (expected) {
        ++saturating;
        CHECK(brute::forced_members_present(f, p, mode));
      }
      if (r.verdict == Verdict::NotFree) CHECK(brute::contains_copy(f, p, mode));
      if (r.verdict == Verdict::NotSaturating) {
        REQUIRE(r.missing);
        CHECK_FALSE(f.contains(*r.missing));
        const SetFamily g = with_member(f, *r.missing);
        CHECK_FALSE(brute::contains_copy(g, p, mode));
        // Witness is the smallest failing candidate.
        for (std::uint64_t s = 0; s < r.missing->bits(); ++s) {
          if (f.contains(SubsetMask(s))) continue;
          CHECK(brute::contains_copy(with_member(f, SubsetMask(s)), p, mode));
        }
      }
    }
  }
  CHECK(saturating > 5);
}

TEST_CASE("thread count does not change reports") {
  const SetFamily f = interval_hat(5, 7).family;
  const Poset p = parse_poset_expr("3*C2");
  SaturationOptions one;
  one.threads = 1;
  SaturationOptions four;
  four.threads = 4;
  const SaturationReport a = is_saturating(f, p, CopyMode::Induced, one);
  const SaturationReport b = is_saturating(f, p, CopyMode::Induced, four);
  CHECK(a.verdict == b.verdict);
  CHECK(a.missing == b.missing);
  CHECK(a.embedding == b.embedding);
  CHECK(a.candidates_tested == b.candidates_tested);
  CHECK(a.copies_found == b.copies_found);
}

TEST_CASE("symmetric tail reduction") {
  const SetFamily f = chain_plus_singletons(6).family;
  const Poset p = parse_poset_expr("2*C2");
  // Singletons {6} break tail symmetry on {5,6}.
  SaturationOptions bad;
  bad.symmetric_tail = 5;
  CHECK_THROWS_AS(is_saturating(f, p, CopyMode::Induced, bad), Error);

  const SetFamily i = interval_hat(4, 8).family;
  SaturationOptions tail;
  tail.symmetric_tail = 4;
  tail.cross_check = true;
  const SaturationReport r = is_saturating(i, parse_poset_expr("3*C2"), CopyMode::Induced, tail);
  CHECK(r.verdict == Verdict::Saturating);
  CHECK(r.tail_used == 4);
  CHECK(r.cross_check_agrees == true);
  CHECK(r.candidates_tested < (1U << 8) - i.size());

  const SaturationReport neg = is_saturating(interval_hat(4, 8).family, parse_poset_expr("4*C2"), CopyMode::Induced, tail);
  CHECK(neg.verdict == Verdict::NotSaturating);
  CHECK(neg.cross_check_agrees == true);
}

TEST_CASE("non-induced greedy for chains") {
  for (int k = 2; k <= 6; ++k) {
    for (int n = std::max(k, 3); n <= 9; ++n) {
      const GreedyTrace t = greedy_colex(n, chain(k), CopyMode::NonInduced);
      const std::size_t expected = k == 2 ? 1 : (std::size_t{1} << (k - 2));
      CHECK(t.family.size() == expected);
      CHECK(replay(t) == t.family);
      CHECK(brute::longest_chain(t.family) == k - 1);
      if (k >= 3) CHECK(t.stabilization <= (std::uint64_t{1} << (k - 3)));
      CHECK(is_saturating(t.family, chain(k), CopyMode::NonInduced).verdict == Verdict::Saturating);
    }
  }
}

TEST_CASE("greedy outputs are saturating and hold forced members") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 40; ++round) {
    const Poset p = brute::random_poset(rng, 2 + static_cast<int>(rng() % 3), 0.4);
    const int n = 3 + static_cast<int>(rng() % 2);
    for (CopyMode mode : {CopyMode::NonInduced, CopyMode::Induced}) {
      const GreedyTrace t = greedy_colex(n, p, mode);
      CHECK(brute::is_saturating(t.family, p, mode));
      CHECK(brute::forced_members_present(t.family, p, mode));
      CHECK(replay(t) == t.family);
    }
  }
  CHECK_THROWS_AS(greedy_colex(kMaxGreedyGround + 1, chain(2), CopyMode::Induced), Error);
}

TEST_CASE("constant bound certificates") {
  const auto c = certify_constant_bound(parse_poset_expr("C3+C1"), CopyMode::Induced, 4);
  REQUIRE(c);
  CHECK(c->bound == 8);
  CHECK(c->family.size() == 8);
  CHECK_FALSE(brute::separating(c->family));
  const SetFamily big = inflate_family(c->family, c->inflate_from, 9);
  CHECK(big.size() == 8);
  CHECK(is_saturating(big, parse_poset_expr("C3+C1"), CopyMode::Induced).verdict == Verdict::Saturating);

  CHECK_FALSE(certify_constant_bound(parse_poset_expr("B"), CopyMode::Induced, 5));
  const BoundSweep sweep = sweep_constant_bound(parse_poset_expr("2*C2+C1"), CopyMode::Induced, 5, 8);
  REQUIRE(sweep.certificate);
  CHECK(sweep.certificate->bound == 12);
  CHECK(sweep.greedy_sizes.back().first == sweep.certificate->m);

  const SetFamily sep(3, {SubsetMask::of({1}), SubsetMask::of({2})});
  CHECK_THROWS_AS(inflate_family(sep, 1, 5), Error);
}

TEST_CASE("inflation copies one element's membership") {
  const SetFamily f(3, {SubsetMask{}, SubsetMask::of({2, 3}), SubsetMask::of({1})});
  const SetFamily g = inflate_family(f, 3, 5);
  CHECK(g.contains(SubsetMask::of({2, 3, 4, 5})));
  CHECK(g.contains(SubsetMask::of({1})));
  CHECK(g.contains(SubsetMask{}));
  CHECK(g.size() == 3);
}

TEST_CASE("classifier") {
  const Classification y = classify(parse_poset_expr("Y"));
  CHECK(y.kind == Boundedness::UnboundedCertified);
  CHECK(y.via_dual);
  REQUIRE(y.normalized);
  CHECK(y.normalized->chain.size() == 1);

  const Classification c31 = classify(parse_poset_expr("C3+C1"));
  CHECK(c31.kind == Boundedness::BoundedCertified);
  REQUIRE(c31.bound);
  CHECK(c31.bound->bound == 8);

  CHECK(classify(parse_poset_expr("2*C2")).kind == Boundedness::UnboundedCertified);
  CHECK(classify(parse_poset_expr("B")).kind == Boundedness::UnboundedCertified);
  CHECK(classify(parse_poset_expr("V2")).kind == Boundedness::UnboundedCertified);

  const Classification weak = classify(parse_poset_expr("B"), CopyMode::NonInduced);
  CHECK(weak.kind == Boundedness::BoundedCertified);
  REQUIRE(weak.bound);
  CHECK(weak.bound->bound == 4);
}
