#include <doctest.h>

#include "posat/oracle.hpp"
#include "posat/poset_expr.hpp"
#include "support/brute.hpp"

using namespace posat;

namespace {

// Every saturating family of exactly `size` members of B_n.
std::vector<SetFamily> brute_all(int n, const Poset& p, CopyMode mode, int size) {
  std::vector<SetFamily> out;
  const std::uint64_t cube = std::uint64_t{1} << n;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << cube); ++pick) {
    if (__builtin_popcountll(pick) != size) continue;
    std::vector<SubsetMask> m;
    for (std::uint64_t s = 0; s < cube; ++s) {
      if ((pick >> s) & 1U) m.emplace_back(s);
    }
    SetFamily f(n, m);
    if (brute::is_saturating(f, p, mode)) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const SetFamily& a, const SetFamily& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

}  // namespace

TEST_CASE("forced members") {
  CHECK(forced_members(3, antichain(2), CopyMode::Induced) ==
        std::vector<SubsetMask>{SubsetMask{}, SubsetMask::full(3)});
  CHECK(forced_members(3, fork(2), CopyMode::Induced) == std::vector<SubsetMask>{SubsetMask::full(3)});
  CHECK(forced_members(3, chain(2), CopyMode::Induced).empty());
  CHECK(forced_members(3, antichain(2), CopyMode::NonInduced).empty());
}

TEST_CASE("oracle matches exhaustive family enumeration at n <= 3") {
  const std::vector<std::string> exprs{"C1", "C2", "C3", "A2", "A3", "V2", "L2", "N", "B", "2*C2", "C2+C1", "Y", "D"};
  for (const std::string& e : exprs) {
    const Poset p = parse_poset_expr(e);
    for (CopyMode mode : {CopyMode::NonInduced, CopyMode::Induced}) {
      for (int n = 2; n <= 3; ++n) {
        const OracleResult r = min_saturating(n, p, mode);
        const auto expected = brute::min_saturating(n, p, mode);
        CHECK_MESSAGE(r.minimum == expected, e, " ", to_string(mode), " n=", n);
        if (!r.minimum) continue;
        CHECK(r.witnesses == brute_all(n, p, mode, *r.minimum));
        for (const SetFamily& w : r.witnesses) CHECK(brute::forced_members_present(w, p, mode));
      }
    }
  }
}

TEST_CASE("oracle is deterministic across thread counts") {
  OracleOptions a;
  a.threads = 1;
  OracleOptions b;
  b.threads = 3;
  const OracleResult x = min_saturating(4, parse_poset_expr("2*C2"), CopyMode::Induced, a);
  const OracleResult y = min_saturating(4, parse_poset_expr("2*C2"), CopyMode::Induced, b);
  CHECK(x.minimum == y.minimum);
  CHECK(x.witnesses == y.witnesses);
  CHECK(x.nodes_explored == y.nodes_explored);
}

TEST_CASE("oracle options") {
  OracleOptions capped;
  capped.witness_cap = 1;
  const OracleResult r = min_saturating(3, chain(2), CopyMode::NonInduced, capped);
  CHECK(r.minimum == 1);
  CHECK(r.witnesses.size() == 1);
  CHECK(r.witnesses_truncated);
  CHECK(r.witnesses.front() == SetFamily(3, {SubsetMask{}}));

  OracleOptions small;
  small.max_size = 3;
  const OracleResult none = min_saturating(3, antichain(3), CopyMode::Induced, small);
  CHECK_FALSE(none.minimum);
  CHECK(none.max_size == 3);
  CHECK(none.start_size == 2);

  CHECK_THROWS_AS(min_saturating(7, chain(2), CopyMode::Induced), Error);
  CHECK_THROWS_AS(min_saturating(0, chain(2), CopyMode::Induced), Error);
  CHECK(enumerate_saturating(3, chain(2), CopyMode::Induced, 0).empty());
  CHECK(enumerate_saturating(3, chain(2), CopyMode::Induced, 9).empty());
}

TEST_CASE("oracle witnesses at n = 4 are saturating") {
  const std::vector<std::string> exprs{"A2", "V2", "C3", "2*C2", "B"};
  for (const std::string& e : exprs) {
    const Poset p = parse_poset_expr(e);
    OracleOptions o;
    o.witness_cap = 3;
    const OracleResult r = min_saturating(4, p, CopyMode::Induced, o);
    REQUIRE(r.minimum);
    for (const SetFamily& w : r.witnesses) {
      CHECK(brute::is_saturating(w, p, CopyMode::Induced));
      CHECK(brute::forced_members_present(w, p, CopyMode::Induced));
    }
    // Nothing smaller saturates.
    for (int s = r.start_size; s < *r.minimum; ++s) CHECK(enumerate_saturating(4, p, CopyMode::Induced, s).empty());
  }
}
