#include "crossings/embedding.hpp"

#include "catalog.hpp"
#include "crossings/census.hpp"
#include "crossings/errors.hpp"
#include "crossings/moments.hpp"
#include "crossings/rng.hpp"

#include <doctest.h>

using namespace crossings;

TEST_CASE("interleaving predicate") {
  CHECK_FALSE(is_crossing(1, 2, 3, 4));  // side by side
  CHECK(is_crossing(1, 3, 2, 4));        // interleaved
  CHECK_FALSE(is_crossing(1, 4, 2, 3));  // nested
  CHECK(is_crossing(3, 1, 4, 2));        // endpoint order inside an edge is irrelevant
  CHECK_THROWS_AS(static_cast<void>(is_crossing(1, 2, 2, 3)), ValidationError);
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({1, 1, 3}), ValidationError);
  CHECK_THROWS_AS(Permutation({0, 1, 2}), ValidationError);
  CHECK_THROWS_AS(Permutation({}), ValidationError);
  CHECK(Permutation::identity(4).position_of(3) == 3);
}

TEST_CASE("crossing counts on the 4-path") {
  const Graph p4 = family_graph({Family::path, 4});
  CHECK(count_crossings(p4, Permutation::identity(4)) == 0);
  CHECK(count_crossings(p4, Permutation({2, 4, 1, 3})) == 1);
  CHECK_THROWS_AS(static_cast<void>(count_crossings(p4, Permutation::identity(5))),
                  ValidationError);
}

TEST_CASE("crossing count stays within the 2-matching count") {
  const Graph g = family_graph({Family::matching, 20});
  Xoshiro256StarStar rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto c = count_crossings(g, random_permutation(g.vertex_count(), rng));
    CHECK(c >= 0);
    CHECK(c <= 190);
  }
}

TEST_CASE("crossing count is invariant under rotation") {
  Xoshiro256StarStar rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + static_cast<int>(rng.bounded(8));
    const int max_m = n * (n - 1) / 2;
    const Graph g = testutil::random_graph(n, 1 + static_cast<int>(rng.bounded(max_m)), rng);
    const Permutation p = random_permutation(n, rng);
    const auto base = count_crossings(g, p);
    const int shift = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n)));
    CHECK(count_crossings(g, rotated(p, shift)) == base);
  }
}

TEST_CASE("fast counter equals the baseline") {
  Xoshiro256StarStar rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng.bounded(30));
    const int max_m = n * (n - 1) / 2;
    const Graph g = testutil::random_graph(n, static_cast<int>(rng.bounded(max_m + 1)), rng);
    const Permutation p = random_permutation(n, rng);
    CHECK(count_crossings(g, p, CountAlgorithm::fast) ==
          count_crossings(g, p, CountAlgorithm::baseline));
  }
}

TEST_CASE("exact distributions of the worked examples") {
  const Pmf m2 = exact_distribution(family_graph({Family::matching, 2}));
  REQUIRE(m2.entries.size() == 2);
  CHECK(m2.entries[0] == PmfEntry{0, make_rational(2, 3)});
  CHECK(m2.entries[1] == PmfEntry{1, make_rational(1, 3)});

  const Pmf kite5 = exact_distribution(family_graph({Family::kite, 5}));
  REQUIRE(kite5.entries.size() == 3);
  CHECK(kite5.entries[0].p == make_rational(1, 2));
  CHECK(kite5.entries[1].p == make_rational(1, 3));
  CHECK(kite5.entries[2].p == make_rational(1, 6));

  const Pmf p4 = exact_distribution(family_graph({Family::path, 4}));
  REQUIRE(p4.entries.size() == 2);
  CHECK(p4.entries[0].p == make_rational(2, 3));
  CHECK(p4.entries[1].p == make_rational(1, 3));
}

TEST_CASE("pmf invariants over the catalog") {
  for (const auto& entry : testutil::test_catalog()) {
    if (entry.graph.vertex_count() > 7) continue;
    INFO(entry.name);
    const Pmf pmf = exact_distribution(entry.graph);
    CHECK(pmf.total() == Rational(1));
    const std::int64_t m2 = count_r_matchings(entry.graph, 2);
    CHECK(pmf.mean() == Rational(m2, 3));
    for (const auto& e : pmf.entries) {
      CHECK(e.k >= 0);
      CHECK(e.k <= m2);
    }
  }
}

TEST_CASE("fixing the first vertex yields the identical pmf") {
  for (const auto& entry : testutil::test_catalog()) {
    if (entry.graph.vertex_count() > 6) continue;
    INFO(entry.name);
    CHECK(exact_distribution(entry.graph, Reduction::none) ==
          exact_distribution(entry.graph, Reduction::fix_first));
  }
}

TEST_CASE("enumeration cap") {
  const Graph p10 = family_graph({Family::path, 10});
  CHECK_THROWS_AS(static_cast<void>(exact_distribution(p10)), CapabilityError);
  CHECK_NOTHROW(static_cast<void>(exact_distribution(p10, Reduction::fix_first, 10)));
}
